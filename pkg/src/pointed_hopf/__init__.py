"""Exact computations for pointed Hopf algebras, their Yetter-Drinfel'd modules
and restricted two-parameter quantum groups.

Layers, bottom up: ``zmod`` (linear algebra over Z/lZ), ``cyclotomic``
(the field Q(zeta_l)), ``linalg`` (sparse linear algebra over it),
``two_param`` (residue-level criteria for u_{r,s}(sl_n)), ``hopf``
(structure-constant Hopf algebras), ``yd`` (Yetter-Drinfel'd modules and
Radford's simples), ``rank_one`` (data (G, chi, a) and predicted tensor
decompositions), ``acceptance`` and ``cli``.
"""

from .cyclotomic import CycElem, CyclotomicField, cyclotomic_poly, order_of_power, root_power
from .errors import (DivisionByZero, NonInvertible, NoSuchR, NotSimple, PointedHopfError,
                     PreconditionFailed, TooLarge)
from .hopf import (AbelianGroup, AxiomReport, Character, HopfAlgebra, antipode_inverse,
                   apply_character, build_borel_sl2, build_HD, verify_hopf_axioms)
from .rank_one import (Decomposition, DoubleGroupLike, RankOneData, chen_predict, coset_exponent,
                       dim_simple, factor_simple, factorization_bijective, K_perp, K_subgroup,
                       predict_tensor, psi_module_correspondence)
from .two_param import TwoParamConfig
from .yd import (SimpleParam, YDModule, beta_action, dual_action, hom_yd, identify_simple,
                 is_simple, socle, spin_simple, tensor, twist, yd_compatibility_check)
from .zmod import Residue, ResidueMatrix, det_mod, invert_mod, solve_mod

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
