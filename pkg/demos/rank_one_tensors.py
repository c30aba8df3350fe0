"""
Tensor products over a rank-one double
======================================

For G = Z5 with chi(a) = zeta_5 the factorization applies, so tensor
products of simples can be predicted from parameters alone.  Here the
predictions are compared with socles computed from the modules themselves.
"""

from __future__ import annotations

from pointed_hopf import RankOneData, build_HD, predict_tensor
from pointed_hopf.yd import SimpleParam, simple_cache, socle, tensor

data = RankOneData((5,), (1,), (1,))
H = build_HD(data)
cache = simple_cache(H)
G = data.group


def simple(c):
    # the simple with coset exponent c, of dimension (2c mod 5) + 1
    return G.power(data.chi_exp, c), G.power(data.a_exp, -c)


for c, cp in [(1, 1), (2, 3), (3, 3), (4, 4)]:
    left, right = simple(c), simple(cp)
    pred = predict_tensor(data, left, right)
    mods = [cache.get(SimpleParam(data.character(b), g)) for b, g in (left, right)]
    T = tensor(*mods)
    soc = socle(T, cache)
    print(f"{mods[0].dim} x {mods[1].dim}: {pred.mode:<10} predicted {pred.dims}, "
          f"socle {soc.dims(cache)} of {T.dim}, agree={soc.multiset() == pred.multiset()}")
