"""
Simple Yetter-Drinfel'd modules over a Borel half
=================================================

Build the Borel half of u_theta(sl_2) for l = 5, check it is a Hopf algebra,
then spin every group-like under Radford's beta-action and tabulate the
dimensions of the resulting simples.
"""

from __future__ import annotations

from pointed_hopf import build_borel_sl2, verify_hopf_axioms
from pointed_hopf.hopf import Character
from pointed_hopf.yd import SimpleParam, simple_cache

ell = 5
H = build_borel_sl2(ell, 1, ell - 1)
print(H, "axioms pass:", verify_hopf_axioms(H).passed)

# rows: beta(w') = theta^b; columns: g = w'^c
cache = simple_cache(H)
print("b\\c " + " ".join(f"{c:>2}" for c in range(ell)))
for b in range(ell):
    dims = [cache.get(SimpleParam(Character((ell,), (b,)), (c,))).dim for c in range(ell)]
    print(f"{b:>3} " + " ".join(f"{d:>2}" for d in dims))

# every dimension from 1 to l occurs exactly l times
