"""
When does u_{r,s}(sl_n) factor as a double?
===========================================

Sweep small (n, l, y, z) with r = theta^y and s = theta^z, and compare the
closed-form criterion gcd((y - z) n, l) = 1 with a brute-force check that the
parameter map is a bijection.
"""

from __future__ import annotations

from pointed_hopf import two_param as tp

rows = []
for n in (2, 3):
    for ell in range(2, 8):
        for cfg in tp.valid_configs(n, ell):
            if not (cfg.double_ok and cfg.rs_primitive):
                continue
            rows.append((n, ell, cfg.y, cfg.z, tp.factorization_bijective(cfg),
                         tp.verify_psi_bijectivity(cfg)))

agree = sum(r[4] == r[5] for r in rows)
print(f"{agree}/{len(rows)} configurations agree")
print(" n  l  y  z  criterion  brute force")
for n, ell, y, z, crit, brute in rows[:12]:
    print(f"{n:>2} {ell:>2} {y:>2} {z:>2}  {crit!s:<9}  {brute}")
