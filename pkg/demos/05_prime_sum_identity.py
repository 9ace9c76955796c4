"""The Heath-Brown identity, term by term.

A Lambda-weighted sum over n <= x splits into r alternating Mobius-truncated
groups plus a residual whose variables all exceed the truncation u1.  The
table shows the group magnitudes, the residual, and the reconstruction error;
with u1 = floor(x^(1/4)) and r = 4 (the working configuration for character
sums) the residual vanishes for all x below u1^(4) * 2.
"""

import numpy as np

from mangoldt.arith import build_table
from mangoldt.dirichlet import character_group
from mangoldt.hbident import HBConfig, hb_decompose, hb_character_config

table = build_table(100_000)

chi = character_group(5)[1]
f = lambda n: chi(n)

print("Decomposition of sum Lambda(n) chi(n), chi a character mod 5, x = 2000:")
print(f"  {'u1':>5} {'r':>2} {'|lhs|':>10} " + " ".join(f"{'|term '+str(k)+'|':>10}" for k in (1, 2, 3, 4)) + f" {'|resid|':>10} {'gap':>9}")
for u1 in (1, 6, 44):
    for r in (2, 4):
        dec = hb_decompose(HBConfig(x=2000, u1=u1, r=r, f=f), table)
        terms = [abs(v) for v in dec.main_terms] + [0.0] * (4 - r)
        print(
            f"  {u1:>5} {r:>2} {abs(dec.lhs):>10.4f} "
            + " ".join(f"{v:>10.4f}" for v in terms)
            + f" {abs(dec.residual):>10.4f} {dec.discrepancy:>9.2e}"
        )

print("\nWorking configuration u1 = floor(y^(1/4)), r = 4:")
for y in (16, 81, 10**4, 10**5):
    cfg = hb_character_config(y, chi)
    dec = hb_decompose(cfg, table)
    print(
        f"  y={y:>6d}: u1={cfg.u1:>3d}  |residual|={abs(dec.residual):10.4f}  "
        f"discrepancy={dec.discrepancy:.2e}"
    )

print("\nRandom bounded test functions, x = 1000, u1 = 5, r = 3:")
rng = np.random.default_rng(5)
for trial in range(3):
    fv = rng.uniform(size=1001) * np.exp(2j * np.pi * rng.uniform(size=1001))
    dec = hb_decompose(HBConfig(x=1000, u1=5, r=3, f=lambda n: complex(fv[n])), table)
    print(f"  trial {trial}: lhs={dec.lhs:+.4f}  discrepancy={dec.discrepancy:.2e}")
