"""Exponential sums over primes and the exact rational-point decomposition.

S(a/q, x) equals the character expansion plus an explicit correction over the
non-coprime prime powers; the discrepancy column below is pure rounding.
The bound ratio table evaluates |S| against the refined estimate.
"""

from mangoldt.arith import build_table
from mangoldt.chebyshev import BoundParams, psi
from mangoldt.dirichlet import character_group
from mangoldt.expsum import (
    RationalPoint,
    s_alpha,
    s_bound,
    s_rational_decomposed,
    s_ratio_sweep,
)

table = build_table(1_000_000)

print("S(alpha, x) at x = 10^5 for a few alpha:")
for alpha in (0.0, 0.5, 1 / 3, 0.123456789):
    v = s_alpha(alpha, 10**5, table)
    print(f"  alpha={alpha:<12.9f} S = {v.real:+12.4f} {v.imag:+12.4f}i  |S| = {abs(v):10.4f}")
print(f"  (psi(10^5) = {psi(10**5, table):.4f} is the trivial ceiling)")

print("\nDecomposition S(a/q,x) = character expansion + explicit correction:")
for a, q, x in ((1, 3, 10**4), (2, 7, 10**4), (5, 12, 10**5), (7, 60, 10**5)):
    d = s_rational_decomposed(RationalPoint(a, q), x, character_group(q), table)
    print(
        f"  a/q={a}/{q:<3d} x={x:6d}: |S|={abs(d.direct):10.4f}  "
        f"|correction|={abs(d.correction):8.4f}  discrepancy={d.discrepancy:.2e}"
    )

print("\nBound ratio sweep (|S| against the refined rational-point bound):")
rows = s_ratio_sweep([(1, 5, 10**4), (2, 5, 10**4), (1, 101, 10**6), (50, 101, 10**6)], table)
print(f"  {'a':>4} {'q':>4} {'x':>8} {'abs_S':>12} {'ratio':>12} {'discrepancy':>12}")
for row in rows:
    print(
        f"  {row['a']:>4} {row['q']:>4} {row['x']:>8} {row['abs_S']:>12.4f} "
        f"{row['ratio']:>12.3e} {row['discrepancy']:>12.2e}"
    )

print("\nEta-family bounds at x = 10^6, eta = 100:")
params = BoundParams(x=1e6, q=1000, eta=100.0)
for kind in ("montgomery7", "vaughan9", "rakhmonov11", "corollary2"):
    print(f"  {kind:12s}: {s_bound(kind, params):.4e}")
