"""Tour of the sieved arithmetic tables.

Builds the Lambda / mu / least-prime-factor arrays, spot-checks the divisor
identity sum_{d|n} Lambda(d) = ln n, and tabulates the growth ratio
(sum tau_r(n)^2) / (x (ln x)^(r^2 - 1)), which should drift only slowly in x.
"""

import math

from mangoldt.arith import build_table, divisor_power, divisors, tau_growth_ratio

table = build_table(100_000)

print("n, Lambda(n), mu(n), lpf(n) for small n:")
for n in (1, 2, 8, 9, 12, 30, 97):
    print(f"  {n:3d}  {table.mangoldt[n]:9.6f}  {int(table.moebius[n]):+d}  {int(table.lpf[n])}")

print("\nDivisor identity sum_{d|n} Lambda(d) = ln n:")
for n in (60, 97, 1024, 99991):
    s = math.fsum(table.mangoldt[d] for d in divisors(n))
    print(f"  n={n:6d}: sum={s:.9f}  ln n={math.log(n):.9f}  gap={abs(s - math.log(n)):.2e}")

print("\ntau_r values: tau_2(6) =", divisor_power(6, 2), " tau_3(4) =", divisor_power(4, 3))

print("\nGrowth ratio of sum tau_r(n)^2 against x (ln x)^(r^2-1):")
print("      x     r=2        r=3")
for x in (100, 1_000, 10_000, 100_000):
    print(f"  {x:7d}  {tau_growth_ratio(x, 2):.5f}    {tau_growth_ratio(x, 3):.5f}")
print("(slow variation across decades is the boundedness evidence)")
