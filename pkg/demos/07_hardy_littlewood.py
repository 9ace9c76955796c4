"""Hardy-Littlewood counts in prime-power progressions, and the scanner.

H2(x; p^alpha, l) counts Lambda-weighted pairs n + m^2 = l (mod p^alpha).
The report compares it to the main term in both exact and asymptotic form;
the ratio drifts toward 1 as x grows.  The scanner then finds the smallest
prime + square in each residue class, with a certificate.
"""

from mangoldt.arith import build_table
from mangoldt.hlcount import HLQuery, hl_report, hl_scan_rows

table = build_table(1_000_000)

print("Count vs main term (ratio = exact / asymptotic main term):")
print(f"  {'x':>8} {'p^a':>5} {'l':>2} {'rho':>3} {'exact':>14} {'main_exact':>14} {'remainder':>12} {'ratio':>8}")
for x in (10**4, 10**5, 10**6):
    for p, alpha, l in ((3, 1, 1), (7, 1, 1), (3, 2, 1)):
        rep = hl_report(HLQuery(x=x, p=p, alpha=alpha, l=l), table)
        print(
            f"  {x:>8} {p**alpha:>5} {l:>2} {rep.rho:>3} {rep.exact:>14.2f} "
            f"{rep.main_exact:>14.2f} {rep.remainder:>12.2f} {rep.ratio:>8.4f}"
        )

print("\nSmallest prime + m^2 in the class l mod q (scanner with certificates):")
grid = [(q, l) for q in (1, 3, 5, 12, 30) for l in (1, 2) if l <= q]
rows = hl_scan_rows(grid, 100_000, table)
print(f"  {'q':>3} {'l':>2} {'H2':>5}  certificate")
for row in rows:
    print(
        f"  {row['q']:>3} {row['l']:>2} {row['H2']:>5}  "
        f"{row['certificate_prime']} + {row['certificate_m']}^2"
    )
