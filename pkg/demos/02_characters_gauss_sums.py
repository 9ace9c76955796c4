"""Character groups, conductors, Gauss sums, and prime-power index parameters.

Walks the six characters mod 9, checks orthogonality numerically, shows that
|tau(chi)| = sqrt(q) exactly on primitive characters, and extracts the
(a, c, r) parameters that classify characters mod an odd prime power.
"""

from mangoldt.dirichlet import (
    char_index,
    character_group,
    gauss_sum,
    quadratic_gauss_sum,
)

g = character_group(9)
print(f"phi(9) = {len(g)} characters; conductors and values on units mod 9:")
units = [1, 2, 4, 5, 7, 8]
for chi in g:
    vals = " ".join(f"{chi(n):+.2f}" for n in units)
    print(f"  chi#{chi.index}  cond={chi.conductor}  primitive={chi.is_primitive}  {vals}")

print("\nOrthogonality: sum over chi of chi(a) (phi(q) at a=1, else 0):")
for a in (1, 2, 7):
    s = sum(chi(a) for chi in g)
    print(f"  a={a}: {s:+.3e}")

print("\nGauss sums tau(chi) = sum chi(h) e(h/q):")
for q in (3, 4, 5, 9):
    for chi in character_group(q):
        tau = gauss_sum(chi)
        tag = "primitive" if chi.is_primitive else "imprimitive"
        print(f"  q={q} chi#{chi.index} ({tag:11s}): |tau| = {abs(tau):.6f}  sqrt(q) = {q**0.5:.6f}")
    print()

print("Quadratic Gauss sums (sqrt(p) if p = 1 mod 4, i sqrt(p) if p = 3 mod 4):")
for p in (3, 5, 7, 13, 17, 19):
    print(f"  p={p:3d}: {quadratic_gauss_sum(p):+.6f}")

print("\nIndex parameters (a, c, r) for characters mod 27:")
for chi in list(character_group(27))[:6]:
    ix = char_index(chi)
    print(
        f"  chi#{chi.index}: a={ix.a} c={ix.c:2d} r={ix.r}  "
        f"(primitive={chi.is_primitive}, gcd(c,p)=1 is {ix.c % ix.p != 0})"
    )
