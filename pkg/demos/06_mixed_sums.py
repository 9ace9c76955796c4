"""Complete mixed sums mod p^beta: root sets, the modulus law, completion.

For g = l - m^2 and f = hm, only the residue classes delta in the root set
contribute to S(chi, g, f, p^beta); each contributing class has modulus
exactly p^(beta/2).  The incomplete sum V2(u) is recovered through the
completion identity, and the sine-denominator sum stays below N ln N.
"""

import math

from mangoldt.dirichlet import character_group
from mangoldt.mixedsum import (
    closed_form_with_phase,
    completion_diagnostic,
    delta_sum_oracle,
    mixed_sum_spec,
    root_set,
    sine_denominator_sum,
)

P, l = 49, 1
group = character_group(P)
chi = [c for c in group if c.is_primitive][0]
print(f"Modulus {P}, l = {l}, primitive chi#{chi.index}; class sums across h:")
print(f"  {'h':>3} {'case':>14} {'roots':>8} " + " ".join(f"{'|S_'+str(d)+'|':>7}" for d in range(1, 8)))
for h in (1, 2, 3, 7, 14, 25, 49):
    spec = mixed_sum_spec(chi, l, h)
    rs = root_set(spec)
    mags = [abs(delta_sum_oracle(spec, d)) for d in range(1, 8)]
    roots = ",".join(str(d) for d in sorted(rs.roots)) or "-"
    print(f"  {h:>3} {rs.case_tag:>14} {roots:>8} " + " ".join(f"{v:>7.3f}" for v in mags))
print(f"  (the law: every contributing class has |S_delta| = p^(beta/2) = {7**1.0:.3f})")

print("\nClosed-form data with empirically recovered phases (modulus 27, l = 1):")
chi27 = [c for c in character_group(27) if c.is_primitive][0]
for h in (3, 6, 9, 27):
    spec = mixed_sum_spec(chi27, 1, h)
    for d in sorted(root_set(spec).roots):
        term = closed_form_with_phase(spec, d)
        print(
            f"  h={h:>2} delta={d}: t={term.t} parity={term.parity:4s} "
            f"|S| pred={term.modulus_predicted:.4f}  phase={term.phase:+.4f} "
            f"(|phase|={abs(term.phase):.6f})"
        )

print("\nCompletion identity for V2(u) = sum_{m<=u} chi(l - m^2), modulus 343:")
chi343 = [c for c in character_group(343) if c.is_primitive][0]
for u in (10, 100, 200, 343):
    diag = completion_diagnostic(u, chi343, 1)
    print(
        f"  u={u:>3}: direct={diag.direct:+.5f}  completed={diag.completed:+.5f}  "
        f"|diff|={diag.difference:.2e}"
    )

print("\nSine-denominator sums against the N ln N ceiling:")
for N in (27, 243, 343, 625, 2401, 3125):
    s = sine_denominator_sum(N)
    print(f"  N={N:>5}: sum={s:12.2f}  N ln N={N * math.log(N):12.2f}  margin={N*math.log(N)-s:10.2f}")
