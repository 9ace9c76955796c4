"""Fast end-to-end invariant battery behind the `selftest` command.

Each check re-verifies one module invariant at small scale and prints one
PASS/FAIL line; the full battery runs in a few seconds.  The pytest suite
covers the same ground at the full acceptance scale.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from . import arith, chebyshev, dirichlet, expsum, hbident, hlcount, mixedsum


def _check_arith(table) -> None:
    for n in range(2, 3000):
        s = math.fsum(table.mangoldt[d] for d in arith.divisors(n))
        assert abs(s - math.log(n)) < 1e-9, f"Lambda divisor identity fails at {n}"
    rng = np.random.default_rng(1)
    f = rng.standard_normal(2001)
    f[0] = 0.0
    g = np.zeros(2001)
    for d in range(1, 2001):
        g[d::d] += f[d]
    back = np.zeros(2001)
    for d in range(1, 2001):
        if table.moebius[d]:
            back[d::d] += table.moebius[d] * g[1 : 2000 // d + 1]
    assert np.max(np.abs(back[1:] - f[1:])) < 1e-9, "Mobius inversion round-trip fails"
    for n in range(1, 101):
        assert arith.divisor_power(n, 1) == 1
        d2 = sum(1 for a in range(1, n + 1) if n % a == 0)
        assert arith.divisor_power(n, 2) == d2, n
        d3 = sum(d2_ for a in range(1, n + 1) if n % a == 0
                 for d2_ in [sum(1 for b in range(1, n // a + 1) if (n // a) % b == 0)])
        assert arith.divisor_power(n, 3) == d3, n
    for p in (3, 5, 7, 11, 13, 17, 19):
        for l in range(0, p + 1):
            v = arith.rho(p, l)
            assert v in (0, 1, 2)
            assert (v == 1) == (l % p == 0)


def _check_dirichlet() -> None:
    for q in range(1, 51):
        G = dirichlet.character_group(q)
        V = np.vstack([c.values for c in G])
        col = V.sum(axis=0)
        n = np.arange(q) if q > 1 else np.zeros(1, dtype=int)
        for a in np.flatnonzero(np.gcd(n, q) == 1):
            want = G.phi if a % q == 1 % q else 0.0
            assert abs(col[a] - want) < 1e-9, (q, a)
        for chi in G:
            if chi.is_primitive:
                tau = dirichlet.gauss_sum(chi)
                assert abs(abs(tau) ** 2 - q) < 1e-9 * max(q, 1), (q, chi.index)
    for p in (3, 5, 7, 11, 13):
        gs = dirichlet.quadratic_gauss_sum(p)
        want = math.sqrt(p) if p % 4 == 1 else 1j * math.sqrt(p)
        assert abs(gs - want) < 1e-9, p


def _check_chebyshev(table) -> None:
    x = 2000
    assert abs(chebyshev.t_mean(x, 1, table) - chebyshev.psi(x, table)) < 1e-9
    for q in (2, 3, 8, 15):
        G = dirichlet.character_group(q)
        tm = chebyshev.t_mean(x, q, table, group=G)
        assert tm <= G.phi * chebyshev.psi(x, table) + 1e-9, q
        for chi in G:
            a = chebyshev.psi_chi(x, chi, table)
            b = chebyshev.psi_chi(x, chi.conjugate(), table)
            assert abs(a.running_max - b.running_max) < 1e-9
            assert a.running_max >= abs(a.final) - 1e-12


def _check_expsum(table) -> None:
    x = 2000
    for q in range(1, 21):
        G = dirichlet.character_group(q)
        for a in range(1, q + 1):
            if math.gcd(a, q) == 1:
                d = expsum.s_rational_decomposed(expsum.RationalPoint(a, q), x, G, table)
                assert d.discrepancy <= 1e-6 * (1 + abs(d.direct)), (q, a)
                assert abs(d.direct) <= chebyshev.psi(x, table) + 1e-9
        for a in range(1, q):
            if math.gcd(a, q) == 1:
                s1 = expsum.s_rational(expsum.RationalPoint(a, q), x, table)
                s2 = expsum.s_rational(expsum.RationalPoint(q - a, q), x, table)
                assert abs(s1 - np.conj(s2)) < 1e-10, (q, a)


def _check_hbident(table) -> None:
    rng = np.random.default_rng(11)
    for x in (50, 200):
        for u1 in {1, math.isqrt(math.isqrt(x)), math.isqrt(x)}:
            for r in (1, 2, 3):
                fv = rng.uniform(size=x + 1) * np.exp(2j * np.pi * rng.uniform(size=x + 1))
                dec = hbident.hb_decompose(
                    hbident.HBConfig(x=x, u1=max(u1, 1), r=r, f=lambda n: complex(fv[n])),
                    table,
                )
                assert dec.discrepancy <= 1e-6 * (1 + abs(dec.lhs)), (x, u1, r)


def _check_mixedsum() -> None:
    for P, l in ((9, 1), (25, 2), (49, 1)):
        G = dirichlet.character_group(P)
        prims = [c for c in G if c.is_primitive][:2]
        for chi in prims:
            p = arith.factorize(P)[0][0]
            beta = arith.factorize(P)[0][1]
            for h in range(1, P + 1, 3):
                spec = mixedsum.mixed_sum_spec(chi, l, h)
                parts = [mixedsum.delta_sum_oracle(spec, d) for d in range(1, p + 1)]
                total = mixedsum.complete_sum_oracle(spec)
                assert abs(total - sum(parts)) < 1e-10
                roots = mixedsum.root_set(spec).roots
                for d in range(1, p + 1):
                    if d in roots:
                        assert abs(abs(parts[d - 1]) - p ** (beta / 2)) < 1e-8 * p ** (beta / 2)
                    else:
                        assert abs(parts[d - 1]) < 1e-9
        for chi in list(G)[:3]:
            for u in (1, P // 2, P):
                diag = mixedsum.completion_diagnostic(u, chi, l)
                assert diag.difference < 1e-8, (P, chi.index, u)
    for N in (3, 9, 27, 81, 243, 5, 25, 125, 7, 49, 343):
        assert mixedsum.sine_denominator_sum(N) <= N * math.log(N)


def _check_hlcount(table) -> None:
    for (x, p, a, l) in ((5000, 3, 1, 1), (5000, 3, 2, 1), (5000, 5, 1, 2), (5000, 7, 1, 1)):
        q = hlcount.HLQuery(x=x, p=p, alpha=a, l=l)
        v1 = hlcount.hl_count(q, table)
        v2 = hlcount.hl_count_m_major(q, table)
        assert math.isclose(v1, v2, rel_tol=1e-9, abs_tol=1e-9), (x, p, a, l)
    for q_ in range(1, 13):
        for l_ in range(1, q_ + 1):
            r = hlcount.smallest_hl(q_, l_, 10000, table)
            assert r is not None and r.value % q_ == l_ % q_
            assert r.prime + r.m**2 == r.value and table.lpf[r.prime] == r.prime


def run_selftest(emit: Callable[[str], None] = print) -> bool:
    """Run every module battery; returns True when all pass."""
    table = arith.build_table(10_000)
    checks = [
        ("arith sieve identities", lambda: _check_arith(table)),
        ("dirichlet orthogonality and gauss sums", _check_dirichlet),
        ("chebyshev mean values", lambda: _check_chebyshev(table)),
        ("expsum decomposition", lambda: _check_expsum(table)),
        ("heath-brown identity", lambda: _check_hbident(table)),
        ("mixed sums and completion", _check_mixedsum),
        ("hardy-littlewood counts and scanner", lambda: _check_hlcount(table)),
    ]
    ok = True
    for name, fn in checks:
        try:
            fn()
        except AssertionError as exc:
            ok = False
            emit(f"FAIL {name}: {exc}")
        else:
            emit(f"PASS {name}")
    return ok
