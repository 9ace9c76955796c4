"""Acceptance suite: the ten package-level criteria, one test each.

Every test enforces its stated tolerance (and runtime target where one is
given) and prints a single PASS line; run with `pytest -s tests/test_acceptance.py`
to see the lines.
"""

import json
import math
import time

import numpy as np

from mangoldt import chebyshev, cli, expsum, hbident, hlcount, mixedsum
from mangoldt.arith import factorize, is_prime, rho
from mangoldt.dirichlet import character_group, gauss_sum, quadratic_gauss_sum
from mangoldt.expsum import RationalPoint
from mangoldt.hlcount import HLQuery


def _odd_prime_powers(limit):
    out = []
    for p in range(3, limit + 1, 2):
        if is_prime(p):
            pe = p
            while pe <= limit:
                out.append((p, pe))
                pe *= p
    return sorted(out, key=lambda t: t[1])


def test_criterion_1_heath_brown_identity(table_1m):
    start = time.time()
    rng = np.random.default_rng(20240601)
    checked = 0
    for x in (50, 500, 2000):
        for u1 in sorted({1, math.isqrt(math.isqrt(x)), math.isqrt(x)}):
            for r in (1, 2, 3, 4):
                for _ in range(20):
                    amp = rng.uniform(size=x + 1)
                    phase = rng.uniform(size=x + 1)
                    fv = amp * np.exp(2j * np.pi * phase)
                    dec = hbident.hb_decompose(
                        hbident.HBConfig(x=x, u1=u1, r=r, f=lambda n: complex(fv[n])),
                        table_1m,
                    )
                    assert dec.discrepancy < 1e-6 * (1 + abs(dec.lhs)), (x, u1, r)
                    checked += 1
    elapsed = time.time() - start
    assert elapsed < 60, f"runtime target exceeded: {elapsed:.1f}s"
    print(f"\nACCEPTANCE 1 PASS: identity on {checked} decompositions, {elapsed:.1f}s")


def test_criterion_2_decomposition_identity(table_1m):
    start = time.time()
    checked = 0
    for q in range(1, 101):
        group = character_group(q)
        residues = [a for a in range(1, q + 1) if math.gcd(a, q) == 1][:10]
        for x in (10**3, 10**5):
            for a in residues:
                diag = expsum.s_rational_decomposed(RationalPoint(a, q), x, group, table_1m)
                assert diag.discrepancy < 1e-6 * (1 + abs(diag.direct)), (q, a, x)
                checked += 1
    elapsed = time.time() - start
    assert elapsed < 120, f"runtime target exceeded: {elapsed:.1f}s"
    print(f"ACCEPTANCE 2 PASS: decomposition identity on {checked} points, {elapsed:.1f}s")


def test_criterion_3_gauss_sums():
    primitive_count = 0
    for q in range(1, 201):
        for chi in character_group(q):
            if chi.is_primitive:
                tau = gauss_sum(chi)
                assert abs(abs(tau) ** 2 - q) < 1e-9 * q, (q, chi.index)
                primitive_count += 1
    assert abs(gauss_sum(character_group(4).principal)) < 1e-12
    quad = 0
    for p in range(3, 98, 2):
        if is_prime(p):
            want = math.sqrt(p) if p % 4 == 1 else 1j * math.sqrt(p)
            assert abs(quadratic_gauss_sum(p) - want) < 1e-9, p
            quad += 1
    print(f"ACCEPTANCE 3 PASS: {primitive_count} primitive Gauss sums, {quad} quadratic")


def test_criterion_4_class_sum_modulus_law():
    start = time.time()
    cases = [(3, (9, 27, 81), 1), (5, (25, 125, 625), 2), (7, (49, 343, 2401), 1), (11, (121, 1331), 1)]
    checked_cells = 0
    for p, moduli, l in cases:
        # -l must be a quadratic non-residue mod p
        assert rho(p, -l % p) == 0
        inv = [0] + [pow(v, -1, p) for v in range(1, p)]
        sqrt_table = [-1] * p
        for s in range(p - 1, -1, -1):
            sqrt_table[s * s % p] = s
        for N in moduli:
            beta = factorize(N)[0][1]
            law = float(p) ** (beta / 2)
            group = character_group(N)
            prims = [chi for chi in group if chi.is_primitive][:5]
            assert prims, N
            h_arr = np.arange(1, N + 1, dtype=np.int64)
            hbar = (h_arr % p).astype(np.int64)
            for chi in prims:
                spec0 = mixedsum.mixed_sum_spec(chi, l, 1)
                r, c = spec0.index.r % p, spec0.index.c % p

                # expected root-set mask per frequency, vectorized
                expected = np.zeros((p, N), dtype=bool)
                div = hbar == 0
                expected[p - 1, div] = True  # the single class delta = p
                disc = (c * c + l * r * r * hbar * hbar) % p
                s_arr = np.array([sqrt_table[d] for d in disc])
                has = (~div) & (s_arr >= 0)
                assert np.all(disc[~div] != 0), "degenerate discriminant"
                idx = np.flatnonzero(has)
                if idx.size:
                    inv_rh = np.array([inv[(r * hbar[i]) % p] for i in idx])
                    for sign in (1, -1):
                        d_root = ((sign * s_arr[idx] - c) * inv_rh) % p
                        keep = (l - d_root * d_root) % p != 0
                        rows = np.where(d_root == 0, p, d_root) - 1
                        expected[rows[keep], idx[keep]] = True

                sweep = mixedsum.delta_sum_sweep(chi, l)
                mags = np.abs(sweep)
                assert np.max(mags[~expected]) < 1e-9, (N, chi.index)
                assert np.max(np.abs(mags[expected] - law)) < 1e-8 * law, (N, chi.index)

                # partition: column sums against an independent FFT evaluation
                complete = mixedsum.complete_sums_all_h(chi, l)
                col = sweep.sum(axis=0)
                want = np.concatenate([complete[1:], complete[:1]])  # h = 1..N
                assert np.max(np.abs(col - want)) < 1e-10, (N, chi.index)

                # spot-check the vectorized sweep against the scalar oracles
                for h in (1, N // 2, N):
                    spec = mixedsum.mixed_sum_spec(chi, l, h)
                    rs = mixedsum.root_set(spec)
                    mask_col = {d + 1 for d in np.flatnonzero(expected[:, h - 1])}
                    assert mask_col == set(rs.roots), (N, chi.index, h)
                    for d in (1, p):
                        assert abs(sweep[d - 1, h - 1] - mixedsum.delta_sum_oracle(spec, d)) < 1e-10
                checked_cells += expected.size
    elapsed = time.time() - start
    assert elapsed < 600, f"runtime target exceeded: {elapsed:.1f}s"
    print(f"ACCEPTANCE 4 PASS: modulus law over {checked_cells} class sums, {elapsed:.1f}s")


def test_criterion_5_completion_identity():
    start = time.time()
    checked = 0
    for p, N in _odd_prime_powers(343):
        l = 1 if rho(p, -1 % p) == 0 else 2
        group = character_group(N)
        for chi in list(group)[:3]:
            direct = np.cumsum(chi.values[(l - np.arange(1, N + 1) ** 2) % N])
            for u in range(1, N + 1):
                completed = mixedsum.v2_completed(u, chi, l)
                assert abs(direct[u - 1] - completed) < 1e-8, (N, chi.index, u)
                checked += 1
    for _, N in _odd_prime_powers(3125):
        assert mixedsum.sine_denominator_sum(N) <= N * math.log(N), N
    elapsed = time.time() - start
    print(f"ACCEPTANCE 5 PASS: completion identity at {checked} points, {elapsed:.1f}s")


def test_criterion_6_principal_incomplete_asymptotic():
    for x in (10**2, 10**4, 10**6):
        u = math.isqrt(x)
        for p in (3, 5, 7, 11, 13):
            chi0 = character_group(p).principal
            for l in range(1, p):
                v = mixedsum.incomplete_v2(u, chi0, l).real
                target = math.sqrt(x) * (1 - rho(p, l) / p)
                assert abs(v - target) <= rho(p, l) + 2, (x, p, l)
    print("ACCEPTANCE 6 PASS: principal-character incomplete sums within rho + 2")


def test_criterion_7_hardy_littlewood_ratio(table_1m):
    start = time.time()
    for p, alpha, l in ((3, 1, 1), (7, 1, 1), (3, 2, 1)):
        query = HLQuery(x=10**6, p=p, alpha=alpha, l=l)
        assert query.nqr_witness
        rep = hlcount.hl_report(query, table_1m)
        assert 0.9 <= rep.ratio <= 1.1, (p, alpha, l, rep.ratio)
        assert 0.9 <= rep.exact / rep.main_exact <= 1.1, (p, alpha, l)
        other = hlcount.hl_count_m_major(query, table_1m)
        assert math.isclose(rep.exact, other, rel_tol=1e-9), (p, alpha, l)
    elapsed = time.time() - start
    assert elapsed < 300, f"runtime target exceeded: {elapsed:.1f}s"
    print(f"ACCEPTANCE 7 PASS: count/main-term ratios inside [0.9, 1.1], {elapsed:.1f}s")


def test_criterion_8_scanner(table_1m):
    r = hlcount.smallest_hl(3, 1, 100_000, table_1m)
    assert (r.value, r.prime, r.m) == (4, 3, 1)
    assert hlcount.smallest_hl(1, 1, 100_000, table_1m).value == 3
    found = 0
    for q in range(1, 51):
        for l in range(1, q + 1):
            res = hlcount.smallest_hl(q, l, 100_000, table_1m)
            if res is not None:
                assert res.value % q == l % q
                assert res.prime + res.m**2 == res.value
                assert is_prime(res.prime)  # trial division, independent of the sieve
                found += 1
    print(f"ACCEPTANCE 8 PASS: {found} scanner certificates revalidated")


def test_criterion_9_bound_ratio_report(table_1m):
    rows = chebyshev.t_ratio_sweep(
        [(x, q) for q in (3, 10, 50) for x in (10**3, 10**4, 10**5, 10**6)], table_1m
    )
    assert len(rows) == 12
    for row in rows:
        cap = row["phi_q"] * chebyshev.psi(row["x"], table_1m)
        assert row["t_mean"] <= cap + 1e-9, row
        assert math.isfinite(row["ratio_theorem1"]) and row["ratio_theorem1"] > 0
    print("ACCEPTANCE 9 PASS: 12 rows, t_mean <= phi(q) psi(x) in every row")


def test_criterion_10_determinism(tmp_path):
    configs = [
        {"command": "tmean", "grid": [[1000, 3], [1000, 10]]},
        {"command": "expsum", "grid": [[1, 5, 1000], [2, 5, 1000]]},
        {"command": "hbverify", "grid": [[500, 4, 3]]},
        {"command": "mixedsum", "grid": [[3, 2, 1, 1], [5, 2, 2, 5]], "format": "json"},
        {"command": "hlreport", "grid": [[10000, 3, 1, 1]]},
        {"command": "hlscan", "grid": [[3, 1], [7, 3]], "sieve_limit": 10000},
    ]
    for conf in configs:
        blobs = []
        for tag in ("first", "second"):
            out = tmp_path / f"{conf['command']}-{tag}.out"
            cfg = cli.parse_config(json.dumps({**conf, "output_path": str(out)}))
            assert cli.run(cfg) == 0
            blobs.append(out.read_bytes())
        assert blobs[0] == blobs[1], conf["command"]
    print("ACCEPTANCE 10 PASS: byte-identical reruns for all six commands")
