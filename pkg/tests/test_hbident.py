import math

import numpy as np
import pytest

from mangoldt.dirichlet import character_group
from mangoldt.hbident import (
    HBConfig,
    WorkLimitExceeded,
    hb_decompose,
    hb_character_config,
    hb_verify_rows,
    lambda_trunc,
)


def test_lambda_trunc_examples(table_10k):
    assert lambda_trunc(1, 1, table_10k) == 1
    assert lambda_trunc(1, 100, table_10k) == 1
    assert lambda_trunc(6, 2, table_10k) == 0  # mu(1) + mu(2)
    for n in (2, 7, 30, 210, 9973):
        assert lambda_trunc(n, 10**6, table_10k) == 0  # full Mobius divisor sum
    # direct divisor-loop oracle
    for n in (12, 36, 100, 210):
        for u1 in (1, 3, 7, 50):
            want = sum(
                int(table_10k.moebius[d]) for d in range(1, u1 + 1) if n % d == 0
            )
            assert lambda_trunc(n, u1, table_10k) == want, (n, u1)


def _brute_decomposition(x, u1, r, f, table):
    """Literal nested-loop evaluation of every group of the identity."""
    mu, lam_w = table.moebius, table.mangoldt
    total = 0j

    for k in range(1, r + 1):
        acc = 0j

        def loop_m(depth, prod, coef):
            nonlocal acc
            if depth == k:
                loop_n(0, prod, coef)
                return
            for m in range(1, min(u1, x // prod) + 1):
                if mu[m]:
                    loop_m(depth + 1, prod * m, coef * mu[m])

        def loop_n(depth, prod, coef):
            nonlocal acc
            if depth == k:
                acc += coef * f(prod)
                return
            for n in range(1, x // prod + 1):
                w = math.log(n) if depth == 0 else 1.0
                if w or depth > 0:
                    loop_n(depth + 1, prod * n, coef * w)

        loop_m(0, 1, 1.0)
        total += (-1) ** (k - 1) * math.comb(r, k) * acc

    resid = 0j

    def loop_r(depth, prod, coef):
        nonlocal resid
        if depth == r:
            for m in range(1, x // prod + 1):
                if lam_w[m]:
                    resid += coef * lam_w[m] * f(prod * m)
            return
        for n in range(u1 + 1, x // prod + 1):
            ln = lambda_trunc(n, u1, table)
            if ln:
                loop_r(depth + 1, prod * n, coef * ln)

    loop_r(0, 1, 1.0)
    return total + (-1) ** r * resid


@pytest.mark.parametrize("x,u1,r", [(10, 2, 1), (30, 3, 2), (20, 4, 2), (40, 2, 3), (16, 2, 4)])
def test_against_nested_loop_oracle(x, u1, r, table_10k):
    rng = np.random.default_rng(7 + x + r)
    fv = rng.standard_normal(x + 1) + 1j * rng.standard_normal(x + 1)
    f = lambda n: complex(fv[n])
    dec = hb_decompose(HBConfig(x=x, u1=u1, r=r, f=f), table_10k)
    brute = _brute_decomposition(x, u1, r, f, table_10k)
    lhs = sum(table_10k.mangoldt[n] * fv[n] for n in range(1, x + 1))
    assert dec.lhs == pytest.approx(lhs, abs=1e-9)
    assert dec.total == pytest.approx(brute, abs=1e-8)
    assert dec.discrepancy < 1e-9


def test_identity_examples(table_10k):
    dec = hb_decompose(HBConfig(x=10, u1=2, r=1, f=lambda n: 1.0 + 0j), table_10k)
    assert dec.discrepancy < 1e-9

    dec = hb_decompose(
        HBConfig(x=30, u1=3, r=2, f=lambda n: complex(np.exp(2j * np.pi * n / 3))),
        table_10k,
    )
    assert dec.discrepancy < 1e-9

    dec = hb_decompose(HBConfig(x=50, u1=5, r=3, f=lambda n: 0j), table_10k)
    assert dec.lhs == 0 and dec.residual == 0
    assert all(v == 0 for v in dec.main_terms)


def test_residual_vanishes_when_u1_covers_x(table_10k):
    dec = hb_decompose(HBConfig(x=100, u1=100, r=1, f=lambda n: 1.0 + 0j), table_10k)
    assert dec.residual == 0
    assert dec.discrepancy < 1e-9


def test_linearity(table_10k):
    rng = np.random.default_rng(3)
    x = 200
    f1 = rng.standard_normal(x + 1)
    f2 = rng.standard_normal(x + 1)
    mix = lambda n: complex(2 * f1[n] + 3j * f2[n])
    d1 = hb_decompose(HBConfig(x=x, u1=3, r=2, f=lambda n: complex(f1[n])), table_10k)
    d2 = hb_decompose(HBConfig(x=x, u1=3, r=2, f=lambda n: complex(f2[n])), table_10k)
    dm = hb_decompose(HBConfig(x=x, u1=3, r=2, f=mix), table_10k)
    for a, b, c in zip(d1.main_terms, d2.main_terms, dm.main_terms):
        assert c == pytest.approx(2 * a + 3j * b, abs=1e-9)
    assert dm.residual == pytest.approx(2 * d1.residual + 3j * d2.residual, abs=1e-9)
    assert dm.lhs == pytest.approx(2 * d1.lhs + 3j * d2.lhs, abs=1e-9)


def test_identity_grid(table_10k):
    rng = np.random.default_rng(17)
    for x in (100, 500, 2000):
        for u1 in sorted({1, math.isqrt(math.isqrt(x)), math.isqrt(x)}):
            for r in (1, 2, 3, 4):
                amp = rng.uniform(size=x + 1)
                phase = rng.uniform(size=x + 1)
                fv = amp * np.exp(2j * np.pi * phase)
                dec = hb_decompose(
                    HBConfig(x=x, u1=max(u1, 1), r=r, f=lambda n: complex(fv[n])),
                    table_10k,
                )
                assert dec.discrepancy <= 1e-6 * (1 + abs(dec.lhs)), (x, u1, r)


def test_config_validation(table_10k):
    with pytest.raises(ValueError):
        HBConfig(x=10, u1=11, r=1, f=lambda n: 1.0)
    with pytest.raises(ValueError):
        HBConfig(x=10, u1=2, r=0, f=lambda n: 1.0)
    with pytest.raises(ValueError):
        HBConfig(x=0, u1=1, r=1, f=lambda n: 1.0)


def test_character_config(table_10k):
    chi = character_group(3)[1]
    cfg = hb_character_config(16, chi)
    assert (cfg.u1, cfg.r) == (2, 4)
    assert (hb_character_config(81, chi).u1, hb_character_config(81, chi).r) == (3, 4)
    assert hb_character_config(10**4, chi).u1 == 10
    with pytest.raises(ValueError):
        hb_character_config(15, chi)
    dec = hb_decompose(hb_character_config(1000, chi), table_10k)
    assert dec.discrepancy <= 1e-6 * (1 + abs(dec.lhs))


def test_work_cap(table_10k):
    with pytest.raises(WorkLimitExceeded):
        hb_decompose(
            HBConfig(x=2000, u1=40, r=4, f=lambda n: 1.0 + 0j), table_10k, work_cap=100
        )


def test_verify_rows(table_10k):
    rows = hb_verify_rows([(100, 3, 2)], table_10k)
    assert len(rows) == 2
    assert {row["f_label"] for row in rows} == {"one", "e(n/3)"}
    for row in rows:
        assert row["discrepancy"] < 1e-9
