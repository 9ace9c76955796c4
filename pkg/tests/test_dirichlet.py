import math

import numpy as np
import pytest

from mangoldt.arith import divisors, euler_phi
from mangoldt.dirichlet import (
    char_index,
    character_group,
    conductor,
    gauss_sum,
    primitive_inducing,
    quadratic_gauss_sum,
)


def test_group_examples():
    g1 = character_group(1)
    assert len(g1) == 1
    assert np.allclose(g1[0].values, [1.0])

    g8 = character_group(8)
    assert len(g8) == 4
    for chi in g8:
        assert np.max(np.abs(chi.values.imag)) < 1e-12

    g9 = character_group(9)
    assert len(g9) == 6
    assert sorted(chi.conductor for chi in g9) == [1, 3, 9, 9, 9, 9]


def test_group_validation():
    with pytest.raises(ValueError):
        character_group(0)


def test_group_structure():
    for q in (1, 2, 3, 4, 8, 9, 12, 24, 45, 90):
        g = character_group(q)
        assert len(g) == euler_phi(q)
        assert g[0].is_principal
        assert sum(1 for chi in g if chi.is_principal) == 1
        # closed under product and conjugation (checked on the value tables)
        a, b = g[0], g[len(g) // 2]
        prod = a * b
        assert np.max(np.abs(prod.values - a.values * b.values)) < 1e-12
        conj = b.conjugate()
        assert np.max(np.abs(conj.values - np.conj(b.values))) < 1e-12


def test_character_basic_invariants():
    for q in (5, 8, 9, 12, 45):
        for chi in character_group(q):
            vals = chi.values
            n = np.arange(q)
            coprime = np.gcd(n, q) == 1
            assert np.all(vals[~coprime] == 0)
            assert np.max(np.abs(np.abs(vals[coprime]) - 1)) < 1e-12
            # complete multiplicativity on a sample
            for m in (2, 3, 7, 11):
                for k in (3, 5, 10):
                    assert abs(chi(m * k) - chi(m) * chi(k)) < 1e-12
            assert abs(chi(3 + q) - chi(3)) == 0  # periodicity via the table


def test_orthogonality_up_to_200():
    for q in range(1, 201):
        g = character_group(q)
        total = np.zeros(q if q > 1 else 1, dtype=np.complex128)
        for chi in g:
            total += chi.values
        n = np.arange(q) if q > 1 else np.zeros(1, dtype=int)
        for a in np.flatnonzero(np.gcd(n, q) == 1):
            want = g.phi if a % q == 1 % q else 0.0
            assert abs(total[a] - want) < 1e-9, (q, a)


def test_conductor_against_brute_force():
    def brute(chi):
        q = chi.q
        for d in divisors(q):
            if all(
                abs(chi(n) - 1) < 1e-9
                for n in range(1, q + 1)
                if math.gcd(n, q) == 1 and n % d == 1 % d
            ):
                return d
        return q

    for q in list(range(1, 61)) + [64, 96, 128]:
        for chi in character_group(q):
            assert conductor(chi) == brute(chi), (q, chi.index)


def test_conductor_examples():
    g = character_group(9)
    assert g.principal.conductor == 1
    order2 = [chi for chi in g if not chi.is_principal and abs(chi(2) ** 2 - 1) < 1e-12]
    assert len(order2) == 1 and order2[0].conductor == 3

    g3 = character_group(3)
    assert all(chi.conductor == 3 for chi in g3 if not chi.is_principal)


def test_induced_character_agreement():
    for q in (9, 12, 24, 36, 40, 63):
        for chi in character_group(q):
            prim = primitive_inducing(chi)
            assert prim.q == chi.conductor and prim.is_primitive
            for n in range(1, q + 1):
                if math.gcd(n, q) == 1:
                    assert abs(chi(n) - prim(n)) < 1e-9, (q, chi.index, n)


def test_gauss_sum_examples():
    chi3 = [c for c in character_group(3) if not c.is_principal][0]
    assert gauss_sum(chi3) == pytest.approx(1j * math.sqrt(3), abs=1e-12)

    assert abs(gauss_sum(character_group(4).principal)) < 1e-12

    for chi in character_group(5):
        if chi.is_primitive:
            assert abs(gauss_sum(chi)) == pytest.approx(math.sqrt(5), abs=1e-12)


def test_gauss_sum_modulus_law_sample():
    for q in range(1, 121):
        for chi in character_group(q):
            if chi.is_primitive:
                tau = gauss_sum(chi)
                assert abs(tau) ** 2 == pytest.approx(q, rel=1e-9), (q, chi.index)


def test_quadratic_gauss_sums():
    p = 3
    while p <= 97:
        want = math.sqrt(p) if p % 4 == 1 else 1j * math.sqrt(p)
        assert quadratic_gauss_sum(p) == pytest.approx(want, abs=1e-9)
        # cross-check against a per-term loop
        direct = sum(np.exp(2j * np.pi * (m * m % p) / p) for m in range(1, p + 1))
        assert quadratic_gauss_sum(p) == pytest.approx(direct, abs=1e-9)
        p += 2
        while not all(p % d for d in range(2, int(math.isqrt(p)) + 1)):
            p += 2
    with pytest.raises(ValueError):
        quadratic_gauss_sum(9)


def test_char_index_examples():
    ix = char_index(character_group(7).principal)
    assert (ix.a, ix.c) == (3, 6)
    assert ix.r == 6  # 3^6 = 729 = 1 + 7*104 and 104 = 6 (mod 7)

    for chi in character_group(9):
        ix = char_index(chi)
        assert ix.a == 2 and ix.r == 1  # 2^2 = 1 + 3*1


def test_char_index_round_trip():
    for q in (9, 27, 49, 121):
        for chi in character_group(q):
            ix = char_index(chi)
            n = ix.order
            assert 0 < ix.c <= n
            for k in range(1, n + 1):
                want = np.exp(2j * np.pi * ix.c * k / n)
                assert abs(chi(pow(ix.a, k, q)) - want) < 1e-9, (q, chi.index, k)
            assert (math.gcd(ix.c, ix.p) == 1) == chi.is_primitive


def test_char_index_rejects_bad_moduli():
    for q in (8, 12, 15):
        with pytest.raises(ValueError):
            char_index(character_group(q)[0])


def test_stable_enumeration_is_deterministic():
    a = [chi.exponents for chi in character_group(45)]
    b = [chi.exponents for chi in character_group(45)]
    assert a == b
    assert a[0] == tuple(0 for _ in a[0])
