"""Dirichlet character groups: construction, evaluation, conductors, Gauss sums.

A character mod q is stored as an exponent vector over an explicit basis of
the unit group (Z/q)*: one generator per odd prime-power factor (its smallest
primitive root), and the {-1, 5} two-generator basis for 2^k with k >= 3.
Discrete logs per factor are precomputed once by walking powers of the
generator, so building the value table of any single character is O(q).

Value tables are exact up to one rounding: phases are carried as integers
t mod D (D = lcm of generator orders) and only converted to complex through a
single precomputed root-of-unity table, which keeps phase drift out of long
character sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .arith import euler_phi, factorize, primitive_root


def unit_phases(k: int) -> np.ndarray:
    """Table of e(t/k) = exp(2*pi*i*t/k) for t = 0..k-1."""
    return np.exp(2j * np.pi * np.arange(k) / k)


@dataclass(frozen=True)
class _Factor:
    """One prime-power block p^k of the modulus with its unit-group basis.

    ``dlogs[j][n % pe]`` is the exponent of generator j in the decomposition
    of n (or -1 when gcd(n, p) > 1).  For p odd there is one generator (the
    smallest primitive root); for pe = 4 the single generator is 3; for
    pe = 2^k, k >= 3, the generators are (pe - 1, order 2) and (5, 2^(k-2));
    pe = 2 contributes no generators.
    """

    p: int
    k: int
    pe: int
    gens: tuple[tuple[int, int], ...]  # (local residue, order)
    dlogs: tuple[np.ndarray, ...]


def _build_factor(p: int, k: int) -> _Factor:
    pe = p**k
    if p == 2:
        if k == 1:
            return _Factor(2, 1, 2, (), ())
        if k == 2:
            dlog = -np.ones(4, dtype=np.int64)
            dlog[1], dlog[3] = 0, 1
            dlog.flags.writeable = False
            return _Factor(2, 2, 4, ((3, 2),), (dlog,))
        half = pe // 4  # order of 5 mod 2^k
        sgn = -np.ones(pe, dtype=np.int64)
        five = -np.ones(pe, dtype=np.int64)
        for s in range(2):
            base = (pe - 1) ** s % pe
            cur = base
            for t in range(half):
                sgn[cur], five[cur] = s, t
                cur = cur * 5 % pe
        sgn.flags.writeable = False
        five.flags.writeable = False
        return _Factor(2, k, pe, ((pe - 1, 2), (5, half)), (sgn, five))
    g = primitive_root(p, k)
    order = pe // p * (p - 1)
    dlog = -np.ones(pe, dtype=np.int64)
    cur = 1
    for t in range(order):
        dlog[cur] = t
        cur = cur * g % pe
    dlog.flags.writeable = False
    return _Factor(p, k, pe, ((g, order),), (dlog,))


class CharacterGroup:
    """All phi(q) Dirichlet characters mod q, in a stable enumeration.

    Characters are ordered lexicographically by exponent vector, so the
    principal character always comes first and CSV output is reproducible.
    """

    def __init__(self, q: int):
        if q < 1:
            raise ValueError(f"modulus must be >= 1, got {q}")
        self.q = q
        self.factors = tuple(_build_factor(p, k) for p, k in factorize(q)) if q > 1 else ()
        self.gen_orders = tuple(d for f in self.factors for _, d in f.gens)
        self.phase_lcm = math.lcm(*self.gen_orders) if self.gen_orders else 1
        self.phi = euler_phi(q)

    def __len__(self) -> int:
        return self.phi

    def __getitem__(self, index: int) -> "Character":
        if not 0 <= index < self.phi:
            raise IndexError(index)
        exps, rem = [], index
        for d in reversed(self.gen_orders):
            exps.append(rem % d)
            rem //= d
        return Character(self, tuple(reversed(exps)), index)

    def __iter__(self):
        return (self[i] for i in range(self.phi))

    def character(self, exponents: tuple[int, ...]) -> "Character":
        exponents = tuple(a % d for a, d in zip(exponents, self.gen_orders, strict=True))
        index = 0
        for a, d in zip(exponents, self.gen_orders):
            index = index * d + a
        return Character(self, exponents, index)

    @property
    def principal(self) -> "Character":
        return self[0]

    def primitive_characters(self) -> list["Character"]:
        return [chi for chi in self if chi.is_primitive]


class Character:
    """One Dirichlet character mod q, evaluated through its cached value table."""

    def __init__(self, group: CharacterGroup, exponents: tuple[int, ...], index: int):
        self.group = group
        self.exponents = exponents
        self.index = index

    @property
    def q(self) -> int:
        return self.group.q

    def __repr__(self) -> str:
        return f"Character(mod {self.q}, #{self.index})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Character)
            and self.q == other.q
            and self.exponents == other.exponents
        )

    def __hash__(self) -> int:
        return hash((self.q, self.exponents))

    @cached_property
    def values(self) -> np.ndarray:
        """chi(n) for n = 0..q-1 (complex128, zero off the coprime classes)."""
        q, group = self.q, self.group
        D = group.phase_lcm
        if q == 1:
            v = np.ones(1, dtype=np.complex128)
            v.flags.writeable = False
            return v
        n = np.arange(q)
        coprime = np.gcd(n, q) == 1
        phase = np.zeros(q, dtype=np.int64)
        j = 0
        for f in group.factors:
            res = n % f.pe
            for dlog, (_, d) in zip(f.dlogs, f.gens):
                a = self.exponents[j]
                j += 1
                if a:
                    phase += (a * (D // d)) * dlog[res]
        vals = unit_phases(D)[phase % D]
        vals[~coprime] = 0.0
        vals.flags.writeable = False
        return vals

    def __call__(self, n):
        if isinstance(n, (int, np.integer)):
            return complex(self.values[int(n) % self.q])
        return self.values[np.mod(n, self.q)]

    @property
    def is_principal(self) -> bool:
        return all(a == 0 for a in self.exponents)

    def conjugate(self) -> "Character":
        return self.group.character(tuple(-a for a in self.exponents))

    def __mul__(self, other: "Character") -> "Character":
        if other.group is not self.group and other.q != self.q:
            raise ValueError("characters belong to different moduli")
        return self.group.character(
            tuple(a + b for a, b in zip(self.exponents, other.exponents))
        )

    @cached_property
    def conductor(self) -> int:
        return conductor(self)

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.q

    @cached_property
    def gauss(self) -> complex:
        return gauss_sum(self)


def character_group(q: int) -> CharacterGroup:
    """The full character group mod q; principal character enumerated first."""
    return CharacterGroup(q)


def _vp(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def conductor(chi: Character) -> int:
    """Smallest d | q such that chi is induced by a character mod d.

    Computed factor by factor: on a cyclic block of order d the character
    g -> e(a/d) is trivial on the units congruent to 1 mod p^gamma exactly
    when p^(k-gamma) divides a, which pins the local conductor to
    p^(k - v_p(a)); the 2^k block follows the same rule on the order of the
    image of 5, with the sign generator only able to force conductor 4.
    """
    cond = 1
    j = 0
    for f in chi.group.factors:
        if f.p != 2:
            a = chi.exponents[j]
            j += 1
            if a:
                cond *= f.p ** (f.k - _vp(a, f.p))
            continue
        if f.pe == 2:
            continue
        if f.pe == 4:
            a = chi.exponents[j]
            j += 1
            if a:
                cond *= 4
            continue
        s, t = chi.exponents[j], chi.exponents[j + 1]
        j += 2
        if t:
            cond *= 2 ** (f.k - _vp(t, 2))
        elif s:
            cond *= 4
    return cond


def primitive_inducing(chi: Character, group_d: CharacterGroup | None = None) -> Character:
    """The primitive character mod conductor(chi) inducing chi.

    It agrees with chi on every n coprime to q; found by direct comparison
    inside the (small) group mod the conductor.
    """
    d = chi.conductor
    if group_d is None:
        group_d = CharacterGroup(d)
    elif group_d.q != d:
        raise ValueError(f"expected a group mod {d}, got mod {group_d.q}")
    q = chi.q
    n = np.arange(q) if q > 1 else np.zeros(1, dtype=np.int64)
    coprime = np.gcd(n, q) == 1
    target = chi.values[coprime]
    reduced = np.mod(n[coprime], d)
    for cand in group_d:
        if not cand.is_primitive:
            continue
        if np.max(np.abs(cand.values[reduced] - target)) < 1e-9:
            return cand
    raise RuntimeError(f"no primitive character mod {d} induces {chi!r}")


def gauss_sum(chi: Character) -> complex:
    """tau(chi) = sum_{h=1..q} chi(h) e(h/q), by direct summation."""
    q = chi.q
    return complex(np.sum(chi.values * unit_phases(q)))


def quadratic_gauss_sum(p: int) -> complex:
    """sum_{m=1..p} e(m^2/p) for an odd prime p.

    Equals sqrt(p) when p = 1 (mod 4) and i*sqrt(p) when p = 3 (mod 4).
    """
    if p < 3 or p % 2 == 0 or factorize(p) != [(p, 1)]:
        raise ValueError(f"p must be an odd prime, got {p}")
    m = np.arange(1, p + 1)
    return complex(np.sum(unit_phases(p)[(m * m) % p]))


@dataclass(frozen=True)
class PrimePowerIndex:
    """Index parameters (a, c, r) of a character mod an odd prime power p^beta.

    a is the smallest primitive root mod p^beta; c is the unique integer in
    (0, p^(beta-1)(p-1)] with chi(a^k) = e(c k / (p^(beta-1)(p-1))) for all k;
    r is defined by a^(p-1) = 1 + r p with gcd(r, p) = 1, stored reduced mod p.
    For beta >= 2, gcd(c, p) = 1 exactly when chi is primitive.
    """

    p: int
    beta: int
    a: int
    c: int
    r: int

    @property
    def modulus(self) -> int:
        return self.p**self.beta

    @property
    def order(self) -> int:
        return self.p ** (self.beta - 1) * (self.p - 1)


def char_index(chi: Character) -> PrimePowerIndex:
    """Compute (a, c, r) for a character whose modulus is an odd prime power."""
    fac = factorize(chi.q)
    if len(fac) != 1 or fac[0][0] == 2:
        raise ValueError(f"modulus {chi.q} is not an odd prime power")
    p, beta = fac[0]
    group = chi.group
    a = group.factors[0].gens[0][0]  # the smallest primitive root, by construction
    order = group.factors[0].gens[0][1]
    c = chi.exponents[0] if chi.exponents[0] != 0 else order
    r_full = (a ** (p - 1) - 1) // p
    r = r_full % p
    if math.gcd(r_full, p) != 1:
        # cannot happen for beta >= 2 (a generates mod p^2); for beta = 1 it
        # would need a Wieferich-type prime far beyond desk scale
        raise ArithmeticError(f"a^(p-1) = 1 + rp has p | r for p={p}, a={a}")
    return PrimePowerIndex(p=p, beta=beta, a=a, c=c, r=r)
