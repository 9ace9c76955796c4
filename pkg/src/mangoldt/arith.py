"""Sieved elementary arithmetic functions.

Everything downstream (psi scans, exponential sums, Hardy-Littlewood counts)
is a Lambda-weighted sum, so the sieve tables built here are the backbone of
the whole package.  Tables are plain numpy arrays, marked read-only after
construction so they can be shared freely between parallel workers.

Real accumulation everywhere in the package uses either ``math.fsum`` (exact
rounding for scalar loops) or ``numpy`` reductions (pairwise summation), so
million-term sums stay well below the 1e-6 accuracy the identity checks need.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np


class TableTooSmallError(ValueError):
    """Raised when an operation needs sieve data beyond the table limit."""


@dataclass(frozen=True)
class ArithTable:
    """Sieved Lambda(n), mu(n) and least-prime-factor arrays up to ``limit``.

    Attributes:
        limit: largest index covered (inclusive)
        mangoldt: float64, mangoldt[n] = log p if n = p^k (k >= 1) else 0
        moebius: int8, moebius[n] = mu(n)
        lpf: int64 least prime factor; lpf[1] = 1, lpf[0] = 0
    """

    limit: int
    mangoldt: np.ndarray
    moebius: np.ndarray
    lpf: np.ndarray

    @cached_property
    def primes(self) -> np.ndarray:
        """All primes <= limit, ascending."""
        n = np.arange(self.limit + 1)
        return np.flatnonzero((self.lpf == n) & (n >= 2))

    def is_prime(self, n: int) -> bool:
        return 2 <= n <= self.limit and self.lpf[n] == n

    def require(self, x: int) -> None:
        if x > self.limit:
            raise TableTooSmallError(
                f"need sieve data up to {x}, table stops at {self.limit}"
            )

    def factorize(self, n: int) -> list[tuple[int, int]]:
        """Prime factorization of n <= limit via the lpf array."""
        if not 1 <= n <= self.limit:
            raise TableTooSmallError(f"{n} outside table range [1, {self.limit}]")
        out = []
        while n > 1:
            p = int(self.lpf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        return out


def build_table(limit: int) -> ArithTable:
    """Sieve Lambda, mu and least prime factors for 0..limit."""
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    lpf = np.zeros(limit + 1, dtype=np.int64)
    if limit >= 1:
        lpf[1] = 1
    for p in range(2, math.isqrt(limit) + 1):
        if lpf[p] == 0:
            seg = lpf[p::p]
            seg[seg == 0] = p
    # anything still unmarked above 1 is a prime beyond sqrt(limit)
    rest = np.flatnonzero(lpf == 0)
    rest = rest[rest >= 2]
    lpf[rest] = rest

    n = np.arange(limit + 1)
    primes = np.flatnonzero((lpf == n) & (n >= 2))

    mangoldt = np.zeros(limit + 1, dtype=np.float64)
    if primes.size:
        mangoldt[primes] = np.log(primes)
        for p in primes[primes <= math.isqrt(limit)]:
            p = int(p)
            pk = p * p
            while pk <= limit:
                mangoldt[pk] = math.log(p)
                pk *= p

    moebius = np.zeros(limit + 1, dtype=np.int8)
    moebius[1:] = 1
    for p in primes:
        p = int(p)
        moebius[p::p] *= -1
        if p <= math.isqrt(limit):
            moebius[p * p :: p * p] = 0

    for arr in (lpf, mangoldt, moebius):
        arr.flags.writeable = False
    return ArithTable(limit=limit, mangoldt=mangoldt, moebius=moebius, lpf=lpf)


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization by trial division (no table needed)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    out = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    d = 5
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 2 if d % 6 == 5 else 4  # skip multiples of 2 and 3
    if n > 1:
        out.append((n, 1))
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == [(n, 1)]


def divisors(n: int) -> list[int]:
    """All divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def divisor_power(n: int, r: int) -> int:
    """tau_r(n): number of ordered r-tuples of positive integers with product n.

    Multiplicative; at p^e the count of r-part compositions of e is the
    multiset coefficient C(e+r-1, r-1).
    """
    if n < 1 or r < 1:
        raise ValueError(f"need n >= 1 and r >= 1, got n={n}, r={r}")
    val = 1
    for _, e in factorize(n):
        val *= math.comb(e + r - 1, r - 1)
    return val


def tau_growth_ratio(x: int, r: int) -> float:
    """(sum_{n<=x} tau_r(n)^2) / (x (ln x)^(r^2-1)).

    Empirical boundedness probe: the numerator grows like the denominator up
    to a constant, so the ratio should vary slowly in x.
    """
    if x < 2:
        raise ValueError(f"x must be >= 2, got {x}")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    tau = np.zeros(x + 1, dtype=np.int64)
    tau[1:] = 1
    for _ in range(r - 1):
        nxt = np.zeros(x + 1, dtype=np.int64)
        for d in range(1, x + 1):
            m = x // d
            nxt[d::d] += tau[1 : m + 1]
        tau = nxt
    total = float(np.sum(tau.astype(np.float64) ** 2))
    return total / (x * math.log(x) ** (r * r - 1))


def euler_phi(n: int) -> int:
    """Count of 1 <= k <= n coprime to n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    val = 1
    for p, e in factorize(n):
        val *= p ** (e - 1) * (p - 1)
    return val


def primitive_root(p: int, beta: int) -> int:
    """Smallest a > 1 of multiplicative order phi(p^beta) modulo p^beta.

    Requires p an odd prime and beta >= 1; the unit group mod p^beta is then
    cyclic, so a generator exists.
    """
    if beta < 1:
        raise ValueError(f"beta must be >= 1, got {beta}")
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    modulus = p**beta
    order = p ** (beta - 1) * (p - 1)
    # a generates iff a^(order/q) != 1 for each prime q | order
    check = [q for q, _ in factorize(p - 1)]
    if beta >= 2:
        check.append(p)
    a = 2
    while True:
        if a % p != 0 and all(pow(a, order // q, modulus) != 1 for q in check):
            return a
        a += 1


def rho(p: int, l: int) -> int:
    """Number of 1 <= n <= p with n^2 = l (mod p); always 0, 1 or 2."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    return sum(1 for n in range(1, p + 1) if (n * n - l) % p == 0)


def sqrt_mod(a: int, p: int) -> int | None:
    """Smallest s in 0..p-1 with s^2 = a (mod p), or None if a is a non-residue.

    Exhaustive scan; the moduli used in this package are tiny.
    """
    a %= p
    for s in range(p):
        if s * s % p == a:
            return s
    return None
