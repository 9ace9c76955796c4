"""Hardy-Littlewood counts in prime-power progressions.

    H2(x; p^alpha, l) = sum of Lambda(n) over n <= x, 1 <= m <= sqrt(x)
                        with n + m^2 = l (mod p^alpha),

compared against the expected main term in two forms: the exact one,
psi(x, chi0) V2(sqrt(x), chi0, l, p^alpha) / phi(p^alpha), and the asymptotic
one, x^(3/2) (1 - rho(p, l)/p) / phi(p^alpha).  The remainder is measured by
subtraction, never modeled.  A scanner finds the smallest integer of the form
prime + m^2 in a given residue class, with a recheckable certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .arith import ArithTable, euler_phi, is_prime, rho


@dataclass
class HLQuery:
    """One count: range x, odd prime power p^alpha, residue l coprime to p."""

    x: int
    p: int
    alpha: int
    l: int
    nqr_witness: bool = field(init=False)

    def __post_init__(self):
        if self.x < 1:
            raise ValueError(f"x must be >= 1, got {self.x}")
        if self.alpha < 1:
            raise ValueError(f"alpha must be >= 1, got {self.alpha}")
        if self.p < 3 or not is_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if math.gcd(self.l, self.p) != 1:
            raise ValueError(f"l={self.l} must be coprime to p={self.p}")
        self.nqr_witness = rho(self.p, -self.l % self.p) == 0

    @property
    def modulus(self) -> int:
        return self.p**self.alpha


def _m_counts_by_residue(M: int, P: int) -> np.ndarray:
    """count[s] = #{1 <= m <= M : m = s (mod P)} for s = 0..P-1."""
    s = np.arange(P, dtype=np.int64)
    s_pos = np.where(s == 0, P, s)  # class 0 is represented by m = P, 2P, ...
    return np.where(s_pos <= M, (M - s_pos) // P + 1, 0)


def hl_count(query: HLQuery, table: ArithTable) -> float:
    """Exact count, iterating over n: each Lambda(n) is weighted by the number
    of m <= sqrt(x) with m^2 = l - n (mod p^alpha), read off a square table."""
    x, P = query.x, query.modulus
    table.require(x)
    M = math.isqrt(x)
    s = np.arange(1, P + 1, dtype=np.int64)
    m_per_residue = _m_counts_by_residue(M, P)[s % P].astype(np.float64)
    m_per_class = np.bincount((s * s) % P, weights=m_per_residue, minlength=P)
    n_class = (query.l - np.arange(x + 1)) % P
    return float(np.sum(table.mangoldt[: x + 1] * m_per_class[n_class]))


def hl_count_m_major(query: HLQuery, table: ArithTable) -> float:
    """Independent second oracle, iterating over m first: each m adds the
    Lambda mass of the residue class n = l - m^2 (mod p^alpha)."""
    x, P = query.x, query.modulus
    table.require(x)
    M = math.isqrt(x)
    class_mass = np.bincount(
        np.arange(x + 1) % P, weights=table.mangoldt[: x + 1], minlength=P
    )
    m = np.arange(1, M + 1, dtype=np.int64)
    return float(np.sum(class_mass[(query.l - m * m) % P]))


def psi_principal(x: int, p: int, table: ArithTable) -> float:
    """psi(x, chi0 mod p^alpha) = sum of Lambda(n) over n <= x with p !| n."""
    table.require(x)
    lam = table.mangoldt[: x + 1]
    return float(np.sum(lam) - np.sum(lam[p::p]))


def v2_principal(u: int, p: int, l: int) -> int:
    """V2(u, chi0, l, p^alpha) = #{m <= u : l - m^2 != 0 (mod p)}."""
    hits = 0
    for s in range(1, p + 1):
        if (s * s - l) % p == 0 and s <= u:
            hits += (u - s) // p + 1
    return u - hits


def hl_main(query: HLQuery, table: ArithTable) -> tuple[float, float]:
    """(main_exact, main_asymptotic) for the count."""
    x, p, P = query.x, query.p, query.modulus
    M = math.isqrt(x)
    phi = euler_phi(P)
    main_exact = psi_principal(x, p, table) * v2_principal(M, p, query.l) / phi
    main_asym = x**1.5 * (1 - rho(p, query.l) / p) / phi
    return main_exact, main_asym


@dataclass(frozen=True)
class HLReport:
    """Exact count, both main terms, measured remainder, and the headline ratio."""

    x: int
    p: int
    alpha: int
    l: int
    rho: int
    exact: float
    main_exact: float
    main_asymptotic: float
    remainder: float  # exact - main_exact
    ratio: float  # exact / main_asymptotic


def hl_report(query: HLQuery, table: ArithTable) -> HLReport:
    exact = hl_count(query, table)
    main_exact, main_asym = hl_main(query, table)
    return HLReport(
        x=query.x,
        p=query.p,
        alpha=query.alpha,
        l=query.l,
        rho=rho(query.p, query.l),
        exact=exact,
        main_exact=main_exact,
        main_asymptotic=main_asym,
        remainder=exact - main_exact,
        ratio=exact / main_asym,
    )


HL_REPORT_COLUMNS = (
    "x",
    "p",
    "alpha",
    "l",
    "rho",
    "exact",
    "main_exact",
    "main_asymptotic",
    "remainder",
    "ratio",
)


@dataclass(frozen=True)
class ScanResult:
    """A found Hardy-Littlewood number with its certificate."""

    value: int
    prime: int
    m: int


def smallest_hl(q: int, l: int, cap: int, table: ArithTable) -> ScanResult | None:
    """Smallest N <= cap with N = l (mod q) and N = prime + m^2, m >= 1.

    Returns None when no such N exists below the cap.  The certificate uses an
    actual prime (not a prime power) and the smallest m for the found N.
    """
    if not 1 <= l <= q:
        raise ValueError(f"need 1 <= l <= q, got l={l}, q={q}")
    table.require(cap)
    lpf = table.lpf
    for value in range(l, cap + 1, q):
        m = 1
        while value - m * m >= 2:
            rest = value - m * m
            if lpf[rest] == rest:
                return ScanResult(value=value, prime=rest, m=m)
            m += 1
    return None


HL_SCAN_COLUMNS = ("q", "l", "H2", "certificate_prime", "certificate_m")


def hl_scan_rows(grid: list[tuple[int, int]], cap: int, table: ArithTable) -> list[dict]:
    """Scanner report; H2 = -1 with zero certificates marks not-found."""
    rows = []
    for q, l in grid:
        res = smallest_hl(q, l, cap, table)
        if res is None:
            rows.append({"q": q, "l": l, "H2": -1, "certificate_prime": 0, "certificate_m": 0})
        else:
            rows.append(
                {
                    "q": q,
                    "l": l,
                    "H2": res.value,
                    "certificate_prime": res.prime,
                    "certificate_m": res.m,
                }
            )
    return rows
