"""Linear exponential sums over primes and their character decomposition.

S(alpha, x) = sum_{n <= x} Lambda(n) e(alpha n) with e(t) = exp(2*pi*i*t).
At a rational point a/q the sum splits exactly as

    S(a/q, x) = (1/phi(q)) sum_chi chi(a) tau(conj chi) psi(x, chi)
                + sum_{n <= x, gcd(n,q) > 1} Lambda(n) e(an/q),

because orthogonality collapses the character average to the coprime part of
the sum; the leftover non-coprime terms are computed explicitly, which turns
the usual asymptotic statement into an identity testable to rounding error.

Rational points are evaluated with integer phase arithmetic (an mod q), so the
only roundings are the final unit-circle lookups and the accumulation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._parallel import parallel_map
from .arith import ArithTable
from .chebyshev import BoundParams
from .dirichlet import CharacterGroup, character_group, gauss_sum, unit_phases


@dataclass(frozen=True)
class RationalPoint:
    """A reduced rational a/q, optionally displaced by a real offset lambda."""

    a: int
    q: int
    lambda_offset: float | None = None

    def __post_init__(self):
        if not 1 <= self.a <= self.q:
            raise ValueError(f"need 1 <= a <= q, got a={self.a}, q={self.q}")
        if math.gcd(self.a, self.q) != 1:
            raise ValueError(f"a={self.a} and q={self.q} are not coprime")

    @property
    def alpha(self) -> float:
        return self.a / self.q + (self.lambda_offset or 0.0)


@dataclass(frozen=True)
class DecompositionDiagnostics:
    """Both sides of the rational-point decomposition and their gap."""

    direct: complex  # S(a/q, x) summed with integer phases
    via_characters: complex  # (1/phi) sum_chi chi(a) tau(conj chi) psi(x, chi)
    correction: complex  # terms with gcd(n, q) > 1
    discrepancy: float  # |direct - (via_characters + correction)|


def s_alpha(alpha: float, x: int, table: ArithTable) -> complex:
    """S(alpha, x) by direct summation.

    The phase is reduced mod 1 before multiplying by n, so integer shifts of
    alpha reproduce the same value bit for bit.
    """
    table.require(x)
    if x < 1:
        return 0j
    alpha = math.fmod(alpha, 1.0)
    theta = np.mod(alpha * np.arange(1, x + 1), 1.0)
    return complex(np.sum(table.mangoldt[1 : x + 1] * np.exp(2j * np.pi * theta)))


def lambda_residue_sums(x: int, q: int, table: ArithTable) -> np.ndarray:
    """R[j] = sum of Lambda(n) over n <= x with n = j (mod q), j = 0..q-1."""
    table.require(x)
    return np.bincount(
        np.arange(x + 1) % q, weights=table.mangoldt[: x + 1], minlength=q
    )


def s_rational(pt: RationalPoint, x: int, table: ArithTable) -> complex:
    """S(a/q, x) with exact integer phases (residue-class aggregation)."""
    q = pt.q
    R = lambda_residue_sums(x, q, table)
    phases = unit_phases(q)[(pt.a * np.arange(q)) % q]
    return complex(np.sum(R * phases))


def s_rational_decomposed(
    pt: RationalPoint,
    x: int,
    group: CharacterGroup,
    table: ArithTable,
) -> DecompositionDiagnostics:
    """Evaluate both routes to S(a/q, x) and report their discrepancy."""
    q = pt.q
    if group.q != q:
        raise ValueError(f"group modulus {group.q} does not match point modulus {q}")
    R = lambda_residue_sums(x, q, table)
    omega = unit_phases(q)
    j = np.arange(q)
    phases = omega[(pt.a * j) % q]

    direct = complex(np.sum(R * phases))
    noncoprime = np.gcd(j, q) > 1
    correction = complex(np.sum(R[noncoprime] * phases[noncoprime]))

    terms = np.empty(group.phi, dtype=np.complex128)
    for i, chi in enumerate(group):
        psi_val = np.sum(chi.values * R)
        terms[i] = chi(pt.a) * gauss_sum(chi.conjugate()) * psi_val
    via = complex(np.sum(terms) / group.phi)

    return DecompositionDiagnostics(
        direct=direct,
        via_characters=via,
        correction=correction,
        discrepancy=abs(direct - (via + correction)),
    )


S_BOUND_KINDS = (
    "vinogradov5",
    "montgomery6",
    "montgomery7",
    "vaughan8",
    "vaughan9",
    "rakhmonov10",
    "rakhmonov11",
    "theorem2",
    "corollary1",
    "corollary2",
)

_ETA_KINDS = frozenset({"montgomery7", "vaughan9", "rakhmonov11", "corollary2"})


def _s_bound_value(kind: str, x: float, q: float, L: float, eta: float | None, eps: float) -> float:
    if kind in _ETA_KINDS:
        if eta is None:
            raise ValueError(f"bound kind {kind!r} requires eta")
        scale = x / math.sqrt(eta)
        if kind == "montgomery7":
            return scale * L**17
        if kind == "vaughan9":
            return scale * L**4
        if kind == "rakhmonov11":
            return scale * L**35
        return scale * L**33  # corollary2
    rq = math.sqrt(q)
    if kind == "vinogradov5":
        return (x / rq + x ** (4 / 5) + math.sqrt(x) * rq) * x**eps
    if kind == "montgomery6":
        return (x / rq + x ** (5 / 7) * q ** (3 / 14) + math.sqrt(x) * rq) * L**17
    if kind == "vaughan8":
        return (x / rq + x ** (7 / 8) * q ** (-1 / 8) + x ** (3 / 4) * q ** (1 / 8) + math.sqrt(x) * rq) * L**4
    if kind == "rakhmonov10":
        return (x / rq + x ** (4 / 5) + math.sqrt(x) * rq) * L**35
    if kind == "theorem2":
        return x / rq * L**29 + x ** (4 / 5) * L**32 + math.sqrt(x) * rq * L**33
    if kind == "corollary1":
        return x / rq * L**33 + x ** (4 / 5) * L**32 + math.sqrt(x) * rq * L**33
    raise ValueError(f"unknown S-bound kind {kind!r}; expected one of {S_BOUND_KINDS}")


def s_bound(kind: str, params: BoundParams) -> float:
    """Right-hand side of a named S(alpha, x) upper bound, times the constant."""
    return params.constant * _s_bound_value(
        kind, params.x, params.q, params.L, params.eta, params.epsilon
    )


S_SWEEP_COLUMNS = ("a", "q", "x", "abs_S", "bound_theorem2", "ratio", "discrepancy")


def s_ratio_sweep(
    points: list[tuple[int, int, int]],
    table: ArithTable,
    *,
    constant: float = 1.0,
    epsilon: float = 0.01,
    workers: int | None = None,
) -> list[dict]:
    """One report row per (a, q, x): |S(a/q, x)|, the refined bound, and the gap."""
    groups: dict[int, CharacterGroup] = {}

    def one(point: tuple[int, int, int]) -> dict:
        a, q, x = point
        group = groups.setdefault(q, character_group(q))
        diag = s_rational_decomposed(RationalPoint(a=a, q=q), x, group, table)
        bound = s_bound(
            "theorem2", BoundParams(x=float(x), q=q, constant=constant, epsilon=epsilon)
        )
        abs_s = abs(diag.direct)
        return {
            "a": a,
            "q": q,
            "x": x,
            "abs_S": abs_s,
            "bound_theorem2": bound,
            "ratio": abs_s / bound,
            "discrepancy": diag.discrepancy,
        }

    # build groups up front so the parallel phase only reads shared state
    for _, q, _ in points:
        groups.setdefault(q, character_group(q))
    return parallel_map(one, points, workers)
