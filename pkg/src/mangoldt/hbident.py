"""Heath-Brown's identity as an executable decomposition.

For any complex f, truncation level u1 <= x and order r >= 1, with
lambda(n) = sum_{d | n, d <= u1} mu(d):

    sum_{n <= x} Lambda(n) f(n)
        = sum_{k=1..r} (-1)^(k-1) C(r,k)
              sum_{m_i <= u1, prod m_i n_i <= x} mu(m_1)..mu(m_k)
                  ln(n_1) f(m_1 n_1 .. m_k n_k)
        + (-1)^r sum_{n_i > u1, prod n_i m <= x} lambda(n_1)..lambda(n_r)
                  Lambda(m) f(n_1 .. n_r m).

Each nested sum depends on f only through the value of the full product, so
the k-fold loops are realized as repeated truncated Dirichlet convolutions:
one pass builds a weight array w[v] (the loops over (m_i, n_i) with product v),
and every test function then costs a single dot product.  A work cap bounds
the total number of inner-loop visits across all convolutions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .arith import ArithTable, factorize
from .dirichlet import Character


class WorkLimitExceeded(RuntimeError):
    """The decomposition would exceed the configured inner-loop budget."""


DEFAULT_WORK_CAP = 10**9


@dataclass
class HBConfig:
    """Inputs of one decomposition: range x, truncation u1, order r, test f."""

    x: int
    u1: int
    r: int
    f: Callable[[int], complex]
    label: str = "f"

    def __post_init__(self):
        if self.x < 1:
            raise ValueError(f"x must be >= 1, got {self.x}")
        if not 1 <= self.u1 <= self.x:
            raise ValueError(f"need 1 <= u1 <= x, got u1={self.u1}, x={self.x}")
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")


@dataclass(frozen=True)
class HBDecomposition:
    """The r main groups, the residual term, and the left-hand side."""

    main_terms: tuple[complex, ...]
    residual: complex
    lhs: complex
    discrepancy: float  # |lhs - (sum of main terms + residual)|

    @property
    def total(self) -> complex:
        return sum(self.main_terms, start=0j) + self.residual


class _Budget:
    def __init__(self, cap: int):
        self.cap = cap
        self.spent = 0

    def spend(self, n: int) -> None:
        self.spent += n
        if self.spent > self.cap:
            raise WorkLimitExceeded(
                f"decomposition needs more than {self.cap} inner-loop visits"
            )


def _dconv(a: np.ndarray, b: np.ndarray, limit: int, budget: _Budget) -> np.ndarray:
    """Truncated Dirichlet convolution: out[ij] += a[i] b[j] for ij <= limit."""
    out = np.zeros(limit + 1, dtype=np.float64)
    for i in np.flatnonzero(a):
        if i == 0:
            continue
        m = limit // i
        if m == 0:
            break
        budget.spend(m)
        out[i::i] += a[i] * b[1 : m + 1]
    return out


def lambda_trunc(n: int, u1: int, table: ArithTable) -> int:
    """lambda(n) = sum of mu(d) over divisors d <= u1 of n.

    Only squarefree divisors contribute, so the sum runs over subsets of the
    distinct prime factors of n.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    fac = table.factorize(n) if n <= table.limit else factorize(n)
    primes = [p for p, _ in fac]
    total = 0
    subsets = [(1, 1)]  # (product, sign)
    for p in primes:
        subsets += [(d * p, -s) for d, s in subsets]
    for d, s in subsets:
        if d <= u1:
            total += s
    return total


def hb_decompose(
    cfg: HBConfig, table: ArithTable, *, work_cap: int = DEFAULT_WORK_CAP
) -> HBDecomposition:
    """Evaluate every group of the identity and the exact left-hand side."""
    x, u1, r = cfg.x, cfg.u1, cfg.r
    table.require(x)
    budget = _Budget(work_cap)

    f_vals = np.asarray([cfg.f(n) for n in range(1, x + 1)], dtype=np.complex128)

    def apply(weights: np.ndarray) -> complex:
        return complex(np.sum(weights[1:] * f_vals))

    mu_trunc = np.zeros(x + 1, dtype=np.float64)
    top = min(u1, x)
    mu_trunc[1 : top + 1] = table.moebius[1 : top + 1]

    lnw = np.zeros(x + 1, dtype=np.float64)
    lnw[1:] = np.log(np.arange(1, x + 1))

    ones = np.zeros(x + 1, dtype=np.float64)
    ones[1:] = 1.0

    main_terms: list[complex] = []
    mu_pow = mu_trunc  # (mu restricted to <= u1) convolved k times
    ln_pow = lnw  # ln * 1^(k-1): ln(n_1) spread over k free variables
    for k in range(1, r + 1):
        if k > 1:
            mu_pow = _dconv(mu_pow, mu_trunc, x, budget)
            ln_pow = _dconv(ln_pow, ones, x, budget)
        weights = _dconv(mu_pow, ln_pow, x, budget)
        sign = 1.0 if k % 2 == 1 else -1.0
        main_terms.append(sign * math.comb(r, k) * apply(weights))

    # residual: lambda restricted to n > u1, convolved r times, against Lambda
    lam = np.zeros(x + 1, dtype=np.float64)
    for d in range(1, min(u1, x) + 1):
        mu_d = table.moebius[d]
        if mu_d:
            budget.spend(x // d)
            lam[d::d] += mu_d
    lam[: min(u1, x) + 1] = 0.0
    resid_w = lam
    for _ in range(r - 1):
        resid_w = _dconv(resid_w, lam, x, budget)
    resid_w = _dconv(resid_w, table.mangoldt[: x + 1], x, budget)
    residual = (1.0 if r % 2 == 0 else -1.0) * apply(resid_w)

    lhs = complex(np.sum(table.mangoldt[1 : x + 1] * f_vals))
    total = sum(main_terms, start=0j) + residual
    return HBDecomposition(
        main_terms=tuple(main_terms),
        residual=residual,
        lhs=lhs,
        discrepancy=abs(lhs - total),
    )


def hb_character_config(y: int, chi: Character, label: str | None = None) -> HBConfig:
    """The standing choice u1 = floor(y^(1/4)), r = 4, f = a Dirichlet character."""
    if y < 16:
        raise ValueError(f"y must be >= 16 so that u1 >= 2, got {y}")
    u1 = math.isqrt(math.isqrt(y))
    return HBConfig(
        x=y,
        u1=u1,
        r=4,
        f=lambda n: chi(n),
        label=label or f"chi mod {chi.q} #{chi.index}",
    )


HB_SWEEP_COLUMNS = ("x", "u1", "r", "f_label", "lhs_re", "lhs_im", "residual_abs", "discrepancy")


def hb_verify_rows(
    grid: list[tuple[int, int, int]],
    table: ArithTable,
    *,
    work_cap: int = DEFAULT_WORK_CAP,
) -> list[dict]:
    """Report rows for a (x, u1, r) grid against a fixed pair of test functions."""
    probes: list[tuple[str, Callable[[int], complex]]] = [
        ("one", lambda n: 1.0 + 0j),
        ("e(n/3)", lambda n: complex(np.exp(2j * np.pi * n / 3))),
    ]
    rows = []
    for x, u1, r in grid:
        for label, f in probes:
            dec = hb_decompose(
                HBConfig(x=x, u1=u1, r=r, f=f, label=label), table, work_cap=work_cap
            )
            rows.append(
                {
                    "x": x,
                    "u1": u1,
                    "r": r,
                    "f_label": label,
                    "lhs_re": dec.lhs.real,
                    "lhs_im": dec.lhs.imag,
                    "residual_abs": abs(dec.residual),
                    "discrepancy": dec.discrepancy,
                }
            )
    return rows
