"""Chebyshev sums psi(y, chi), their mean value t(x; q), and bound evaluators.

psi(y, chi) = sum_{n <= y} Lambda(n) chi(n) is a step function changing only
at integers, so scanning integer y gives the exact running maximum.  The mean
value

    t(x; q) = sum over all characters mod q of max_{y <= x} |psi(y, chi)|

is compared against five named upper bounds; the bounds carry an implied
constant (default 1), so ratios are reported rather than asserted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._parallel import parallel_map
from .arith import ArithTable
from .dirichlet import Character, CharacterGroup, character_group, primitive_inducing


@dataclass(frozen=True)
class PsiProfile:
    """Result of an exact psi(y, chi) scan up to x."""

    chi: Character
    x: int
    running_max: float  # max_{y <= x} |psi(y, chi)|
    final: complex  # psi(x, chi)


@dataclass
class BoundParams:
    """(x, q, eta, constant) with L = ln(xq); the input to every bound formula.

    ``epsilon`` only matters for the x^epsilon bound on S(alpha, x).
    """

    x: float
    q: int = 1
    eta: float | None = None
    constant: float = 1.0
    epsilon: float = 0.01
    L: float = field(init=False)

    def __post_init__(self):
        if self.x < 2:
            raise ValueError(f"x must be >= 2, got {self.x}")
        if self.q < 1:
            raise ValueError(f"q must be >= 1, got {self.q}")
        if self.eta is not None and self.eta < 1:
            raise ValueError(f"eta must be >= 1, got {self.eta}")
        self.L = math.log(self.x * self.q)


def psi(x: int, table: ArithTable) -> float:
    """Classical psi(x) = sum_{n <= x} Lambda(n)."""
    table.require(x)
    return float(np.sum(table.mangoldt[: x + 1]))


def psi_chi(x: int, chi: Character, table: ArithTable) -> PsiProfile:
    """Exact partial-sum scan of psi(y, chi) over integer y <= x."""
    table.require(x)
    if x < 1:
        return PsiProfile(chi=chi, x=x, running_max=0.0, final=0j)
    vals = chi.values[np.arange(1, x + 1) % chi.q]
    partial = np.cumsum(table.mangoldt[1 : x + 1] * vals)
    return PsiProfile(
        chi=chi,
        x=x,
        running_max=float(np.max(np.abs(partial))),
        final=complex(partial[-1]),
    )


def t_mean(
    x: int,
    q: int,
    table: ArithTable,
    *,
    group: CharacterGroup | None = None,
    primitive_variant: bool = False,
    workers: int | None = None,
) -> float:
    """t(x; q): sum over all characters mod q of the running max of |psi(y, chi)|.

    With ``primitive_variant`` each character is replaced by the primitive
    character inducing it (scanned at its own conductor), which is the
    primitive-sum variant the dyadic analysis passes through; the difference
    against the plain sum is the observed transition gap.
    """
    table.require(x)
    if group is None:
        group = character_group(q)
    elif group.q != q:
        raise ValueError(f"group modulus {group.q} != q {q}")

    if primitive_variant:
        chars = [primitive_inducing(chi) for chi in group]
    else:
        chars = list(group)

    maxima = parallel_map(lambda chi: psi_chi(x, chi, table).running_max, chars, workers)
    return math.fsum(maxima)


T_BOUND_KINDS = ("erh", "montgomery", "vaughan", "rakhmonov93", "theorem1")


def _t_bound_value(kind: str, x: float, q: float, L: float) -> float:
    if kind == "erh":
        return x + math.sqrt(x) * q * L**2
    if kind == "montgomery":
        return (x + x ** (5 / 7) * q ** (5 / 7) + math.sqrt(x) * q) * L**17
    if kind == "vaughan":
        return x * L**3 + x ** (3 / 4) * q ** (5 / 8) * L ** (23 / 8) + math.sqrt(x) * q * L ** (7 / 2)
    if kind == "rakhmonov93":
        return (x + x ** (4 / 5) * math.sqrt(q) + math.sqrt(x) * q) * L**34
    if kind == "theorem1":
        return x * L**28 + x ** (4 / 5) * math.sqrt(q) * L**31 + math.sqrt(x) * q * L**32
    raise ValueError(f"unknown t-bound kind {kind!r}; expected one of {T_BOUND_KINDS}")


def t_bound(kind: str, params: BoundParams) -> float:
    """Right-hand side of a named t(x; q) upper bound, times the implied constant."""
    return params.constant * _t_bound_value(kind, params.x, params.q, params.L)


T_SWEEP_COLUMNS = (
    "x",
    "q",
    "phi_q",
    "t_mean",
    "bound_erh",
    "bound_montgomery",
    "bound_vaughan",
    "bound_rakhmonov93",
    "bound_theorem1",
    "ratio_theorem1",
)


def t_ratio_sweep(
    grid: list[tuple[int, int]],
    table: ArithTable,
    *,
    constant: float = 1.0,
    workers: int | None = None,
) -> list[dict]:
    """One report row per (x, q): t(x; q), every bound, and the headline ratio."""
    rows = []
    for x, q in grid:
        group = character_group(q)
        t = t_mean(x, q, table, group=group, workers=workers)
        params = BoundParams(x=float(x), q=q, constant=constant)
        bounds = {k: t_bound(k, params) for k in T_BOUND_KINDS}
        rows.append(
            {
                "x": x,
                "q": q,
                "phi_q": group.phi,
                "t_mean": t,
                "bound_erh": bounds["erh"],
                "bound_montgomery": bounds["montgomery"],
                "bound_vaughan": bounds["vaughan"],
                "bound_rakhmonov93": bounds["rakhmonov93"],
                "bound_theorem1": bounds["theorem1"],
                "ratio_theorem1": t / bounds["theorem1"],
            }
        )
    return rows
