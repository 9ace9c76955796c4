"""Complete mixed sums S(chi, g, f, p^beta) with g = l - m^2, f = hm.

The complete sum over a full period splits over residue classes delta mod p:

    S = sum_{delta=1..p} S_delta,
    S_delta = sum_{m = delta (mod p), m <= p^beta} chi(l - m^2) e(hm / p^beta).

Writing (a, c, r) for the index parameters of chi (smallest primitive root a,
chi(a^k) = e(ck / phi), a^(p-1) = 1 + rp), the classes that can contribute are
the roots of r(delta^2 - l)h + 2c delta = 0 (mod p) with l - delta^2 nonzero
mod p: none or two when gcd(h, p) = 1 (by the quadratic-residue status of the
discriminant c^2 + l r^2 h^2), and the single class delta = p when p | h.
For primitive chi and beta >= 2 every surviving simple root carries
|S_delta| = p^(beta/2) exactly and every other class sums to zero.

The incomplete sum V2(u) = sum_{m <= u} chi(l - m^2) is also computed two
ways: directly, and through the additive-character completion against the
complete sums over all frequencies h.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import sqrt_mod
from .dirichlet import Character, PrimePowerIndex, char_index, unit_phases


class LemmaOutOfRangeError(ValueError):
    """The closed form needs beta >= t + 2; caller must fall back to the oracle."""


class DegenerateDiscriminantError(ArithmeticError):
    """Discriminant 0 mod p: impossible when -l is a quadratic non-residue."""


@dataclass(frozen=True)
class MixedSumSpec:
    """Parameters of one complete mixed sum."""

    p: int
    beta: int
    l: int
    h: int
    chi: Character
    index: PrimePowerIndex

    @property
    def modulus(self) -> int:
        return self.p**self.beta


def mixed_sum_spec(chi: Character, l: int, h: int) -> MixedSumSpec:
    """Build a validated spec from a character mod an odd prime power."""
    index = char_index(chi)
    p, beta = index.p, index.beta
    if math.gcd(l, p) != 1:
        raise ValueError(f"l={l} must be coprime to p={p}")
    if not 1 <= h <= p**beta:
        raise ValueError(f"need 1 <= h <= p^beta, got h={h}")
    return MixedSumSpec(p=p, beta=beta, l=l, h=h, chi=chi, index=index)


def complete_sum_oracle(spec: MixedSumSpec) -> complex:
    """Direct summation of S(chi, g, f, p^beta) over the full period."""
    N = spec.modulus
    m = np.arange(1, N + 1, dtype=np.int64)
    vals = spec.chi.values[(spec.l - m * m) % N]
    phases = unit_phases(N)[(spec.h * m) % N]
    return complex(np.sum(vals * phases))


def delta_sum_oracle(spec: MixedSumSpec, delta: int) -> complex:
    """Direct summation restricted to m = delta (mod p); delta in 1..p."""
    if not 1 <= delta <= spec.p:
        raise ValueError(f"delta must lie in 1..p, got {delta}")
    N = spec.modulus
    m = np.arange(delta, N + 1, spec.p, dtype=np.int64)
    vals = spec.chi.values[(spec.l - m * m) % N]
    phases = unit_phases(N)[(spec.h * m) % N]
    return complex(np.sum(vals * phases))


def delta_sum_sweep(chi: Character, l: int) -> np.ndarray:
    """All class sums at once: rows delta = 1..p, columns h = 1..p^beta.

    The phase matrix for one class is reused across frequencies, so a whole
    (p, beta, l) grid costs one matrix product per class.
    """
    index = char_index(chi)
    p, N = index.p, index.modulus
    if math.gcd(l, p) != 1:
        raise ValueError(f"l={l} must be coprime to p={p}")
    omega = unit_phases(N)
    h = np.arange(1, N + 1, dtype=np.int64)
    out = np.empty((p, N), dtype=np.complex128)
    for delta in range(1, p + 1):
        m = np.arange(delta, N + 1, p, dtype=np.int64)
        w = chi.values[(l - m * m) % N]
        out[delta - 1] = omega[np.outer(h, m) % N] @ w
    return out


@dataclass(frozen=True)
class RootSet:
    """Contributing classes mod p with the discriminant and case analysis."""

    roots: frozenset[int]  # subset of 1..p, delta = p standing for delta = 0
    discriminant: int  # c^2 + l r^2 h^2 reduced mod p
    case_tag: str  # h-divisible | qr-two-roots | nqr-empty


def root_set(spec: MixedSumSpec) -> RootSet:
    """Solve r(delta^2 - l)h + 2c delta = 0 (mod p), keeping l - delta^2 != 0.

    When p | h the congruence collapses to 2c delta = 0 with the single class
    delta = p; otherwise completing the square reduces it to
    (rh delta + c)^2 = c^2 + l r^2 h^2 (mod p), solvable iff the right side is
    a quadratic residue.
    """
    p, l = spec.p, spec.l
    r, c, h = spec.index.r % p, spec.index.c % p, spec.h % p
    disc = (c * c + l * r * r * h * h) % p

    if h == 0:
        roots, tag = {p}, "h-divisible"
    else:
        if disc == 0:
            raise DegenerateDiscriminantError(
                f"c^2 + l r^2 h^2 = 0 (mod {p}); -l is a quadratic residue here"
            )
        s = sqrt_mod(disc, p)
        if s is None:
            roots, tag = set(), "nqr-empty"
        else:
            inv = pow(r * h % p, -1, p)
            d1 = (s - c) * inv % p
            d2 = (-s - c) * inv % p
            roots, tag = {d1 or p, d2 or p}, "qr-two-roots"

    roots = {d for d in roots if (l - d * d) % p != 0}
    return RootSet(roots=frozenset(roots), discriminant=disc, case_tag=tag)


@dataclass(frozen=True)
class ClosedFormTerm:
    """Predicted shape of one class sum S_delta at a simple root."""

    delta: int
    t: int  # ord_p of the coefficients of r g f' + c g'
    modulus_predicted: float  # p^((beta + t) / 2)
    parity: str  # parity of beta - t: "even" or "odd"
    a_delta: int | None  # 2 r (C/g)'(delta) mod p, odd case only
    phase: complex | None  # filled empirically: oracle / predicted modulus


def _ord_p(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("ord_p(0) undefined here")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def sum_level(spec: MixedSumSpec) -> int:
    """t = ord_p(r g f' + c g') over the coefficients of the numerator.

    With g = l - m^2 and f = hm the polynomial is r l h - r h m^2 - 2 c m, so
    t = min(ord(h), ord(c)); zero for every primitive character.
    """
    p = spec.p
    r, c, h, l = spec.index.r, spec.index.c, spec.h, spec.l
    t = min(_ord_p(r * l * h, p), _ord_p(r * h, p), _ord_p(2 * c, p))
    if spec.chi.is_primitive:
        assert t == min(_ord_p(h, p), 0) == 0
    return t


def closed_form(spec: MixedSumSpec, delta: int) -> ClosedFormTerm:
    """Predicted |S_delta| (and parity data) for a simple root delta.

    The even case is a pure phase times p^((beta+t)/2); the odd case picks up
    the Legendre factor (A_delta / p) and one quadratic Gauss sum, which has
    modulus sqrt(p), so the predicted modulus is p^((beta+t)/2) either way.
    The phase needs the lifted comparison root and is left for empirical
    recovery from the oracle.
    """
    p, beta, l, h = spec.p, spec.beta, spec.l, spec.h
    t = sum_level(spec)
    if beta < t + 2:
        raise LemmaOutOfRangeError(f"need beta >= t + 2, got beta={beta}, t={t}")
    roots = root_set(spec)
    if delta not in roots.roots:
        raise ValueError(f"delta={delta} is not in the root set {sorted(roots.roots)}")

    r, c = spec.index.r, spec.index.c
    pt = p**t
    # C(m) = p^-t (r l h - r h m^2 - 2 c m); coefficients are exactly divisible
    c2, c1, c0 = (-r * h) // pt, (-2 * c) // pt, (r * l * h) // pt
    parity = "even" if (beta - t) % 2 == 0 else "odd"
    a_delta = None
    if parity == "odd":
        d = delta % p
        g_val = (l - d * d) % p
        g_der = (-2 * d) % p
        c_val = (c2 * d * d + c1 * d + c0) % p
        c_der = (2 * c2 * d + c1) % p
        # quotient rule for (C/g)' at delta; C(delta) = 0 mod p kills one term
        a_delta = 2 * r * (c_der * g_val - c_val * g_der) * pow(g_val * g_val % p, -1, p) % p
    return ClosedFormTerm(
        delta=delta,
        t=t,
        modulus_predicted=float(p) ** ((beta + t) / 2),
        parity=parity,
        a_delta=a_delta,
        phase=None,
    )


def closed_form_with_phase(spec: MixedSumSpec, delta: int) -> ClosedFormTerm:
    """Closed form with the phase recovered empirically from the oracle."""
    term = closed_form(spec, delta)
    value = delta_sum_oracle(spec, delta)
    phase = value / term.modulus_predicted
    return ClosedFormTerm(
        delta=term.delta,
        t=term.t,
        modulus_predicted=term.modulus_predicted,
        parity=term.parity,
        a_delta=term.a_delta,
        phase=complex(phase),
    )


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for odd prime p."""
    a %= p
    if a == 0:
        return 0
    return 1 if sqrt_mod(a, p) is not None else -1


def incomplete_v2(u: int, chi: Character, l: int, p_beta: int | None = None) -> complex:
    """V2(u) = sum_{m <= u} chi(l - m^2) by direct summation."""
    if u < 0:
        raise ValueError(f"u must be >= 0, got {u}")
    N = chi.q
    if p_beta is not None and p_beta != N:
        raise ValueError(f"p_beta={p_beta} does not match the character modulus {N}")
    if u == 0:
        return 0j
    m = np.arange(1, u + 1, dtype=np.int64)
    return complex(np.sum(chi.values[(l - m * m) % N]))


def complete_sums_all_h(chi: Character, l: int) -> np.ndarray:
    """S(chi, g, hm, N) for h = 0..N-1 in one pass (a length-N DFT)."""
    N = chi.q
    j = np.arange(N, dtype=np.int64)
    b = chi.values[(l - j * j) % N]
    return np.fft.ifft(b) * N  # index h holds sum_j b_j e(hj / N)


def v2_completed(u: int, chi: Character, l: int) -> complex:
    """V2(u) recomputed through the completion identity.

    With n = floor(u) and S_h the complete sum at frequency h,

        V2(n) = S_0 n / N
              + (1/N) sum_{h=1..N-1} sin(pi h n / N) / sin(pi h / N)
                       e(-h (n+1) / (2N)) S_h,

    the inner factor being the closed form of the geometric sum
    sum_{m <= n} e(-hm/N).
    """
    N = chi.q
    n = int(u)
    if n == 0:
        return 0j
    S = complete_sums_all_h(chi, l)
    h = np.arange(1, N, dtype=np.float64)
    kernel = (
        np.sin(np.pi * h * n / N)
        / np.sin(np.pi * h / N)
        * np.exp(-1j * np.pi * h * (n + 1) / N)
    )
    return complex(S[0] * n / N + np.sum(kernel * S[1:]) / N)


@dataclass(frozen=True)
class CompletionDiagnostics:
    direct: complex
    completed: complex
    difference: float


def completion_diagnostic(u: int, chi: Character, l: int) -> CompletionDiagnostics:
    """Direct vs completed V2(u), with their absolute difference."""
    direct = incomplete_v2(u, chi, l)
    completed = v2_completed(u, chi, l)
    return CompletionDiagnostics(direct=direct, completed=completed, difference=abs(direct - completed))


def sine_denominator_sum(modulus: int) -> float:
    """2 sum_{h=1..(N-1)/2} 1 / sin(pi h / N) for odd N; at most N ln N."""
    if modulus < 3 or modulus % 2 == 0:
        raise ValueError(f"modulus must be odd and >= 3, got {modulus}")
    h = np.arange(1, (modulus - 1) // 2 + 1, dtype=np.float64)
    return float(2.0 * np.sum(1.0 / np.sin(np.pi * h / modulus)))


MIXED_SWEEP_COLUMNS = (
    "p",
    "beta",
    "l",
    "h",
    "chi_id",
    "case_tag",
    "roots",
    "abs_S_predicted",
    "abs_S_oracle",
    "rel_err",
)


def mixed_sum_rows(
    group, l: int, h: int, *, chars_per_modulus: int = 5
) -> list[dict]:
    """Report rows for the first primitive characters of one modulus.

    One row per character: the root set, the predicted class-sum modulus
    (zero when the root set is empty) and the worst observed |S_delta| over
    the relevant classes.
    """
    prims = [chi for chi in group if chi.is_primitive][:chars_per_modulus]
    rows = []
    for chi in prims:
        spec = mixed_sum_spec(chi, l, h)
        rs = root_set(spec)
        predicted = float(spec.p) ** (spec.beta / 2) if rs.roots else 0.0
        if rs.roots:
            observed = max(abs(delta_sum_oracle(spec, d)) for d in sorted(rs.roots))
        else:
            observed = max(
                abs(delta_sum_oracle(spec, d)) for d in range(1, spec.p + 1)
            )
        rows.append(
            {
                "p": spec.p,
                "beta": spec.beta,
                "l": l,
                "h": h,
                "chi_id": chi.index,
                "case_tag": rs.case_tag,
                "roots": ";".join(str(d) for d in sorted(rs.roots)),
                "abs_S_predicted": predicted,
                "abs_S_oracle": observed,
                "rel_err": abs(observed - predicted) / max(predicted, 1.0),
            }
        )
    return rows
