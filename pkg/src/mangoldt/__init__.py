"""Exact computation of von Mangoldt-weighted character and exponential sums.

Modules:
    arith      sieved Lambda / mu / least-prime-factor tables and helpers
    dirichlet  character groups, conductors, Gauss sums, prime-power indices
    chebyshev  psi(y, chi) scans, the mean value t(x; q), bound evaluators
    expsum     S(alpha, x), its rational-point character decomposition, bounds
    hbident    the Heath-Brown prime-sum identity as a checked decomposition
    mixedsum   complete mixed sums mod p^beta, root sets, completion method
    hlcount    Hardy-Littlewood counts in prime-power progressions, scanner
    cli        config-driven sweeps with CSV/JSON reports
"""

from .arith import ArithTable, TableTooSmallError, build_table
from .chebyshev import BoundParams, PsiProfile, psi, psi_chi, t_bound, t_mean
from .dirichlet import (
    Character,
    CharacterGroup,
    PrimePowerIndex,
    char_index,
    character_group,
    conductor,
    gauss_sum,
    quadratic_gauss_sum,
)
from .expsum import RationalPoint, s_alpha, s_bound, s_rational_decomposed
from .hbident import HBConfig, HBDecomposition, hb_decompose, hb_character_config, lambda_trunc
from .hlcount import HLQuery, HLReport, hl_count, hl_main, hl_report, smallest_hl
from .mixedsum import (
    MixedSumSpec,
    RootSet,
    closed_form,
    complete_sum_oracle,
    delta_sum_oracle,
    incomplete_v2,
    mixed_sum_spec,
    root_set,
)

__version__ = "0.1.0"

__all__ = [
    "ArithTable",
    "BoundParams",
    "Character",
    "CharacterGroup",
    "HBConfig",
    "HBDecomposition",
    "HLQuery",
    "HLReport",
    "MixedSumSpec",
    "PrimePowerIndex",
    "PsiProfile",
    "RationalPoint",
    "RootSet",
    "TableTooSmallError",
    "build_table",
    "char_index",
    "character_group",
    "closed_form",
    "complete_sum_oracle",
    "conductor",
    "delta_sum_oracle",
    "gauss_sum",
    "hb_decompose",
    "hb_character_config",
    "hl_count",
    "hl_main",
    "hl_report",
    "incomplete_v2",
    "lambda_trunc",
    "mixed_sum_spec",
    "psi",
    "psi_chi",
    "quadratic_gauss_sum",
    "root_set",
    "s_alpha",
    "s_bound",
    "s_rational_decomposed",
    "smallest_hl",
    "t_bound",
    "t_mean",
]
