"""Command-line entry point and report emission.

Sweeps are described by a JSON config file; command-line flags override
config values.  The config is parsed strictly: unknown keys are errors, so a
misspelled knob can never silently fall back to a default.

Commands: tmean, expsum, hbverify, mixedsum, hlreport, hlscan, selftest.
Exit codes: 0 success, 1 validation/config error, 2 work limit exceeded.
Nothing is written to the output path on any error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import chebyshev, dirichlet, expsum, hbident, hlcount, mixedsum, reports
from .arith import build_table
from .selftest import run_selftest


class ConfigError(ValueError):
    pass


COMMANDS = ("tmean", "expsum", "hbverify", "mixedsum", "hlreport", "hlscan", "selftest")

# arity and field names of one grid row, per command
_GRID_SHAPE = {
    "tmean": ("x", "q"),
    "expsum": ("a", "q", "x"),
    "hbverify": ("x", "u1", "r"),
    "mixedsum": ("p", "beta", "l", "h"),
    "hlreport": ("x", "p", "alpha", "l"),
    "hlscan": ("q", "l"),
}

_CONFIG_KEYS = {
    "command",
    "sieve_limit",
    "grid",
    "output_path",
    "format",
    "implied_constant",
    "epsilon",
    "workers",
}

DEFAULT_SCAN_LIMIT = 100_000
DEFAULT_SELFTEST_LIMIT = 10_000


@dataclass
class RunConfig:
    command: str
    grid: list[tuple[int, ...]] = field(default_factory=list)
    sieve_limit: int | None = None
    output_path: str | None = None
    format: str = "csv"
    implied_constant: float = 1.0
    epsilon: float = 0.01
    workers: int | None = None

    def required_sieve_limit(self) -> int:
        """Smallest table that covers the grid (the x column, when present).

        For hlscan the sieve limit is the scan cap, so the floor is only the
        largest starting residue l.
        """
        shape = _GRID_SHAPE.get(self.command)
        if shape and "x" in shape and self.grid:
            col = shape.index("x")
            return max(row[col] for row in self.grid)
        if self.command == "hlscan" and self.grid:
            return max(row[1] for row in self.grid)
        return 1

    def default_sieve_limit(self) -> int:
        if self.command == "hlscan":
            return DEFAULT_SCAN_LIMIT
        return max(self.required_sieve_limit(), DEFAULT_SELFTEST_LIMIT)

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}; expected one of {COMMANDS}")
        if self.format not in ("csv", "json"):
            raise ConfigError(f"format must be csv or json, got {self.format!r}")
        if self.command == "selftest":
            if self.grid:
                raise ConfigError("selftest takes no grid")
            return
        shape = _GRID_SHAPE[self.command]
        if not isinstance(self.grid, list):
            raise ConfigError("grid must be a list of rows")
        for i, row in enumerate(self.grid):
            if len(row) != len(shape) or not all(isinstance(v, int) for v in row):
                raise ConfigError(
                    f"grid row {i} must be {len(shape)} integers {shape}, got {row!r}"
                )
        if self.sieve_limit is not None and self.sieve_limit < self.required_sieve_limit():
            raise ConfigError(
                f"sieve_limit {self.sieve_limit} is below the grid maximum "
                f"{self.required_sieve_limit()}"
            )


def parse_config(text: str) -> RunConfig:
    """Strict parse of the JSON config; unknown keys are errors."""
    if not text.strip():
        raise ConfigError("missing command")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    unknown = set(data) - _CONFIG_KEYS
    if unknown:
        raise ConfigError(f"unknown config key(s): {', '.join(sorted(unknown))}")
    if "command" not in data:
        raise ConfigError("missing command")

    cfg = RunConfig(command=data["command"])
    if "grid" in data:
        grid = data["grid"]
        if not isinstance(grid, list) or not all(isinstance(r, list) for r in grid):
            raise ConfigError("grid must be a list of lists of integers")
        cfg.grid = [tuple(r) for r in grid]
    for key, kind in (
        ("sieve_limit", int),
        ("output_path", str),
        ("format", str),
        ("implied_constant", (int, float)),
        ("epsilon", (int, float)),
        ("workers", int),
    ):
        if key in data:
            if not isinstance(data[key], kind) or isinstance(data[key], bool):
                raise ConfigError(f"config key {key!r} has the wrong type")
            setattr(cfg, key, float(data[key]) if key in ("implied_constant", "epsilon") else data[key])
    cfg.validate()
    return cfg


def _mixed_rows(cfg: RunConfig) -> list[dict]:
    rows = []
    groups: dict[int, dirichlet.CharacterGroup] = {}
    for p, beta, l, h in cfg.grid:
        modulus = p**beta
        group = groups.setdefault(modulus, dirichlet.character_group(modulus))
        rows.extend(mixedsum.mixed_sum_rows(group, l, h))
    return rows


def build_rows(cfg: RunConfig) -> tuple[list[dict], tuple[str, ...]]:
    """Run the sweep for the configured command and return (rows, columns)."""
    if cfg.command == "mixedsum":
        return _mixed_rows(cfg), mixedsum.MIXED_SWEEP_COLUMNS

    limit = cfg.sieve_limit or cfg.default_sieve_limit()
    table = build_table(limit)
    if cfg.command == "tmean":
        rows = chebyshev.t_ratio_sweep(
            [(x, q) for x, q in cfg.grid], table,
            constant=cfg.implied_constant, workers=cfg.workers,
        )
        return rows, chebyshev.T_SWEEP_COLUMNS
    if cfg.command == "expsum":
        rows = expsum.s_ratio_sweep(
            [(a, q, x) for a, q, x in cfg.grid], table,
            constant=cfg.implied_constant, epsilon=cfg.epsilon, workers=cfg.workers,
        )
        return rows, expsum.S_SWEEP_COLUMNS
    if cfg.command == "hbverify":
        rows = hbident.hb_verify_rows([(x, u1, r) for x, u1, r in cfg.grid], table)
        return rows, hbident.HB_SWEEP_COLUMNS
    if cfg.command == "hlreport":
        rows = []
        for x, p, alpha, l in cfg.grid:
            rep = hlcount.hl_report(hlcount.HLQuery(x=x, p=p, alpha=alpha, l=l), table)
            rows.append({c: getattr(rep, c) for c in hlcount.HL_REPORT_COLUMNS})
        return rows, hlcount.HL_REPORT_COLUMNS
    if cfg.command == "hlscan":
        rows = hlcount.hl_scan_rows([(q, l) for q, l in cfg.grid], limit, table)
        return rows, hlcount.HL_SCAN_COLUMNS
    raise ConfigError(f"unknown command {cfg.command!r}")


def run(cfg: RunConfig) -> int:
    """Execute a validated config; returns the process exit code."""
    try:
        cfg.validate()
        if cfg.command == "selftest":
            return 0 if run_selftest() else 1
        rows, columns = build_rows(cfg)
        text = reports.render(rows, columns, cfg.format)
    except hbident.WorkLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if cfg.output_path:
        reports.write_report(cfg.output_path, text)
    else:
        sys.stdout.write(text)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="mangoldt",
        description="Character-sum, prime exponential-sum and Hardy-Littlewood sweeps",
    )
    parser.add_argument("command", nargs="?", choices=COMMANDS, help="sweep to run")
    parser.add_argument("--config", metavar="PATH", help="JSON config with the sweep grid")
    parser.add_argument("--out", metavar="PATH", help="output report path")
    parser.add_argument("--format", choices=("csv", "json"))
    parser.add_argument("--sieve-limit", type=int, metavar="N")
    parser.add_argument("--workers", type=int, metavar="N")
    parser.add_argument("--constant", type=float, metavar="C", help="implied constant")
    parser.add_argument("--epsilon", type=float, metavar="E", help="epsilon for the x^epsilon bound")
    args = parser.parse_args(argv)

    try:
        if args.config:
            with open(args.config, "r", encoding="utf-8") as fh:
                text = fh.read()
            if args.command:
                # flags (including the positional command) win over the config
                data = json.loads(text) if text.strip() else {}
                data["command"] = args.command
                text = json.dumps(data)
            cfg = parse_config(text)
        elif args.command:
            cfg = RunConfig(command=args.command)
        else:
            print("error: missing command", file=sys.stderr)
            return 1
    except (ConfigError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    for attr, key in (
        ("out", "output_path"),
        ("format", "format"),
        ("sieve_limit", "sieve_limit"),
        ("workers", "workers"),
        ("constant", "implied_constant"),
        ("epsilon", "epsilon"),
    ):
        val = getattr(args, attr)
        if val is not None:
            setattr(cfg, key, val)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
