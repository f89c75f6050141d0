"""Command-line front end: suite discovery, runs, and single-trial replay.

Exit codes: 0 when every trial passes, 1 when at least one violation or
program error occurred, 2 for configuration or usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import ConfigError, SuiteConfig, get_suite, list_suites, replay_trial, run_suite
from .report import summary_lines, write_report

__all__ = ["main"]

_CONFIG_KEYS = {
    "suite": str,
    "variant": str,
    "iterations": int,
    "seed": int,
    "eps": float,
    "step_cap": int,
    "report_path": str,
}

_DEFAULTS = {
    "variant": "correct",
    "iterations": 1000,
    "seed": 42,
    "eps": 1e-10,
    "step_cap": 10_000_000,
}


def _load_config_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path!r} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"config file {path!r} must hold a JSON object")
    unknown = set(raw) - set(_CONFIG_KEYS)
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
    for key, value in raw.items():
        expected = _CONFIG_KEYS[key]
        if expected is float and isinstance(value, int):
            continue
        if not isinstance(value, expected) or isinstance(value, bool):
            raise ConfigError(f"config key {key!r} must be {expected.__name__}")
    return raw


def _resolve_run_options(args: argparse.Namespace) -> dict:
    """Layered precedence: flags, then config file, then RETRO_SEED for the
    seed, then built-in defaults."""
    options: dict = dict(_DEFAULTS)
    options["suite"] = None
    options["report_path"] = None

    file_values = _load_config_file(args.config) if args.config else {}
    options.update(file_values)

    for key, flag_value in (
        ("suite", args.suite),
        ("variant", args.variant),
        ("iterations", args.iterations),
        ("seed", args.seed),
        ("eps", args.eps),
        ("step_cap", args.step_cap),
        ("report_path", args.report),
    ):
        if flag_value is not None:
            options[key] = flag_value

    if args.seed is None and "seed" not in file_values:
        env_seed = os.environ.get("RETRO_SEED")
        if env_seed is not None:
            try:
                options["seed"] = int(env_seed)
            except ValueError:
                raise ConfigError(f"RETRO_SEED must be an integer, got {env_seed!r}") from None

    if not options["suite"]:
        raise ConfigError("no suite given (use --suite or a config file)")
    return options


def _cmd_list(args: argparse.Namespace) -> int:
    for suite in list_suites():
        variants = ", ".join(suite.variant_ids())
        print(f"{suite.name}  {suite.mode.value}  variants: {variants}")
    return 0


def _cmd_run(args: argparse.Namespace) -> int:
    options = _resolve_run_options(args)
    suite = get_suite(options["suite"])
    config = SuiteConfig(
        iterations=options["iterations"],
        master_seed=options["seed"],
        eps=options["eps"],
        step_cap=options["step_cap"],
        variant_id=options["variant"],
    )
    config.validate(suite)

    summary, reports = run_suite(suite, config)
    if options["report_path"]:
        write_report(options["report_path"], reports, suite)
    for line in summary_lines(summary):
        print(line)
    return 0 if summary.passes == summary.iterations else 1


def _print_transcript(report, suite) -> None:
    transcript = report.transcript
    print(f"suite: {report.suite}  variant: {report.variant_id}  mode: {suite.mode.value}")
    print(f"trial_seed: {report.trial_seed}")
    print(f"m1:         {transcript.m1!r}")
    print(f"m2:         {transcript.m2!r}")
    print(f"m2_mutated: {transcript.m2_mutated!r}")
    print(f"m1_prime:   {transcript.m1_prime!r}")
    if transcript.mutation is not None:
        print(f"mutation:   {transcript.mutation.name} {dict(transcript.mutation.parameters)!r}")
    else:
        print("mutation:   (not reached)")
    verdict = report.verdict
    stage = f" stage={verdict.stage.value}" if verdict.stage else ""
    detail = f" {verdict.detail}" if verdict.detail else ""
    print(f"verdict:    {verdict.outcome.value}{stage}{detail}")


def _cmd_replay(args: argparse.Namespace) -> int:
    suite = get_suite(args.suite)
    config = SuiteConfig(
        iterations=1,
        master_seed=0,
        eps=args.eps if args.eps is not None else _DEFAULTS["eps"],
        step_cap=args.step_cap if args.step_cap is not None else _DEFAULTS["step_cap"],
        variant_id=args.variant,
    )
    config.validate(suite)
    report = replay_trial(suite, config, args.trial_seed)
    _print_transcript(report, suite)
    return 0 if report.verdict.is_pass else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="retroharness",
        description="Round-trip testing harness: run built-in suites, "
        "replay trials, inspect the registry.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="list registered suites with modes and variants")
    p_list.set_defaults(func=_cmd_list)

    p_run = sub.add_parser(
        "run",
        help="run a suite",
        description="Flags override config-file values; RETRO_SEED overrides "
        "the default seed when --seed is absent.",
    )
    p_run.add_argument("--suite", help="suite name (see 'list')")
    p_run.add_argument("--variant", help="program variant id (default: correct)")
    p_run.add_argument("--iterations", type=int, help="number of trials (default: 1000)")
    p_run.add_argument("--seed", type=int, help="64-bit master seed (default: 42)")
    p_run.add_argument("--eps", type=float, help="relation tolerance (default: 1e-10)")
    p_run.add_argument("--step-cap", type=int, dest="step_cap",
                       help="work bound per program execution (default: 10^7)")
    p_run.add_argument("--report", help="write one JSON record per trial to this path")
    p_run.add_argument("--config", help="JSON config file with the same keys")
    p_run.set_defaults(func=_cmd_run)

    p_replay = sub.add_parser(
        "replay",
        help="re-run one trial from a reported seed and print its transcript",
    )
    p_replay.add_argument("--suite", required=True)
    p_replay.add_argument("--variant", default="correct")
    p_replay.add_argument("--trial-seed", type=int, required=True, dest="trial_seed")
    p_replay.add_argument("--eps", type=float)
    p_replay.add_argument("--step-cap", type=int, dest="step_cap")
    p_replay.set_defaults(func=_cmd_replay)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
