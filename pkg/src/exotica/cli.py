"""Command-line entry point.

    exotica run <script> [--budget N] [--format json|text] [--out FILE]
                         [--parallel-asserts] [--stable]
    exotica check-all    [same options]

`run` accepts a path or the name of a bundled script (theorem_1_1,
theorem_1_2); `check-all` runs every bundled script.  Script files are UTF-8
with extension .exo.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path

from . import dsl
from .interpreter import ExecConfig, VerificationReport, execute


def bundled_scripts() -> list[str]:
    folder = resources.files("exotica").joinpath("scripts")
    return sorted(
        entry.name[: -len(".exo")]
        for entry in folder.iterdir()
        if entry.name.endswith(".exo")
    )


def load_bundled_script(name: str) -> str:
    return (
        resources.files("exotica")
        .joinpath("scripts")
        .joinpath(f"{name}.exo")
        .read_text(encoding="utf-8")
    )


def run_text(text: str, name: str, config: ExecConfig) -> VerificationReport:
    try:
        script = dsl.parse(text, source_name=name)
    except dsl.ParseError as exc:
        report = VerificationReport(script=name)
        report.error = f"parse error: {exc}"
        return report
    return execute(script, config)


def _resolve(name: str) -> tuple[str, str]:
    """Return (script name, script text) for a path or bundled name."""
    path = Path(name)
    if path.exists():
        return path.stem, path.read_text(encoding="utf-8")
    stem = name[: -len(".exo")] if name.endswith(".exo") else name
    if stem in bundled_scripts():
        return stem, load_bundled_script(stem)
    raise SystemExit(
        f"error: no such script {name!r} (bundled: {', '.join(bundled_scripts())})"
    )


def _emit(report: VerificationReport, args) -> None:
    if args.format == "json":
        rendered = report.to_json(stable=args.stable)
    else:
        rendered = report.to_text()
    if args.out:
        Path(args.out).write_text(rendered, encoding="utf-8")
    else:
        sys.stdout.write(rendered)


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--budget", type=int, default=200_000,
                     help="default coset budget for triviality checks")
    sub.add_argument("--format", choices=("json", "text"), default="text")
    sub.add_argument("--out", help="write the report to a file instead of stdout")
    sub.add_argument("--parallel-asserts", action="store_true",
                     help="evaluate assertions concurrently (operations are pure)")
    sub.add_argument("--stable", action="store_true",
                     help="omit timestamps and timings for byte-identical reports")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="exotica",
        description="run machine-checked construction scripts for exotic 4-manifolds",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    run_cmd = commands.add_parser("run", help="run one script")
    run_cmd.add_argument("script", help="script path or bundled script name")
    _add_common(run_cmd)
    all_cmd = commands.add_parser("check-all", help="run every bundled script")
    _add_common(all_cmd)

    args = parser.parse_args(argv)
    config = ExecConfig(budget=args.budget, parallel_asserts=args.parallel_asserts)

    if args.command == "run":
        name, text = _resolve(args.script)
        report = run_text(text, name, config)
        _emit(report, args)
        return report.exit_code()

    worst = 0
    for name in bundled_scripts():
        report = run_text(load_bundled_script(name), name, config)
        _emit(report, args)
        worst = max(worst, report.exit_code())
    return worst


if __name__ == "__main__":
    raise SystemExit(main())
