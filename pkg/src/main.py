"""Command-line entry point for emd-lab.

Commands:
    compute  exact parameters (with witnesses) of one graph
    family   closed form against exact value along a family range
    verify   run verification suites and emit a JSON report
    scan     evaluate the bound suite on every graph of a graph6 corpus

Exit codes: 0 all good, 1 mismatches found, 2 input error, 3 time budget
exceeded.
"""

import argparse
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

import yaml

from src import __version__
from src.config import (
    ENV_LOG_LEVEL,
    ENV_WORKERS,
    LOG_LEVELS,
    SystemLogger,
    get_env_var,
    setup_logging,
)
from src.config_manager import ConfigManager, LabConfig
from src.dominant_search import applicable_parameters, compute_parameters
from src.families import FamilySpec, generate
from src.formulas import bound_checks
from src.graph_core import Graph, emit_graph6, parse_graph_text
from src.models import PARAMETER_ORDER, Parameter, TheoremCheck
from src.search import BudgetExceededError, SearchSettings
from src.suite_router import SUITE_NAMES, SuiteRouter
from src.utils import parse_range
from src.verify import (
    build_report,
    check_family_instance,
    exit_status,
    render_json,
    resolve_bound_ids,
    run_exhaustive_scan,
    sort_checks,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {text}")
    return value


def _add_common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("table", "json"), default="table")
    parser.add_argument("--budget", type=_positive_float, help="time budget per search (s)")
    parser.add_argument("--workers", type=_positive_int, help="process pool size")
    parser.add_argument("--seed", type=int, help="random tree seed")
    parser.add_argument("--config", help="YAML configuration file")
    parser.add_argument("--log-level", type=str.upper, choices=LOG_LEVELS)
    parser.add_argument("--output", help="write the report here instead of stdout")


def _add_parameter_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--all", action="store_true", help="every defined parameter")
    for parameter in PARAMETER_ORDER:
        parser.add_argument(
            parameter.flag,
            dest=parameter.value,
            action="store_true",
            help=f"compute {parameter.value}",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="emd-lab",
        description="Exact metric, edge metric and domination parameters of small graphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser("compute", help="parameters of one graph")
    compute.add_argument(
        "graph",
        help="edge-list or graph6 file, '-' for stdin, or a family spec such as cycle:8",
    )
    _add_parameter_flags(compute)
    _add_common_options(compute)

    family = commands.add_parser("family", help="closed form vs exact value over a range")
    family.add_argument(
        "name", help="family name (wheel) or spec template with n (kb:3,n or corona:path:n,path:2)"
    )
    family.add_argument("range", help="inclusive n-range, e.g. 5..9")
    _add_parameter_flags(family)
    _add_common_options(family)

    verify = commands.add_parser("verify", help="run verification suites")
    verify.add_argument(
        "--suite",
        action="append",
        help=f"all, {', '.join(SUITE_NAMES)} (repeatable or comma separated)",
    )
    verify.add_argument("--max-n", type=_positive_int, help="cap family and tree orders")
    verify.add_argument("--count", type=int, help="number of random trees")
    _add_common_options(verify)

    scan = commands.add_parser("scan", help="bound suite over a graph6 corpus")
    scan.add_argument("corpus", nargs="?", help="graph6 file or '-' (default from config)")
    scan.add_argument("--bounds", default="all", help="all, general, tree or a comma list")
    _add_common_options(scan)

    return parser


def load_config(args: argparse.Namespace) -> LabConfig:
    """Configuration file values with command-line overrides applied."""
    config = ConfigManager(args.config).load()
    workers = args.workers
    if workers is None and get_env_var(ENV_WORKERS):
        workers = int(get_env_var(ENV_WORKERS))
    return config.with_overrides(
        budget=args.budget,
        workers=workers,
        seed=args.seed,
        max_n=getattr(args, "max_n", None),
        count=getattr(args, "count", None),
    )


def selected_parameters(args: argparse.Namespace) -> list[Parameter]:
    return [p for p in PARAMETER_ORDER if getattr(args, p.value)]


def read_graph(source: str, max_vertices: int) -> Graph:
    """Load a graph from stdin, a file, or a family spec."""
    if source == "-":
        return parse_graph_text(sys.stdin.read())
    path = Path(source)
    if path.is_file():
        return parse_graph_text(path.read_text())
    return generate(FamilySpec.parse(source), max_vertices)


def _table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths, strict=True)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def _display(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, dict):
        return " ".join(f"{k}={v}" for k, v in value.items())
    return str(value)


def render_checks_table(checks: Sequence[TheoremCheck]) -> str:
    rows = [
        (
            c.theorem_id,
            c.instance,
            _display(c.predicted),
            _display(c.computed),
            c.status,
            _display({k: list(v) for k, v in c.witnesses.items()}) if c.witnesses else "-",
        )
        for c in checks
    ]
    return _table(("check", "instance", "predicted", "computed", "status", "witnesses"), rows)


def render_summary(summary: dict[str, int]) -> str:
    return " ".join(f"{key}={value}" for key, value in summary.items()) + "\n"


def _write(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_compute(
    args: argparse.Namespace, config: LabConfig, system_logger: SystemLogger
) -> int:
    """Exact values and witnesses; bound checks when two or more are requested."""
    settings = SearchSettings.from_config(config.solver)
    g = read_graph(args.graph, settings.max_vertices)
    parameters = selected_parameters(args)
    if args.all or not parameters:
        parameters = applicable_parameters(g)

    results = compute_parameters(g, parameters, settings)
    system_logger.record_search_effort(
        r.stats.combinations_examined for r in results.values()
    )
    bounds = []
    if len(results) >= 2:
        bounds = bound_checks(g, {p: r.value for p, r in results.items()})

    if args.format == "json":
        payload = {
            "graph": {"n": g.n, "m": g.m, "graph6": emit_graph6(g) if g.n else ""},
            "parameters": [r.to_dict() for r in results.values()],
            "bounds": [
                {"bound_id": b.bound_id, "holds": b.holds, "slack": b.slack}
                for b in bounds
            ],
        }
        _write(render_json(payload), args.output)
    else:
        text = f"n={g.n} m={g.m}\n"
        text += _table(
            ("parameter", "value", "witness", "method"),
            [(r.parameter, r.value, list(r.witness), r.method) for r in results.values()],
        )
        if bounds:
            text += "\n" + _table(
                ("bound", "holds", "slack"),
                [(b.bound_id, b.holds, b.slack) for b in bounds],
            )
        _write(text, args.output)
    return EXIT_OK


def cmd_family(
    args: argparse.Namespace, config: LabConfig, system_logger: SystemLogger
) -> int:
    """Per-n closed-form prediction, exact value and status."""
    settings = SearchSettings.from_config(config.solver)
    start, stop = parse_range(args.range)
    parameters = selected_parameters(args) or None
    if args.all:
        parameters = list(PARAMETER_ORDER)

    checks: list[TheoremCheck] = []
    for n in range(start, stop + 1):
        spec = FamilySpec.from_template(args.name, n)
        checks.extend(
            check_family_instance(spec, settings, parameters, solve_out_of_domain=True)
        )
        system_logger.increment_metric("instances_solved")

    report = build_report(checks, config, ["family"])
    if args.format == "json":
        _write(render_json(report), args.output)
    else:
        _write(render_checks_table(checks) + render_summary(report["summary"]), args.output)
    return exit_status(report)


def cmd_verify(
    args: argparse.Namespace, config: LabConfig, system_logger: SystemLogger
) -> int:
    """Run the selected suites and emit one report."""
    selection = [
        part.strip()
        for entry in (args.suite or ["all"])
        for part in entry.split(",")
        if part.strip()
    ]
    router = SuiteRouter(config)
    run = router.run(selection)
    report = build_report(run.checks, config, run.completed)
    system_logger.record_check_summary(report["summary"])

    if args.format == "json":
        _write(render_json(report), args.output)
    else:
        ordered = sort_checks(run.checks)
        _write(render_checks_table(ordered) + render_summary(report["summary"]), args.output)

    if run.failed:
        sys.stderr.write(f"error: suite(s) failed: {', '.join(run.failed)}\n")
        return EXIT_INPUT_ERROR
    return exit_status(report)


def cmd_scan(
    args: argparse.Namespace, config: LabConfig, system_logger: SystemLogger
) -> int:
    """Exhaustive bound evaluation over a graph6 corpus."""
    settings = SearchSettings.from_config(config.solver)
    bound_ids = resolve_bound_ids(args.bounds)
    source = args.corpus or config.corpus_path

    if source == "-":
        result = run_exhaustive_scan(sys.stdin, bound_ids, settings)
    else:
        with open(source) as stream:
            result = run_exhaustive_scan(stream, bound_ids, settings)
    system_logger.increment_metric("instances_solved", result.graphs_scanned)

    report = build_report(result.checks, config, ["scan"], result.diagnostics)
    system_logger.record_check_summary(report["summary"])
    if args.format == "json":
        _write(render_json(report), args.output)
    else:
        failing = [c for c in sort_checks(result.checks) if c.status != "match"]
        text = f"graphs={result.graphs_scanned} diagnostics={len(result.diagnostics)}\n"
        text += render_checks_table(failing) if failing else ""
        for diagnostic in result.diagnostics:
            text += f"line {diagnostic['line']}: {diagnostic['error']}\n"
        _write(text + render_summary(report["summary"]), args.output)
    return exit_status(report)


COMMANDS: dict[str, Callable[[argparse.Namespace, LabConfig, SystemLogger], int]] = {
    "compute": cmd_compute,
    "family": cmd_family,
    "verify": cmd_verify,
    "scan": cmd_scan,
}


def main(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, run one command and return its exit code."""
    args = build_parser().parse_args(argv)
    system_logger = setup_logging(args.log_level or get_env_var(ENV_LOG_LEVEL, "WARNING"))
    operation_logger = system_logger.get_operation_logger()

    system_logger.log_system_start(command=args.command)
    operation_logger.start_operation(args.command)
    try:
        config = load_config(args)
        status = COMMANDS[args.command](args, config, system_logger)
    except BudgetExceededError as e:
        sys.stderr.write(f"error: {e}\n")
        operation_logger.log_error(args.command, e)
        status = EXIT_BUDGET
    except (ValueError, OSError, yaml.YAMLError) as e:
        sys.stderr.write(f"error: {e}\n")
        system_logger.increment_metric("operations_failed")
        operation_logger.log_error(args.command, e)
        status = EXIT_INPUT_ERROR

    operation_logger.complete_operation(
        args.command, success=status == EXIT_OK, exit_code=status
    )
    system_logger.log_system_termination(success=status in (EXIT_OK, EXIT_MISMATCH))
    return status


if __name__ == "__main__":
    sys.exit(main())
