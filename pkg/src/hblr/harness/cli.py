"""Command-line surface.

Exit codes: 0 success, 1 usage error, 2 data error, 3 backend error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import replace
from pathlib import Path

from ..oracle import TransportError, UnconfiguredError
from ..reasoning import export_trace, mark_essential
from ..translation import (
    LogicStatement,
    SentenceSpan,
    TranslationMode,
    build_hybrid_context,
    statement_text,
)
from .config import load_config
from .dataset import SchemaError, load_dataset, save_dataset
from .report import emit_report
from .runner import (
    BackendUnavailableError,
    ConfigError,
    EmptyRunError,
    RunConfig,
    Strategy,
    prove_with_config,
    build_pipeline,
    compare_modes,
    run_eval,
)
from .synthetic import InvalidParamsError, generate_synthetic

USAGE_EXIT = 1
DATA_EXIT = 2
BACKEND_EXIT = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit code 2
        raise _UsageError(message)


def _add_backend_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--backend", choices=("template", "stub", "oracle"), default="template"
    )
    parser.add_argument("--trace-oracle", action="store_true")


def build_parser() -> _Parser:
    parser = _Parser(prog="hblr", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    translate = sub.add_parser("translate", help="build hybrid contexts")
    translate.add_argument("--in", dest="input", required=True)
    translate.add_argument(
        "--mode", choices=[m.value for m in TranslationMode], default="selective"
    )
    _add_backend_options(translate)

    prove = sub.add_parser("prove", help="prove dataset conclusions")
    prove.add_argument("--in", dest="input", required=True)
    prove.add_argument(
        "--strategy", choices=[s.value for s in Strategy], default="backward"
    )
    prove.add_argument("--budget", type=int, default=20)
    prove.add_argument(
        "--mode", choices=[m.value for m in TranslationMode], default="selective"
    )
    prove.add_argument("--traces", help="write step-by-step traces to this file")
    _add_backend_options(prove)

    evaluate = sub.add_parser("eval", help="run one configuration and emit reports")
    evaluate.add_argument("--dataset", required=True)
    evaluate.add_argument("--config", required=True)
    evaluate.add_argument("--out", required=True)
    evaluate.add_argument("--trace-oracle", action="store_true")

    ablate = sub.add_parser("ablate", help="compare configurations side by side")
    ablate.add_argument("--dataset", required=True)
    ablate.add_argument("--config", help="base configuration file")
    ablate.add_argument(
        "--axes", required=True, help="comma list from: modes, strategies"
    )
    ablate.add_argument("--out", required=True)
    ablate.add_argument("--trace-oracle", action="store_true")

    gen = sub.add_parser("gen", help="generate synthetic instances")
    gen.add_argument("--count", type=int, required=True)
    gen.add_argument("--depth", type=int, required=True)
    gen.add_argument("--distractors", type=int, default=0)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True)

    return parser


def _configure_tracing(enabled: bool) -> None:
    if enabled:
        logging.basicConfig(level=logging.INFO)
        logging.getLogger("hblr.oracle").setLevel(logging.INFO)


def _cmd_translate(args: argparse.Namespace) -> int:
    instances = load_dataset(args.input)
    config = RunConfig(mode=TranslationMode.parse(args.mode), backend=args.backend)
    pipeline, _ = build_pipeline(config)
    for instance in instances:
        premises = [SentenceSpan(p, i) for i, p in enumerate(instance.premises)]
        conclusion = SentenceSpan(instance.conclusion, 0, "conclusion")
        ctx = build_hybrid_context(premises, conclusion, config.mode, pipeline)
        print(f"{instance.id}\tretention={ctx.retention_ratio:.4f}")
        for index, statement in enumerate(ctx.premises):
            kind = "LOGIC" if isinstance(statement, LogicStatement) else "TEXT"
            print(f"  premise[{index}]\t{kind}\t{statement_text(statement)}")
        kind = "LOGIC" if isinstance(ctx.conclusion, LogicStatement) else "TEXT"
        print(f"  conclusion\t{kind}\t{statement_text(ctx.conclusion)}")
    return 0


def _cmd_prove(args: argparse.Namespace) -> int:
    instances = load_dataset(args.input)
    config = RunConfig(
        mode=TranslationMode.parse(args.mode),
        strategy=Strategy.parse(args.strategy),
        budget=args.budget,
        backend=args.backend,
    )
    pipeline, oracle = build_pipeline(config)
    trace_lines: list[str] = []
    for instance in instances:
        premises = [SentenceSpan(p, i) for i, p in enumerate(instance.premises)]
        conclusion = SentenceSpan(instance.conclusion, 0, "conclusion")
        ctx = build_hybrid_context(premises, conclusion, config.mode, pipeline)
        trace = mark_essential(prove_with_config(ctx, config, oracle))
        print(f"{instance.id}\t{trace.verdict.value}\t{trace.steps_used}")
        if args.traces:
            trace_lines.append(f"# {instance.id} {trace.verdict.value}")
            exported = export_trace(trace)
            if exported:
                trace_lines.append(exported)
    if args.traces:
        Path(args.traces).write_text(
            "\n".join(trace_lines) + "\n" if trace_lines else "", encoding="utf-8"
        )
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    instances = load_dataset(args.dataset)
    config = load_config(args.config)
    report = run_eval(instances, config)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    emit_report(report, "csv", out / "report.csv")
    emit_report(report, "markdown", out / "report.md")
    print(
        f"accuracy={report.aggregates.accuracy:.4f} "
        f"instances={report.aggregates.instances} out={out}"
    )
    return 0


_AXIS_VALUES = {
    "modes": [{"mode": mode} for mode in TranslationMode],
    "strategies": [{"strategy": strategy} for strategy in Strategy],
}


def _cmd_ablate(args: argparse.Namespace) -> int:
    instances = load_dataset(args.dataset)
    base = load_config(args.config) if args.config else RunConfig()
    axes = [a.strip() for a in args.axes.split(",") if a.strip()]
    unknown = [a for a in axes if a not in _AXIS_VALUES]
    if unknown:
        raise ConfigError(f"unknown axes: {unknown}; choose from modes, strategies")
    overrides: list[dict[str, object]] = [{}]
    for axis in axes:
        overrides = [
            {**combo, **value} for combo in overrides for value in _AXIS_VALUES[axis]
        ]
    report = compare_modes(instances, base, overrides)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    emit_report(report, "csv", out / "comparison.csv")
    emit_report(report, "markdown", out / "comparison.md")
    for run in report.reports:
        print(f"{run.config.label}\taccuracy={run.aggregates.accuracy:.4f}")
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    instances = generate_synthetic(args.count, args.depth, args.distractors, args.seed)
    save_dataset(instances, args.out)
    print(f"wrote {len(instances)} instances to {args.out}")
    return 0


_COMMANDS = {
    "translate": _cmd_translate,
    "prove": _cmd_prove,
    "eval": _cmd_eval,
    "ablate": _cmd_ablate,
    "gen": _cmd_gen,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    _configure_tracing(getattr(args, "trace_oracle", False))
    try:
        return _COMMANDS[args.command](args)
    except (BackendUnavailableError, TransportError, UnconfiguredError) as exc:
        print(f"backend error: {exc}", file=sys.stderr)
        return BACKEND_EXIT
    except (SchemaError, InvalidParamsError, ConfigError, EmptyRunError, OSError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return DATA_EXIT
    except ValueError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return DATA_EXIT


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
