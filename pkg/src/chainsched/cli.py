"""Command line interface.

Subcommands: generate, validate, lb, schedule, validate-schedule, oracle,
compare.  All outputs are deterministic: running a command twice on the same
inputs produces byte-identical files and stdout.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import algorithms, experiments, workload
from .oracle import BudgetExceededError, DEFAULT_BUDGET, optimal_makespan
from .schedule_core import (ScheduleFormatError, check_schedule, lower_bound,
                            metrics, read_schedule, write_schedule)
from .workload import (ChainClass, GeneratorConfig, InstanceFormatError,
                       generate, read_system, validate_system, write_system)


def _read_text(path: str) -> str:
    return Path(path).read_text()


def _load_system(path: str) -> workload.TaskSystem:
    system = read_system(_read_text(path))
    report = validate_system(system)
    if not report.ok:
        raise InstanceFormatError(
            f"{path}: invalid system: " + "; ".join(report.violations))
    return system


def _cmd_generate(args) -> int:
    config = GeneratorConfig(
        seed=args.seed, num_chains=args.chains, processors=args.processors,
        chain_class=ChainClass(args.chain_class), min_len=args.len_min,
        max_len=args.len_max, min_req=args.req_min, max_req=args.req_max,
        phase_variation=args.phase_variation, splitable=args.splitable)
    system = generate(config)
    Path(args.output).write_text(write_system(system))
    return 0


def _cmd_validate(args) -> int:
    system = read_system(_read_text(args.file))
    report = validate_system(system)
    if report.ok:
        print("ok")
        return 0
    for violation in report.violations:
        print(violation)
    return 1


def _cmd_lb(args) -> int:
    print(lower_bound(_load_system(args.file)))
    return 0


def _cmd_schedule(args) -> int:
    system = _load_system(args.system)
    sched = algorithms.schedule(system, args.algo)
    m = metrics(system, sched)
    Path(args.output).write_text(write_schedule(sched, m))
    if args.metrics:
        print(f"makespan={m.makespan} total_waste={m.total_waste} "
              f"avg_waste={m.avg_waste:.6f} lower_bound={m.lower_bound} "
              f"ratio={m.ratio:.6f}")
    return 0


def _cmd_validate_schedule(args) -> int:
    system = _load_system(args.system)
    sched = read_schedule(_read_text(args.schedule))
    report = check_schedule(system, sched)
    if report.ok:
        print("ok")
        return 0
    for violation in report.violations:
        print(violation)
    return 1


def _cmd_oracle(args) -> int:
    system = _load_system(args.system)
    try:
        print(optimal_makespan(system, args.budget))
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 1
    return 0


def _cmd_compare(args) -> int:
    spec = experiments.read_experiment_spec(_read_text(args.spec))
    if args.with_oracle:
        result = experiments.gap_study(spec, oracle_budget=args.budget)
    else:
        result = experiments.run_experiment(spec)
    Path(args.output).write_text(
        experiments.to_csv(result, include_timing=args.timing))
    if args.plots:
        from .report import render_report

        for path in render_report(result, args.plots):
            print(f"wrote {path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chainsched",
        description="Scheduling of chains of unit-time multiprocessor tasks")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="generate a random instance")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--chains", type=int, required=True)
    g.add_argument("--processors", type=int, required=True)
    g.add_argument("--class", dest="chain_class", required=True,
                   choices=[c.value for c in ChainClass])
    g.add_argument("--len-min", type=int, required=True)
    g.add_argument("--len-max", type=int, required=True)
    g.add_argument("--req-min", type=int, required=True)
    g.add_argument("--req-max", type=int, required=True)
    g.add_argument("--phase-variation", type=float, default=0.0)
    g.add_argument("--splitable", action="store_true")
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(fn=_cmd_generate)

    v = sub.add_parser("validate", help="validate an instance file")
    v.add_argument("file")
    v.set_defaults(fn=_cmd_validate)

    lb = sub.add_parser("lb", help="print the makespan lower bound")
    lb.add_argument("file")
    lb.set_defaults(fn=_cmd_lb)

    s = sub.add_parser("schedule", help="run a scheduling algorithm")
    s.add_argument("--system", required=True)
    s.add_argument("--algo", required=True, choices=algorithms.ALGORITHMS)
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--metrics", action="store_true",
                   help="print schedule metrics to stdout")
    s.set_defaults(fn=_cmd_schedule)

    vs = sub.add_parser("validate-schedule",
                        help="check a schedule against a system")
    vs.add_argument("--system", required=True)
    vs.add_argument("--schedule", required=True)
    vs.set_defaults(fn=_cmd_validate_schedule)

    o = sub.add_parser("oracle", help="exact optimal makespan (small instances)")
    o.add_argument("--system", required=True)
    o.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    o.set_defaults(fn=_cmd_oracle)

    c = sub.add_parser("compare", help="run an experiment sweep to CSV")
    c.add_argument("--spec", required=True)
    c.add_argument("-o", "--output", required=True)
    c.add_argument("--with-oracle", action="store_true")
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    c.add_argument("--timing", action="store_true",
                   help="fill the wall_time_ms column (non-deterministic)")
    c.add_argument("--plots", metavar="DIR",
                   help="render figures into DIR alongside the CSV")
    c.set_defaults(fn=_cmd_compare)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (InstanceFormatError, ScheduleFormatError,
            experiments.SpecFormatError, algorithms.InvalidSystemError,
            algorithms.AlgorithmModeError, algorithms.UnknownAlgorithmError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
