"""Seeded experiment sweeps: run heuristics over generated instance batches,
aggregate makespan/LB/waste ratios, and emit byte-stable CSV tables.

Wall times are recorded for information only; the CSV leaves the
wall_time_ms column empty unless timing output is requested, so identical
specs always produce identical bytes.
"""
from __future__ import annotations

import io
import csv
import time
from dataclasses import dataclass, replace

from . import algorithms
from .oracle import DEFAULT_BUDGET, BudgetExceededError, optimal_makespan
from .schedule_core import check_schedule, metrics
from .workload import ChainClass, GeneratorConfig, generate

CSV_COLUMNS = ("instance_seed", "algorithm", "makespan", "lower_bound",
               "ratio", "total_waste", "wall_time_ms")


@dataclass(frozen=True)
class ExperimentSpec:
    generator: GeneratorConfig  # seed field is replaced per instance
    algorithms: tuple[str, ...]
    repetitions: int
    seed_base: int


@dataclass(frozen=True)
class InstanceRecord:
    seed: int
    algorithm: str
    makespan: int
    lower_bound: int
    ratio: float
    total_waste: int
    wall_time_ms: float
    oracle_makespan: int | None = None


@dataclass(frozen=True)
class RatioSummary:
    mean: float
    min: float
    max: float


@dataclass(frozen=True)
class GapSummary:
    hit_rate: float  # fraction of instances where makespan == oracle
    max_gap: int


@dataclass(frozen=True)
class ExperimentResult:
    rows: tuple[InstanceRecord, ...]
    ratio_summary: dict[str, RatioSummary]
    oracle_exceeded: int = 0
    gap_summary: dict[str, GapSummary] | None = None


class ExperimentError(RuntimeError):
    def __init__(self, seed, algorithm, violations):
        super().__init__(
            f"instance seed={seed} algorithm={algorithm} produced an invalid "
            "schedule: " + "; ".join(violations))
        self.seed = seed
        self.algorithm = algorithm


def _check_spec(spec: ExperimentSpec) -> None:
    if spec.repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    for name in spec.algorithms:
        if name not in algorithms.ALGORITHMS:
            raise algorithms.UnknownAlgorithmError(
                f"unknown algorithm {name!r}")


def _run(spec: ExperimentSpec, with_oracle: bool,
         oracle_budget: int) -> ExperimentResult:
    _check_spec(spec)
    rows = []
    exceeded = 0
    for i in range(spec.repetitions):
        seed = spec.seed_base + i
        system = generate(replace(spec.generator, seed=seed))
        oracle_value = None
        if with_oracle:
            try:
                oracle_value = optimal_makespan(system, oracle_budget)
            except BudgetExceededError:
                exceeded += 1
        for name in spec.algorithms:
            start = time.perf_counter()
            sched = algorithms.schedule(system, name)
            elapsed_ms = (time.perf_counter() - start) * 1000.0
            report = check_schedule(system, sched)
            if not report.ok:
                raise ExperimentError(seed, name, report.violations)
            m = metrics(system, sched)
            rows.append(InstanceRecord(
                seed=seed, algorithm=name, makespan=m.makespan,
                lower_bound=m.lower_bound, ratio=m.ratio,
                total_waste=m.total_waste, wall_time_ms=elapsed_ms,
                oracle_makespan=oracle_value))
    rows.sort(key=lambda r: (r.seed, r.algorithm))

    summary = {}
    for name in sorted(set(spec.algorithms)):
        ratios = [r.ratio for r in rows if r.algorithm == name]
        summary[name] = RatioSummary(sum(ratios) / len(ratios),
                                     min(ratios), max(ratios))

    gaps = None
    if with_oracle:
        gaps = {}
        for name in sorted(set(spec.algorithms)):
            scored = [r for r in rows
                      if r.algorithm == name and r.oracle_makespan is not None]
            if scored:
                hits = sum(r.makespan == r.oracle_makespan for r in scored)
                gaps[name] = GapSummary(
                    hit_rate=hits / len(scored),
                    max_gap=max(r.makespan - r.oracle_makespan
                                for r in scored))
            else:
                gaps[name] = GapSummary(hit_rate=0.0, max_gap=0)
    return ExperimentResult(tuple(rows), summary, exceeded, gaps)


def run_experiment(spec: ExperimentSpec) -> ExperimentResult:
    """Deterministic sweep: instance i uses seed = seed_base + i."""
    return _run(spec, with_oracle=False, oracle_budget=DEFAULT_BUDGET)


def gap_study(spec: ExperimentSpec,
              oracle_budget: int = DEFAULT_BUDGET) -> ExperimentResult:
    """Sweep extended with exact optimal makespans (desk-scale instances).

    Instances whose oracle search exceeds the budget are counted in
    oracle_exceeded and excluded from the gap summary.
    """
    return _run(spec, with_oracle=True, oracle_budget=oracle_budget)


def to_csv(result: ExperimentResult, include_timing: bool = False) -> str:
    """Result table as CSV, sorted by (instance seed, algorithm name)."""
    with_oracle = result.gap_summary is not None
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    columns = CSV_COLUMNS + (("oracle_makespan",) if with_oracle else ())
    writer.writerow(columns)
    for r in result.rows:
        row = [r.seed, r.algorithm, r.makespan, r.lower_bound,
               f"{r.ratio:.6f}", r.total_waste,
               f"{r.wall_time_ms:.3f}" if include_timing else ""]
        if with_oracle:
            row.append("" if r.oracle_makespan is None else r.oracle_makespan)
        writer.writerow(row)
    return buf.getvalue()


class SpecFormatError(ValueError):
    """Raised when an experiment spec document cannot be parsed."""


_SPEC_FIELDS = {
    "processors": int, "splitable": bool, "chain_class": str,
    "num_chains": int, "len_min": int, "len_max": int,
    "req_min": int, "req_max": int,
    "algorithms": list, "repetitions": int, "seed_base": int,
}


def read_experiment_spec(text: str) -> ExperimentSpec:
    """Parse an experiment spec document (instance-format conventions plus
    experiment fields)."""
    import json

    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFormatError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict):
        raise SpecFormatError("top-level document must be an object")
    for field, kind in _SPEC_FIELDS.items():
        if field not in doc:
            raise SpecFormatError(f"missing field: {field}")
        value = doc[field]
        if kind is bool:
            ok = isinstance(value, bool)
        elif kind is int:
            ok = isinstance(value, int) and not isinstance(value, bool)
        else:
            ok = isinstance(value, kind)
        if not ok:
            raise SpecFormatError(
                f"field '{field}' must be of type {kind.__name__}")
    try:
        chain_class = ChainClass(doc["chain_class"])
    except ValueError:
        raise SpecFormatError(
            f"field 'chain_class' must be one of "
            f"{', '.join(c.value for c in ChainClass)}") from None
    variation = doc.get("phase_variation", 0.0)
    if not isinstance(variation, (int, float)) or isinstance(variation, bool):
        raise SpecFormatError("field 'phase_variation' must be a number")
    generator = GeneratorConfig(
        seed=0, num_chains=doc["num_chains"], processors=doc["processors"],
        chain_class=chain_class, min_len=doc["len_min"],
        max_len=doc["len_max"], min_req=doc["req_min"],
        max_req=doc["req_max"], phase_variation=float(variation),
        splitable=doc["splitable"])
    return ExperimentSpec(
        generator=generator,
        algorithms=tuple(doc["algorithms"]),
        repetitions=doc["repetitions"],
        seed_base=doc["seed_base"])


def find_dominance_counterexamples(seed_base: int, max_trials: int,
                                   generator: GeneratorConfig | None = None):
    """Search arbitrary non-splitable instances for strict pairwise wins.

    Returns {(winner, loser): (seed, makespans dict)} covering every ordered
    pair found within max_trials seeded instances.
    """
    heuristics = ("mcf", "lcmcf", "lcmpf")
    if generator is None:
        generator = GeneratorConfig(
            seed=0, num_chains=5, processors=10,
            chain_class=ChainClass.ARBITRARY, min_len=2, max_len=5,
            min_req=1, max_req=10, splitable=False)
    found = {}
    wanted = {(a, b) for a in heuristics for b in heuristics if a != b}
    for i in range(max_trials):
        seed = seed_base + i
        system = generate(replace(generator, seed=seed))
        spans = {name: algorithms.schedule(system, name).makespan
                 for name in heuristics}
        for a, b in wanted - found.keys():
            if spans[a] < spans[b]:
                found[(a, b)] = (seed, dict(spans))
        if found.keys() == wanted:
            break
    return found
