"""Schedule representation, validity checking, metrics, bounds, criticality.

A Schedule is a sequence of unit time slots; each slot lists the processor
allocations made during it.  Chain and task indices are 0-based internally
(human-readable labels use the 1-based T_ij convention, see task_label).
"""
from __future__ import annotations

import json
import math
from collections import defaultdict
from dataclasses import dataclass

from .workload import TaskSystem


@dataclass(frozen=True)
class Allocation:
    chain: int
    task: int
    procs: int


@dataclass(frozen=True)
class Schedule:
    slots: tuple[tuple[Allocation, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "slots", tuple(tuple(s) for s in self.slots))

    @property
    def makespan(self) -> int:
        return len(self.slots)


@dataclass(frozen=True)
class ScheduleMetrics:
    makespan: int
    total_waste: int
    avg_waste: float
    lower_bound: int
    ratio: float


def task_label(chain: int, task: int) -> str:
    """Human-readable 1-based task name, e.g. task_label(2, 0) == 'T31'."""
    return f"T{chain + 1}{task + 1}"


def lower_bound(system: TaskSystem) -> int:
    """max(ceil(total work / M), longest chain length).

    The work term is ceiled because slots are integral.
    """
    work_term = math.ceil(system.total_work / system.processors)
    return max(work_term, max(len(c) for c in system.chains))


def criticality(system: TaskSystem) -> tuple[tuple[int, ...], ...]:
    """Per-task criticality: suffix sum of processor requirements."""
    table = []
    for chain in system.chains:
        cv = [0] * len(chain)
        acc = 0
        for j in range(len(chain) - 1, -1, -1):
            acc += chain[j]
            cv[j] = acc
        table.append(tuple(cv))
    return tuple(table)


@dataclass(frozen=True)
class ScheduleReport:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_schedule(system: TaskSystem, schedule: Schedule) -> ScheduleReport:
    """Check a schedule against the system's splitable/non-splitable rules."""
    v = []
    M = system.processors
    chains = system.chains
    totals = defaultdict(int)
    touched = defaultdict(list)  # (chain, task) -> slot indices

    for t, slot in enumerate(schedule.slots):
        used = 0
        seen = set()
        for a in slot:
            if not (0 <= a.chain < len(chains)):
                v.append(f"slot {t}: unknown chain {a.chain}")
                continue
            if not (0 <= a.task < len(chains[a.chain])):
                v.append(f"slot {t}: chain {a.chain} has no task {a.task}")
                continue
            if a.procs < 1:
                v.append(f"slot {t} chain {a.chain} task {a.task}: "
                         f"allocation {a.procs} below 1")
                continue
            if (a.chain, a.task) in seen:
                v.append(f"slot {t} chain {a.chain} task {a.task}: "
                         "duplicate allocation in one slot")
            seen.add((a.chain, a.task))
            used += a.procs
            totals[(a.chain, a.task)] += a.procs
            touched[(a.chain, a.task)].append(t)
        if used > M:
            v.append(f"slot {t}: capacity exceeded ({used} > {M})")

    if schedule.slots and not schedule.slots[-1]:
        v.append(f"slot {len(schedule.slots) - 1}: empty trailing slot")

    for i, chain in enumerate(chains):
        for j, p in enumerate(chain):
            got = totals.get((i, j), 0)
            if got != p:
                v.append(f"chain {i} task {j}: allocated {got} of {p} "
                         "processor-slots")
            if not system.splitable and len(touched.get((i, j), [])) > 1:
                v.append(f"chain {i} task {j}: split across slots "
                         f"{touched[(i, j)]} in non-splitable mode")
        for j in range(len(chain) - 1):
            a, b = touched.get((i, j)), touched.get((i, j + 1))
            if a and b and max(a) >= min(b):
                v.append(f"chain {i} task {j + 1}: starts in slot {min(b)} "
                         f"before task {j} finishes in slot {max(a)}")
    return ScheduleReport(tuple(v))


class InvalidScheduleError(ValueError):
    def __init__(self, violations):
        super().__init__("invalid schedule: " + "; ".join(violations))
        self.violations = tuple(violations)


def slot_waste(system: TaskSystem, slot) -> int:
    return system.processors - sum(a.procs for a in slot)


def metrics(system: TaskSystem, schedule: Schedule) -> ScheduleMetrics:
    """Makespan, waste and lower-bound metrics; rejects invalid schedules."""
    report = check_schedule(system, schedule)
    if not report.ok:
        raise InvalidScheduleError(report.violations)
    makespan = len(schedule.slots)
    total_waste = sum(slot_waste(system, s) for s in schedule.slots)
    lb = lower_bound(system)
    return ScheduleMetrics(
        makespan=makespan,
        total_waste=total_waste,
        avg_waste=total_waste / system.processors,
        lower_bound=lb,
        ratio=makespan / lb,
    )


class ScheduleFormatError(ValueError):
    """Raised when a schedule document cannot be parsed."""


def write_schedule(schedule: Schedule, m: ScheduleMetrics | None = None) -> str:
    doc = {
        "slots": [
            [{"chain": a.chain, "task": a.task, "procs": a.procs} for a in slot]
            for slot in schedule.slots
        ],
    }
    if m is not None:
        doc["metrics"] = {
            "makespan": m.makespan,
            "total_waste": m.total_waste,
            "avg_waste": m.avg_waste,
            "lower_bound": m.lower_bound,
            "ratio": m.ratio,
        }
    return json.dumps(doc, indent=2) + "\n"


def read_schedule(text: str) -> Schedule:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScheduleFormatError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict) or "slots" not in doc:
        raise ScheduleFormatError("missing field: slots")
    slots = []
    for t, slot in enumerate(doc["slots"]):
        if not isinstance(slot, list):
            raise ScheduleFormatError(f"field 'slots[{t}]' must be a list")
        allocs = []
        for k, entry in enumerate(slot):
            if not isinstance(entry, dict):
                raise ScheduleFormatError(
                    f"field 'slots[{t}][{k}]' must be an object")
            for field in ("chain", "task", "procs"):
                if field not in entry or not isinstance(entry[field], int):
                    raise ScheduleFormatError(
                        f"field 'slots[{t}][{k}].{field}' must be an integer")
            allocs.append(Allocation(entry["chain"], entry["task"],
                                     entry["procs"]))
        slots.append(tuple(allocs))
    return Schedule(tuple(slots))
