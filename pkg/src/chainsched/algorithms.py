"""The four list-scheduling heuristics: LCMPF, LCF, MCF and LCMCF.

All are deterministic functions from TaskSystem to Schedule.  Every tie not
fixed by the primary criteria resolves by lowest chain index so that equal
inputs always produce byte-identical schedules.
"""
from __future__ import annotations

from .knapsack import KnapsackItem, select_01, select_fractional
from .schedule_core import Allocation, Schedule, criticality
from .workload import TaskSystem, validate_system

ALGORITHMS = ("lcmpf", "lcf", "mcf", "lcmcf")


class InvalidSystemError(ValueError):
    def __init__(self, violations):
        super().__init__("invalid system: " + "; ".join(violations))
        self.violations = tuple(violations)


class AlgorithmModeError(ValueError):
    """Algorithm incompatible with the system's splitable mode."""


class UnknownAlgorithmError(ValueError):
    pass


def _require_valid(system: TaskSystem) -> None:
    report = validate_system(system)
    if not report.ok:
        raise InvalidSystemError(report.violations)


def _run_splitable(system: TaskSystem, tiekey) -> Schedule:
    """Longest-chain-first slot filling with integer task splitting.

    tiekey(chain, head_task, residual) scores the ready task for breaking
    equal-remaining-length ties (larger wins).  A partially served head
    still counts as one full remaining task: precedence is only released
    on complete allocation.
    """
    chains = system.chains
    M = system.processors
    n = len(chains)
    nxt = [0] * n
    res = [c[0] for c in chains]
    slots = []
    remaining = sum(len(c) for c in chains)
    while remaining:
        order = sorted(
            (c for c in range(n) if nxt[c] < len(chains[c])),
            key=lambda c: (-(len(chains[c]) - nxt[c]),
                           -tiekey(c, nxt[c], res[c]), c))
        free = M
        slot = []
        for c in order:
            if free == 0:
                break
            give = min(free, res[c])
            slot.append(Allocation(c, nxt[c], give))
            free -= give
            res[c] -= give
            if res[c] == 0:
                remaining -= 1
                nxt[c] += 1
                if nxt[c] < len(chains[c]):
                    res[c] = chains[c][nxt[c]]
        slots.append(tuple(slot))
    return Schedule(tuple(slots))


def _run_nonsplit_scan(system: TaskSystem, tiekey=None) -> Schedule:
    """One sorted scan per slot; chains whose ready task does not fit are
    skipped (marked visited) and retried next slot."""
    chains = system.chains
    M = system.processors
    n = len(chains)
    nxt = [0] * n

    def sort_key(c):
        length = -(len(chains[c]) - nxt[c])
        if tiekey is None:  # FCFS among equal lengths
            return (length, c)
        return (length, -tiekey(c, nxt[c]), c)

    slots = []
    while any(nxt[c] < len(chains[c]) for c in range(n)):
        order = sorted((c for c in range(n) if nxt[c] < len(chains[c])),
                       key=sort_key)
        free = M
        slot = []
        for c in order:
            p = chains[c][nxt[c]]
            if p <= free:
                slot.append(Allocation(c, nxt[c], p))
                free -= p
                nxt[c] += 1
        slots.append(tuple(slot))
    return Schedule(tuple(slots))


def schedule_lcmpf(system: TaskSystem) -> Schedule:
    """Longest chain first, ties by larger initial processor requirement.

    The tie between equal-length chains is broken by the chain's first-task
    requirement (a static chain priority); on a non-splitable system the
    same priorities run through the visited-marking scan.
    """
    _require_valid(system)
    if system.splitable:
        return _run_splitable(system, lambda c, j, r: system.chains[c][0])
    return _run_nonsplit_scan(system,
                              lambda c, j: system.chains[c][0])


def schedule_lcf(system: TaskSystem) -> Schedule:
    """Longest chain first with FCFS tie-break; non-splitable systems only."""
    _require_valid(system)
    if system.splitable:
        raise AlgorithmModeError("lcf requires a non-splitable system")
    return _run_nonsplit_scan(system)


def schedule_lcmcf(system: TaskSystem) -> Schedule:
    """Longest chain first, ties by larger ready-task criticality."""
    _require_valid(system)
    cv = criticality(system)
    if system.splitable:
        return _run_splitable(system, lambda c, j, r: cv[c][j])
    return _run_nonsplit_scan(system, lambda c, j: cv[c][j])


def _scaled_cv(cv_full: int, residual: int, p_full: int) -> int:
    # proportional residual criticality, rounded half up
    return (2 * cv_full * residual + p_full) // (2 * p_full)


def schedule_mcf(system: TaskSystem) -> Schedule:
    """Maximum criticality first: per slot, pick the ready-task subset of
    maximum total criticality fitting in M (0-1 knapsack; fractional
    knapsack with at most one split task in splitable mode)."""
    _require_valid(system)
    cv = criticality(system)
    chains = system.chains
    M = system.processors
    n = len(chains)
    nxt = [0] * n
    res = [c[0] for c in chains]
    slots = []
    while any(nxt[c] < len(chains[c]) for c in range(n)):
        if system.splitable:
            items = [
                KnapsackItem(id=(c, nxt[c]), weight=res[c],
                             value=_scaled_cv(cv[c][nxt[c]], res[c],
                                              chains[c][nxt[c]]))
                for c in range(n) if nxt[c] < len(chains[c])
            ]
            slot = []
            for item, amount in select_fractional(items, M):
                c, j = item.id
                slot.append(Allocation(c, j, amount))
                res[c] -= amount
                if res[c] == 0:
                    nxt[c] += 1
                    if nxt[c] < len(chains[c]):
                        res[c] = chains[c][nxt[c]]
        else:
            items = [
                KnapsackItem(id=(c, nxt[c]), weight=chains[c][nxt[c]],
                             value=cv[c][nxt[c]])
                for c in range(n) if nxt[c] < len(chains[c])
            ]
            slot = []
            for item in select_01(items, M):
                c, j = item.id
                slot.append(Allocation(c, j, item.weight))
                nxt[c] += 1
        slots.append(tuple(slot))
    return Schedule(tuple(slots))


_DISPATCH = {
    "lcmpf": schedule_lcmpf,
    "lcf": schedule_lcf,
    "mcf": schedule_mcf,
    "lcmcf": schedule_lcmcf,
}


def schedule(system: TaskSystem, algorithm: str) -> Schedule:
    """Dispatch by algorithm name; lcf is rejected for splitable systems."""
    try:
        fn = _DISPATCH[algorithm]
    except KeyError:
        raise UnknownAlgorithmError(
            f"unknown algorithm {algorithm!r}; expected one of "
            f"{', '.join(ALGORITHMS)}") from None
    return fn(system)
