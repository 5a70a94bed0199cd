"""Exact optimal makespan by memoized state-space search.

Intended for desk-scale instances (roughly N <= 5, n_i <= 5, M <= 12).
States are multisets of remaining-chain signatures so that interchangeable
chains share memo entries.  Branching is restricted to dominant slots:
maximal feasible subsets in non-splitable mode, no-idle allocations in
splitable mode.
"""
from __future__ import annotations

import math

from .algorithms import InvalidSystemError
from .schedule_core import Allocation, Schedule
from .workload import TaskSystem, validate_system

DEFAULT_BUDGET = 10_000_000

_INF = float("inf")


class BudgetExceededError(RuntimeError):
    def __init__(self, budget):
        super().__init__(f"oracle search exceeded node budget {budget}")
        self.budget = budget


def _canonical(rems) -> tuple:
    return tuple(sorted(r for r in rems if r))


def _state_lb(state, M: int) -> int:
    if not state:
        return 0
    total = sum(sum(r) for r in state)
    return max(math.ceil(total / M), max(len(r) for r in state))


def _nonsplit_moves(heads, M):
    """All maximal subsets of positions with head sum <= M."""
    n = len(heads)
    moves = []

    def rec(i, free, chosen):
        if i == n:
            if all(heads[k] > free for k in range(n) if k not in chosen):
                moves.append(tuple((k, heads[k]) for k in sorted(chosen)))
            return
        if heads[i] <= free:
            chosen.add(i)
            rec(i + 1, free - heads[i], chosen)
            chosen.remove(i)
        rec(i + 1, free, chosen)

    rec(0, M, set())
    return moves


def _split_moves(heads, M):
    """All no-idle allocation vectors: amounts sum to min(M, total demand)."""
    n = len(heads)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + heads[i]
    target = min(M, suffix[0])
    moves = []
    alloc = [0] * n

    def rec(i, left):
        if i == n:
            if left == 0:
                moves.append(tuple((k, alloc[k]) for k in range(n)
                                   if alloc[k]))
            return
        lo = max(0, left - suffix[i + 1])
        hi = min(heads[i], left)
        for a in range(lo, hi + 1):
            alloc[i] = a
            rec(i + 1, left - a)
        alloc[i] = 0

    rec(0, target)
    return moves


class _Search:
    def __init__(self, system: TaskSystem, budget: int):
        self.M = system.processors
        self.splitable = system.splitable
        self.budget = budget
        self.nodes = 0
        self.memo: dict[tuple, int] = {}

    def _moves(self, rems):
        heads = [r[0] for r in rems]
        if self.splitable:
            return _split_moves(heads, self.M)
        return _nonsplit_moves(heads, self.M)

    @staticmethod
    def _apply(rems, move):
        out = list(rems)
        for pos, amount in move:
            r = out[pos]
            if amount == r[0]:
                out[pos] = r[1:]
            else:
                out[pos] = (r[0] - amount,) + r[1:]
        return out

    def children(self, state):
        return {_canonical(self._apply(state, move))
                for move in self._moves(state)}

    def best(self, state) -> int:
        if not state:
            return 0
        cached = self.memo.get(state)
        if cached is not None:
            return cached
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(self.budget)
        lb = _state_lb(state, self.M)
        result = _INF
        children = sorted(self.children(state),
                          key=lambda s: _state_lb(s, self.M))
        for child in children:
            val = 1 + self.best(child)
            if val < result:
                result = val
            if result == lb:
                break
        self.memo[state] = result
        return result


def _initial_rems(system: TaskSystem):
    return [tuple(c) for c in system.chains]


def _require_valid(system: TaskSystem) -> None:
    report = validate_system(system)
    if not report.ok:
        raise InvalidSystemError(
            "invalid system: " + "; ".join(report.violations))


def optimal_makespan(system: TaskSystem, budget: int = DEFAULT_BUDGET) -> int:
    """Minimum makespan over all valid schedules; raises BudgetExceededError
    when the node budget runs out before the search finishes."""
    _require_valid(system)
    search = _Search(system, budget)
    return search.best(_canonical(_initial_rems(system)))


def optimal_schedule(system: TaskSystem, budget: int = DEFAULT_BUDGET) -> Schedule:
    """One schedule achieving optimal_makespan, via greedy replay of the
    memoized search on the uncanonicalized state."""
    _require_valid(system)
    search = _Search(system, budget)
    rems = _initial_rems(system)
    remaining = search.best(_canonical(rems))
    nxt = [0] * len(rems)  # next task index per original chain
    slots = []
    while remaining:
        active = [c for c in range(len(rems)) if rems[c]]
        heads = [rems[c][0] for c in active]
        if search.splitable:
            moves = _split_moves(heads, search.M)
        else:
            moves = _nonsplit_moves(heads, search.M)
        for move in moves:
            child = search._apply([rems[c] for c in active], move)
            if search.best(_canonical(child)) == remaining - 1:
                slot = []
                for pos, amount in move:
                    c = active[pos]
                    slot.append(Allocation(c, nxt[c], amount))
                    if amount == rems[c][0]:
                        rems[c] = rems[c][1:]
                        nxt[c] += 1
                    else:
                        rems[c] = (rems[c][0] - amount,) + rems[c][1:]
                slots.append(tuple(slot))
                remaining -= 1
                break
        else:  # pragma: no cover - search invariant
            raise RuntimeError("no slot move reaches the memoized optimum")
    return Schedule(tuple(slots))
