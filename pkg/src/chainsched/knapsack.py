"""0-1 and fractional knapsack selection over ready tasks.

Items carry (chain, task) ids; weights are processor requirements and values
are criticality scores.  Both selectors are deterministic: ties resolve
toward the lexicographically smallest id.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class KnapsackItem:
    id: tuple[int, int]
    weight: int
    value: int


def select_01(items, capacity: int) -> list[KnapsackItem]:
    """Maximum-value subset with total weight <= capacity, O(N*M) DP.

    Among maximum-value subsets the one whose sorted id list is
    lexicographically smallest is returned.  Since values are positive,
    preferring to take the lowest-id item whenever a maximum-value
    completion still exists yields exactly that subset.
    """
    items = sorted(items, key=lambda it: it.id)
    n = len(items)
    # best[i][c]: max value achievable with items[i:] under capacity c
    best = [[0] * (capacity + 1) for _ in range(n + 1)]
    for i in range(n - 1, -1, -1):
        w, val = items[i].weight, items[i].value
        row, nxt = best[i], best[i + 1]
        for c in range(capacity + 1):
            b = nxt[c]
            if w <= c:
                t = val + nxt[c - w]
                if t > b:
                    b = t
            row[c] = b
    chosen = []
    c = capacity
    target = best[0][capacity]
    got = 0
    for i in range(n):
        w, val = items[i].weight, items[i].value
        if w <= c and got + val + best[i + 1][c - w] == target:
            chosen.append(items[i])
            got += val
            c -= w
    return chosen


def select_fractional(items, capacity: int) -> list[tuple[KnapsackItem, int]]:
    """Greedy by value/weight density; at most the last item taken partially.

    Returns (item, integer amount) pairs; amounts sum to
    min(capacity, total weight).
    """
    order = sorted(items, key=lambda it: (Fraction(-it.value, it.weight), it.id))
    left = capacity
    taken = []
    for it in order:
        if left == 0:
            break
        amount = min(it.weight, left)
        taken.append((it, amount))
        left -= amount
    return taken
