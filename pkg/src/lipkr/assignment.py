"""Exact min-cost assignment and transportation with uniqueness certificates.

Costs may be ints or Fractions; all arithmetic stays exact.  Uniqueness is
decided by forbidding each cell of the optimum in turn and re-solving: the
optimum is unique iff every re-solve is strictly more expensive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import SupplyMismatch


@dataclass(frozen=True)
class AssignmentResult:
    value: object
    optimal: tuple[int, ...]
    unique: bool
    tie_witness: Optional[tuple[int, ...]] = None


@dataclass(frozen=True)
class TransportResult:
    """``plan[j]`` is the source row serving sink column ``j``."""

    value: object
    plan: tuple[int, ...]
    unique: bool
    tie_witness: Optional[tuple[int, ...]] = None


def _hungarian(cost: Sequence[Sequence]) -> tuple[object, list[int]]:
    # Shortest augmenting path with row/column potentials (O(k^3)).
    k = len(cost)
    INF = float("inf")
    u = [0] * (k + 1)
    v = [0] * (k + 1)
    match = [0] * (k + 1)  # match[j] = row assigned to column j, 1-based
    way = [0] * (k + 1)
    for i in range(1, k + 1):
        match[0] = i
        j0 = 0
        minv = [INF] * (k + 1)
        used = [False] * (k + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            row = cost[i0 - 1]
            ui0 = u[i0]
            delta = INF
            j1 = 0
            for j in range(1, k + 1):
                if not used[j]:
                    cur = row[j - 1] - ui0 - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j
            for j in range(k + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1
    perm = [0] * k
    for j in range(1, k + 1):
        perm[match[j] - 1] = j - 1
    return sum(cost[i][perm[i]] for i in range(k)), perm


def _big_m(cost: Sequence[Sequence]):
    k = len(cost)
    top = max(abs(c) for row in cost for c in row)
    return 2 * k * (top + 1) + 1


def _resolve_forbidding(cost, cells, big):
    masked = [list(r) for r in cost]
    for i, j in cells:
        masked[i][j] = big
    return _hungarian(masked)


def min_cost_assignment(cost: Sequence[Sequence]) -> AssignmentResult:
    """Minimum of ``sum cost[i][perm[i]]`` over permutations, with exact tie detection.

    >>> r = min_cost_assignment([[1, 2], [2, 1]])
    >>> r.value, r.optimal, r.unique
    (2, (0, 1), True)
    """
    k = len(cost)
    if k == 0 or any(len(r) != k for r in cost):
        raise ValueError("cost must be a non-empty square matrix")
    value, perm = _hungarian(cost)
    unique, witness = True, None
    if k > 1:
        big = _big_m(cost)
        for i in range(k):
            alt_value, alt = _resolve_forbidding(cost, [(i, perm[i])], big)
            if alt_value == value:
                unique, witness = False, tuple(alt)
                break
    return AssignmentResult(value, tuple(perm), unique, witness)


def min_cost_transportation(cost: Sequence[Sequence], supplies: Sequence[int]) -> TransportResult:
    """Unit-demand transportation: source ``i`` serves exactly ``supplies[i]`` sinks.

    Solved as an assignment with row ``i`` replicated ``supplies[i]`` times.
    Uniqueness refers to the sink -> source plan, so permuting replicas of one
    source does not count as a tie.
    """
    m = len(cost[0]) if cost else 0
    if len(supplies) != len(cost):
        raise SupplyMismatch(f"{len(supplies)} supplies for {len(cost)} sources")
    if any(s < 0 for s in supplies) or sum(supplies) != m:
        raise SupplyMismatch(f"supplies {tuple(supplies)} do not sum to the {m} sinks")
    if m == 0:
        return TransportResult(0, (), True, None)
    owner = [i for i, s in enumerate(supplies) for _ in range(s)]
    rep = [cost[i] for i in owner]
    value, perm = _hungarian(rep)
    plan = [0] * m
    for r, j in enumerate(perm):
        plan[j] = owner[r]
    unique, witness = True, None
    big = _big_m(rep)
    for j in range(m):
        src = plan[j]
        cells = [(r, j) for r, o in enumerate(owner) if o == src]
        alt_value, alt = _resolve_forbidding(rep, cells, big)
        if alt_value == value:
            alt_plan = [0] * m
            for r, jj in enumerate(alt):
                alt_plan[jj] = owner[r]
            unique, witness = False, tuple(alt_plan)
            break
    return TransportResult(value, tuple(plan), unique, witness)
