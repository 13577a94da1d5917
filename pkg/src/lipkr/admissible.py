"""Admissible directed graphs, witness functions and genericity.

A directed edge set ``g`` (a frozenset of ordered pairs ``(x, y)``) is
admissible when some 1-Lipschitz ``f`` satisfies ``f(x) - f(y) = rho(x, y)``
on every edge.  That is a system of difference constraints

    f(y) - f(x) <= rho(x, y)      for all ordered pairs
    f(y) - f(x) <= -rho(x, y)     for (x, y) in g

which is feasible iff its constraint graph has no negative cycle.
"""

from __future__ import annotations

import itertools
from collections import defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Optional

from .assignment import min_cost_assignment
from .errors import BadOrientation, BudgetExceeded, NotAdmissible, NotATree, NotStrict, UnknownPoint
from .metric import MetricSpace

Edge = tuple[int, int]
EdgeSet = frozenset  # frozenset[Edge]

GENERICITY_MAX_POINTS = 10


def edge_set(edges: Iterable[Edge]) -> frozenset:
    """Normalize an iterable of ordered pairs; rejects self-loops."""
    out = frozenset((int(x), int(y)) for x, y in edges)
    for x, y in out:
        if x == y:
            raise ValueError(f"self-loop at {x}")
    return out


def canonical(edges: Iterable[Edge]) -> tuple[Edge, ...]:
    return tuple(sorted(edges))


def _check_points(ms: MetricSpace, g: Iterable[Edge]) -> None:
    N = ms.n_points
    for x, y in g:
        if not (1 <= x <= N and 1 <= y <= N):
            raise UnknownPoint(f"edge ({x},{y}) references a point outside 1..{N}")
        if x == y:
            raise UnknownPoint(f"self-loop at {x}")


@dataclass(frozen=True)
class WitnessFunction:
    """Values ``values[x - 1] = f(x)`` with ``f(base) = 0``."""

    values: tuple[Fraction, ...]
    base: int

    def __getitem__(self, x: int) -> Fraction:
        return self.values[x - 1]

    def as_dict(self) -> dict[int, Fraction]:
        return {i + 1: v for i, v in enumerate(self.values)}


def _potentials(ms: MetricSpace, g: frozenset, base: int) -> Optional[list[int]]:
    # Bellman-Ford over the integer-scaled constraint graph; None on a negative cycle.
    _, D = ms.scaled
    N = ms.n_points
    w = [[D[i][j] for j in range(N)] for i in range(N)]
    for x, y in g:
        w[x - 1][y - 1] = -D[x - 1][y - 1]
    dist = [None] * N
    dist[base - 1] = 0
    for _ in range(N):
        changed = False
        for i in range(N):
            di = dist[i]
            if di is None:
                continue
            wi = w[i]
            for j in range(N):
                if i != j:
                    cand = di + wi[j]
                    if dist[j] is None or cand < dist[j]:
                        dist[j] = cand
                        changed = True
        if not changed:
            return dist
    return None


def is_admissible(ms: MetricSpace, g: Iterable[Edge]) -> bool:
    """True iff a 1-Lipschitz function is tight on every edge of ``g``.

    >>> from lipkr.metric import rearrangement_metric
    >>> ms = rearrangement_metric(3)
    >>> is_admissible(ms, {(1, 3), (2, 4)}), is_admissible(ms, {(1, 4), (2, 3)})
    (True, False)
    """
    g = frozenset(g)
    _check_points(ms, g)
    return _potentials(ms, g, 1) is not None


def witness_function(ms: MetricSpace, g: Iterable[Edge], base: Optional[int] = None) -> WitnessFunction:
    """Shortest-path potentials from ``base`` (default the last point).

    These satisfy every constraint of the system, so the result is
    1-Lipschitz and tight on ``g``; on a spanning tree it is the unique such
    function vanishing at ``base``.
    """
    g = frozenset(g)
    _check_points(ms, g)
    base = ms.n_points if base is None else base
    if not 1 <= base <= ms.n_points:
        raise UnknownPoint(f"base point {base} outside 1..{ms.n_points}")
    dist = _potentials(ms, g, base)
    if dist is None:
        raise NotAdmissible(f"no 1-Lipschitz function is tight on {canonical(g)}")
    lcd, _ = ms.scaled
    return WitnessFunction(tuple(Fraction(d, lcd) for d in dist), base)


def orientation_colors(g: Iterable[Edge]) -> tuple[set[int], set[int]]:
    """Split the support into (tails, heads); BadOrientation if they overlap."""
    tails = {x for x, _ in g}
    heads = {y for _, y in g}
    both = tails & heads
    if both:
        raise BadOrientation(f"points {sorted(both)} have both in- and out-edges")
    return tails, heads


def _tree_adjacency(g: frozenset) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = defaultdict(list)
    for x, y in g:
        adj[x].append(y)
        adj[y].append(x)
    support = list(adj)
    undirected = {frozenset(e) for e in g}
    if len(undirected) != len(g):
        raise NotATree("edge set contains an antiparallel pair")
    if len(g) != len(support) - 1:
        raise NotATree(f"{len(g)} edges on {len(support)} vertices")
    seen = {support[0]}
    queue = deque(seen)
    while queue:
        a = queue.popleft()
        for b in adj[a]:
            if b not in seen:
                seen.add(b)
                queue.append(b)
    if len(seen) != len(support):
        raise NotATree("undirected view is disconnected")
    return adj


def tree_admissible_fast(ms: MetricSpace, t: Iterable[Edge]) -> bool:
    """Path criterion for properly oriented trees.

    For every simple path ``y1 x1 y2 x2 ... yk xk`` from a head to a tail the
    alternating sum ``sum rho(x_i, y_i) - sum rho(x_i, y_{i+1})`` must not
    exceed ``rho(xk, y1)``.  One walk from each head covers all paths.
    """
    t = frozenset(t)
    _check_points(ms, t)
    if not t:
        return True
    adj = _tree_adjacency(t)
    tails, heads = orientation_colors(t)
    rho = ms.rho
    for y1 in heads:
        # alt[v] = sum of rho over path edges entering a tail minus edges leaving it
        alt = {y1: Fraction(0)}
        stack = [y1]
        while stack:
            a = stack.pop()
            for b in adj[a]:
                if b in alt:
                    continue
                if b in tails:
                    alt[b] = alt[a] + rho(b, a)
                    if alt[b] > rho(b, y1):
                        return False
                else:
                    alt[b] = alt[a] - rho(a, b)
                stack.append(b)
    return True


@dataclass(frozen=True)
class Tie:
    """Two optimal pairings of ``xs`` with ``ys`` (indices into ``ys``)."""

    xs: tuple[int, ...]
    ys: tuple[int, ...]
    pairing: tuple[int, ...]
    other: tuple[int, ...]

    def edge_sets(self) -> tuple[frozenset, frozenset]:
        a = frozenset((x, self.ys[j]) for x, j in zip(self.xs, self.pairing))
        b = frozenset((x, self.ys[j]) for x, j in zip(self.xs, self.other))
        return a, b


@dataclass(frozen=True)
class GenericityReport:
    generic: bool
    witness: Optional[Tie] = None

    def __bool__(self) -> bool:
        return self.generic


def disjoint_configurations(n_points: int):
    """Yield unordered pairs ``(A, B)`` of disjoint equal-size sets, ``|A| >= 2``.

    Order: by size, then ``A`` lexicographically, then ``B``; ``min(A) < min(B)``.
    """
    pts = range(1, n_points + 1)
    for k in range(2, n_points // 2 + 1):
        for A in itertools.combinations(pts, k):
            rest = [p for p in pts if p not in A and p > A[0]]
            for B in itertools.combinations(rest, k):
                yield A, B


@lru_cache(maxsize=256)
def is_generic(ms: MetricSpace) -> GenericityReport:
    """Exact genericity test for a strict metric.

    Every pair of disjoint equal-size point sets must have a unique optimal
    pairing.  Refuses spaces above ``GENERICITY_MAX_POINTS`` points.
    """
    if not ms.strict:
        raise NotStrict("genericity is defined for strict metrics only")
    if ms.n_points > GENERICITY_MAX_POINTS:
        raise BudgetExceeded(f"exhaustive genericity check is limited to {GENERICITY_MAX_POINTS} points")
    _, D = ms.scaled
    for A, B in disjoint_configurations(ms.n_points):
        cost = [[D[a - 1][b - 1] for b in B] for a in A]
        res = min_cost_assignment(cost)
        if not res.unique:
            return GenericityReport(False, Tie(A, B, res.optimal, res.tie_witness))
    return GenericityReport(True)


def to_dot(g: Iterable[Edge], n_points: Optional[int] = None, name: str = "G", labels: Optional[Mapping[int, str]] = None) -> str:
    """Graphviz digraph; vertices are point indices."""
    g = canonical(g)
    pts = range(1, n_points + 1) if n_points else sorted({p for e in g for p in e})
    lines = [f"digraph {name} {{"]
    for p in pts:
        label = labels[p] if labels and p in labels else str(p)
        lines.append(f'  {p} [label="{label}"];')
    for x, y in g:
        lines.append(f"  {x} -> {y};")
    lines.append("}")
    return "\n".join(lines)
