"""Facets and faces of KR(X) for a generic metric.

Facets of KR(X) are admissible spanning trees, one per outdegree sequence
``p`` with ``sum(p) == n``.  A facet tree is assembled from constellations:
for each white point ``u`` (``p_u > 0``) the edges pointing away from ``u``
form the unique cheapest constellation in which ``u`` emits ``p_u`` edges,
every other white ``x`` emits ``p_x - 1`` and every black point receives one.
Since the polytope is simplicial, faces are exactly the edge subsets of facet
trees and are identified with their edge sets.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter, defaultdict, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .admissible import (
    Edge,
    WitnessFunction,
    canonical,
    is_admissible,
    is_generic,
    orientation_colors,
    tree_admissible_fast,
    witness_function,
)
from .assignment import min_cost_transportation
from .errors import (
    ArityMismatch,
    FormulaMismatch,
    InternalContradiction,
    NotAdmissible,
    NotGeneric,
    NotWhite,
    UnknownPoint,
)
from .metric import MetricSpace


@dataclass(frozen=True)
class Facet:
    tree: frozenset
    outdeg: tuple[int, ...]
    witness: WitnessFunction

    @property
    def edges(self) -> tuple[Edge, ...]:
        return canonical(self.tree)

    def to_json(self) -> dict:
        from .metric import format_rational

        return {
            "outdegrees": list(self.outdeg),
            "edges": [list(e) for e in self.edges],
            "witness": {str(x): format_rational(v) for x, v in self.witness.as_dict().items()},
        }


def require_generic(ms: MetricSpace) -> None:
    report = is_generic(ms)
    if not report:
        w = report.witness
        raise NotGeneric(f"tied optimal pairings of {w.xs} with {w.ys}", w)


def outdegrees(n_points: int, g: Iterable[Edge]) -> tuple[int, ...]:
    deg = [0] * n_points
    for x, _ in g:
        deg[x - 1] += 1
    return tuple(deg)


def components(n_points: int, g: Iterable[Edge]) -> int:
    """Connected components of the undirected view, isolated points included."""
    parent = list(range(n_points + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    c = n_points
    for x, y in g:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry
            c -= 1
    return c


def face_dimension(ms: MetricSpace, g: Iterable[Edge]) -> int:
    """``n - c`` where ``c`` counts components over all ``n + 1`` points.

    The empty edge set gives ``-1``, the empty face.
    """
    g = frozenset(g)
    if not is_admissible(ms, g):
        raise NotAdmissible(f"{canonical(g)} is not admissible")
    return ms.n - components(ms.n_points, g)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts, lexicographically."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def min_constellation(ms: MetricSpace, whites: Sequence[int], p: Sequence[int]) -> frozenset:
    """Cheapest constellation where ``whites[i]`` emits ``p[i]`` edges and every
    other point receives exactly one.  NotGeneric if the optimum is tied."""
    whites = tuple(whites)
    p = tuple(p)
    if len(whites) != len(p):
        raise ArityMismatch(f"{len(whites)} white points but {len(p)} outdegrees")
    if len(set(whites)) != len(whites):
        raise ArityMismatch("white points repeat")
    for w in whites:
        if not 1 <= w <= ms.n_points:
            raise UnknownPoint(f"point {w} outside 1..{ms.n_points}")
    if any(q < 0 for q in p) or len(whites) + sum(p) != ms.n_points:
        raise ArityMismatch(f"|whites| + sum(p) = {len(whites) + sum(p)} != {ms.n_points}")
    return _constellation(ms, whites, p)


@lru_cache(maxsize=65536)
def _constellation(ms: MetricSpace, whites: tuple[int, ...], p: tuple[int, ...]) -> frozenset:
    _, D = ms.scaled
    wset = set(whites)
    sinks = [x for x in ms.points if x not in wset]
    cost = [[D[w - 1][y - 1] for y in sinks] for w in whites]
    res = min_cost_transportation(cost, p)
    if not res.unique:
        alt = frozenset((whites[s], y) for y, s in zip(sinks, res.tie_witness))
        raise NotGeneric(
            f"tied constellations for whites {whites} with outdegrees {p}",
            (frozenset((whites[s], y) for y, s in zip(sinks, res.plan)), alt),
        )
    return frozenset((whites[s], y) for y, s in zip(sinks, res.plan))


def _is_spanning_tree(n_points: int, g: frozenset) -> bool:
    return len(g) == n_points - 1 and components(n_points, g) == 1


def build_facet_tree(ms: MetricSpace, p: Sequence[int]) -> Facet:
    """The unique admissible spanning tree with outdegree sequence ``p``.

    >>> from lipkr.metric import rearrangement_metric
    >>> build_facet_tree(rearrangement_metric(3), (2, 1, 0, 0)).edges
    ((1, 3), (1, 4), (2, 4))
    """
    p = tuple(p)
    if len(p) != ms.n_points or any(q < 0 for q in p) or sum(p) != ms.n:
        raise ArityMismatch(f"outdegree sequence {p} must have {ms.n_points} non-negative entries summing to {ms.n}")
    require_generic(ms)
    return _build(ms, p)


def _build(ms: MetricSpace, p: tuple[int, ...]) -> Facet:
    whites = tuple(x for x in ms.points if p[x - 1] > 0)
    tree: set = set()
    for u in whites:
        supplies = tuple(p[x - 1] if x == u else p[x - 1] - 1 for x in whites)
        tree |= _constellation(ms, whites, supplies)
    tree = frozenset(tree)
    if not _is_spanning_tree(ms.n_points, tree) or outdegrees(ms.n_points, tree) != p:
        raise InternalContradiction(f"constellations for {p} do not assemble into a spanning tree: {canonical(tree)}")
    orientation_colors(tree)
    if not tree_admissible_fast(ms, tree):
        raise InternalContradiction(f"tree {canonical(tree)} for {p} fails the path criterion")
    return Facet(tree, p, witness_function(ms, tree, ms.n_points))


def _build_many(args):
    ms, seqs = args
    return [_build(ms, p) for p in seqs]


@lru_cache(maxsize=64)
def _facets_cached(ms: MetricSpace) -> tuple[Facet, ...]:
    return tuple(_build(ms, p) for p in compositions(ms.n, ms.n_points))


def enumerate_facets(ms: MetricSpace, jobs: int = 1) -> list[Facet]:
    """All ``C(2n, n)`` facets, sorted by outdegree sequence."""
    require_generic(ms)
    if jobs <= 1:
        facets = list(_facets_cached(ms))
    else:
        seqs = list(compositions(ms.n, ms.n_points))
        chunks = [seqs[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            facets = [f for part in pool.map(_build_many, [(ms, c) for c in chunks]) for f in part]
        facets.sort(key=lambda f: f.outdeg)
    if len({f.tree for f in facets}) != len(facets):
        raise InternalContradiction("two outdegree sequences produced the same tree")
    return facets


def multinomial(n: int, m: int) -> int:
    """``(n + m)! / (m! m! (n - m)!)``."""
    return math.factorial(n + m) // (math.factorial(m) ** 2 * math.factorial(n - m))


@lru_cache(maxsize=64)
def _face_set(ms: MetricSpace) -> frozenset:
    faces = set()
    for facet in _facets_cached(ms):
        edges = facet.edges
        for r in range(len(edges) + 1):
            faces.update(frozenset(c) for c in itertools.combinations(edges, r))
    return frozenset(faces)


def face_set(ms: MetricSpace) -> frozenset:
    """Every face of KR(X) as an edge set, the empty face included.

    The empty face is dual to LIP(X) itself and is the ``m = 0`` entry.
    """
    require_generic(ms)
    return _face_set(ms)


def f_vector(ms: MetricSpace) -> tuple[int, ...]:
    """Entry ``m`` counts faces of KR(X) of dimension ``m - 1`` (equivalently
    faces of LIP(X) of dimension ``n - m``); entry 0 is the whole polytope."""
    faces = face_set(ms)
    sizes = Counter(len(g) for g in faces)
    fv = (1,) + tuple(sizes[m] for m in range(1, ms.n + 1))
    expected = tuple(multinomial(ms.n, m) for m in range(ms.n + 1))
    if fv != expected:
        raise FormulaMismatch(f"measured {fv}, formula {expected}")
    return fv


def faces_with_outdegrees(ms: MetricSpace, p: Sequence[int]) -> list[frozenset]:
    """Admissible graphs with outdegree sequence exactly ``p``; there are ``C(n, sum p)``."""
    p = tuple(p)
    if len(p) != ms.n_points or any(q < 0 for q in p) or sum(p) > ms.n:
        raise ArityMismatch(f"outdegree sequence {p} must have {ms.n_points} non-negative entries summing to at most {ms.n}")
    found = sorted((g for g in face_set(ms) if outdegrees(ms.n_points, g) == p), key=canonical)
    if len(found) != math.comb(ms.n, sum(p)):
        raise FormulaMismatch(f"{len(found)} graphs with outdegrees {p}, expected C({ms.n},{sum(p)})")
    return found


def phi_functional(ms: MetricSpace, t, u: int) -> tuple[frozenset, Fraction]:
    """``H(T, u)`` and its total length ``Phi_u``.

    ``H(T, u)`` keeps the tree edges ``(x, y)`` whose white end ``x`` is
    reached from ``u`` without crossing ``(x, y)``, i.e. the edges pointing
    away from ``u``.
    """
    tree = t.tree if isinstance(t, Facet) else frozenset(t)
    tails, _ = orientation_colors(tree)
    if u not in tails:
        raise NotWhite(f"point {u} has no outgoing tree edge")
    adj = defaultdict(list)
    for x, y in tree:
        adj[x].append(y)
        adj[y].append(x)
    parent = {u: None}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        for b in adj[a]:
            if b not in parent:
                parent[b] = a
                queue.append(b)
    H = frozenset((x, y) for x, y in tree if parent.get(y) == x)
    return H, sum((ms.rho(x, y) for x, y in H), Fraction(0))
