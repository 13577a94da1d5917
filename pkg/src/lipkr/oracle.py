"""Brute-force ground truth for the test-suite.

Nothing here imports the fast paths (assignment, admissible, faces, norms);
each routine enumerates directly and refuses inputs above a hard budget.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import BudgetExceeded, NotBalanced
from .metric import MetricSpace

MAX_POINTS = 7
MAX_EDGES = 42
MAX_FACE_POINTS = 5
MAX_TRANSPORT_UNITS = 8
MAX_ASSIGNMENT = 8


class OracleDiagnostic(UserWarning):
    """The two readings of the cyclic condition disagree on a graph."""


def brute_assignment(cost: Sequence[Sequence]) -> tuple[object, list[tuple[int, ...]]]:
    """Minimum over all permutations and the list of permutations attaining it."""
    k = len(cost)
    if k > MAX_ASSIGNMENT:
        raise BudgetExceeded(f"{k}! permutations")
    best, arg = None, []
    for perm in itertools.permutations(range(k)):
        v = sum(cost[i][perm[i]] for i in range(k))
        if best is None or v < best:
            best, arg = v, [perm]
        elif v == best:
            arg.append(perm)
    return best, arg


@dataclass(frozen=True)
class Readings:
    """Cyclic condition with distinct tails and distinct heads (``overlapping``)
    and with all ``2k`` points distinct (``disjoint``)."""

    overlapping: bool
    disjoint: bool


def cyclic_condition(ms: MetricSpace, g: Iterable[tuple[int, int]]) -> Readings:
    """Check ``sum rho(x_i, y_i) <= sum rho(x_i, y_{i+1})`` over edge arrays.

    Arrays are sequences of distinct edges of ``g`` with pairwise distinct
    tails and pairwise distinct heads, taken up to rotation.
    """
    edges = sorted(set(g))
    if ms.n_points > MAX_POINTS or len(edges) > MAX_EDGES:
        raise BudgetExceeded(f"{ms.n_points} points / {len(edges)} edges is above the oracle budget")
    _, D = ms.scaled
    r = [[0] + list(row) for row in D]
    r.insert(0, [])
    state = {"overlap": True, "disjoint": True}

    def extend(seq, tails, heads, same, shift_open, disjoint):
        x1, y1 = seq[0]
        xk, _ = seq[-1]
        if len(seq) >= 2 and same > shift_open + r[xk][y1]:
            state["overlap"] = False
            if disjoint:
                state["disjoint"] = False
                return True
        if not state["overlap"] and not disjoint:
            return False
        start = edges.index(seq[0])
        for e in edges[start + 1:]:
            x, y = e
            if x in tails or y in heads:
                continue
            still = disjoint and x not in heads and y not in tails
            if not state["overlap"] and not still:
                continue
            if extend(seq + [e], tails | {x}, heads | {y}, same + r[x][y], shift_open + r[xk][y], still):
                return True
        return False

    for e in edges:
        x, y = e
        if extend([e], {x}, {y}, r[x][y], 0, True):
            break
    return Readings(state["overlap"], state["disjoint"])


def brute_admissible(ms: MetricSpace, g: Iterable[tuple[int, int]]) -> bool:
    """Admissibility by the cyclic condition on edge arrays.

    Returns the reading with distinct tails and distinct heads.  When the
    stricter all-distinct reading disagrees an :class:`OracleDiagnostic`
    warning is issued.
    """
    g = frozenset(g)
    res = cyclic_condition(ms, g)
    if res.overlapping != res.disjoint:
        warnings.warn(
            OracleDiagnostic(f"readings disagree on {sorted(g)}: overlapping={res.overlapping}, disjoint={res.disjoint}"),
            stacklevel=2,
        )
    return res.overlapping


@dataclass(frozen=True)
class BruteFaces:
    faces: dict  # dimension -> set of edge sets
    facets: frozenset

    def counts(self, n: int) -> tuple[int, ...]:
        """Number of faces in dimensions ``0..n-1``."""
        return tuple(len(self.faces.get(d, ())) for d in range(n))


def _n_components(n_points: int, g) -> int:
    comp = {p: {p} for p in range(1, n_points + 1)}
    for x, y in g:
        if comp[x] is not comp[y]:
            merged = comp[x] | comp[y]
            for p in merged:
                comp[p] = merged
    return len({id(c) for c in comp.values()})


def proper_digraphs(n_points: int):
    """Every digraph in which each point has indegree 0 or outdegree 0."""
    pts = list(range(1, n_points + 1))
    yield frozenset()
    for w in range(1, n_points):
        for tails in itertools.combinations(pts, w):
            heads = [p for p in pts if p not in tails]
            cells = [(x, y) for x in tails for y in heads]
            for mask in range(1, 1 << len(cells)):
                g = frozenset(c for i, c in enumerate(cells) if mask >> i & 1)
                if {x for x, _ in g} == set(tails):
                    yield g


def brute_faces(ms: MetricSpace) -> BruteFaces:
    """Admissible properly oriented digraphs grouped by face dimension.

    Dimension is ``n`` minus the number of components of the undirected view.
    Facets are the inclusion-maximal admissible graphs found.
    """
    if ms.n_points > MAX_FACE_POINTS:
        raise BudgetExceeded(f"face enumeration is limited to {MAX_FACE_POINTS} points")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", OracleDiagnostic)
        admissible = [g for g in proper_digraphs(ms.n_points) if brute_admissible(ms, g)]
    faces: dict = {}
    for g in admissible:
        if g:
            faces.setdefault(ms.n - _n_components(ms.n_points, g), set()).add(g)
    maximal = frozenset(g for g in admissible if not any(g < h for h in admissible))
    return BruteFaces(faces, maximal)


def brute_transport(ms: MetricSpace, mu: Mapping[int, object] | Sequence) -> Fraction:
    """Exhaustive optimal transport of unit masses from ``mu+`` to ``mu-``."""
    if isinstance(mu, Mapping):
        coeffs = [Fraction(mu.get(x, 0)) for x in ms.points]
    elif hasattr(mu, "coeffs"):
        coeffs = list(mu.coeffs)
    else:
        coeffs = [Fraction(c) for c in mu]
    if sum(coeffs) != 0:
        raise NotBalanced("coefficients do not sum to zero")
    den = math.lcm(*(c.denominator for c in coeffs))
    units = [int(c * den) for c in coeffs]
    supply = [u if u > 0 else 0 for u in units]
    sinks = [x for x, u in enumerate(units) for _ in range(-u) if u < 0]
    if len(sinks) > MAX_TRANSPORT_UNITS:
        raise BudgetExceeded(f"{len(sinks)} mass units exceed the budget of {MAX_TRANSPORT_UNITS}")
    best = [None]

    def go(i, cost):
        if i == len(sinks):
            if best[0] is None or cost < best[0]:
                best[0] = cost
            return
        y = sinks[i]
        for x in range(len(supply)):
            if supply[x]:
                supply[x] -= 1
                go(i + 1, cost + ms.dist[x][y])
                supply[x] += 1

    go(0, Fraction(0))
    return best[0] / den
