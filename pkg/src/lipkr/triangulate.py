"""Triangulations of the root polytope induced by a generic metric.

Each facet tree of KR(X) projects centrally onto a simplex in the boundary
of ROOT(X) = KR(X, 1); coning with the origin gives a full-dimensional
lattice simplex spanned by the vectors ``delta_x - delta_y`` of the tree
edges.  Coordinates use the basis ``u_i = delta_i - delta_N`` so
``delta_x - delta_y`` is ``e_x - e_y`` with ``e_N = 0``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .admissible import Edge, canonical
from .errors import EmptyPart, FormulaMismatch, RegularityViolation, UnknownPoint
from .faces import Facet, build_facet_tree, compositions, enumerate_facets, require_generic
from .metric import MetricSpace, format_rational


def edge_vector(n_points: int, x: int, y: int) -> tuple[int, ...]:
    v = [0] * (n_points - 1)
    if x != n_points:
        v[x - 1] += 1
    if y != n_points:
        v[y - 1] -= 1
    return tuple(v)


def det(rows: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in rows]
    k = len(a)
    if k == 0:
        return 1
    sign, prev = 1, 1
    for c in range(k - 1):
        if a[c][c] == 0:
            for r in range(c + 1, k):
                if a[r][c] != 0:
                    a[c], a[r] = a[r], a[c]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(c + 1, k):
            for j in range(c + 1, k):
                a[r][j] = (a[r][j] * a[c][c] - a[r][c] * a[c][j]) // prev
        prev = a[c][c]
    return sign * a[-1][-1]


@dataclass(frozen=True)
class LatticeSimplex:
    tree: frozenset
    vectors: tuple[tuple[int, ...], ...]
    det: int

    @classmethod
    def from_edges(cls, n_points: int, edges: Iterable[Edge]) -> "LatticeSimplex":
        edges = canonical(edges)
        vecs = tuple(edge_vector(n_points, x, y) for x, y in edges)
        return cls(frozenset(edges), vecs, det(vecs))


@dataclass(frozen=True)
class Triangulation:
    simplices: tuple[LatticeSimplex, ...]
    source_metric: Optional[MetricSpace]
    n: int


@dataclass
class UnimodularityReport:
    ok: bool
    count: int
    expected: int
    violations: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def triangulate_root_polytope(ms: MetricSpace, jobs: int = 1) -> Triangulation:
    facets = enumerate_facets(ms, jobs=jobs)
    simplices = tuple(LatticeSimplex.from_edges(ms.n_points, f.tree) for f in facets)
    return Triangulation(simplices, ms, ms.n)


def check_unimodular(t: Triangulation) -> UnimodularityReport:
    """Every determinant is +-1, trees are distinct and there are ``C(2n, n)`` cells."""
    expected = math.comb(2 * t.n, t.n)
    violations = [(canonical(s.tree), s.det) for s in t.simplices if abs(s.det) != 1]
    if len({s.tree for s in t.simplices}) != len(t.simplices):
        violations.append(("duplicate trees", None))
    ok = not violations and len(t.simplices) == expected
    return UnimodularityReport(ok, len(t.simplices), expected, violations)


def _solve(rows: Sequence[Sequence[int]], b: Sequence) -> Optional[list[Fraction]]:
    # Coordinates lam with sum lam_i * rows[i] == b (Gauss-Jordan over Fractions).
    k = len(rows)
    a = [[Fraction(rows[i][r]) for i in range(k)] + [Fraction(b[r])] for r in range(k)]
    for c in range(k):
        piv = next((r for r in range(c, k) if a[r][c] != 0), None)
        if piv is None:
            return None
        a[c], a[piv] = a[piv], a[c]
        pv = a[c][c]
        a[c] = [v / pv for v in a[c]]
        for r in range(k):
            if r != c and a[r][c] != 0:
                fac = a[r][c]
                a[r] = [v - fac * w for v, w in zip(a[r], a[c])]
    return [a[r][k] for r in range(k)]


def contains(s: LatticeSimplex, point: Sequence) -> bool:
    """Closed membership in ``conv(0, vectors)``."""
    lam = _solve(s.vectors, point)
    return lam is not None and all(v >= 0 for v in lam) and sum(lam) <= 1


def interiors_disjoint(t: Triangulation) -> list[tuple]:
    """Pairs ``(S, T)`` where the barycenter of ``S`` lies in the closed simplex ``T``.

    In a triangulation the list is empty.  Quadratic in the number of cells,
    meant for small ``n``.
    """
    bad = []
    k = t.n + 1
    for s in t.simplices:
        bary = [Fraction(sum(col), k) for col in zip(*s.vectors)]
        for other in t.simplices:
            if other is not s and contains(other, bary):
                bad.append((canonical(s.tree), canonical(other.tree)))
    return bad


@dataclass(frozen=True)
class RegularityCertificate:
    tree: frozenset
    margin: Fraction
    argmin: Edge
    slacks: dict

    def to_json(self) -> dict:
        return {"edges": [list(e) for e in canonical(self.tree)], "margin": format_rational(self.margin), "argmin": list(self.argmin)}


def regularity_certificate(ms: MetricSpace, facet: Facet) -> RegularityCertificate:
    """Exact check that the facet's supporting function is tight on the tree
    edges only: ``<e_{x,y}, f> = 1`` on edges and ``< 1`` elsewhere.

    The margin is the least slack ``1 - (f(x) - f(y)) / rho(x, y)`` over
    ordered non-edges.
    """
    require_generic(ms)
    f = facet.witness
    slacks = {}
    for x in ms.points:
        for y in ms.points:
            if x == y:
                continue
            s = 1 - (f[x] - f[y]) / ms.rho(x, y)
            if (x, y) in facet.tree:
                if s != 0:
                    raise RegularityViolation((x, y), f"tree edge ({x},{y}) is not tight (slack {s})")
            else:
                if s <= 0:
                    raise RegularityViolation((x, y))
                slacks[(x, y)] = s
    argmin = min(slacks, key=lambda e: (slacks[e], e))
    return RegularityCertificate(facet.tree, slacks[argmin], argmin, slacks)


def product_triangulation(ms: MetricSpace, plus: Iterable[int]) -> list[frozenset]:
    """Cells of the induced triangulation of the ROOT facet ``plus x complement``.

    These are the facet trees with every edge from ``plus`` to its complement,
    one per positive composition of ``n`` over ``plus``.
    """
    plus = sorted(set(plus))
    N = ms.n_points
    if not plus or len(plus) >= N:
        raise EmptyPart(f"both parts must be non-empty, got plus={plus}")
    for x in plus:
        if not 1 <= x <= N:
            raise UnknownPoint(f"point {x} outside 1..{N}")
    require_generic(ms)
    k = len(plus)
    cells = []
    for comp in compositions(ms.n - k, k):
        p = [0] * N
        for x, c in zip(plus, comp):
            p[x - 1] = c + 1
        cells.append(build_facet_tree(ms, p).tree)
    if len(cells) != math.comb(ms.n - 1, k - 1):
        raise FormulaMismatch(f"{len(cells)} cells, expected C({ms.n - 1},{k - 1})")
    return cells


def format_simplex(edges: Iterable[Edge]) -> str:
    return ",".join(f"{x}>{y}" for x, y in canonical(edges))


def to_text(t: Triangulation) -> str:
    return "\n".join(format_simplex(s.tree) for s in t.simplices)


def to_json(t: Triangulation, margins: bool = True) -> str:
    ms = t.source_metric
    facets = {f.tree: f for f in enumerate_facets(ms)} if margins and ms is not None else {}
    out = []
    for s in t.simplices:
        row = {"edges": format_simplex(s.tree), "det": s.det}
        if s.tree in facets:
            row["margin"] = format_rational(regularity_certificate(ms, facets[s.tree]).margin)
        out.append(row)
    return json.dumps({"n": t.n, "simplices": out}, indent=1)
