"""Lipschitz combinatorial equivalence of metrics on a labelled point set.

Two generic metrics on the same points are equivalent when their facet
trees coincide; lower faces are subsets of facets, so the facet list is a
complete invariant.  ``up_to_relabeling=True`` quotients by point
permutations as well; that mode goes beyond the labelled notion and is off
by default.
"""

from __future__ import annotations

import hashlib
import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .admissible import Edge, canonical
from .errors import SizeMismatch, UnknownPoint
from .faces import enumerate_facets
from .metric import MetricSpace


@dataclass(frozen=True)
class CombinatorialStructure:
    n: int
    facet_trees: tuple[tuple[Edge, ...], ...]

    @property
    def digest(self) -> str:
        text = ";".join(",".join(f"{x}>{y}" for x, y in t) for t in self.facet_trees)
        return hashlib.sha256(f"{self.n}|{text}".encode()).hexdigest()[:16]


def _canonical_trees(trees) -> tuple[tuple[Edge, ...], ...]:
    return tuple(sorted(canonical(t) for t in trees))


def combinatorial_structure(ms: MetricSpace) -> CombinatorialStructure:
    trees = _canonical_trees(f.tree for f in enumerate_facets(ms))
    assert len(trees) == math.comb(2 * ms.n, ms.n)
    return CombinatorialStructure(ms.n, trees)


def relabel_invariant_structure(ms: MetricSpace) -> CombinatorialStructure:
    """Lexicographically least structure over all relabelings of the points."""
    base = combinatorial_structure(ms)
    best = None
    for perm in itertools.permutations(range(1, ms.n_points + 1)):
        trees = _canonical_trees([(perm[x - 1], perm[y - 1]) for x, y in t] for t in base.facet_trees)
        if best is None or trees < best:
            best = trees
    return CombinatorialStructure(ms.n, best)


def _structure(ms: MetricSpace, up_to_relabeling: bool) -> CombinatorialStructure:
    return relabel_invariant_structure(ms) if up_to_relabeling else combinatorial_structure(ms)


def equivalent(m1: MetricSpace, m2: MetricSpace, up_to_relabeling: bool = False) -> bool:
    if m1.n_points != m2.n_points:
        raise SizeMismatch(f"{m1.n_points} points vs {m2.n_points} points")
    return _structure(m1, up_to_relabeling) == _structure(m2, up_to_relabeling)


@dataclass(frozen=True)
class CycleConfig:
    """Disjoint point tuples ``x`` and ``y`` of equal length ``k >= 1``."""

    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self):
        if len(self.x) != len(self.y) or not self.x:
            raise ValueError("x and y must be non-empty and of equal length")
        pts = self.x + self.y
        if len(set(pts)) != len(pts):
            raise ValueError(f"points of {self.x} and {self.y} must be mutually distinct")


def cycle_functional(ms: MetricSpace, c: CycleConfig) -> Fraction:
    """``sum rho(x_i, y_i) - sum rho(x_i, y_{i+1})`` with ``y_{k+1} = y_1``.

    Negative when the identity pairing beats the cyclic shift; zero exactly
    on the exceptional plane of ``c``.
    """
    for p in c.x + c.y:
        if not 1 <= p <= ms.n_points:
            raise UnknownPoint(f"point {p} outside 1..{ms.n_points}")
    k = len(c.x)
    same = sum((ms.rho(c.x[i], c.y[i]) for i in range(k)), Fraction(0))
    shifted = sum((ms.rho(c.x[i], c.y[(i + 1) % k]) for i in range(k)), Fraction(0))
    return same - shifted


@dataclass(frozen=True)
class ClassCount:
    count: int
    representatives: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]
    digests: tuple[str, ...]

    def report(self) -> list[dict]:
        return [
            {"representative": r, "size": len(m), "structure_hash": d}
            for r, m, d in zip(self.representatives, self.members, self.digests)
        ]


def _structure_job(args):
    ms, relabel = args
    return _structure(ms, relabel)


def count_classes(family: Sequence[MetricSpace], jobs: int = 1, up_to_relabeling: bool = False) -> ClassCount:
    """Partition ``family`` by structure; each class is represented by its
    first member in input order."""
    family = list(family)
    if not family:
        return ClassCount(0, (), (), ())
    sizes = {ms.n_points for ms in family}
    if len(sizes) > 1:
        raise SizeMismatch(f"family mixes point counts {sorted(sizes)}")
    if jobs <= 1:
        structures = [_structure(ms, up_to_relabeling) for ms in family]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            structures = list(pool.map(_structure_job, [(ms, up_to_relabeling) for ms in family]))
    classes: dict[CombinatorialStructure, list[int]] = {}
    for i, s in enumerate(structures):
        classes.setdefault(s, []).append(i)
    members = tuple(tuple(v) for v in classes.values())
    return ClassCount(
        len(classes),
        tuple(m[0] for m in members),
        members,
        tuple(s.digest for s in classes),
    )


def has_disjoint_four_cycle(n_points: int, diff: set) -> bool:
    """Whether the undirected graph ``diff`` (pairs ``(a, b)``, ``a < b``)
    contains a 4-cycle ``x1 y1 x2 y2`` on four distinct points."""
    edges = {frozenset(e) for e in diff}
    for a, b, c, d in itertools.permutations(range(1, n_points + 1), 4):
        if a < min(b, c, d) and b < d:
            if {frozenset((a, b)), frozenset((b, c)), frozenset((c, d)), frozenset((d, a))} <= edges:
                return True
    return False


def sign_difference(s1: dict, s2: dict) -> set:
    """Pairs whose sign differs between two sign assignments."""
    return {p for p in s1 if s1[p] != s2.get(p, 1)} | {p for p in s2 if p not in s1 and s2[p] != 1}
