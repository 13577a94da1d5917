"""Finite metric spaces with exact rational distances.

Points are labelled ``1..N`` where ``N = n + 1``; the polytopes built on top
of a space are ``n``-dimensional.  Distances are :class:`fractions.Fraction`
throughout.  Hot loops use :attr:`MetricSpace.scaled`, the same matrix
multiplied by the least common denominator so that all entries are ints.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    EntryOutOfRange,
    NonPositiveDistance,
    NotSymmetric,
    ParseError,
    RetryLimitExceeded,
    TriangleViolation,
)

#: Denominators used by :func:`random_generic_metric`; attempt ``i`` uses
#: ``DENOMINATORS[min(i, len - 1)]``.
DENOMINATORS = (1009, 10007, 100003, 1000003)
RETRY_BUDGET = 64


def to_rational(value) -> Fraction:
    """Parse an int, a Fraction or a ``"p/q"`` string.  Floats are refused."""
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {value!r}") from exc
    raise ParseError(f"not an exact rational (use an int or a 'p/q' string): {value!r}")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class MetricSpace:
    """A validated metric on ``{1, ..., n_points}``.

    Build instances with :func:`validate_metric` or one of the generators;
    the constructor itself trusts its input.
    """

    dist: tuple[tuple[Fraction, ...], ...]
    strict: bool

    @property
    def n_points(self) -> int:
        return len(self.dist)

    @property
    def n(self) -> int:
        """Dimension of LIP(X) and KR(X)."""
        return len(self.dist) - 1

    @property
    def points(self) -> range:
        return range(1, len(self.dist) + 1)

    def rho(self, x: int, y: int) -> Fraction:
        return self.dist[x - 1][y - 1]

    def pairs(self) -> Iterator[tuple[int, int]]:
        """Unordered pairs ``(x, y)`` with ``x < y``."""
        return itertools.combinations(self.points, 2)

    @cached_property
    def scaled(self) -> tuple[int, tuple[tuple[int, ...], ...]]:
        """``(L, D)`` with ``D[i][j] == L * rho(i+1, j+1)`` and all entries int."""
        lcd = 1
        for row in self.dist:
            for q in row:
                lcd = lcd * q.denominator // math.gcd(lcd, q.denominator)
        mat = tuple(tuple(int(q * lcd) for q in row) for row in self.dist)
        return lcd, mat

    def relabel(self, perm: Sequence[int]) -> "MetricSpace":
        """Metric ``rho'(perm[x], perm[y]) = rho(x, y)``; ``perm`` is 1-based over points."""
        N = self.n_points
        new = [[Fraction(0)] * N for _ in range(N)]
        for x in self.points:
            for y in self.points:
                new[perm[x - 1] - 1][perm[y - 1] - 1] = self.rho(x, y)
        return MetricSpace(tuple(tuple(r) for r in new), self.strict)

    def to_json(self) -> dict:
        return {
            "points": self.n_points,
            "dist": [[int(q) if q.denominator == 1 else format_rational(q) for q in row] for row in self.dist],
        }

    def __repr__(self) -> str:
        return f"MetricSpace(n_points={self.n_points}, strict={self.strict})"


def validate_metric(dist: Sequence[Sequence]) -> MetricSpace:
    """Check a square matrix is a metric and compute its ``strict`` flag.

    Raises NotSymmetric, NonPositiveDistance or TriangleViolation (naming the
    first violating triple ``(x, y, z)`` with ``rho(x,z) > rho(x,y) + rho(y,z)``).
    """
    N = len(dist)
    if N < 2:
        raise NonPositiveDistance("a metric space needs at least two points")
    mat = []
    for row in dist:
        if len(row) != N:
            raise NotSymmetric("distance matrix is not square")
        mat.append(tuple(to_rational(v) for v in row))
    for i in range(N):
        if mat[i][i] != 0:
            raise NonPositiveDistance(f"diagonal entry at point {i + 1} is not zero")
        for j in range(i + 1, N):
            if mat[i][j] != mat[j][i]:
                raise NotSymmetric(f"rho({i + 1},{j + 1}) != rho({j + 1},{i + 1})")
            if mat[i][j] <= 0:
                raise NonPositiveDistance(f"rho({i + 1},{j + 1}) = {mat[i][j]} is not positive")
    strict = True
    for x, y, z in itertools.permutations(range(N), 3):
        lhs, rhs = mat[x][z], mat[x][y] + mat[y][z]
        if lhs > rhs:
            raise TriangleViolation(x + 1, y + 1, z + 1)
        if lhs == rhs:
            strict = False
    return MetricSpace(tuple(mat), strict)


def from_pairs(n_points: int, dist: Mapping[tuple[int, int], object]) -> MetricSpace:
    """Build from a mapping over unordered pairs ``{(x, y): rho}``."""
    mat = [[0] * n_points for _ in range(n_points)]
    for (x, y), v in dist.items():
        mat[x - 1][y - 1] = mat[y - 1][x - 1] = v
    return validate_metric(mat)


def uniform_metric(n_points: int, value=1) -> MetricSpace:
    """The metric ``1`` (scaled by ``value``) whose KR polytope is the root polytope."""
    return validate_metric([[0 if i == j else value for j in range(n_points)] for i in range(n_points)])


def rearrangement_metric(n: int) -> MetricSpace:
    """``rho(i, j) = 1 + i/j`` for ``1 <= i < j <= n + 1``.

    Strict and generic.  When every tail lies below every head (or above
    every head) a two-edge graph is admissible iff it has no inversion; when
    tails and heads interleave that rule fails, e.g. ``{(1, 2), (3, 4)}`` is
    not admissible at ``n = 3``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    N = n + 1
    return validate_metric(
        [[0 if i == j else 1 + Fraction(min(i, j), max(i, j)) for j in range(1, N + 1)] for i in range(1, N + 1)]
    )


def sign_family_metric(f: Sequence[Sequence], signs) -> MetricSpace:
    """``rho(x, y) = 3 + f(x, y)`` or ``3 - f(x, y)`` per sign bit.

    ``signs`` is either a mapping from unordered pairs ``(x, y)``, ``x < y``,
    to ``+1/-1`` (missing pairs default to ``+1``) or a sequence of booleans
    / ``+-1`` in the order of :func:`itertools.combinations` over the points
    (True / +1 meaning plus).
    """
    N = len(f)
    fq = [[to_rational(v) for v in row] for row in f]
    pairs = list(itertools.combinations(range(1, N + 1), 2))
    if isinstance(signs, Mapping):
        sgn = {p: signs.get(p, 1) for p in pairs}
    else:
        signs = list(signs)
        if len(signs) != len(pairs):
            raise EntryOutOfRange(f"expected {len(pairs)} sign bits, got {len(signs)}")
        sgn = {p: s for p, s in zip(pairs, signs)}
    mat = [[Fraction(0)] * N for _ in range(N)]
    for x, y in pairs:
        v = fq[x - 1][y - 1]
        if fq[y - 1][x - 1] != v:
            raise EntryOutOfRange(f"f is not symmetric at ({x},{y})")
        if not 0 < v < 1:
            raise EntryOutOfRange(f"f({x},{y}) = {v} is not in (0, 1)")
        s = sgn[(x, y)]
        plus = s is True or (s is not False and s > 0)
        mat[x - 1][y - 1] = mat[y - 1][x - 1] = 3 + v if plus else 3 - v
    return validate_metric(mat)


def binary_f(n_points: int) -> list[list[Fraction]]:
    """Off-diagonal values ``2**j / 2**P`` over the ``P`` unordered pairs.

    Distinct powers of two make every signed sum of distinct entries nonzero,
    which stands in for rational independence: every metric of the sign
    family built on this ``f`` is generic.
    """
    N = n_points
    pairs = list(itertools.combinations(range(N), 2))
    P = len(pairs)
    f = [[Fraction(0)] * N for _ in range(N)]
    for j, (a, b) in enumerate(pairs):
        f[a][b] = f[b][a] = Fraction(2**j, 2**P)
    return f


def sign_family(f: Sequence[Sequence], pairs: Iterable[tuple[int, int]] | None = None) -> Iterator[tuple[dict, MetricSpace]]:
    """Yield ``(signs, metric)`` for every sign choice on ``pairs``.

    Pairs not listed keep sign ``+``.  Order is binary counting with the first
    pair as the most significant bit and ``+`` before ``-``.
    """
    N = len(f)
    pairs = list(itertools.combinations(range(1, N + 1), 2) if pairs is None else pairs)
    pairs = [tuple(sorted(p)) for p in pairs]
    for bits in itertools.product((1, -1), repeat=len(pairs)):
        signs = dict(zip(pairs, bits))
        yield signs, sign_family_metric(f, signs)


def random_generic_metric(n: int, seed: int, retries: int = RETRY_BUDGET) -> MetricSpace:
    """Seeded random generic metric of sign-family type.

    Uses :class:`random.Random` (Mersenne Twister) seeded with ``seed``.  Each
    attempt draws distinct numerators for ``f`` over the attempt's
    denominator, then one sign bit per pair, and keeps the first metric that
    passes the full genericity check.
    """
    from .admissible import is_generic

    if n < 1:
        raise ValueError("n must be at least 1")
    N = n + 1
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(N), 2))
    for attempt in range(retries):
        den = DENOMINATORS[min(attempt, len(DENOMINATORS) - 1)]
        nums = rng.sample(range(1, den), len(pairs))
        signs = [rng.getrandbits(1) == 1 for _ in pairs]
        f = [[Fraction(0)] * N for _ in range(N)]
        for (a, b), num in zip(pairs, nums):
            f[a][b] = f[b][a] = Fraction(num, den)
        ms = sign_family_metric(f, signs)
        if is_generic(ms):
            return ms
    raise RetryLimitExceeded(f"no generic metric found in {retries} attempts (n={n}, seed={seed})")


def load_metric(source) -> MetricSpace:
    """Read ``{"points": k, "dist": [[...]]}`` from a path, file object or dict."""
    if isinstance(source, dict):
        data = source
    else:
        try:
            if hasattr(source, "read"):
                data = json.load(source)
            else:
                with open(source) as fh:
                    data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "dist" not in data:
        raise ParseError("metric file must be an object with a 'dist' matrix")
    dist = data["dist"]
    if not isinstance(dist, list) or not all(isinstance(r, list) for r in dist):
        raise ParseError("'dist' must be a list of rows")
    k = data.get("points", len(dist))
    if k != len(dist):
        raise ParseError(f"'points' is {k} but 'dist' has {len(dist)} rows")
    return validate_metric(dist)


def dump_metric(ms: MetricSpace) -> str:
    return json.dumps(ms.to_json())
