"""Lipschitz seminorm and Kantorovich-Rubinstein norm.

``kr_norm`` solves the transport problem between the positive and negative
parts of a measure with :func:`networkx.network_simplex` after clearing all
denominators, so the optimum is an exact integer divided back down.
``kr_norm_dual`` maximizes the pairing over LIP(X) vertices (facet witnesses)
and must agree with it exactly.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

import networkx as nx

from .errors import NotBalanced, ParseError, SamePoint, UnknownPoint
from .metric import MetricSpace, format_rational, to_rational


@dataclass(frozen=True)
class SignedMeasure:
    """Coefficients ``coeffs[x - 1] = c_x`` summing to zero."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        total = sum(self.coeffs, Fraction(0))
        if total != 0:
            raise NotBalanced(f"coefficients sum to {total}, not 0")

    def __getitem__(self, x: int) -> Fraction:
        return self.coeffs[x - 1]

    def __add__(self, other: "SignedMeasure") -> "SignedMeasure":
        return SignedMeasure(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "SignedMeasure":
        return SignedMeasure(tuple(-a for a in self.coeffs))

    def scale(self, lam) -> "SignedMeasure":
        lam = Fraction(lam)
        return SignedMeasure(tuple(lam * a for a in self.coeffs))

    def pair(self, f) -> Fraction:
        """``<mu, f>`` for ``f`` given as a mapping, a 1-based indexable or a sequence."""
        vals = _values(len(self.coeffs), f)
        return sum((c * v for c, v in zip(self.coeffs, vals)), Fraction(0))

    def to_json(self) -> dict:
        return {"coeffs": {str(i + 1): format_rational(c) for i, c in enumerate(self.coeffs) if c}}


MeasureLike = Union[SignedMeasure, Mapping[int, object], Sequence]


def measure(ms: MetricSpace, coeffs: MeasureLike) -> SignedMeasure:
    """Coerce a mapping ``{point: c}`` or a length-``N`` sequence to a SignedMeasure."""
    if isinstance(coeffs, SignedMeasure):
        if len(coeffs.coeffs) != ms.n_points:
            raise UnknownPoint(f"measure has {len(coeffs.coeffs)} points, metric has {ms.n_points}")
        return coeffs
    vals = [Fraction(0)] * ms.n_points
    if isinstance(coeffs, Mapping):
        for x, c in coeffs.items():
            x = int(x)
            if not 1 <= x <= ms.n_points:
                raise UnknownPoint(f"point {x} outside 1..{ms.n_points}")
            vals[x - 1] = to_rational(c)
    else:
        if len(coeffs) != ms.n_points:
            raise UnknownPoint(f"expected {ms.n_points} coefficients, got {len(coeffs)}")
        vals = [to_rational(c) for c in coeffs]
    return SignedMeasure(tuple(vals))


def delta(ms: MetricSpace, x: int, y: int) -> SignedMeasure:
    """``delta_x - delta_y``."""
    return measure(ms, {x: 1, y: -1}) if x != y else measure(ms, {})


def _values(N: int, f) -> list[Fraction]:
    if isinstance(f, Mapping):
        return [Fraction(f[x]) for x in range(1, N + 1)]
    if hasattr(f, "values") and isinstance(getattr(f, "values"), tuple):
        return [Fraction(v) for v in f.values]
    vals = [Fraction(v) for v in f]
    if len(vals) != N:
        raise UnknownPoint(f"function has {len(vals)} values for {N} points")
    return vals


def lip_norm(ms: MetricSpace, f) -> Fraction:
    """``max over x != y of (f(y) - f(x)) / rho(x, y)``; 0 for constants."""
    vals = _values(ms.n_points, f)
    best = Fraction(0)
    for x in ms.points:
        for y in ms.points:
            if x != y:
                r = (vals[y - 1] - vals[x - 1]) / ms.rho(x, y)
                if r > best:
                    best = r
    return best


def vertex_measure(ms: MetricSpace, x: int, y: int) -> SignedMeasure:
    """``e_{x,y} = (delta_x - delta_y) / rho(x, y)``."""
    if x == y:
        raise SamePoint(f"e_{{{x},{y}}} needs distinct points")
    r = ms.rho(x, y)
    return measure(ms, {x: 1 / r, y: -1 / r})


def kr_norm(ms: MetricSpace, mu: MeasureLike) -> Fraction:
    """Optimal transport cost from ``mu+`` to ``mu-`` (exact)."""
    mu = measure(ms, mu)
    den = 1
    for c in mu.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    units = [int(c * den) for c in mu.coeffs]
    if not any(units):
        return Fraction(0)
    lcd, D = ms.scaled
    G = nx.DiGraph()
    for i, u in enumerate(units):
        G.add_node(i, demand=-u)
    for i, ui in enumerate(units):
        if ui > 0:
            for j, uj in enumerate(units):
                if uj < 0:
                    G.add_edge(i, j, weight=D[i][j])
    cost, _ = nx.network_simplex(G)
    return Fraction(cost, den * lcd)


def kr_norm_dual(ms: MetricSpace, mu: MeasureLike, facets=None) -> Fraction:
    """``max <mu, f>`` over the facet witnesses, i.e. over the vertices of LIP(X)."""
    from .faces import enumerate_facets

    mu = measure(ms, mu)
    if facets is None:
        facets = enumerate_facets(ms)
    return max(mu.pair(fc.witness.values) for fc in facets)


def load_measure(ms: MetricSpace, source) -> SignedMeasure:
    """Read ``{"coeffs": {"1": "1", "4": "-1"}}`` from a path, file object or dict."""
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
    coeffs = data.get("coeffs") if isinstance(data, dict) else None
    if not isinstance(coeffs, dict):
        raise ParseError("measure file must be an object with a 'coeffs' mapping")
    try:
        keyed = {int(k): v for k, v in coeffs.items()}
    except ValueError as exc:
        raise ParseError(f"point labels must be integers: {exc}") from exc
    return measure(ms, keyed)
