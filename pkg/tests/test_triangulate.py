import math
from fractions import Fraction as Q

import pytest

from lipkr.errors import EmptyPart, NotGeneric
from lipkr.faces import build_facet_tree, enumerate_facets
from lipkr.metric import binary_f, random_generic_metric, sign_family, uniform_metric
from lipkr.triangulate import (
    LatticeSimplex,
    Triangulation,
    check_unimodular,
    det,
    edge_vector,
    interiors_disjoint,
    product_triangulation,
    regularity_certificate,
    to_json,
    to_text,
    triangulate_root_polytope,
)


def test_det_small():
    assert det([[2, 0], [0, 3]]) == 6
    assert det([[0, 1], [1, 0]]) == -1
    assert det([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == -3
    assert det([[1, 1], [1, 1]]) == 0


def test_edge_vectors():
    assert edge_vector(4, 1, 4) == (1, 0, 0)
    assert edge_vector(4, 4, 2) == (0, -1, 0)
    assert edge_vector(4, 1, 3) == (1, 0, -1)


def test_n2_hexagon():
    ms = random_generic_metric(2, 0)
    t = triangulate_root_polytope(ms)
    report = check_unimodular(t)
    assert report and report.count == report.expected == 6
    assert all(abs(s.det) == 1 for s in t.simplices)


@pytest.mark.parametrize("n", [3, 4])
def test_unimodular(n):
    t = triangulate_root_polytope(random_generic_metric(n, 1))
    report = check_unimodular(t)
    assert report.ok and report.count == math.comb(2 * n, n)


def test_degenerate_simplex_flagged():
    s = LatticeSimplex.from_edges(3, [(1, 3), (1, 3)])
    assert s.det == 0
    report = check_unimodular(Triangulation((s,), None, 2))
    assert not report.ok and report.violations[0][1] == 0


@pytest.mark.parametrize("n", [2, 3])
def test_interiors_disjoint(n):
    t = triangulate_root_polytope(random_generic_metric(n, 2))
    assert interiors_disjoint(t) == []


def test_overlap_detected():
    s = LatticeSimplex.from_edges(3, [(1, 3), (2, 3)])
    t = Triangulation((s, LatticeSimplex.from_edges(3, [(1, 3), (2, 3)])), None, 2)
    assert interiors_disjoint(t)


def test_regularity_example(rm3):
    facet = build_facet_tree(rm3, (2, 1, 0, 0))
    cert = regularity_certificate(rm3, facet)
    assert cert.slacks[(2, 3)] == 1 - Q(19, 20) == Q(1, 20)
    assert cert.margin > 0 and cert.margin == min(cert.slacks.values())


def test_regularity_all_facets(rm3):
    margins = [regularity_certificate(rm3, f).margin for f in enumerate_facets(rm3)]
    assert len(margins) == 20 and min(margins) > 0


def test_regularity_requires_generic(rm3, uniform4):
    facet = build_facet_tree(rm3, (2, 1, 0, 0))
    with pytest.raises(NotGeneric):
        regularity_certificate(uniform4, facet)


def test_product_examples(rm3):
    cells = product_triangulation(rm3, {1, 2})
    assert cells == [frozenset({(1, 3), (2, 3), (2, 4)}), frozenset({(1, 3), (1, 4), (2, 4)})]
    assert product_triangulation(rm3, {1}) == [frozenset({(1, 2), (1, 3), (1, 4)})]
    assert len(product_triangulation(random_generic_metric(4, 0), {2, 4})) == 3
    with pytest.raises(EmptyPart):
        product_triangulation(rm3, set())
    with pytest.raises(EmptyPart):
        product_triangulation(rm3, {1, 2, 3, 4})


def test_product_cells_are_facets_inside_bipartition():
    ms = random_generic_metric(4, 6)
    plus = {1, 3}
    inside = {f.tree for f in enumerate_facets(ms) if all(x in plus and y not in plus for x, y in f.tree)}
    assert set(product_triangulation(ms, plus)) == inside


def test_sign_family_reaches_both_square_triangulations():
    f = binary_f(4)
    seen = {frozenset(product_triangulation(ms, {1, 2})) for _, ms in sign_family(f, [(1, 3), (1, 4), (2, 3), (2, 4)])}
    assert len(seen) == 2


def test_exports(rm3):
    t = triangulate_root_polytope(rm3)
    lines = to_text(t).splitlines()
    assert len(lines) == 20 and "1>3,1>4,2>4" in lines
    assert '"det"' in to_json(t) and '"margin"' in to_json(t)
