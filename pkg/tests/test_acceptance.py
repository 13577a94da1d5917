"""Exit criteria.  Each test records one PASS/FAIL line, printed in the
terminal summary, and then asserts.  All checks are exact (zero tolerance)."""

import itertools
import math
import random
import time
import warnings
from fractions import Fraction as Q

import pytest

from conftest import ACCEPTANCE_LINES
from lipkr.admissible import is_admissible
from lipkr.classify import combinatorial_structure, count_classes, equivalent, has_disjoint_four_cycle, sign_difference
from lipkr.faces import compositions, enumerate_facets, f_vector, faces_with_outdegrees, multinomial
from lipkr.metric import binary_f, random_generic_metric, rearrangement_metric, sign_family, validate_metric
from lipkr.norms import kr_norm, kr_norm_dual, measure
from lipkr.oracle import OracleDiagnostic, brute_admissible, brute_faces
from lipkr.triangulate import check_unimodular, product_triangulation, regularity_certificate, triangulate_root_polytope


def record(number, ok, detail, started):
    status = "PASS" if ok else "FAIL"
    ACCEPTANCE_LINES.append(f"[{status}] criterion {number:>2}: {detail} ({time.perf_counter() - started:.1f}s)")
    print(ACCEPTANCE_LINES[-1])
    assert ok, detail


def test_criterion_01_f_vector_formula():
    t0 = time.perf_counter()
    bad = []
    for n in (2, 3, 4, 5):
        expected = tuple(multinomial(n, m) for m in range(n + 1))
        for seed in range(10):
            ms = random_generic_metric(n, seed)
            if f_vector(ms) != expected:
                bad.append((n, seed))
    record(1, not bad, f"f-vector equals (n+m)!/(m!m!(n-m)!) for n=2..5 x 10 metrics; mismatches={bad}", t0)


def test_criterion_02_facet_count():
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 8):
        facets = enumerate_facets(random_generic_metric(n, 100 + n))
        if len({f.tree for f in facets}) != math.comb(2 * n, n) or len(facets) != math.comb(2 * n, n):
            bad.append((n, len(facets)))
    record(2, not bad and time.perf_counter() - t0 < 300, f"C(2n,n) distinct facet trees for n=1..7; mismatches={bad}", t0)


def test_criterion_03_outdegree_counts():
    t0 = time.perf_counter()
    bad, total = [], 0
    for ms in (random_generic_metric(4, 3), rearrangement_metric(4)):
        for m in range(5):
            for p in compositions(m, 5):
                total += 1
                if len(faces_with_outdegrees(ms, p)) != math.comb(4, m):
                    bad.append((p, m))
    record(3, not bad, f"C(4,m) admissible graphs for all {total} outdegree sequences at n=4; mismatches={bad}", t0)


def _pairs(N):
    return [(x, y) for x in range(1, N + 1) for y in range(1, N + 1) if x != y]


def test_criterion_04_oracle_equivalence():
    t0 = time.perf_counter()
    bad = []
    warnings.simplefilter("ignore", OracleDiagnostic)
    pairs = _pairs(4)
    metrics4 = [random_generic_metric(3, 0), rearrangement_metric(3), validate_metric([[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]])]
    for ms in metrics4:
        for mask in range(1 << 12):
            g = {pairs[i] for i in range(12) if mask >> i & 1}
            if is_admissible(ms, g) != brute_admissible(ms, g):
                bad.append(sorted(g))
    rng = random.Random(2024)
    for N in (5, 6):
        ms = random_generic_metric(N - 1, 40 + N)
        for _ in range(500):
            g = set(rng.sample(_pairs(N), rng.randint(1, 2 * N)))
            if is_admissible(ms, g) != brute_admissible(ms, g):
                bad.append(sorted(g))
    for n in (2, 3, 4):
        ms = random_generic_metric(n, 77)
        bf = brute_faces(ms)
        if (1,) + bf.counts(n) != f_vector(ms) or bf.facets != {f.tree for f in enumerate_facets(ms)}:
            bad.append(("faces", n))
    record(4, not bad, f"is_admissible == brute_admissible (3x4096 + 2x500 graphs), brute_faces == faces n=2..4; mismatches={len(bad)}", t0)


def test_criterion_05_kr_duality():
    t0 = time.perf_counter()
    bad = []
    for n in (3, 4, 5):
        ms = random_generic_metric(n, 500 + n)
        facets = enumerate_facets(ms)
        rng = random.Random(n)
        for _ in range(100):
            vals = [Q(rng.randint(-20, 20), rng.randint(1, 6)) for _ in ms.points]
            vals[-1] -= sum(vals)
            mu = measure(ms, vals)
            if kr_norm(ms, mu) != kr_norm_dual(ms, mu, facets):
                bad.append((n, vals))
    record(5, not bad, f"kr_norm == kr_norm_dual on 3x100 random measures; mismatches={len(bad)}", t0)


def test_criterion_06_unimodularity():
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 7):
        report = check_unimodular(triangulate_root_polytope(random_generic_metric(n, 60 + n)))
        if not report.ok or report.count != math.comb(2 * n, n):
            bad.append((n, report.violations[:3]))
    record(6, not bad, f"all determinants +-1 and C(2n,n) simplices for n=1..6; failures={bad}", t0)


def test_criterion_07_regularity():
    t0 = time.perf_counter()
    worst = None
    bad = []
    for n in range(1, 6):
        ms = random_generic_metric(n, 70 + n)
        for facet in enumerate_facets(ms):
            margin = regularity_certificate(ms, facet).margin
            if margin <= 0:
                bad.append((n, facet.outdeg))
            worst = margin if worst is None else min(worst, margin)
    record(7, not bad, f"strictly positive regularity margins for n=1..5 (smallest {worst})", t0)


def test_criterion_08_euler():
    t0 = time.perf_counter()
    bad = []
    for n in (2, 3, 4, 5):
        fv = f_vector(random_generic_metric(n, 80 + n))
        chi = sum((-1) ** (m - 1) * fv[m] for m in range(1, n + 1))
        if chi != 1 + (-1) ** (n - 1):
            bad.append((n, chi))
    record(8, not bad, f"alternating face sum equals 1+(-1)^(n-1) for n=2..5; failures={bad}", t0)


def test_criterion_09_rearrangement_inversions():
    t0 = time.perf_counter()
    bad, total = [], 0
    for n in (3, 4):
        ms = rearrangement_metric(n)
        for (x1, y1), (x2, y2) in itertools.combinations(_pairs(n + 1), 2):
            if len({x1, y1, x2, y2}) != 4:
                continue
            total += 1
            inversion = (x1 < x2 and y1 > y2) or (x2 < x1 and y2 > y1)
            if is_admissible(ms, {(x1, y1), (x2, y2)}) == inversion:
                bad.append((n, (x1, y1), (x2, y2)))
    record(9, not bad, f"two-edge graph admissible iff no inversion, rearrangement metric n=3,4 ({total} graphs); counterexamples={len(bad)}, first={bad[:2]}", t0)


def _random_strict_triangle(rng):
    while True:
        a, b, c = (Q(rng.randint(1, 400), rng.randint(1, 40)) for _ in range(3))
        if a < b + c and b < a + c and c < a + b:
            return validate_metric([[0, a, b], [a, 0, c], [b, c, 0]])


def test_criterion_10_classification():
    t0 = time.perf_counter()
    rng = random.Random(10)
    triangles = [_random_strict_triangle(rng) for _ in range(20)]
    single = count_classes(triangles).count == 1
    fam = list(sign_family(binary_f(4)))
    structures = [combinatorial_structure(ms) for _, ms in fam]
    checked = violations = 0
    for (i, (si, _)), (j, (sj, _)) in itertools.product(enumerate(fam), repeat=2):
        if has_disjoint_four_cycle(4, sign_difference(si, sj)):
            checked += 1
            violations += structures[i] == structures[j]
    metrics = [ms for _, ms in fam]
    runs = {count_classes(metrics).count, count_classes(metrics).count, count_classes(metrics, jobs=2).count, count_classes(metrics[::-1]).count}
    ok = single and violations == 0 and checked > 0 and len(runs) == 1
    record(10, ok, f"3-point single class={single}; 4-cycle pairs inequivalent {checked - violations}/{checked}; class count over 64 sign metrics {sorted(runs)}", t0)


def test_criterion_11_product_triangulation():
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 6):
        ms = random_generic_metric(n, 90 + n)
        for k in range(1, n + 1):
            for plus in itertools.combinations(ms.points, k):
                if len(product_triangulation(ms, plus)) != math.comb(n - 1, k - 1):
                    bad.append((n, plus))
    cross = [(1, 3), (1, 4), (2, 3), (2, 4)]
    seen = {frozenset(product_triangulation(ms, {1, 2})) for _, ms in sign_family(binary_f(4), cross)}
    record(11, not bad and len(seen) == 2, f"C(n-1,k-1) cells for every bipartition n<=5; square triangulations realized={len(seen)}/2", t0)
