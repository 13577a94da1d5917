"""A generic metric triangulates the root polytope into unimodular simplices.

Run: python3 demos/root_polytope_triangulation.py
"""

from lipkr.metric import random_generic_metric
from lipkr.triangulate import (
    check_unimodular,
    format_simplex,
    interiors_disjoint,
    product_triangulation,
    regularity_certificate,
    triangulate_root_polytope,
)
from lipkr.faces import enumerate_facets


def main():
    ms = random_generic_metric(3, seed=11)
    t = triangulate_root_polytope(ms)
    report = check_unimodular(t)
    print(f"{report.count} simplices (expected {report.expected}), unimodular: {report.ok}")
    print("overlapping interiors:", interiors_disjoint(t) or "none")

    print("\nRegularity margins (least slack of the height function off the tree):")
    for f in enumerate_facets(ms):
        cert = regularity_certificate(ms, f)
        print(f"  {format_simplex(f.tree):<16} margin {cert.margin}")

    plus = {1, 2}
    print(f"\nInduced triangulation of the product facet with plus={sorted(plus)}:")
    for cell in product_triangulation(ms, plus):
        print("  " + format_simplex(cell))


if __name__ == "__main__":
    main()
