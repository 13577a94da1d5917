"""Facets and the f-vector of KR(X) for a small rearrangement metric.

Run: python3 demos/facets_and_fvector.py
"""

from lipkr.faces import enumerate_facets, f_vector, faces_with_outdegrees, multinomial
from lipkr.metric import format_rational, rearrangement_metric
from lipkr.triangulate import format_simplex


def main():
    ms = rearrangement_metric(3)
    print("Metric rho(i, j) = 1 + i/j on four points")
    for row in ms.dist:
        print("  " + "  ".join(f"{format_rational(v):>4}" for v in row))

    facets = enumerate_facets(ms)
    print(f"\n{len(facets)} facets, one per outdegree sequence:")
    for f in facets:
        wit = ", ".join(format_rational(v) for v in f.witness.values)
        print(f"  p={f.outdeg}  tree {format_simplex(f.tree):<14} LIP vertex ({wit})")

    fv = f_vector(ms)
    print("\nf-vector (entry 0 is the polytope itself):", fv)
    print("closed formula                          :", tuple(multinomial(ms.n, m) for m in range(ms.n + 1)))

    p = (1, 1, 0, 0)
    print(f"\nFaces with outdegrees {p}:")
    for g in faces_with_outdegrees(ms, p):
        print("  " + format_simplex(g))


if __name__ == "__main__":
    main()
