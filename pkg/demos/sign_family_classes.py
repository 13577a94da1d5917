"""Classifying the 64 sign-family metrics on four points.

Each metric is rho(x, y) = 3 + s(x, y) f(x, y) for a sign choice s on the
six pairs, with f taking distinct powers of two.  Metrics are equivalent when they
share all facet trees.

Run: python3 demos/sign_family_classes.py
"""

import itertools

from lipkr.classify import combinatorial_structure, count_classes, has_disjoint_four_cycle, sign_difference
from lipkr.metric import binary_f, sign_family


def main():
    fam = list(sign_family(binary_f(4)))
    metrics = [ms for _, ms in fam]
    result = count_classes(metrics)
    print(f"{len(metrics)} metrics fall into {result.count} classes")
    for row in result.report():
        print(f"  representative #{row['representative']:>2}  size {row['size']:>2}  hash {row['structure_hash']}")

    structures = [combinatorial_structure(ms) for ms in metrics]
    pairs = [
        (i, j)
        for (i, (si, _)), (j, (sj, _)) in itertools.combinations(enumerate(fam), 2)
        if has_disjoint_four_cycle(4, sign_difference(si, sj))
    ]
    split = sum(structures[i] != structures[j] for i, j in pairs)
    print(f"\npairs whose sign difference contains a 4-cycle: {len(pairs)}, all inequivalent: {split == len(pairs)}")


if __name__ == "__main__":
    main()
