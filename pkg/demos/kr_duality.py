"""The Kantorovich-Rubinstein norm computed two ways.

The primal value is an optimal transport cost.  The dual value is the best
pairing against a vertex of the Lipschitz polytope.  Both are exact.

Run: python3 demos/kr_duality.py
"""

import random
from fractions import Fraction

from lipkr.faces import enumerate_facets
from lipkr.metric import random_generic_metric
from lipkr.norms import kr_norm, kr_norm_dual, lip_norm, measure


def main():
    ms = random_generic_metric(4, seed=7)
    facets = enumerate_facets(ms)
    rng = random.Random(1)
    for _ in range(5):
        vals = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in ms.points]
        vals[-1] -= sum(vals)
        mu = measure(ms, vals)
        primal = kr_norm(ms, mu)
        dual = kr_norm_dual(ms, mu, facets)
        best = max(facets, key=lambda f: mu.pair(f.witness.values))
        print(f"mu = ({', '.join(str(v) for v in vals)})")
        print(f"  transport {primal}   vertex pairing {dual}   equal: {primal == dual}")
        print(f"  maximizing vertex has Lipschitz norm {lip_norm(ms, best.witness.values)}")


if __name__ == "__main__":
    main()
