"""Time coefficient-space composition against the dense matrix route.

For each tensor order and support size, multiplies random coefficient
tensors two ways — directly with the structure constants, and by
reconstructing dense matrices, multiplying, and decomposing back — and
reports per-product wall time for both.  The two routes are also checked
against each other so a reported speed-up is never a silent wrong answer.
"""

import argparse
import itertools
import time

import numpy as np

from pauligl import (CoefficientTensor, coeff_distance, compose, decompose,
                     reconstruct)


def random_supported_tensor(rng, m, terms):
    all_indices = list(itertools.product(range(4), repeat=m))
    chosen = rng.choice(len(all_indices), size=terms, replace=False)
    coeffs = {all_indices[k]: complex(*rng.standard_normal(2))
              for k in chosen}
    return CoefficientTensor(m, coeffs, tol=0.0)


def time_per_pair(fn, pairs):
    start = time.perf_counter()
    for a, b in pairs:
        fn(a, b)
    return (time.perf_counter() - start) / len(pairs)


def run(orders, term_counts, n_pairs, seed):
    rng = np.random.default_rng(seed)
    print(f"{'m':>2} {'terms':>6} {'sparse ms':>10} {'dense ms':>10} "
          f"{'dense/sparse':>12}")
    for m in orders:
        for terms in term_counts:
            if terms > 4 ** m:
                continue
            pairs = [(random_supported_tensor(rng, m, terms),
                      random_supported_tensor(rng, m, terms))
                     for _ in range(n_pairs)]

            def dense_route(a, b):
                return decompose(reconstruct(a) @ reconstruct(b), tol=0.0)

            for a, b in pairs:
                gap = coeff_distance(compose(a, b, tol=0.0),
                                     dense_route(a, b))
                if gap > 1e-10:
                    raise AssertionError(
                        f"routes disagree by {gap:.3e} at m={m}")

            sparse_s = time_per_pair(lambda a, b: compose(a, b, tol=0.0),
                                     pairs)
            dense_s = time_per_pair(dense_route, pairs)
            print(f"{m:>2} {terms:>6} {sparse_s * 1e3:>10.3f} "
                  f"{dense_s * 1e3:>10.3f} {dense_s / sparse_s:>12.2f}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--orders", default="1,2,3,4",
                        help="comma-separated tensor orders to benchmark")
    parser.add_argument("--terms", default="2,4,16,64",
                        help="comma-separated support sizes per operand")
    parser.add_argument("--pairs", type=int, default=20,
                        help="random operand pairs per configuration")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    run([int(tok) for tok in args.orders.split(",")],
        [int(tok) for tok in args.terms.split(",")],
        args.pairs, args.seed)


if __name__ == "__main__":
    main()
