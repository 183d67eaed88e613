"""Compare the compiled and pure-numpy dependency scanners.

Runs first_dependency over incidence matrices of generated complexes and
over random bit matrices, timing both backends on identical inputs and
checking that they return identical results.

Usage: python3 benchmarks/bench_gf2.py [--repeat N]
"""

import argparse
import time

import numpy as np

from circlet import gf2, incidence_matrix
from circlet.families import hypercube_skeleton, simplex_skeleton


def random_packed(rng, n_rows, n_cols, density):
    cols = []
    for _ in range(n_cols):
        mask = rng.random(n_rows) < density
        cols.append(list(np.nonzero(mask)[0]))
    return gf2.pack_from_indices(cols, n_rows=n_rows)


def cases():
    yield "simplex_skeleton(12, 3)", incidence_matrix(
        simplex_skeleton(12, 3)
    ).packed
    yield "simplex_skeleton(14, 3)", incidence_matrix(
        simplex_skeleton(14, 3)
    ).packed
    yield "hypercube_skeleton(7, 3)", incidence_matrix(
        hypercube_skeleton(7, 3)
    ).packed
    rng = np.random.default_rng(99)
    yield "random 2000x600 d=0.05", random_packed(rng, 2000, 600, 0.05)
    yield "random 4000x1200 d=0.01", random_packed(rng, 4000, 1200, 0.01)


def bench(fn, packed, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(np.array(packed))
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    if gf2.HAS_NUMBA:
        gf2.warm_up()
    else:
        print("numba unavailable; only the numpy path will run")

    header = f"{'case':<28} {'cols x words':>14} {'numpy':>10}"
    if gf2.HAS_NUMBA:
        header += f" {'numba':>10} {'speedup':>8}"
    print(header)
    for name, packed in cases():
        shape = f"{packed.shape[0]} x {packed.shape[1]}"
        t_np, res_np = bench(gf2.first_dependency_numpy, packed, args.repeat)
        line = f"{name:<28} {shape:>14} {t_np * 1e3:>8.2f}ms"
        if gf2.HAS_NUMBA:
            t_nb, res_nb = bench(
                gf2.first_dependency_numba, packed, args.repeat
            )
            assert res_np[0] == res_nb[0]
            assert np.array_equal(res_np[1], res_nb[1])
            line += f" {t_nb * 1e3:>8.2f}ms {t_np / t_nb:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
