"""Compare the compiled and pure-Python polynomial kernels.

    python benchmarks/bench_kernels.py [--repeat N] [--quick]

Each workload is timed under every available backend, with the kernel functions swapped in
place; the best of N runs is reported.
"""

import argparse
import contextlib
import os
import random
import sys
import time

from friezegrowth import _pykernels, kernels
from friezegrowth.arith import LaurentPolynomial
from friezegrowth.cluster import bfs_find, growth_coefficient, tube_frieze

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "tests"))
from f4_data import B, MOUTH_VARIABLES, RANK2_MOUTH, RANK3_MOUTH  # noqa: E402

FUNCS = ("poly_add", "poly_sub", "poly_mul", "poly_scale", "min_exponents", "poly_divexact")


@contextlib.contextmanager
def using(mod):
    saved = {name: getattr(kernels, name) for name in FUNCS}
    for name in FUNCS:
        setattr(kernels, name, getattr(mod, name))
    try:
        yield
    finally:
        for name, fn in saved.items():
            setattr(kernels, name, fn)


def random_poly(rng, nvars, nterms, span=4):
    return LaurentPolynomial(nvars, {
        tuple(rng.randint(-span, span) for _ in range(nvars)): rng.randint(-99, 99) or 1
        for _ in range(nterms)
    })


def workloads(quick):
    rng = random.Random(1)
    a = random_poly(rng, 5, 60 if quick else 150)
    b = random_poly(rng, 5, 40 if quick else 100)
    prod = a * b
    mouths = [[MOUTH_VARIABLES[m] for m in mouth] for mouth in (RANK2_MOUTH, RANK3_MOUTH)]
    level = 2 if quick else 3

    def multiply():
        return a * b

    def divide():
        return prod.exact_div(b)

    def search():
        return bfs_find(B, MOUTH_VARIABLES, 5)

    def tube_levels():
        return growth_coefficient(tube_frieze(mouths[1]), level, declared_period=True)

    return [
        (f"multiply {len(a)}x{len(b)} terms", multiply),
        (f"exact divide {len(prod)}/{len(b)} terms", divide),
        ("F4 exchange-graph search, depth 5", search),
        (f"rank-3 F4 tube frieze, s_{level}", tube_levels),
    ]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--quick", action="store_true", help="smaller inputs")
    args = p.parse_args(argv)

    try:
        from friezegrowth import _ckernels
    except ImportError:
        _ckernels = None
        print("compiled kernels not built; timing the pure-Python backend only")
    backends = [_pykernels] + ([_ckernels] if _ckernels else [])

    print(f"{'workload':42} " + " ".join(f"{m.BACKEND:>10}" for m in backends) + "   speedup")
    for name, fn in workloads(args.quick):
        results, times = [], []
        for mod in backends:
            with using(mod):
                results.append(fn())
                times.append(best_of(fn, args.repeat))
        if isinstance(results[0], LaurentPolynomial) and any(r != results[0] for r in results):
            raise SystemExit(f"backends disagree on {name}")
        cols = " ".join(f"{t:9.4f}s" for t in times)
        speedup = f"{times[0] / times[-1]:8.1f}x" if len(times) > 1 else ""
        print(f"{name:42} {cols} {speedup}")


if __name__ == "__main__":
    main()
