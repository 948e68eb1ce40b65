"""Compare the compiled and pure-Python linear algebra kernels.

Times reduced row echelon form and matrix products over Q and Q(zeta_4)
on dense random matrices, plus one end-to-end homology workload.  Run:

    python benchmarks/bench_kernels.py [--quick]

The compiled kernels do the same object arithmetic (exact Fractions and
cyclotomic residues); the win is the compiled index loops, so expect a
modest constant factor, not an asymptotic change.
"""

import argparse
import random
import time
from fractions import Fraction

from orehom import _kernels_py
from orehom.fields import make_field
from orehom.linalg import pivot_score

try:
    from orehom import _kernels as _compiled
except ImportError:
    _compiled = None


def random_matrix(rng, n, m, field):
    if field.kind == "rationals":
        draw = lambda: Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    else:
        draw = lambda: field.scalar([Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-5, 5))])
    return [[draw() for _ in range(m)] for _ in range(n)]


def time_call(fn, repeats=3):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def bench_kernels(impl, rows, field, what):
    if what == "rref":
        return time_call(lambda: impl.rref_in_place([list(r) for r in rows], len(rows[0]), pivot_score))
    if what == "matmul":
        return time_call(lambda: impl.matmul(rows, rows, field.zero))
    raise ValueError(what)


def bench_homology():
    """End-to-end: oracle homology of one fixture under the active kernels."""
    from orehom.complexes import homology_dims
    from orehom.spec_io import build_example, parse_spec
    from orehom.bar import bar_complex

    parsed = parse_spec(build_example("taft:3"))
    t0 = time.perf_counter()
    dims = homology_dims(bar_complex(parsed.mono, parsed.bimodule, 6), 5)
    return time.perf_counter() - t0, dims


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()
    rng = random.Random(2024)
    if _compiled is None:
        print("compiled kernels not available; showing pure-Python times only")
    sizes = (30, 60) if args.quick else (30, 60, 100)
    print(f"{'workload':34s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for field_name, field in (("Q", make_field("rationals")), ("Q(z4)", make_field("cyclotomic", 4))):
        for n in sizes:
            rows = random_matrix(rng, n, n, field)
            for what in ("rref", "matmul"):
                tp = bench_kernels(_kernels_py, rows, field, what)
                label = f"{what} {n}x{n} over {field_name}"
                if _compiled is not None:
                    tc = bench_kernels(_compiled, rows, field, what)
                    print(f"{label:34s} {tp:9.4f}s {tc:9.4f}s {tp / tc:7.2f}x")
                else:
                    print(f"{label:34s} {tp:9.4f}s {'-':>10s} {'-':>8s}")
    t, dims = bench_homology()
    from orehom.kernels import IMPLEMENTATION

    print(f"\noracle homology taft:3 levels 0..5 -> {dims} in {t:.2f}s "
          f"(active kernels: {IMPLEMENTATION}; set OREHOM_PURE_PYTHON=1 to compare)")


if __name__ == "__main__":
    main()
