"""Behavioural parity of the compiled and pure-Python kernels."""

import random
from fractions import Fraction as Fr

import pytest

from orehom import _kernels_py
from orehom.fields import make_field
from orehom.linalg import pivot_score

try:
    from orehom import _kernels as _compiled
except ImportError:
    _compiled = None

needs_compiled = pytest.mark.skipif(_compiled is None, reason="compiled kernels not built")


def random_rows(rng, nrows, ncols, field):
    if field.kind == "rationals":
        draw = lambda: Fr(rng.randint(-6, 6), rng.randint(1, 4))
    else:
        draw = lambda: field.scalar([Fr(rng.randint(-4, 4)), Fr(rng.randint(-4, 4))])
    return [[draw() for _ in range(ncols)] for _ in range(nrows)]


@needs_compiled
def test_rref_parity():
    rng = random.Random(7)
    for field in (make_field("rationals"), make_field("cyclotomic", 4)):
        for _ in range(25):
            nrows, ncols = rng.randint(1, 6), rng.randint(1, 6)
            rows = random_rows(rng, nrows, ncols, field)
            a = [list(r) for r in rows]
            b = [list(r) for r in rows]
            p1 = _kernels_py.rref_in_place(a, ncols, pivot_score)
            p2 = _compiled.rref_in_place(b, ncols, pivot_score)
            assert p1 == p2
            assert a == b


@needs_compiled
def test_matmul_parity():
    rng = random.Random(11)
    field = make_field("rationals")
    for _ in range(25):
        n, k, m = rng.randint(1, 5), rng.randint(1, 5), rng.randint(1, 5)
        a = random_rows(rng, n, k, field)
        b = random_rows(rng, k, m, field)
        assert _kernels_py.matmul(a, b, field.zero) == _compiled.matmul(a, b, field.zero)


@needs_compiled
def test_kernel_parity():
    rng = random.Random(13)
    field = make_field("rationals")
    for _ in range(25):
        nrows, ncols = rng.randint(1, 5), rng.randint(1, 6)
        rows = random_rows(rng, nrows, ncols, field)
        a = [list(r) for r in rows]
        b = [list(r) for r in rows]
        p1 = _kernels_py.rref_in_place(a, ncols, pivot_score)
        p2 = _compiled.rref_in_place(b, ncols, pivot_score)
        k1 = _kernels_py.kernel_from_rref(a, p1, ncols, field.zero, field.one)
        k2 = _compiled.kernel_from_rref(b, p2, ncols, field.zero, field.one)
        assert k1 == k2


def test_selected_implementation_reports_itself():
    from orehom import kernels

    assert kernels.IMPLEMENTATION in ("python", "cython")
