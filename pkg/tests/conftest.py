"""Shared per-algebra context, built lazily and cached for the session.

Most tests need the same parsed fixtures and (expensive) bar-side
complexes; FixtureContext memoizes them keyed by construction window so
the suite builds each object once.
"""

import pytest

from orehom.bar import BarComplex, BarResolution, InducedComparison
from orehom.small_complex import build_cs
from orehom.spec_io import build_example, parse_spec


class FixtureContext:
    def __init__(self, name):
        self.name = name
        self.parsed = parse_spec(build_example(name))
        self.mono = self.parsed.mono
        self.M = self.parsed.bimodule
        self._cs = {}
        self._bar = {}
        self._barres = {}
        self._cmp = {}

    def cs(self, max_degree):
        key = max_degree
        for k, v in self._cs.items():
            if k >= key:
                return v
        self._cs[key] = build_cs(self.mono, self.M, key)
        return self._cs[key]

    def bar(self, max_r):
        for k, v in self._bar.items():
            if k >= max_r:
                return v
        self._bar[max_r] = BarComplex(self.mono, self.M, max_r)
        return self._bar[max_r]

    def barres(self, max_r):
        for k, v in self._barres.items():
            if k >= max_r:
                return v
        self._barres[max_r] = BarResolution(self.mono, max_r)
        return self._barres[max_r]

    def comparison(self, max_r):
        for k, v in self._cmp.items():
            if k >= max_r:
                return v
        cmp_ = InducedComparison(
            self.mono, self.M, self.bar(max_r), self.cs(max_r).spaces,
            resolution=self.barres(max_r),
        )
        self._cmp[max_r] = cmp_
        return self._cmp[max_r]


_CONTEXTS = {}


def get_context(name):
    ctx = _CONTEXTS.get(name)
    if ctx is None:
        ctx = _CONTEXTS[name] = FixtureContext(name)
    return ctx


@pytest.fixture
def ctx():
    return get_context


SHIPPED = ("trunc:3", "sweedler", "taft:3", "rank1:c4", "dihedral:3", "dihedral:4")
COLLAPSING = ("sweedler", "taft:3", "rank1:c4", "rank1nc:c2xc4")
