from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hivekit.propagate import INF, Problem, UnboundedSearch, satisfied, solutions


@st.composite
def problems(draw):
    nv = draw(st.integers(2, 5))
    lo = [draw(st.integers(-3, 0)) for _ in range(nv)]
    hi = [lo[i] + draw(st.integers(0, 4)) for i in range(nv)]
    p = Problem(nv, list(lo), list(hi))
    var = st.integers(0, nv - 1)
    for _ in range(draw(st.integers(0, 4))):
        pos = draw(st.lists(var, min_size=1, max_size=2, unique=True))
        neg = draw(st.lists(var, min_size=1, max_size=2, unique=True))
        p.add_le(pos, neg)
    for _ in range(draw(st.integers(0, 2))):
        a, b, c = (tuple(draw(st.lists(var, min_size=2, max_size=2))) for _ in range(3))
        p.add_min_eq(a, b, c)
    return p


@given(problems())
def test_solutions_match_exhaustive_search(p):
    box = itertools.product(*(range(int(a), int(b) + 1) for a, b in zip(p.lo, p.hi)))
    expected = sorted(v for v in box if satisfied(p, v))
    assert sorted(solutions(p)) == expected


def test_bounds_derived_by_propagation():
    # x0 fixed to 2; x1 <= x0 and x1 >= x0 - 1 via min-equality with a fixed branch
    p = Problem(3, [2, -INF, 5], [2, INF, 5])
    p.add_le([1], [0])
    p.add_le([0], [1, 2])  # x0 <= x1 + x2  ->  x1 >= -3
    assert sorted(solutions(p)) == [(2, v, 5) for v in range(-3, 3)]


def test_unbounded_variable_raises():
    p = Problem(2, [0, -INF], [0, INF])
    p.add_le([1], [0])
    with pytest.raises(UnboundedSearch):
        list(solutions(p))


def test_infeasible():
    p = Problem(2, [0, 0], [1, 1])
    p.add_le([0, 1], [])
    p.add_le([], [0])
    assert list(solutions(p)) == [(0, 0)]
    p.add_le([], [0, 1])
    p.lo[0] = 1
    assert list(solutions(p)) == []
