from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hivekit import weights as W
from oracles import in_hull_lp
from strategies import coweights


def test_dual_examples():
    assert W.dual((2, 1, 0)) == (0, -1, -2)
    assert W.dual((3, 2, 1)) == (-1, -2, -3)


@given(st.integers(1, 4).flatmap(lambda n: coweights(n, -3, 3)))
def test_dual_is_involution_and_preserves_dominance(lam):
    assert W.dual(W.dual(lam)) == lam
    assert W.is_dominant(W.dual(lam))


def test_require_dominant_rejects_increase():
    with pytest.raises(ValueError):
        W.require_dominant((1, 0, 2))


def test_dominant_coweights_count():
    # weakly decreasing 3-tuples with entries in [0, 3]: C(6, 3) = 20
    assert len(W.dominant_coweights(3, 0, 3)) == 20
    assert all(W.is_dominant(w) for w in W.dominant_coweights(2, -2, 2))


def test_subsets_and_intervals():
    assert W.elements_of(W.mask_of((1, 3))) == (1, 3)
    assert W.interval(2, 3) == W.mask_of((2, 3))
    assert W.interval(3, 2) == 0
    assert len(W.chamber_weights(3)) == 6


def test_pairing_rejects_trivial_subsets():
    assert W.pairing((5, 2, 1), (1, 3)) == 6
    with pytest.raises(ValueError):
        W.pairing((5, 2, 1), ())
    with pytest.raises(ValueError):
        W.pairing((5, 2, 1), (1, 2, 3))


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.lists(st.integers(-3, 3), min_size=n, max_size=n), coweights(n, -3, 3))))
def test_majorization_matches_lp(pair):
    x, lam = pair
    assert W.in_weyl_polytope(x, lam) == in_hull_lp(x, lam)


@pytest.mark.parametrize("n, count", [(2, 1), (3, 2), (4, 16)])
def test_braid_moves_connect_reduced_words(n, count):
    words = W.reduced_words_by_moves(W.standard_word(n))
    assert len(words) == count
    assert all(W.word_product(w, n) == W.longest(n) for w in words)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_every_reduced_word_is_reachable(n):
    # exhaustive: all words of length l(w0) that are reduced for w0
    L = n * (n - 1) // 2
    direct = {w for w in itertools.product(range(1, n), repeat=L)
              if W.is_reduced(w, n) and W.word_product(w, n) == W.longest(n)}
    assert direct == W.reduced_words_by_moves(W.standard_word(n))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_chamber_weights_of_each_word_are_distinct(n):
    for word in W.reduced_words_by_moves(W.standard_word(n)):
        cw = W.word_chamber_set(word, n)
        assert len(cw) == n * (n - 1) // 2 + n - 1


def test_standard_word_chambers_are_intervals():
    n = 4
    intervals = {W.interval(a, b) for a in range(1, n + 1) for b in range(a, n + 1)} - {W.full_mask(n)}
    assert set(W.word_chamber_set(W.standard_word(n), n)) == intervals


def test_chamber_weights_rejects_nonreduced():
    with pytest.raises(ValueError):
        W.chamber_weights_of_word((1, 1), 2)


@given(st.permutations([1, 2, 3, 4]), st.integers(1, 3))
def test_times_s_swaps_and_ascent(w, i):
    w = tuple(w)
    ws = W.times_s(w, i)
    assert ws[i - 1] == w[i] and ws[i] == w[i - 1]
    assert W.length(ws) == W.length(w) + (1 if W.ascends(w, i) else -1)
    assert W.chamber(w, i) == W.mask_of(w[:i])


def test_subset_order():
    assert W.subset_ge(W.mask_of((1,)), W.mask_of((2,)))
    assert not W.subset_ge(W.mask_of((2,)), W.mask_of((1,)))
    assert W.subset_ge(W.mask_of((1, 3)), W.mask_of((2, 3)))
