"""Hypothesis strategies shared by the test modules."""

from __future__ import annotations

from hypothesis import strategies as st


def coweights(n: int, lo: int = 0, hi: int = 3):
    return st.lists(st.integers(lo, hi), min_size=n, max_size=n).map(
        lambda xs: tuple(sorted(xs, reverse=True)))


@st.composite
def consistent_triples(draw, n_max: int = 3, hi: int = 3):
    """(lam, mu, nu) with |lam| + |mu| = |nu|; nu is drawn and then adjusted."""
    n = draw(st.integers(1, n_max))
    lam = draw(coweights(n, 0, hi))
    mu = draw(coweights(n, 0, hi))
    nu = list(draw(coweights(n, 0, hi)))
    diff = sum(lam) + sum(mu) - sum(nu)
    i = 0
    while diff:
        step = 1 if diff > 0 else -1
        nu[i % n] += step
        diff -= step
        i += 1
    return lam, mu, tuple(sorted(nu, reverse=True))
