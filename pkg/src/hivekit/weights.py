"""
Coweights of GL_n, chamber weights as subsets, and the symmetric-group
machinery (permutations in one-line notation, reduced words, braid moves).

Conventions used throughout the package:

* A coweight is a tuple of ``n`` integers; it is dominant when weakly
  decreasing. Negative entries are allowed.
* A subset of ``{1..n}`` is stored as a bitmask, bit ``a-1`` standing for the
  element ``a``. The chamber weight ``w.Lambda_i`` is the subset
  ``{w(1), ..., w(i)}``.
* A permutation ``w`` is a tuple ``(w(1), ..., w(n))`` of 1-based values.
  Right multiplication by ``s_i`` swaps the entries in positions ``i, i+1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

Coweight = tuple[int, ...]
Perm = tuple[int, ...]
Word = tuple[int, ...]


# ---------------------------------------------------------------------------
# coweights


def as_coweight(values: Iterable[int]) -> Coweight:
    out = tuple(int(v) for v in values)
    if not out:
        raise ValueError("a coweight needs at least one entry")
    return out


def is_dominant(lam: Sequence[int]) -> bool:
    return all(lam[r] >= lam[r + 1] for r in range(len(lam) - 1))


def require_dominant(lam: Sequence[int], name: str = "coweight") -> Coweight:
    lam = as_coweight(lam)
    if not is_dominant(lam):
        raise ValueError(f"{name} {lam} is not weakly decreasing")
    return lam


def dual(lam: Sequence[int]) -> Coweight:
    """``-w_0 . lam = (-lam_n, ..., -lam_1)``."""
    return tuple(-v for v in reversed(lam))


def dominant_coweights(n: int, lo: int, hi: int) -> list[Coweight]:
    """All weakly decreasing n-tuples with entries in ``[lo, hi]``."""
    out = [tuple(sorted(c, reverse=True))
           for c in itertools.combinations_with_replacement(range(lo, hi + 1), n)]
    return sorted(out)


def dominant_with_sum(n: int, total: int, top: int, bottom: int) -> list[Coweight]:
    """Weakly decreasing n-tuples with entries in ``[bottom, top]`` summing to ``total``."""
    out: list[Coweight] = []

    def rec(prefix: list[int], remaining: int, cap: int) -> None:
        left = n - len(prefix)
        if left == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        for v in range(min(cap, remaining - bottom * (left - 1)), bottom - 1, -1):
            if v * left < remaining:
                break
            prefix.append(v)
            rec(prefix, remaining - v, v)
            prefix.pop()

    rec([], total, top)
    return sorted(out)


# ---------------------------------------------------------------------------
# subsets / chamber weights


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for a in elements:
        m |= 1 << (a - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    a = 1
    while mask:
        if mask & 1:
            out.append(a)
        mask >>= 1
        a += 1
    return tuple(out)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def interval(a: int, b: int) -> int:
    """The subset ``{a, ..., b}`` (empty when ``b < a``)."""
    if b < a:
        return 0
    return ((1 << b) - 1) ^ ((1 << (a - 1)) - 1)


@lru_cache(maxsize=None)
def canonical_subsets(n: int) -> tuple[int, ...]:
    """All subsets of ``{1..n}``, ordered by size and then lexicographically."""
    return tuple(mask_of(c) for r in range(n + 1)
                 for c in itertools.combinations(range(1, n + 1), r))


def chamber_weights(n: int) -> tuple[int, ...]:
    """The proper nonempty subsets, i.e. the chamber weights Gamma of GL_n."""
    return tuple(m for m in canonical_subsets(n) if 0 < m < full_mask(n))


def _check_chamber(n: int, gamma: int) -> None:
    if not 0 < gamma < full_mask(n):
        raise ValueError(f"{elements_of(gamma)} is not a proper nonempty subset of 1..{n}")


def pairing(mu: Sequence[int], gamma: int | Iterable[int]) -> int:
    """``<mu, gamma>``: the sum of the coordinates of ``mu`` indexed by ``gamma``."""
    if not isinstance(gamma, int):
        gamma = mask_of(gamma)
    n = len(mu)
    if gamma >> n:
        raise ValueError(f"subset {elements_of(gamma)} does not fit in 1..{n}")
    _check_chamber(n, gamma)
    return coordinate_sum(mu, gamma)


def coordinate_sum(mu: Sequence[int], mask: int) -> int:
    """Like :func:`pairing` but also accepts the empty and the full subset."""
    return sum(mu[a - 1] for a in elements_of(mask))


def subset_ge(gamma: int, delta: int) -> bool:
    """``gamma >= delta``: gamma - delta is a sum of positive roots ``e_a - e_b`` (a < b)."""
    if gamma.bit_count() != delta.bit_count():
        raise ValueError("subset_ge compares subsets of equal size")
    a = elements_of(gamma & ~delta)
    b = elements_of(delta & ~gamma)
    return all(x < y for x, y in zip(a, b))


def in_weyl_polytope(x: Sequence[int], lam: Sequence[int]) -> bool:
    """Membership of ``x`` in ``conv(W . lam)``, decided by majorization."""
    if len(x) != len(lam):
        raise ValueError("dimension mismatch")
    if sum(x) != sum(lam):
        return False
    xs = sorted(x, reverse=True)
    ls = sorted(lam, reverse=True)
    px = pl = 0
    for a, b in zip(xs, ls):
        px += a
        pl += b
        if px > pl:
            return False
    return True


# ---------------------------------------------------------------------------
# permutations and words


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def times_s(w: Perm, i: int) -> Perm:
    """``w s_i``."""
    lst = list(w)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def length(w: Perm) -> int:
    return sum(1 for a, b in itertools.combinations(w, 2) if a > b)


def ascends(w: Perm, i: int) -> bool:
    """``l(w s_i) > l(w)``."""
    return w[i - 1] < w[i]


def chamber(w: Perm, i: int) -> int:
    """The subset ``w . Lambda_i = {w(1), ..., w(i)}``."""
    return mask_of(w[:i])


@lru_cache(maxsize=None)
def permutations(n: int) -> tuple[Perm, ...]:
    return tuple(itertools.permutations(range(1, n + 1)))


def word_product(word: Sequence[int], n: int) -> Perm:
    w = identity(n)
    for i in word:
        if not 1 <= i < n:
            raise ValueError(f"letter {i} is not a simple reflection of S_{n}")
        w = times_s(w, i)
    return w


def is_reduced(word: Sequence[int], n: int) -> bool:
    return length(word_product(word, n)) == len(word)


def _require_reduced(word: Sequence[int], n: int) -> None:
    if not is_reduced(word, n):
        raise ValueError(f"word {tuple(word)} is not reduced in S_{n}")


def standard_word(n: int) -> Word:
    """The reduced word ``1..n-1 1..n-2 ... 1`` for the longest element."""
    return tuple(i for top in range(n - 1, 0, -1) for i in range(1, top + 1))


def chamber_weights_of_word(word: Sequence[int], n: int) -> list[int]:
    """For each prefix ``w_k`` of the word, the subset ``w_k . Lambda_{i_k}``."""
    _require_reduced(word, n)
    out = []
    w = identity(n)
    for i in word:
        w = times_s(w, i)
        out.append(chamber(w, i))
    return out


def word_chamber_set(word: Sequence[int], n: int) -> frozenset[int]:
    """All chamber weights attached to a reduced word, including ``Lambda_1..Lambda_{n-1}``."""
    base = {chamber(identity(n), i) for i in range(1, n)}
    return frozenset(base.union(chamber_weights_of_word(word, n)))


@dataclass(frozen=True)
class BraidMove:
    kind: int      # 2 (commutation) or 3 (braid relation)
    position: int  # 1-based position of the first letter touched


def braid_neighbors(word: Sequence[int]) -> list[tuple[Word, BraidMove]]:
    """All words one commutation or one braid relation away from ``word``."""
    word = tuple(word)
    out: list[tuple[Word, BraidMove]] = []
    for p in range(len(word) - 1):
        a, b = word[p], word[p + 1]
        if abs(a - b) >= 2:
            out.append((word[:p] + (b, a) + word[p + 2:], BraidMove(2, p + 1)))
        if p + 2 < len(word) and abs(a - b) == 1 and word[p + 2] == a:
            out.append((word[:p] + (b, a, b) + word[p + 3:], BraidMove(3, p + 1)))
    return out


def reduced_words_by_moves(word: Sequence[int]) -> set[Word]:
    """Closure of ``word`` under braid moves."""
    start = tuple(word)
    seen = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        for nb, _ in braid_neighbors(cur):
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return seen
