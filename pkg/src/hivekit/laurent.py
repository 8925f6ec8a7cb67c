"""
Exact Laurent polynomials over Q and square matrices of them.

The valuation of the zero polynomial is ``None`` (standing for +infinity);
:func:`vmin` and :func:`vadd` handle it so it never meets an integer
comparison by accident.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, TypeVar

T = TypeVar("T")


def vmin(*vals: int | None) -> int | None:
    """Minimum where ``None`` is +infinity."""
    finite = [v for v in vals if v is not None]
    return min(finite) if finite else None


def vadd(a: int | None, b: int | None) -> int | None:
    return None if a is None or b is None else a + b


@dataclass(frozen=True)
class LaurentPoly:
    """``sum c_e t^e`` stored as sorted ``(e, c)`` pairs with every ``c != 0``."""
    terms: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def from_dict(cls, d: Mapping[int, Fraction | int]) -> "LaurentPoly":
        return cls(tuple(sorted((int(e), Fraction(c)) for e, c in d.items() if c != 0)))

    @classmethod
    def const(cls, c: Fraction | int) -> "LaurentPoly":
        return cls.from_dict({0: c})

    @classmethod
    def monomial(cls, e: int, c: Fraction | int = 1) -> "LaurentPoly":
        return cls.from_dict({e: c})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def valuation(self) -> int | None:
        return self.terms[0][0] if self.terms else None

    def coeff(self, e: int) -> Fraction:
        return dict(self.terms).get(e, Fraction(0))

    def __add__(self, other: "LaurentPoly | int | Fraction") -> "LaurentPoly":
        other = _lift(other)
        d = dict(self.terms)
        for e, c in other.terms:
            d[e] = d.get(e, 0) + c
        return LaurentPoly.from_dict(d)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LaurentPoly | int | Fraction") -> "LaurentPoly":
        return self + (-_lift(other))

    def __rsub__(self, other: "LaurentPoly | int | Fraction") -> "LaurentPoly":
        return _lift(other) - self

    def __mul__(self, other: "LaurentPoly | int | Fraction") -> "LaurentPoly":
        other = _lift(other)
        d: dict[int, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                d[e1 + e2] = d.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_dict(d)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*t^{e}" for e, c in self.terms)

    def to_json(self) -> list[list[int]]:
        return [[e, c.numerator, c.denominator] for e, c in self.terms]

    @classmethod
    def from_json(cls, data: Iterable[Sequence[int]]) -> "LaurentPoly":
        d: dict[int, Fraction] = {}
        for e, num, den in data:
            d[int(e)] = d.get(int(e), 0) + Fraction(int(num), int(den))
        return cls.from_dict(d)


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)


def _lift(x: "LaurentPoly | int | Fraction") -> LaurentPoly:
    return x if isinstance(x, LaurentPoly) else LaurentPoly.const(x)


def valuation(p: LaurentPoly) -> int | None:
    return p.valuation()


# ---------------------------------------------------------------------------
# determinants, generic over any commutative ring with + - *


def perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det(rows: Sequence[Sequence[T]], zero: T, one: T) -> T:
    """Permutation-sum determinant; exact and division free."""
    n = len(rows)
    total = zero
    for perm in itertools.permutations(range(n)):
        term = one
        for r in range(n):
            term = term * rows[r][perm[r]]
        total = total + term if perm_sign(perm) > 0 else total - term
    return total


def minor(rows: Sequence[Sequence[T]], row_idx: Sequence[int], col_idx: Sequence[int],
          zero: T, one: T) -> T:
    """``det rows[row_idx, col_idx]`` with 1-based index sets; the empty minor is ``one``."""
    return det([[rows[r - 1][c - 1] for c in col_idx] for r in row_idx], zero, one)


@dataclass(frozen=True)
class LaurentMatrix:
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __post_init__(self) -> None:
        if any(len(r) != len(self.entries) for r in self.entries):
            raise ValueError("matrix must be square")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, rc: tuple[int, int]) -> LaurentPoly:
        return self.entries[rc[0]][rc[1]]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable["LaurentPoly | int | Fraction"]]) -> "LaurentMatrix":
        return cls(tuple(tuple(_lift(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "LaurentMatrix":
        return cls.from_rows([[1 if r == c else 0 for c in range(n)] for r in range(n)])

    @classmethod
    def diag_t(cls, exps: Sequence[int]) -> "LaurentMatrix":
        """``t^mu``: the diagonal matrix with entries ``t^{mu_i}``."""
        n = len(exps)
        return cls(tuple(tuple(LaurentPoly.monomial(exps[r]) if r == c else ZERO for c in range(n))
                         for r in range(n)))

    def __mul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if self.n != other.n:
            raise ValueError("size mismatch")
        n = self.n
        out = []
        for r in range(n):
            row = []
            for c in range(n):
                acc = ZERO
                for m in range(n):
                    acc = acc + self.entries[r][m] * other.entries[m][c]
                row.append(acc)
            out.append(tuple(row))
        return LaurentMatrix(tuple(out))

    def det(self) -> LaurentPoly:
        return det(self.entries, ZERO, ONE)

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> LaurentPoly:
        return minor(self.entries, rows, cols, ZERO, ONE)

    def require_invertible(self) -> None:
        if self.det().is_zero:
            raise ValueError("matrix is singular")

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [[p.to_json() for p in row] for row in self.entries]}

    @classmethod
    def from_json(cls, data: Mapping) -> "LaurentMatrix":
        m = cls(tuple(tuple(LaurentPoly.from_json(p) for p in row) for row in data["entries"]))
        if m.n != int(data["n"]):
            raise ValueError("declared n does not match the entries")
        return m

    def dumps(self) -> str:
        return json.dumps(self.to_json())


# ---------------------------------------------------------------------------
# random elements (explicit rng everywhere)


def random_laurent(rng: random.Random, exps: tuple[int, int] = (-1, 2),
                   coeffs: tuple[int, int] = (-9, 9)) -> LaurentPoly:
    return LaurentPoly.from_dict({e: rng.randint(*coeffs) for e in range(exps[0], exps[1] + 1)})


def random_laurent_matrix(n: int, rng: random.Random, exps: tuple[int, int] = (-1, 2),
                          coeffs: tuple[int, int] = (-9, 9)) -> LaurentMatrix:
    """Entries with every exponent in ``exps`` and uniform integer coefficients; redrawn until invertible."""
    while True:
        g = LaurentMatrix(tuple(tuple(random_laurent(rng, exps, coeffs) for _ in range(n))
                                for _ in range(n)))
        if not g.det().is_zero:
            return g


def random_rational_matrix(n: int, rng: random.Random, bound: int = 9) -> list[list[Fraction]]:
    """An invertible matrix with entries ``p/q``, ``|p| <= bound``, ``1 <= q <= bound``."""
    while True:
        a = [[Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(n)]
             for _ in range(n)]
        if det(a, Fraction(0), Fraction(1)) != 0:
            return a


def random_integral(n: int, rng: random.Random, degree: int = 2, bound: int = 5) -> LaurentMatrix:
    """An element of ``GL_n(O)``: ``u_0 + t u_1 + ... `` with ``u_0`` invertible over Q."""
    while True:
        u0 = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if det(u0, 0, 1) != 0:
            break
    rows = []
    for r in range(n):
        row = []
        for c in range(n):
            d = {0: u0[r][c]}
            for e in range(1, degree + 1):
                d[e] = rng.randint(-bound, bound)
            row.append(LaurentPoly.from_dict(d))
        rows.append(tuple(row))
    return LaurentMatrix(tuple(rows))

