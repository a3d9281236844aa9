"""
Complete flags in F_p^n as canonical representatives of cosets x B_+.

Right multiplication by an upper-triangular matrix scales columns and adds
multiples of earlier columns to later ones, so a coset has a unique
representative in which every column has lowest nonzero entry 1 (its pivot)
and vanishes on the pivot rows of all earlier columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from ..coxeter import A, CoxElement
from ..errors import DimensionMismatch, SizeBound, Singular
from .linalg import Mat, rank_mod_p

__all__ = [
    "Flag", "flag_canonicalize", "enumerate_flags", "relative_position",
    "standard_flag", "flag_count", "FLAG_BUDGET",
]

FLAG_BUDGET = 2_000


@dataclass(frozen=True)
class Flag:
    cols: tuple[tuple[int, ...], ...]
    p: int

    @property
    def n(self) -> int:
        return len(self.cols)

    def matrix(self) -> Mat:
        return Mat.from_cols(self.cols, self.p)

    def translate(self, g: Mat) -> Flag:
        """The flag g F (the Borel g B g^-1 in coset language)."""
        return flag_canonicalize(g @ self.matrix())

    def pivots(self) -> tuple[int, ...]:
        return tuple(max(i for i, x in enumerate(c) if x) for c in self.cols)


def flag_canonicalize(m: Mat) -> Flag:
    p, n = m.p, m.n
    cols: list[list[int]] = []
    pivots: list[int] = []
    for j in range(n):
        v = list(m.col(j))
        for c, r in zip(cols, pivots):
            if v[r]:
                f = v[r]
                v = [(x - f * y) % p for x, y in zip(v, c)]
        nz = [i for i, x in enumerate(v) if x]
        if not nz:
            raise Singular("columns are linearly dependent")
        r = nz[-1]
        inv = pow(v[r], -1, p)
        cols.append([x * inv % p for x in v])
        pivots.append(r)
    return Flag(tuple(map(tuple, cols)), p)


def standard_flag(n: int, p: int) -> Flag:
    return flag_canonicalize(Mat.identity(n, p))


def flag_count(n: int, q: int) -> int:
    out = 1
    for k in range(1, n + 1):
        out *= sum(q ** i for i in range(k))
    return out


@lru_cache(maxsize=None)
def _enumerate(n: int, p: int) -> tuple[Flag, ...]:
    flags = []
    for piv in permutations(range(n)):
        # free slots of column j: rows above its pivot that are not earlier pivots
        slots = [[i for i in range(piv[j]) if i not in piv[:j]] for j in range(n)]
        flat = [(j, i) for j in range(n) for i in slots[j]]
        for vals in product(range(p), repeat=len(flat)):
            cols = [[0] * n for _ in range(n)]
            for j in range(n):
                cols[j][piv[j]] = 1
            for (j, i), x in zip(flat, vals):
                cols[j][i] = x
            flags.append(Flag(tuple(map(tuple, cols)), p))
    return tuple(flags)


def enumerate_flags(n: int, p: int, budget: int = FLAG_BUDGET) -> list[Flag]:
    if flag_count(n, p) > budget:
        raise SizeBound(f"{flag_count(n, p)} flags exceeds budget {budget}")
    return list(_enumerate(n, p))


def relative_position(f1: Flag, f2: Flag) -> CoxElement:
    """
    The permutation w with f2 in position w relative to f1.

    Uses d(i, j) = dim(f1_i & f2_j); w(j) = i exactly where the second
    difference of d jumps.  With this orientation the flag of a permutation
    matrix of w sits in position w relative to the standard flag.
    """
    if f1.n != f2.n or f1.p != f2.p:
        raise DimensionMismatch("flags over different spaces")
    n, p = f1.n, f1.p
    d = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            d[i][j] = i + j - rank_mod_p(list(f1.cols[:i]) + list(f2.cols[:j]), p)
    w = [0] * n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if d[i][j] - d[i - 1][j] - d[i][j - 1] + d[i - 1][j - 1] == 1:
                w[j - 1] = i
    return CoxElement(A(n - 1), tuple(w))
