"""
Split groups GL_n, SL_n and Sp_4 over F_p: Borel subgroups, Weyl lifts,
unipotence and the unique factorisation x = x_+ x_- on the big cell.

Sp_4 is taken with respect to the antidiagonal form J = antidiag(1, 1, -1, -1)
(rows top to bottom), so its upper-triangular matrices form a Borel subgroup
with torus diag(a, b, 1/b, 1/a).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import prod

from sympy import isprime

from ..coxeter import A, B, CoxElement, CoxeterSystem, cox_reduced_word
from ..errors import NotInBigCell, NotUpperTriangular, SizeBound
from .linalg import Mat

__all__ = [
    "GroupSpec", "J4", "is_unipotent", "in_group", "ul_factorize", "decompose_borel",
    "weyl_lift", "group_order", "borel_elements", "unipotent_radical",
    "enumerate_borel_coset", "sp4_upper", "sp4_lower", "DEFAULT_COSET_BUDGET",
]

DEFAULT_COSET_BUDGET = 200_000


@dataclass(frozen=True)
class GroupSpec:
    family: str  # "GL", "SL" or "SP4"
    n: int
    p: int

    def __post_init__(self):
        fam = self.family.upper()
        object.__setattr__(self, "family", fam)
        if fam not in ("GL", "SL", "SP4"):
            raise ValueError(f"unknown group family {self.family!r}")
        if not isprime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if fam == "SP4":
            if self.n != 4:
                raise ValueError("SP4 forces n = 4")
            if self.p == 2:
                raise ValueError("SP4 needs odd characteristic")
        if not 1 <= self.n <= 4:
            raise ValueError("n must be between 1 and 4")

    @classmethod
    def gl(cls, n: int, p: int) -> GroupSpec:
        return cls("GL", n, p)

    @classmethod
    def sl(cls, n: int, p: int) -> GroupSpec:
        return cls("SL", n, p)

    @classmethod
    def sp4(cls, p: int) -> GroupSpec:
        return cls("SP4", 4, p)

    @property
    def q(self) -> int:
        return self.p

    @property
    def r(self) -> int:
        """Exponent of (q - 1) in the point-count formulas: the rank of the torus."""
        if self.family == "GL":
            return self.n
        if self.family == "SL":
            return self.n - 1
        return 2

    @property
    def weyl(self) -> CoxeterSystem:
        return B(2) if self.family == "SP4" else A(self.n - 1)

    @property
    def positive_roots(self) -> int:
        return 4 if self.family == "SP4" else self.n * (self.n - 1) // 2

    def to_json(self) -> dict:
        return {"group": self.family.lower(), "n": self.n, "p": self.p}

    def __str__(self):
        return f"{self.family}{self.n if self.family != 'SP4' else ''}(F_{self.p})"


J4 = ((0, 0, 0, 1), (0, 0, 1, 0), (0, -1, 0, 0), (-1, 0, 0, 0))


def symplectic_form(p: int) -> Mat:
    return Mat(J4, p)


def is_unipotent(g: Mat) -> bool:
    return ((g - Mat.identity(g.n, g.p)) ** g.n).is_zero()


def in_group(g: Mat, spec: GroupSpec) -> bool:
    if g.n != spec.n or g.p != spec.p:
        return False
    if spec.family == "GL":
        return g.det() != 0
    if spec.family == "SL":
        return g.det() == 1
    J = symplectic_form(spec.p)
    return g.T @ J @ g == J


def ul_factorize(x: Mat) -> tuple[Mat, Mat]:
    """
    Write x = x_+ x_- with x_+ unit upper and x_- unit lower triangular.

    Reversing row and column order turns this into a Doolittle LU
    factorisation whose upper factor must also have unit diagonal.
    """
    n, p = x.n, x.p
    y = [[x.rows[n - 1 - i][n - 1 - j] for j in range(n)] for i in range(n)]
    L = [[int(i == j) for j in range(n)] for i in range(n)]
    U = [[0] * n for _ in range(n)]
    for k in range(n):
        for j in range(k, n):
            U[k][j] = (y[k][j] - sum(L[k][m] * U[m][j] for m in range(k))) % p
        if U[k][k] != 1:
            raise NotInBigCell(f"trailing minor of size {k + 1} is not 1")
        for i in range(k + 1, n):
            L[i][k] = (y[i][k] - sum(L[i][m] * U[m][k] for m in range(k))) % p
    upper = Mat([[L[n - 1 - i][n - 1 - j] for j in range(n)] for i in range(n)], p)
    lower = Mat([[U[n - 1 - i][n - 1 - j] for j in range(n)] for i in range(n)], p)
    return upper, lower


def in_big_cell(x: Mat) -> bool:
    try:
        ul_factorize(x)
    except NotInBigCell:
        return False
    return True


def decompose_borel(x: Mat) -> tuple[Mat, Mat]:
    """Return (t, u) with x = u t, t diagonal and u unit upper triangular."""
    if not x.is_upper():
        raise NotUpperTriangular(repr(x))
    d = x.diagonal()
    if 0 in d:
        raise NotUpperTriangular("upper triangular but singular")
    t = Mat.diag(d, x.p)
    inv = [pow(a, -1, x.p) for a in d]
    u = Mat([[x.rows[i][j] * inv[j] for j in range(x.n)] for i in range(x.n)], x.p)
    return t, u


def _perm_matrix(w: CoxElement, p: int) -> list[list[int]]:
    n = len(w.code)
    m = [[0] * n for _ in range(n)]
    for j, wj in enumerate(w.code):
        m[wj - 1][j] = 1
    return m


def _sp4_simple_lift(s: int, p: int) -> Mat:
    if s == 1:
        # swaps the torus coordinates a <-> b
        return Mat([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], p)
    # b -> 1/b: e2 -> -e3, e3 -> e2
    return Mat([[1, 0, 0, 0], [0, 0, 1, 0], [0, -1, 0, 0], [0, 0, 0, 1]], p)


def weyl_lift(w: CoxElement, spec: GroupSpec) -> Mat:
    """A representative of w in the normaliser of the diagonal torus."""
    if w.system != spec.weyl:
        raise ValueError(f"{w} is not in the Weyl group {spec.weyl} of {spec}")
    p = spec.p
    if spec.family == "SP4":
        g = Mat.identity(4, p)
        for s in cox_reduced_word(w):
            g = g @ _sp4_simple_lift(s, p)
        return g
    m = _perm_matrix(w, p)
    if spec.family == "SL" and w.length() % 2:
        for i in range(spec.n):
            m[i][0] = -m[i][0]
    return Mat(m, p)


def group_order(spec: GroupSpec) -> int:
    q, n = spec.p, spec.n
    if spec.family == "SP4":
        return q ** 4 * (q ** 2 - 1) * (q ** 4 - 1)
    gl = prod(q ** n - q ** i for i in range(n))
    return gl if spec.family == "GL" else gl // (q - 1)


def sp4_upper(a: int, b: int, c: int, d: int, p: int) -> Mat:
    """The unipotent upper-triangular element of Sp_4 with coordinates (a, b, c, d)."""
    return Mat([[1, a, b + a * d, c], [0, 1, 2 * d, b - a * d], [0, 0, 1, -a], [0, 0, 0, 1]], p)


def sp4_lower(a: int, b: int, c: int, d: int, p: int) -> Mat:
    return Mat([[1, 0, 0, 0], [a, 1, 0, 0], [b + a * d, 2 * d, 1, 0], [c, b - a * d, -a, 1]], p)


def _torus(spec: GroupSpec) -> list[Mat]:
    p, n = spec.p, spec.n
    units = range(1, p)
    if spec.family == "GL":
        return [Mat.diag(t, p) for t in product(units, repeat=n)]
    if spec.family == "SL":
        out = []
        for t in product(units, repeat=n - 1):
            last = pow(prod(t), -1, p)
            out.append(Mat.diag(t + (last,), p))
        return out
    return [Mat.diag((a, b, pow(b, -1, p), pow(a, -1, p)), p) for a in units for b in units]


@lru_cache(maxsize=None)
def unipotent_radical(spec: GroupSpec) -> tuple[Mat, ...]:
    """All of U_+(F_p)."""
    p, n = spec.p, spec.n
    if spec.family == "SP4":
        return tuple(sp4_upper(*c, p) for c in product(range(p), repeat=4))
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = []
    for vals in product(range(p), repeat=len(slots)):
        m = [[int(i == j) for j in range(n)] for i in range(n)]
        for (i, j), x in zip(slots, vals):
            m[i][j] = x
        out.append(Mat(m, p))
    return tuple(out)


def borel_size(spec: GroupSpec) -> int:
    return (spec.p - 1) ** spec.r * spec.p ** spec.positive_roots


@lru_cache(maxsize=None)
def borel_elements(spec: GroupSpec) -> tuple[Mat, ...]:
    """All of B_+(F_p), as t u with t in the torus and u in U_+."""
    size = borel_size(spec)
    if size > DEFAULT_COSET_BUDGET:
        raise SizeBound(f"|B+| = {size} exceeds budget")
    return tuple(t @ u for t in _torus(spec) for u in unipotent_radical(spec))


def enumerate_borel_coset(g: Mat, spec: GroupSpec, budget: int = DEFAULT_COSET_BUDGET):
    """Yield g b for every b in B_+(F_p), each exactly once."""
    size = borel_size(spec)
    if size > budget:
        raise SizeBound(f"|gB+| = {size} exceeds budget {budget}")
    for b in borel_elements(spec):
        yield g @ b
