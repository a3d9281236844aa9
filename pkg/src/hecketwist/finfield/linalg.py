"""Small dense matrices over a prime field F_p."""

from __future__ import annotations

from itertools import product

from ..errors import DimensionMismatch, Singular

__all__ = [
    "Mat", "mat_mul", "mat_inv", "mat_pow", "mat_transpose", "rank_mod_p",
    "all_matrices",
]


class Mat:
    """An immutable n x n matrix with entries reduced mod p."""

    __slots__ = ("rows", "p", "_hash")

    def __init__(self, rows, p: int):
        self.p = p
        self.rows = tuple(tuple(int(x) % p for x in row) for row in rows)
        self._hash = None
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise DimensionMismatch("matrix must be square")

    @classmethod
    def identity(cls, n: int, p: int) -> Mat:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], p)

    @classmethod
    def zero(cls, n: int, p: int) -> Mat:
        return cls([[0] * n for _ in range(n)], p)

    @classmethod
    def diag(cls, entries, p: int) -> Mat:
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], p)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def cols(self) -> list[tuple[int, ...]]:
        return [self.col(j) for j in range(self.n)]

    @classmethod
    def from_cols(cls, cols, p: int) -> Mat:
        n = len(cols)
        return cls([[cols[j][i] for j in range(n)] for i in range(n)], p)

    def _check(self, other: Mat):
        if self.p != other.p or self.n != other.n:
            raise DimensionMismatch(f"({self.n}, F_{self.p}) vs ({other.n}, F_{other.p})")

    def __matmul__(self, other: Mat) -> Mat:
        return mat_mul(self, other)

    def __add__(self, other: Mat) -> Mat:
        self._check(other)
        return Mat([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.p)

    def __sub__(self, other: Mat) -> Mat:
        self._check(other)
        return Mat([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.p)

    def scale(self, c: int) -> Mat:
        return Mat([[c * a for a in r] for r in self.rows], self.p)

    def inv(self) -> Mat:
        return mat_inv(self)

    @property
    def T(self) -> Mat:
        return mat_transpose(self)

    def __pow__(self, k: int) -> Mat:
        return mat_pow(self, k)

    def det(self) -> int:
        a = [list(r) for r in self.rows]
        n, p = self.n, self.p
        det = 1
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c]), None)
            if piv is None:
                return 0
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                det = -det
            det = det * a[c][c] % p
            inv = pow(a[c][c], -1, p)
            for r in range(c + 1, n):
                f = a[r][c] * inv % p
                if f:
                    a[r] = [(x - f * y) % p for x, y in zip(a[r], a[c])]
        return det % p

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def is_identity(self) -> bool:
        return all(self.rows[i][j] == (i == j) for i in range(self.n) for j in range(self.n))

    def is_upper(self) -> bool:
        return all(self.rows[i][j] == 0 for i in range(self.n) for j in range(i))

    def is_lower(self) -> bool:
        return all(self.rows[i][j] == 0 for i in range(self.n) for j in range(i + 1, self.n))

    def is_unit_upper(self) -> bool:
        return self.is_upper() and all(self.rows[i][i] == 1 for i in range(self.n))

    def is_unit_lower(self) -> bool:
        return self.is_lower() and all(self.rows[i][i] == 1 for i in range(self.n))

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(self.n))

    def trace(self) -> int:
        return sum(self.diagonal()) % self.p

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.p == other.p and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.p, self.rows))
        return self._hash

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __repr__(self):
        return f"Mat({[list(r) for r in self.rows]}, p={self.p})"


def mat_mul(a: Mat, b: Mat) -> Mat:
    a._check(b)
    cols = list(zip(*b.rows))
    return Mat([[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a.rows], a.p)


def mat_inv(a: Mat) -> Mat:
    n, p = a.n, a.p
    aug = [list(a.rows[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c]), None)
        if piv is None:
            raise Singular("matrix is not invertible mod p")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = pow(aug[c][c], -1, p)
        aug[c] = [x * inv % p for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [(x - f * y) % p for x, y in zip(aug[r], aug[c])]
    return Mat([row[n:] for row in aug], p)


def mat_pow(a: Mat, k: int) -> Mat:
    if k < 0:
        return mat_pow(mat_inv(a), -k)
    result, base = Mat.identity(a.n, a.p), a
    while k:
        if k & 1:
            result = result @ base
        base = base @ base
        k >>= 1
    return result


def mat_transpose(a: Mat) -> Mat:
    return Mat(list(zip(*a.rows)), a.p)


def rank_mod_p(vectors, p: int) -> int:
    """Rank of a list of equal-length vectors over F_p."""
    rows = [[x % p for x in v] for v in vectors]
    if not rows:
        return 0
    width = len(rows[0])
    rank = 0
    for c in range(width):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        for r in range(rank + 1, len(rows)):
            if rows[r][c]:
                f = rows[r][c] * inv % p
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def all_matrices(n: int, p: int):
    """Every n x n matrix over F_p (p^(n^2) of them)."""
    for entries in product(range(p), repeat=n * n):
        yield Mat([entries[i * n:(i + 1) * n] for i in range(n)], p)
