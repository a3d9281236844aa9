"""
Finite Coxeter groups of types A(n), B(n) and I2(m) with canonical encodings.

Generators are 1-based everywhere.

* ``A(n)``: permutations of ``1..n+1`` in one-line notation; generator ``i``
  swaps ``i`` and ``i+1``.
* ``B(n)``: signed permutations of ``±1..±n``; generators ``1..n-1`` are
  adjacent swaps, generator ``n`` negates the last coordinate (Bourbaki
  labelling, so in ``B(2)`` generator 1 is the short root and ``m(1,2) = 4``).
* ``I2(m)``: pairs ``(k, eps)`` meaning ``r^k`` (eps = +1) or ``r^k s``
  (eps = -1), where ``s`` is generator 1, ``t`` generator 2 and ``r = st``.

Products compose as functions: ``(a * b)(x) = a(b(x))``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

from .errors import SizeBound, SystemMismatch

__all__ = [
    "CoxeterSystem", "CoxElement", "A", "B", "I2",
    "cox_mul", "cox_inv", "cox_len", "cox_right_descent", "cox_left_descent",
    "cox_reduced_word", "cox_reduced_words", "cox_w0", "cox_enumerate",
    "DEFAULT_ENUM_BOUND",
]

DEFAULT_ENUM_BOUND = factorial(10)


@dataclass(frozen=True)
class CoxeterSystem:
    family: str  # "A", "B" or "I2"
    rank: int
    m: int = 0  # only meaningful for I2

    def __post_init__(self):
        if self.family not in ("A", "B", "I2"):
            raise ValueError(f"unsupported family {self.family!r}")
        if self.family == "I2":
            if self.rank != 2 or self.m < 2:
                raise ValueError("I2(m) needs rank 2 and m >= 2")
        elif self.rank < 1:
            raise ValueError("rank must be positive")
        if self.family == "B" and self.rank < 2:
            raise ValueError("B(n) needs n >= 2")

    def __str__(self):
        return f"I2({self.m})" if self.family == "I2" else f"{self.family}({self.rank})"

    @property
    def generators(self) -> range:
        return range(1, self.rank + 1)

    @property
    def coxeter_matrix(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        mat = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        if self.family == "I2":
            mat[0][1] = mat[1][0] = self.m
            return tuple(map(tuple, mat))
        for i in range(n - 1):
            mat[i][i + 1] = mat[i + 1][i] = 3
        if self.family == "B":
            mat[n - 2][n - 1] = mat[n - 1][n - 2] = 4
        return tuple(map(tuple, mat))

    def order(self) -> int:
        if self.family == "A":
            return factorial(self.rank + 1)
        if self.family == "B":
            return 2 ** self.rank * factorial(self.rank)
        return 2 * self.m

    def identity(self) -> CoxElement:
        if self.family == "A":
            return CoxElement(self, tuple(range(1, self.rank + 2)))
        if self.family == "B":
            return CoxElement(self, tuple(range(1, self.rank + 1)))
        return CoxElement(self, (0, 1))

    def gen(self, i: int) -> CoxElement:
        if i not in self.generators:
            raise ValueError(f"generator {i} out of range for {self}")
        if self.family == "I2":
            return CoxElement(self, (0, -1) if i == 1 else (self.m - 1, -1))
        code = list(self.identity().code)
        if self.family == "B" and i == self.rank:
            code[-1] = -code[-1]
        else:
            code[i - 1], code[i] = code[i], code[i - 1]
        return CoxElement(self, tuple(code))

    def word(self, letters) -> CoxElement:
        """Product of the generators listed in ``letters``."""
        w = self.identity()
        for i in letters:
            w = w * self.gen(i)
        return w


def A(n: int) -> CoxeterSystem:
    return CoxeterSystem("A", n)


def B(n: int) -> CoxeterSystem:
    return CoxeterSystem("B", n)


def I2(m: int) -> CoxeterSystem:
    return CoxeterSystem("I2", 2, m)


def _mul_code(system: CoxeterSystem, a, b):
    if system.family == "A":
        return tuple(a[x - 1] for x in b)
    if system.family == "B":
        return tuple(a[x - 1] if x > 0 else -a[-x - 1] for x in b)
    m = system.m
    (ka, ea), (kb, eb) = a, b
    # s r^k = r^-k s
    return ((ka + (kb if ea == 1 else -kb)) % m, ea * eb)


def _inv_code(system: CoxeterSystem, a):
    if system.family == "A":
        out = [0] * len(a)
        for i, x in enumerate(a, 1):
            out[x - 1] = i
        return tuple(out)
    if system.family == "B":
        out = [0] * len(a)
        for i, x in enumerate(a, 1):
            out[abs(x) - 1] = i if x > 0 else -i
        return tuple(out)
    k, e = a
    return ((-k) % system.m, 1) if e == 1 else a


def _len_code(system: CoxeterSystem, a) -> int:
    if system.family == "A":
        n = len(a)
        return sum(1 for i in range(n) for j in range(i + 1, n) if a[i] > a[j])
    if system.family == "B":
        # count positive roots e_i - e_j, e_i + e_j (i < j), e_i sent negative;
        # a vector is positive when its first nonzero coordinate is
        n = len(a)
        count = sum(1 for x in a if x < 0)
        for i in range(n):
            ai, si = abs(a[i]), (1 if a[i] > 0 else -1)
            for j in range(i + 1, n):
                aj, sj = abs(a[j]), (1 if a[j] > 0 else -1)
                first_minus = si if ai < aj else -sj
                first_plus = si if ai < aj else sj
                count += (first_minus < 0) + (first_plus < 0)
        return count
    k, e = a
    m = system.m
    if e == 1:
        return 2 * min(k, m - k)
    return min(2 * k + 1, 2 * (m - k) - 1)


@dataclass(frozen=True)
class CoxElement:
    system: CoxeterSystem
    code: tuple
    _len: int = field(default=-1, compare=False, hash=False, repr=False)

    def __mul__(self, other: CoxElement) -> CoxElement:
        if self.system != other.system:
            raise SystemMismatch(f"{self.system} vs {other.system}")
        return CoxElement(self.system, _mul_code(self.system, self.code, other.code))

    def inverse(self) -> CoxElement:
        return CoxElement(self.system, _inv_code(self.system, self.code))

    def length(self) -> int:
        if self._len < 0:
            object.__setattr__(self, "_len", _len_code(self.system, self.code))
        return self._len

    def is_identity(self) -> bool:
        return self == self.system.identity()

    def right_descent(self, s: int) -> bool:
        return (self * self.system.gen(s)).length() < self.length()

    def left_descent(self, s: int) -> bool:
        return (self.system.gen(s) * self).length() < self.length()

    def reduced_word(self) -> tuple[int, ...]:
        return cox_reduced_word(self)

    def __repr__(self):
        return f"CoxElement({self.system}, {self.code})"


def cox_mul(a: CoxElement, b: CoxElement) -> CoxElement:
    return a * b


def cox_inv(a: CoxElement) -> CoxElement:
    return a.inverse()


def cox_len(a: CoxElement) -> int:
    return a.length()


def cox_right_descent(a: CoxElement, s: int) -> bool:
    return a.right_descent(s)


def cox_left_descent(a: CoxElement, s: int) -> bool:
    return a.left_descent(s)


def cox_reduced_word(a: CoxElement) -> tuple[int, ...]:
    """Reduced word built by peeling off the smallest right descent each step."""
    return _reduced_word(a.system, a.code)


@lru_cache(maxsize=None)
def _reduced_word(system: CoxeterSystem, code) -> tuple[int, ...]:
    w = CoxElement(system, code)
    rev = []
    while w.length():
        s = next(s for s in system.generators if w.right_descent(s))
        rev.append(s)
        w = w * system.gen(s)
    return tuple(reversed(rev))


def cox_reduced_words(a: CoxElement) -> list[tuple[int, ...]]:
    """All reduced words of ``a``, sorted lexicographically."""
    return sorted(_all_reduced(a.system, a.code))


@lru_cache(maxsize=None)
def _all_reduced(system: CoxeterSystem, code) -> tuple[tuple[int, ...], ...]:
    w = CoxElement(system, code)
    if w.length() == 0:
        return ((),)
    out = []
    for s in system.generators:
        if w.right_descent(s):
            u = w * system.gen(s)
            out.extend(word + (s,) for word in _all_reduced(system, u.code))
    return tuple(out)


def cox_w0(system: CoxeterSystem) -> CoxElement:
    if system.family == "A":
        return CoxElement(system, tuple(range(system.rank + 1, 0, -1)))
    if system.family == "B":
        return CoxElement(system, tuple(-i for i in range(1, system.rank + 1)))
    m = system.m
    return CoxElement(system, (m // 2, 1) if m % 2 == 0 else ((m - 1) // 2, -1))


def cox_enumerate(system: CoxeterSystem, bound: int = DEFAULT_ENUM_BOUND) -> list[CoxElement]:
    """All elements, breadth-first from the identity (so sorted by length)."""
    if system.order() > bound:
        raise SizeBound(f"|W| = {system.order()} exceeds bound {bound}")
    return list(_enumerate(system))


@lru_cache(maxsize=None)
def _enumerate(system: CoxeterSystem) -> tuple[CoxElement, ...]:
    e = system.identity()
    seen = {e}
    order = [e]
    queue = deque([e])
    gens = [system.gen(s) for s in system.generators]
    while queue:
        w = queue.popleft()
        for g in gens:
            x = w * g
            if x not in seen:
                seen.add(x)
                order.append(x)
                queue.append(x)
    return tuple(order)
