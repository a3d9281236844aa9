"""
Laurent polynomials in v = q^(1/2) with integer coefficients.

Exponents are stored in units of v, so ``{2: 1, 0: -1}`` is ``q - 1``.

>>> v, vi = LaurentPoly.v(), LaurentPoly.v(-1)
>>> (v - vi) * (v + vi)
LaurentPoly('v^2 - v^-2')
>>> (v**2 - 1).eval_q(3)
Fraction(2, 1)
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import OddExponent

__all__ = [
    "LaurentPoly", "ZERO", "ONE", "V", "DELTA",
    "lp_add", "lp_mul", "lp_neg", "lp_bar", "lp_eval_q",
]


class LaurentPoly:
    """An immutable element of Z[v, v^-1]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if isinstance(terms, Mapping):
            terms = terms.items()
        acc: dict[int, int] = {}
        for e, c in terms:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> LaurentPoly:
        # terms must already be free of zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls._raw({0: c} if c else {})

    @classmethod
    def v(cls, k: int = 1) -> LaurentPoly:
        """The monomial v^k."""
        return cls._raw({k: 1})

    @classmethod
    def q(cls, k: int = 1) -> LaurentPoly:
        """The monomial q^k = v^(2k)."""
        return cls._raw({2 * k: 1})

    # -- structure --------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def exponents(self) -> list[int]:
        return sorted(self._terms)

    def min_exp(self) -> int:
        return min(self._terms)

    def max_exp(self) -> int:
        return max(self._terms)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self._terms) == 1:
                ((e, c),) = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly._raw({-e * (-k): c ** (-k)})
            raise ValueError("only monomials with unit coefficient are invertible")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, other: LaurentPoly) -> LaurentPoly | None:
        """Return self / other if the quotient is a Laurent polynomial, else None."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = self
        lead_e, lead_c = other.max_exp(), other.coeff(other.max_exp())
        quot: dict[int, int] = {}
        # an exact quotient has no term below min(self) - min(other)
        floor = self.min_exp() - other.min_exp() if not self.is_zero() else 0
        while not rem.is_zero():
            e = rem.max_exp() - lead_e
            if e < floor:
                return None
            c, r = divmod(rem.coeff(rem.max_exp()), lead_c)
            if r:
                return None
            quot[e] = c
            rem = rem - LaurentPoly._raw({e: c}) * other
        return LaurentPoly._raw(quot)

    def bar(self) -> LaurentPoly:
        """The ring involution v -> v^-1."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def eval_q(self, q: int) -> Fraction:
        """Evaluate at an integer q; every exponent (in units of v) must be even."""
        total = Fraction(0)
        for e, c in self._terms.items():
            if e % 2:
                raise OddExponent(f"v^{e} is not an integral power of q")
            total += c * Fraction(q) ** (e // 2)
        return total

    # -- comparison / serialization --------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, pairs) -> LaurentPoly:
        return cls((int(e), int(c)) for e, c in pairs)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mono = "" if e == 0 else ("v" if e == 1 else f"v^{e}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
V = LaurentPoly._raw({1: 1})
# v - v^-1, the structure constant of the quadratic relation
DELTA = LaurentPoly._raw({1: 1, -1: -1})


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def lp_neg(a: LaurentPoly) -> LaurentPoly:
    return -a


def lp_bar(a: LaurentPoly) -> LaurentPoly:
    return a.bar()


def lp_eval_q(a: LaurentPoly, q: int) -> Fraction:
    return a.eval_q(q)
