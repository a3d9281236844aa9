"""
Extreme a-degree coefficients of the reduced HOMFLYPT series of a braid closure.

For a braid on n strands (type A(n-1)) the coefficients at a^(|b| -/+ (n-1))
are (-1)^|b| tau^-/+(b) divided by (v^-1 - v)^(n-1).  They are kept as
unreduced fractions and compared by cross-multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, braid_concat, full_twist
from .coxeter import cox_w0
from .hecke import eval_braid, tau_minus_braid, tau_plus, twist_check
from .ring import LaurentPoly

__all__ = ["ExtremeCoeff", "extreme_coeff", "coeff_equal", "kalman_check", "KalmanReport"]

# v^-1 - v
_DENOM_FACTOR = LaurentPoly({-1: 1, 1: -1})


@dataclass(frozen=True)
class ExtremeCoeff:
    numerator: LaurentPoly
    denominator: LaurentPoly
    a_degree: int
    strands: int

    def value(self) -> LaurentPoly | None:
        """The coefficient as a Laurent polynomial, or None when division is not exact."""
        return self.numerator.exact_div(self.denominator)

    def to_json(self) -> dict:
        val = self.value()
        return {
            "numerator": self.numerator.to_json(),
            "denominator": self.denominator.to_json(),
            "a_degree": self.a_degree,
            "strands": self.strands,
            "value": None if val is None else val.to_json(),
        }


def _require_type_a(beta: BraidWord) -> int:
    if beta.system.family != "A":
        raise ValueError("HOMFLYPT coefficients are only defined for type A braids")
    return beta.system.rank + 1


def extreme_coeff(beta: BraidWord, sign: str) -> ExtremeCoeff:
    """sign '-' gives the lowest a-degree coefficient, '+' the highest."""
    n = _require_type_a(beta)
    if sign == "-":
        tau = tau_minus_braid(beta)
    elif sign == "+":
        tau = tau_plus(eval_braid(beta))
    else:
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    num = -tau if len(beta) % 2 else tau
    shift = n - 1 if sign == "+" else -(n - 1)
    return ExtremeCoeff(num, _DENOM_FACTOR ** (n - 1), len(beta) + shift, n)


def coeff_equal(x: ExtremeCoeff, y: ExtremeCoeff) -> bool:
    return x.numerator * y.denominator == y.numerator * x.denominator


@dataclass
class KalmanReport:
    beta: BraidWord
    lowest: ExtremeCoeff  # of beta
    highest_twisted: ExtremeCoeff  # of beta * full twist
    aligned_degree: int
    passed: bool
    twist_passed: bool

    def to_json(self) -> dict:
        return {
            "check": "kalman",
            "strands": self.lowest.strands,
            "beta": list(self.beta.letters),
            "lhs": self.lowest.to_json(),
            "rhs": self.highest_twisted.to_json(),
            "rhs_aligned_a_degree": self.aligned_degree,
            "twist_pass": self.twist_passed,
            "pass": self.passed,
        }


def kalman_check(beta: BraidWord) -> KalmanReport:
    """
    Compare [a^(|b|-n+1)] P(closure of b) with [a^(|b|+n-1)] P(closure of b * twist).

    The right side is computed at its own top degree |b pi| + n - 1; shifting
    by 2 l(w0) = |pi| lands on |b| + n - 1, which is what gets reported.
    """
    n = _require_type_a(beta)
    twisted = braid_concat(beta, full_twist(beta.system))
    lo = extreme_coeff(beta, "-")
    hi = extreme_coeff(twisted, "+")
    aligned = hi.a_degree - 2 * cox_w0(beta.system).length()
    ok = coeff_equal(lo, hi) and aligned == len(beta) + n - 1
    return KalmanReport(beta, lo, hi, aligned, ok, twist_check(beta).passed)
