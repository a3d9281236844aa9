"""
The Iwahori-Hecke algebra over Z[v, v^-1] in its standard basis.

The quadratic relation is ``(T_s - v)(T_s + v^-1) = 0``, i.e.
``T_s^2 = 1 + (v - v^-1) T_s`` and ``T_s^-1 = T_s - (v - v^-1)``.

tau_plus reads the coefficient of T_e in the standard basis.  tau_minus
reads the coefficient of T_e in the inverse basis {T_w^-1}; it is computed by
applying the bar involution (v -> v^-1, T_s -> T_s^-1), which sends
``sum c_w T_w^-1`` to ``sum bar(c_w) T_{w^-1}``, so the identity coefficient
of the barred word is the bar of what we want.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .braid import BraidWord, braid_concat, full_twist
from .coxeter import CoxElement, CoxeterSystem, cox_enumerate, cox_reduced_word
from .errors import SizeBound, SystemMismatch
from .ring import DELTA, ONE, ZERO, LaurentPoly

__all__ = [
    "HeckeElement", "hecke_mul_gen", "hecke_mul_gen_inv", "eval_braid",
    "tau_plus", "tau_minus_braid", "tau_minus_oracle", "twist_check",
    "TwistReport", "ORACLE_MAX_ORDER",
]

ORACLE_MAX_ORDER = 24


@dataclass(frozen=True)
class HeckeElement:
    system: CoxeterSystem
    coeffs: dict = field(default_factory=dict)  # CoxElement -> nonzero LaurentPoly

    @classmethod
    def basis(cls, w: CoxElement, c: LaurentPoly = ONE) -> HeckeElement:
        return cls(w.system, {w: c} if not c.is_zero() else {})

    @classmethod
    def one(cls, system: CoxeterSystem) -> HeckeElement:
        return cls.basis(system.identity())

    def coeff(self, w: CoxElement) -> LaurentPoly:
        return self.coeffs.get(w, ZERO)

    def __add__(self, other: HeckeElement) -> HeckeElement:
        if self.system != other.system:
            raise SystemMismatch(f"{self.system} vs {other.system}")
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            _accumulate(out, w, c)
        return HeckeElement(self.system, out)

    def __neg__(self) -> HeckeElement:
        return HeckeElement(self.system, {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        return self + (-other)

    def scale(self, c: LaurentPoly) -> HeckeElement:
        if c.is_zero():
            return HeckeElement(self.system, {})
        return HeckeElement(self.system, {w: c * x for w, x in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.system == other.system and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.system, frozenset(self.coeffs.items())))

    def to_json(self) -> list:
        rows = [[list(cox_reduced_word(w)), c.to_json()] for w, c in self.coeffs.items()]
        return sorted(rows)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = sorted(self.coeffs.items(), key=lambda kv: (kv[0].length(), cox_reduced_word(kv[0])))
        return " + ".join(
            f"({c})T[{''.join(map(str, cox_reduced_word(w))) or 'e'}]" for w, c in terms
        )


def _accumulate(out: dict, w, c: LaurentPoly) -> None:
    s = out.get(w, ZERO) + c
    if s.is_zero():
        out.pop(w, None)
    else:
        out[w] = s


def hecke_mul_gen(h: HeckeElement, s: int) -> HeckeElement:
    """Right multiplication by T_s."""
    gs = h.system.gen(s)
    out: dict = {}
    for w, c in h.coeffs.items():
        ws = w * gs
        _accumulate(out, ws, c)
        if ws.length() < w.length():
            _accumulate(out, w, c * DELTA)
    return HeckeElement(h.system, out)


def hecke_mul_gen_inv(h: HeckeElement, s: int) -> HeckeElement:
    """Right multiplication by T_s^-1 = T_s - (v - v^-1)."""
    return hecke_mul_gen(h, s) - h.scale(DELTA)


def eval_braid(beta: BraidWord, start: HeckeElement | None = None) -> HeckeElement:
    h = HeckeElement.one(beta.system) if start is None else start
    for s in beta.letters:
        h = hecke_mul_gen(h, s)
    return h


def _eval_inverse_letters(beta: BraidWord) -> HeckeElement:
    h = HeckeElement.one(beta.system)
    for s in beta.letters:
        h = hecke_mul_gen_inv(h, s)
    return h


def tau_plus(h: HeckeElement) -> LaurentPoly:
    return h.coeff(h.system.identity())


def tau_minus_braid(beta: BraidWord) -> LaurentPoly:
    return tau_plus(_eval_inverse_letters(beta)).bar()


@lru_cache(maxsize=None)
def _inverse_basis(system: CoxeterSystem) -> tuple:
    """
    (w, expansion of (T_{w^-1})^-1) for every w, longest first.

    For a reduced word s1...sk of w, (T_{w^-1})^-1 = T_{s1}^-1 ... T_{sk}^-1,
    whose leading term is T_w with coefficient 1.  As w runs over W these are
    exactly the inverse-basis elements, indexed by their leading term.
    """
    table = []
    for w in cox_enumerate(system):
        h = HeckeElement.one(system)
        for s in cox_reduced_word(w):
            h = hecke_mul_gen_inv(h, s)
        table.append((w, h))
    table.sort(key=lambda pair: -pair[0].length())
    return tuple(table)


def tau_minus_oracle(h: HeckeElement) -> LaurentPoly:
    """
    Identity coefficient of ``h`` in the inverse basis, by a full triangular
    change of basis.  Independent of the bar-involution shortcut.
    """
    if h.system.order() > ORACLE_MAX_ORDER:
        raise SizeBound(f"oracle limited to |W| <= {ORACLE_MAX_ORDER}")
    rem = h
    solved = {}
    # each basis element is T_w plus strictly shorter terms, so peel off longest first
    for w, inv_w in _inverse_basis(h.system):
        c = rem.coeff(w)
        if not c.is_zero():
            solved[w] = c
            rem = rem - inv_w.scale(c)
    assert not rem.coeffs, "triangular solve left a residue"
    return solved.get(h.system.identity(), ZERO)


@dataclass
class TwistReport:
    beta: BraidWord
    tau_minus: LaurentPoly
    tau_plus_btw: LaurentPoly
    passed: bool

    def to_json(self) -> dict:
        return {
            "check": "twist",
            "system": str(self.beta.system),
            "beta": list(self.beta.letters),
            "tau_minus": self.tau_minus.to_json(),
            "tau_plus_btw": self.tau_plus_btw.to_json(),
            "pass": self.passed,
        }


def twist_check(beta: BraidWord) -> TwistReport:
    lhs = tau_minus_braid(beta)
    rhs = tau_plus(eval_braid(braid_concat(beta, full_twist(beta.system))))
    return TwistReport(beta, lhs, rhs, lhs == rhs)
