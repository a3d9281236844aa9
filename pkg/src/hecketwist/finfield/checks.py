"""
Point-count identities over F_p, each returning a CountReport.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..braid import BraidWord, braid_concat, braid_of_element, full_twist
from ..coxeter import CoxElement, cox_w0
from ..hecke import eval_braid, tau_minus_braid, tau_plus
from ..ring import LaurentPoly
from .closed_forms import closed_form_mismatches
from .groups import (
    GroupSpec, borel_elements, group_order, in_big_cell, is_unipotent, unipotent_radical,
    weyl_lift,
)
from .linalg import all_matrices
from .varieties import (
    Hg_elements, Vg_points, Xg_points, action_Vg, count_U_beta, count_Ug, count_Vg,
    count_X_beta, count_Xg, phi, unipotent_elements, v_to_x_map,
)

__all__ = [
    "CountReport", "kawanaka_check", "steinberg_check", "cor_check", "hecke_count_check",
    "hecke_prediction", "prop44_check", "bruhat_constancy_check", "closed_form_check",
    "vx_bijection_check", "phi_image_check", "equivariance_check",
]


def _fmt(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    return x


@dataclass
class CountReport:
    check: str
    params: dict
    lhs: int | Fraction
    rhs: int | Fraction
    seed: int | None = None
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        out = {
            "check": self.check,
            "params": self.params,
            "lhs": _fmt(self.lhs),
            "rhs": _fmt(self.rhs),
            "pass": self.passed,
        }
        if self.seed is not None:
            out["seed"] = self.seed
        out.update(self.extra)
        return out


def _params(spec: GroupSpec, **kw) -> dict:
    out = spec.to_json()
    out.update(kw)
    return out


def kawanaka_check(spec: GroupSpec, w: CoxElement) -> CountReport:
    g = weyl_lift(w, spec)
    return CountReport("kawanaka", _params(spec, w=list(w.reduced_word())),
                       count_Ug(g, spec), count_Vg(g, spec))


def steinberg_check(spec: GroupSpec) -> CountReport:
    """Unipotent elements of G versus points of U_+ U_- (GL/SL, by brute force)."""
    n_unip = len(unipotent_elements(spec))
    n_cell = sum(1 for m in all_matrices(spec.n, spec.p) if in_big_cell(m))
    return CountReport("steinberg", _params(spec, expected=spec.p ** (spec.n * (spec.n - 1))),
                       n_unip, n_cell)


def cor_check(beta: BraidWord, spec: GroupSpec) -> CountReport:
    bp = braid_concat(beta, full_twist(beta.system))
    return CountReport("cor", _params(spec, beta=list(beta.letters)),
                       count_U_beta(beta, spec), count_X_beta(bp, spec))


def hecke_prediction(beta: BraidWord, spec: GroupSpec, sign: str, shift_by_w0: bool = False) -> Fraction:
    """
    |G| q^{|beta|/2} tau^sign(beta) / (q - 1)^r, optionally times q^{-l(w0)}.
    """
    if sign == "-":
        tau = tau_minus_braid(beta)
    elif sign == "+":
        tau = tau_plus(eval_braid(beta))
    else:
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    q = spec.q
    shifted = LaurentPoly.v(len(beta)) * tau
    if shift_by_w0:
        shifted = shifted * LaurentPoly.v(-2 * cox_w0(beta.system).length())
    return group_order(spec) * shifted.eval_q(q) / Fraction(q - 1) ** spec.r


def hecke_count_check(beta: BraidWord, spec: GroupSpec, sign: str, shift_by_w0: bool = False) -> CountReport:
    """
    Compare |U(beta)| (sign '-') or |X(beta)| (sign '+') with the Hecke-trace prediction.

    With ``shift_by_w0`` the prediction carries an extra q^{-l(w0)}.  The X-side
    formula only matches the point counts with this shift; the U side needs none.
    """
    count = count_U_beta(beta, spec) if sign == "-" else count_X_beta(beta, spec)
    pred = hecke_prediction(beta, spec, sign, shift_by_w0)
    params = _params(spec, beta=list(beta.letters), sign=sign, r=spec.r)
    if shift_by_w0:
        params["shift_by_w0"] = True
    return CountReport("hecke-count", params, Fraction(count), pred)


def prop44_check(w: CoxElement, spec: GroupSpec, variety: str = "U") -> CountReport:
    """|U_g| |G| = |U(sigma_w)| |H_g|, or with X_g and X(sigma_w pi) when variety='X'."""
    g = weyl_lift(w, spec)
    sigma = braid_of_element(w)
    h = len(Hg_elements(g, spec))
    G = group_order(spec)
    if variety == "U":
        lhs, rhs = count_Ug(g, spec) * G, count_U_beta(sigma, spec) * h
    elif variety == "X":
        bp = braid_concat(sigma, full_twist(w.system))
        lhs, rhs = count_Xg(g, spec) * G, count_X_beta(bp, spec) * h
    else:
        raise ValueError("variety must be 'U' or 'X'")
    return CountReport("prop44", _params(spec, w=list(w.reduced_word()), variety=variety), lhs, rhs)


def bruhat_constancy_check(w: CoxElement, spec: GroupSpec, samples: int, seed: int = 0) -> CountReport:
    """
    Count U_g and V_g for random g = u w b in the Bruhat cell.

    lhs is the number of distinct (|U_g|, |V_g|) pairs seen, rhs is 1.
    """
    rng = random.Random(seed)
    wd = weyl_lift(w, spec)
    us, bs = unipotent_radical(spec), borel_elements(spec)
    seen = set()
    for _ in range(samples):
        g = rng.choice(us) @ wd @ rng.choice(bs)
        seen.add((count_Ug(g, spec), count_Vg(g, spec)))
    return CountReport("constancy", _params(spec, w=list(w.reduced_word()), samples=samples),
                       len(seen), 1, seed=seed, extra={"counts": sorted(map(list, seen))})


def closed_form_check(case: str, p: int, samples: int, seed: int = 0) -> CountReport:
    """lhs is the number of mismatched matrix entries over all samples."""
    bad, degenerate = closed_form_mismatches(case, p, samples, seed)
    return CountReport("phi-check", {"case": case, "p": p, "samples": samples, "resampled": degenerate},
                       bad, 0, seed=seed)


def vx_bijection_check(w: CoxElement, spec: GroupSpec) -> CountReport:
    """
    The map V_g -> X_g: lhs counts distinct images that lie in X_g, rhs is |X_g|.
    Injectivity is folded in by also requiring |V_g| distinct images.
    """
    g = weyl_lift(w, spec)
    xg = set(Xg_points(g, spec))
    vg = Vg_points(g, spec)
    images = {v_to_x_map(x, g, spec) for x in vg}
    good = len(images & xg) if len(images) == len(vg) else -1
    return CountReport("vx-bijection", _params(spec, w=list(w.reduced_word()), Vg=len(vg)), good, len(xg))


def phi_image_check(w: CoxElement, spec: GroupSpec) -> CountReport:
    """lhs counts x in V_g whose image under Phi is unipotent and stays in g B_+."""
    g = weyl_lift(w, spec)
    gi = g.inv()
    vg = Vg_points(g, spec)
    good = 0
    for x in vg:
        y = phi(x)
        good += is_unipotent(y) and (gi @ y).is_upper()
    return CountReport("phi-image", _params(spec, w=list(w.reduced_word())), good, len(vg))


def equivariance_check(w: CoxElement, spec: GroupSpec) -> CountReport:
    """
    Over all b in H_g and x in V_g: lhs counts pairs where b.x stays in V_g,
    Phi(b.x) = b Phi(x) b^-1, and (for GL/SL) the flag of b.x is b times the flag of x.
    """
    g = weyl_lift(w, spec)
    gi = g.inv()
    hg = Hg_elements(g, spec)
    vg = Vg_points(g, spec)
    flags = spec.family in ("GL", "SL") and spec.n <= 3
    good = 0
    for b in hg:
        bi = b.inv()
        for x in vg:
            bx = action_Vg(b, x, g)
            ok = (gi @ bx).is_upper() and phi(bx) == b @ phi(x) @ bi
            if ok and flags:
                ok = v_to_x_map(bx, g, spec) == v_to_x_map(x, g, spec).translate(b)
            good += ok
    return CountReport("equivariance", _params(spec, w=list(w.reduced_word())), good, len(hg) * len(vg))

