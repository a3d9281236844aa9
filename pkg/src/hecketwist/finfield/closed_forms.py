"""
Randomised checks of explicit formulas for x_+ x_- |-> x_+ x_- x_+^-1 in low rank.

Each case draws coordinates over F_p, builds the matrices from the closed
forms, and compares them entrywise with direct matrix arithmetic:

* ``*-gen``: the general product formula for Phi in terms of the
  coordinates of x_+ and x_-.
* per-cell cases: a parametrised point of V_g is factored, the coordinates
  read off the factors are compared, Phi is computed and compared to the
  displayed image, and the coordinate change onto U_g is checked against
  the displayed form of U_g (including its defining equation).
"""

from __future__ import annotations

import random
from typing import Callable

from ..coxeter import A, B
from ..errors import DegenerateSample, NotInBigCell
from .groups import GroupSpec, in_group, is_unipotent, sp4_lower, sp4_upper, ul_factorize, weyl_lift
from .linalg import Mat

__all__ = ["CASES", "run_case", "closed_form_mismatches"]


class _Field:
    def __init__(self, p: int):
        self.p = p

    def inv(self, x: int) -> int:
        if x % self.p == 0:
            raise DegenerateSample("division by zero")
        return pow(x, -1, self.p)

    def rand(self, rng: random.Random) -> int:
        return rng.randrange(self.p)

    def rand_unit(self, rng: random.Random) -> int:
        return rng.randrange(1, self.p)


def _diff(expected, actual: Mat) -> int:
    exp = Mat(expected, actual.p)
    return sum(1 for i in range(actual.n) for j in range(actual.n) if exp[i, j] != actual[i, j])


def _in_coset(x: Mat, g: Mat) -> bool:
    return (g.inv() @ x).is_upper()


def _cell_checks(V, g: Mat, spec: GroupSpec, coords: dict, reads: dict, phi_expected, U_expected,
                 equation=None) -> int:
    """Shared plumbing for the per-cell cases; returns the mismatch count."""
    p = spec.p
    x = Mat(V, p)
    bad = 0
    bad += not in_group(x, spec)
    bad += not _in_coset(x, g)
    try:
        xp, xm = ul_factorize(x)
    except NotInBigCell:
        return bad + x.n * x.n
    for (which, i, j), want in reads.items():
        got = (xp if which == "+" else xm)[i, j]
        bad += got != want % p
    phi_x = xp @ xm @ xp.inv()
    bad += _diff(phi_expected, phi_x)
    bad += _diff(U_expected, phi_x)
    bad += not is_unipotent(phi_x)
    bad += not _in_coset(phi_x, g)
    if equation is not None:
        bad += equation % p != 0
    return bad


def _sl2_gen(F: _Field, rng):
    p = F.p
    b, b1 = F.rand(rng), F.rand(rng)
    xp = Mat([[1, b], [0, 1]], p)
    xm = Mat([[1, 0], [b1, 1]], p)
    expected = [[1 + b * b1, -b * b * b1], [b1, 1 - b * b1]]
    return _diff(expected, xp @ xm @ xp.inv())


def _sl2_w0(F: _Field, rng):
    p = F.p
    spec = GroupSpec.sl(2, p)
    g = weyl_lift(A(1).word([1]), spec)
    b1 = F.rand_unit(rng)
    V = [[0, -F.inv(b1)], [b1, 1]]
    X = b1
    U = [[0, -F.inv(X)], [X, 2]]
    # the same matrix reads as Phi_g in the coordinate b'
    return _cell_checks(V, g, spec, {}, {("-", 1, 0): b1}, U, U)


def _sl3_gen(F: _Field, rng):
    p = F.p
    a, b, c, a1, b1, c1 = (F.rand(rng) for _ in range(6))
    xp = Mat([[1, a, b], [0, 1, c], [0, 0, 1]], p)
    xm = Mat([[1, 0, 0], [a1, 1, 0], [b1, c1, 1]], p)
    expected = [
        [1 + a * a1 + b * b1,
         b * c1 - a * a * a1 - a * b * b1,
         -a * b * a1 - b * b * b1 - b * c * c1 + a * a * c * a1 + a * b * c * b1],
        [a1 + c * b1,
         1 - a * a1 + c * c1 - a * c * b1,
         -b * a1 + a * c * a1 - b * c * b1 - c * c * c1 + a * c * c * b1],
        [b1, c1 - a * b1, 1 - b * b1 - c * c1 + a * c * b1],
    ]
    return _diff(expected, xp @ xm @ xp.inv())


def _sl3_ts(F: _Field, rng):
    p = F.p
    spec = GroupSpec.sl(3, p)
    g = weyl_lift(A(2).word([2, 1]), spec)
    a1, c, b = F.rand_unit(rng), F.rand_unit(rng), F.rand(rng)
    ia1, ic = F.inv(a1), F.inv(c)
    V = [[0, -ia1, b], [0, 0, c], [-a1 * ic, -ic, 1]]
    phi_x = [[0, -ia1, b + c * ia1], [0, 0, c], [-a1 * ic, -ic * (2 - b * a1 * ic), 3]]
    Y, Z, C = -ia1, c, b + c * ia1
    iYZ = F.inv(Y * Z)
    U = [[0, Y, C], [0, 0, Z], [iYZ, -F.inv(Z) * (3 + C * iYZ), 3]]
    reads = {("+", 0, 2): b, ("+", 1, 2): c, ("-", 1, 0): a1}
    return _cell_checks(V, g, spec, {}, reads, phi_x, U)


def _sl3_st(F: _Field, rng):
    p = F.p
    spec = GroupSpec.sl(3, p)
    g = weyl_lift(A(2).word([1, 2]), spec)
    b, a1, c = F.rand_unit(rng), F.rand_unit(rng), F.rand(rng)
    iba = F.inv(b * a1)
    V = [[0, 0, b], [a1, 1 + c * iba, c], [0, iba, 1]]
    phi_x = [[0, 0, b], [a1, 2 + c * iba, -(b * a1 + c * c * iba + c)], [0, iba, 1 - c * iba]]
    # A is the middle entry of Phi: 2 + c/(ba'), not 1 + c/(ba')
    X, Y, A_ = a1, iba, 2 + c * iba
    U = [[0, 0, F.inv(X * Y)], [X, A_, -F.inv(Y) * (3 - 3 * A_ + A_ * A_)], [0, Y, 3 - A_]]
    reads = {("+", 0, 2): b, ("+", 1, 2): c, ("-", 1, 0): a1}
    return _cell_checks(V, g, spec, {}, reads, phi_x, U)


def _sl3_w0(F: _Field, rng):
    p = F.p
    spec = GroupSpec.sl(3, p)
    g = weyl_lift(A(2).word([1, 2, 1]), spec)
    b = F.rand_unit(rng)
    if rng.random() < 0.1:
        # the fibre over bb' = -1, where c = 0 and c' is free
        b1, c, c1 = (-F.inv(b)) % p, 0, F.rand(rng)
    else:
        b1, c = F.rand_unit(rng), F.rand_unit(rng)
        c1 = -(1 + F.inv(b * b1)) * F.inv(c)
    ibb = F.inv(b * b1)
    V = [[0, 0, b], [0, 1 + c1 * c, c], [b1, c1, 1]]
    phi_x = [[0, 0, b], [0, 1 + c * c1, (1 + ibb) * c], [b1, (1 + b * b1) * c1, 2 - c * c1]]
    X, Z, A_, C = b1, b, (1 + b * b1) * c1, (1 + ibb) * c
    iXZ = F.inv(X * Z)
    U = [[0, 0, Z], [0, -iXZ, C], [X, A_, 3 + iXZ]]
    eq_V = 1 + b * b1 + (b * b1) * (c * c1)
    eq_U = (1 + iXZ) ** 3 + A_ * C * iXZ
    reads = {("+", 0, 2): b, ("+", 1, 2): c, ("-", 2, 0): b1, ("-", 2, 1): c1}
    return _cell_checks(V, g, spec, {}, reads, phi_x, U, equation=eq_V) + (eq_U % p != 0)


def _sp4_gen(F: _Field, rng):
    p = F.p
    a, b, c, d, a1, b1, c1, d1 = (F.rand(rng) for _ in range(8))
    xp, xm = sp4_upper(a, b, c, d, p), sp4_lower(a1, b1, c1, d1, p)
    f1 = b * a1 * d1 + a * d * a1 * d1
    g1 = a * a1 + b * b1 + c * c1 + a * d * b1
    g2 = -a * a1 + b * b1 + 4 * d * d1 - a * b * c1 - 3 * a * d * b1 + a * a * d * c1
    f12 = -(c + a * b + a * a * d) * a1 * d1
    g12 = 2 * b * d1 + c * b1 - a * (a * a1 + b * b1 + c * c1 - 2 * d * d1 + a * d * b1)
    f13 = (-c * a1 - b * (a * a1 + b * b1 + c * c1 + 4 * d * d1) - 2 * c * d * b1
           + a * d * (a * a1 + c * c1 - 4 * d * d1 + a * d * b1))
    g13 = -(b * b - 2 * c * d - a * a * d * d) * a1 * d1
    f21 = 2 * d * a1 * d1
    g21 = a1 + b * c1 + 2 * d * b1 - a * d * c1
    f31 = b1 - a * c1
    g31 = a1 * d1
    h14 = -c * (2 * a * a1 + 2 * b * b1 + c * c1) - 2 * b * b * d1 - 2 * a * d * (c * b1 + 2 * b * d1 + a * d * d1)
    h23 = (-2 * b * a1 + 2 * d * (a * a1 - 2 * b * b1 - 4 * d * d1) - b * b * c1
           + a * d * (2 * b * c1 + 4 * d * b1 - a * d * c1))
    h32 = 2 * d1 - 2 * a * b1 + a * a * c1
    h41 = c1
    expected = [
        [1 + f1 + g1, f12 + g12, f13 + g13, h14],
        [f21 + g21, 1 - f1 + g2, h23, f13 - g13],
        [f31 + g31, h32, 1 - f1 - g2, f12 - g12],
        [h41, f31 - g31, f21 - g21, 1 + f1 - g1],
    ]
    bad = _diff(expected, xp @ xm @ xp.inv())
    spec = GroupSpec.sp4(p)
    return bad + (not in_group(xp, spec)) + (not in_group(xm, spec))


def _sp4_sts(F: _Field, rng):
    p = F.p
    spec = GroupSpec.sp4(p)
    g = weyl_lift(B(2).word([1, 2, 1]), spec)
    c, a, d, a1 = F.rand_unit(rng), F.rand(rng), F.rand(rng), F.rand(rng)
    u = 1 + a * a1
    iu, ic, half = F.inv(u), F.inv(c), F.inv(2)
    V = [
        [0, 0, 0, c],
        [0, iu, 2 * u * d - c * a1 * a1, c * a1 - 2 * a * d],
        [0, 0, u, -a],
        [-ic, -a * ic * iu, -a1, 1],
    ]
    phi_x = [
        [0, 0, 0, c],
        [0, iu, 2 * a * d * a1 * (2 + a * a1) * iu - c * a1 * a1,
         2 * a * a * d * a1 - a * a * c * a1 ** 3 * iu],
        [0, 0, u, a * a * a1],
        [-ic, a * a * a1 * ic * iu, -2 * a * a * d * a1 * ic * iu, 3 - a * a1 - iu],
    ]
    X = ic
    Y = iu
    A_ = -a * a * a1 * iu
    B_ = a * a * d * a1 * (u + iu) - half * a * a * c * a1 ** 3
    D = a * d * a1 * (2 + a * a1) - half * c * a1 * a1 * u
    iY = F.inv(Y)
    U = [
        [0, 0, 0, F.inv(X)],
        [0, Y, 2 * Y * D, Y * (B_ - A_ * D)],
        [0, 0, iY, -A_ * iY],
        [-X, -X * A_, -X * (B_ + A_ * D), 4 - Y - iY],
    ]
    eq_U = X * A_ * (Y * (B_ - A_ * D) - iY * (B_ + A_ * D)) - iY * iY * (1 - Y) ** 4
    reads = {("+", 0, 1): a, ("+", 1, 2): 2 * d, ("+", 0, 3): c, ("-", 1, 0): a1}
    return _cell_checks(V, g, spec, {}, reads, phi_x, U, equation=eq_U)


CASES: dict[str, Callable] = {
    "SL2-gen": _sl2_gen,
    "SL2-w0": _sl2_w0,
    "SL3-gen": _sl3_gen,
    "SL3-ts": _sl3_ts,
    "SL3-st": _sl3_st,
    "SL3-w0": _sl3_w0,
    "SP4-gen": _sp4_gen,
    "SP4-sts": _sp4_sts,
}


def run_case(case: str, p: int, rng: random.Random) -> int:
    """Mismatched entries for one accepted sample; raises DegenerateSample to ask for another."""
    if case not in CASES:
        raise ValueError(f"unknown case {case!r}; choose from {sorted(CASES)}")
    if case.startswith("SP4") and p == 2:
        raise ValueError("Sp4 cases need odd p")
    return CASES[case](_Field(p), rng)


def closed_form_mismatches(case: str, p: int, samples: int, seed: int, max_resample: int = 10_000):
    """(total mismatched entries, degenerate draws) over ``samples`` accepted samples."""
    rng = random.Random(seed)
    mismatches = degenerate = 0
    done = 0
    while done < samples:
        try:
            mismatches += run_case(case, p, rng)
            done += 1
        except DegenerateSample:
            degenerate += 1
            if degenerate > max_resample:
                raise
    return mismatches, degenerate
