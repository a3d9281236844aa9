"""
Point counts of the varieties attached to a coset g B_+ and to positive braids.

For g in G(F_p):

* ``U_g``  unipotent elements of g B_+
* ``V_g``  elements of g B_+ that factor as x_+ x_-
* ``X_g``  flags transverse to both the standard flag and g B_+
* ``H_g``  B_+ intersected with g B_+ g^-1

For a positive word s_1 ... s_k:

* ``X(b)``  closed chains F_k -s_1-> F_1 -s_2-> ... -s_k-> F_k of flags
* ``U(b)``  pairs (u, chain) with u unipotent and u^-1 F_k -s_1-> F_1 ... -> F_k
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..braid import BraidWord
from ..coxeter import cox_w0
from ..errors import NotInBigCell, NotInHg, SizeBound
from .flags import Flag, enumerate_flags, flag_canonicalize, relative_position, standard_flag
from .groups import (
    GroupSpec, borel_elements, decompose_borel, enumerate_borel_coset, in_big_cell,
    is_unipotent, ul_factorize, weyl_lift,
)
from .linalg import Mat, all_matrices

__all__ = [
    "count_Ug", "count_Vg", "Ug_points", "Vg_points", "phi_apply", "phi",
    "action_Vg", "Hg_elements", "in_Hg", "count_Xg", "Xg_points", "v_to_x_map",
    "nilpotent_matrices", "unipotent_elements", "count_X_beta", "count_U_beta",
    "BRAID_LEN_BOUND",
]

BRAID_LEN_BOUND = 10
NILPOTENT_SCAN_BUDGET = 20_000


def _require_flag_group(spec: GroupSpec):
    if spec.family not in ("GL", "SL") or spec.n > 3:
        raise SizeBound(f"flag enumeration is limited to GL/SL with n <= 3, got {spec}")


def Ug_points(g: Mat, spec: GroupSpec) -> list[Mat]:
    return [x for x in enumerate_borel_coset(g, spec) if is_unipotent(x)]


def Vg_points(g: Mat, spec: GroupSpec) -> list[Mat]:
    return [x for x in enumerate_borel_coset(g, spec) if in_big_cell(x)]


def count_Ug(g: Mat, spec: GroupSpec) -> int:
    return sum(1 for x in enumerate_borel_coset(g, spec) if is_unipotent(x))


def count_Vg(g: Mat, spec: GroupSpec) -> int:
    return sum(1 for x in enumerate_borel_coset(g, spec) if in_big_cell(x))


def phi_apply(x_plus: Mat, x_minus: Mat) -> Mat:
    """x_+ x_- x_+^-1."""
    return x_plus @ x_minus @ x_plus.inv()


def phi(x: Mat) -> Mat:
    """Phi on the big cell, factoring x first."""
    return phi_apply(*ul_factorize(x))


def in_Hg(b: Mat, g: Mat) -> bool:
    return b.is_upper() and (g.inv() @ b @ g).is_upper()


def Hg_elements(g: Mat, spec: GroupSpec) -> list[Mat]:
    gi = g.inv()
    return [b for b in borel_elements(spec) if (gi @ b @ g).is_upper()]


def action_Vg(b: Mat, x: Mat, g: Mat | None = None) -> Mat:
    """
    The action t u . x_+ x_- = (t u x_+ t^-1)(t x_- t^-1) of B_+ on the big cell.

    ``b`` is split as t u with t its diagonal; when ``g`` is given, b must lie
    in H_g so that the result stays in g B_+.
    """
    if g is not None and not in_Hg(b, g):
        raise NotInHg(repr(b))
    t, _ = decompose_borel(b)
    u = t.inv() @ b
    x_plus, x_minus = ul_factorize(x)
    ti = t.inv()
    return (t @ u @ x_plus @ ti) @ (t @ x_minus @ ti)


def _opposite(spec: GroupSpec) -> Mat:
    return weyl_lift(cox_w0(spec.weyl), spec)


def Xg_points(g: Mat, spec: GroupSpec) -> list[Flag]:
    _require_flag_group(spec)
    w0 = cox_w0(spec.weyl)
    std = standard_flag(spec.n, spec.p)
    target = flag_canonicalize(g)
    return [
        f for f in enumerate_flags(spec.n, spec.p)
        if relative_position(std, f) == w0 and relative_position(f, target) == w0
    ]


def count_Xg(g: Mat, spec: GroupSpec) -> int:
    return len(Xg_points(g, spec))


def v_to_x_map(x: Mat, g: Mat, spec: GroupSpec) -> Flag:
    """x = g u t  |->  the flag g u w0 B_+."""
    if not in_big_cell(x):
        raise NotInBigCell(repr(x))
    _, u = decompose_borel(g.inv() @ x)
    return flag_canonicalize(g @ u @ _opposite(spec))


@lru_cache(maxsize=None)
def nilpotent_matrices(n: int, p: int) -> tuple[Mat, ...]:
    """Every nilpotent n x n matrix over F_p, found by scanning the whole matrix space."""
    if p ** (n * n) > NILPOTENT_SCAN_BUDGET:
        raise SizeBound(f"p^(n^2) = {p ** (n * n)} matrices exceeds scan budget")
    return tuple(m for m in all_matrices(n, p) if (m ** n).is_zero())


def unipotent_elements(spec: GroupSpec) -> tuple[Mat, ...]:
    """All unipotent elements of G(F_p) for GL/SL (the same set for both)."""
    one = Mat.identity(spec.n, spec.p)
    return tuple(one + m for m in nilpotent_matrices(spec.n, spec.p))


@lru_cache(maxsize=None)
def _flag_graph(n: int, p: int):
    """Flags, their index, and for each generator the 0/1 adjacency matrix."""
    flags = enumerate_flags(n, p)
    index = {f: i for i, f in enumerate(flags)}
    sys_ = None
    adj = {}
    for a, f in enumerate(flags):
        for b, h in enumerate(flags):
            w = relative_position(f, h)
            sys_ = w.system
            if w.length() == 1:
                s = next(s for s in w.system.generators if w == w.system.gen(s))
                adj.setdefault(s, np.zeros((len(flags), len(flags)), dtype=np.int64))[a, b] = 1
    for s in (sys_.generators if sys_ else ()):
        adj.setdefault(s, np.zeros((len(flags), len(flags)), dtype=np.int64))
    return flags, index, adj


def _chain_matrix(beta: BraidWord, spec: GroupSpec) -> np.ndarray:
    """M[a, b] = number of chains F_a -s_1-> . -> . -s_k-> F_b."""
    _require_flag_group(spec)
    if beta.system != spec.weyl:
        raise ValueError(f"braid over {beta.system} does not match {spec.weyl}")
    if len(beta) > BRAID_LEN_BOUND:
        raise SizeBound(f"|beta| = {len(beta)} exceeds bound {BRAID_LEN_BOUND}")
    flags, _, adj = _flag_graph(spec.n, spec.p)
    m = np.eye(len(flags), dtype=np.int64)
    for s in beta.letters:
        m = m @ adj[s]
    return m


def count_X_beta(beta: BraidWord, spec: GroupSpec) -> int:
    # seeding F_k at every flag and walking the word back to F_k is the trace
    return int(np.trace(_chain_matrix(beta, spec)))


def count_U_beta(beta: BraidWord, spec: GroupSpec) -> int:
    m = _chain_matrix(beta, spec)
    flags, index, _ = _flag_graph(spec.n, spec.p)
    total = 0
    for u in unipotent_elements(spec):
        ui = u.inv()
        for b, f in enumerate(flags):
            total += int(m[index[f.translate(ui)], b])
    return total
