from fractions import Fraction

import pytest

from hecketwist.errors import OddExponent
from hecketwist.ring import DELTA, ONE, V, ZERO, LaurentPoly, lp_add, lp_bar, lp_eval_q, lp_mul, lp_neg


def test_zero_terms_dropped():
    p = LaurentPoly({2: 0, 1: 3, -1: 0})
    assert p.terms == {1: 3}
    assert LaurentPoly({5: 0}) == ZERO
    assert ZERO.is_zero()


def test_delta_squared():
    # (v - v^-1)^2 = v^2 - 2 + v^-2
    assert DELTA * DELTA == LaurentPoly({2: 1, 0: -2, -2: 1})


def test_unit_monomial_inverse():
    assert V ** -1 == LaurentPoly.v(-1)
    assert V * V ** -1 == ONE
    with pytest.raises(ValueError):
        DELTA ** -1


def test_bar():
    assert lp_bar(LaurentPoly({3: 2, -1: -1})) == LaurentPoly({-3: 2, 1: -1})
    assert DELTA.bar() == -DELTA


def test_eval_q():
    assert lp_eval_q(LaurentPoly({2: 1, -2: 1}), 2) == Fraction(5, 2)
    assert LaurentPoly.q(3).eval_q(3) == 27
    with pytest.raises(OddExponent):
        V.eval_q(2)


def test_exact_div():
    num = LaurentPoly({-3: 1, -1: -1, 1: 1, 3: -1})
    den = LaurentPoly({-1: 1, 1: -1})
    assert num.exact_div(den) == LaurentPoly({-2: 1, 2: 1})
    assert ONE.exact_div(DELTA) is None
    assert ZERO.exact_div(DELTA) == ZERO


def test_json_round_trip():
    p = LaurentPoly({-4: 7, 0: 1, 3: -2})
    assert p.to_json() == [[-4, 7], [0, 1], [3, -2]]
    assert LaurentPoly.from_json(p.to_json()) == p


def test_str():
    assert str(LaurentPoly({2: 1, -2: -1})) == "v^2 - v^-2"
    assert str(ZERO) == "0"


def test_functional_aliases():
    a, b = LaurentPoly({1: 2}), LaurentPoly({-1: 1, 0: 3})
    assert lp_add(a, b) == a + b
    assert lp_mul(a, b) == a * b
    assert lp_neg(a) == -a
    assert a - a == ZERO
    assert 1 + a == a + ONE


def test_hash_consistent():
    assert len({LaurentPoly({1: 1}), LaurentPoly([(1, 1)]), V}) == 1
