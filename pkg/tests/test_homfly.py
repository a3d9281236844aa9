import pytest

from hecketwist.braid import BraidWord, all_words
from hecketwist.coxeter import A, B
from hecketwist.homfly import extreme_coeff, kalman_check
from hecketwist.ring import LaurentPoly


def test_trefoil_lowest_coefficient():
    c = extreme_coeff(BraidWord(A(1), (1, 1, 1)), "-")
    # q + q^-1
    assert c.value() == LaurentPoly({2: 1, -2: 1})
    assert c.a_degree == 2
    assert c.strands == 2


def test_unknot():
    c = extreme_coeff(BraidWord(A(1), (1,)), "-")
    assert c.value() == LaurentPoly({0: 1})


def test_kalman_small_words():
    for beta in all_words(A(2), 3):
        rep = kalman_check(beta)
        assert rep.passed and rep.twist_passed
        assert rep.aligned_degree == len(beta) + 2


def test_kalman_json():
    out = kalman_check(BraidWord(A(1), (1, 1, 1))).to_json()
    assert out["pass"] is True
    assert out["lhs"]["value"] == [[-2, 1], [2, 1]]
    assert out["rhs_aligned_a_degree"] == 4


def test_type_a_only():
    with pytest.raises(ValueError):
        extreme_coeff(BraidWord(B(2), (1,)), "-")


def test_bad_sign():
    with pytest.raises(ValueError):
        extreme_coeff(BraidWord(A(1), (1,)), "0")
