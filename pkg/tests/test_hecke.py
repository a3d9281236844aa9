import pytest

from hecketwist.braid import BraidWord, all_words, braid_of_element
from hecketwist.coxeter import A, B, I2, cox_enumerate
from hecketwist.errors import SizeBound
from hecketwist.hecke import (
    HeckeElement, eval_braid, hecke_mul_gen, hecke_mul_gen_inv, tau_minus_braid, tau_minus_oracle,
    tau_plus, twist_check,
)
from hecketwist.ring import DELTA, ONE, ZERO, LaurentPoly


def test_quadratic_relation():
    s = A(1).gen(1)
    ts = HeckeElement.basis(s)
    tss = hecke_mul_gen(ts, 1)
    assert tss == HeckeElement.one(A(1)) + ts.scale(DELTA)


def test_inverse_generator():
    for system in (A(2), B(2)):
        one = HeckeElement.one(system)
        for s in system.generators:
            assert hecke_mul_gen_inv(hecke_mul_gen(one, s), s) == one


def test_length_additive_product():
    for system in (A(2), B(2), I2(5)):
        for w in cox_enumerate(system):
            assert eval_braid(braid_of_element(w)) == HeckeElement.basis(w)


def test_tau_values():
    a1 = A(1)
    assert tau_plus(HeckeElement.one(a1)) == ONE
    assert tau_plus(eval_braid(BraidWord(a1, (1,)))) == ZERO
    assert tau_minus_braid(BraidWord(a1, ())) == ONE
    assert tau_minus_braid(BraidWord(a1, (1,))) == DELTA
    assert tau_minus_oracle(HeckeElement.basis(a1.gen(1))) == DELTA
    expected = LaurentPoly({3: 1, 1: -1, -1: 1, -3: -1})
    assert tau_minus_braid(BraidWord(a1, (1, 1, 1))) == expected


def test_oracle_matches_on_non_involutions():
    system = A(2)
    for beta in all_words(system, 4):
        assert tau_minus_braid(beta) == tau_minus_oracle(eval_braid(beta))


def test_oracle_size_bound():
    with pytest.raises(SizeBound):
        tau_minus_oracle(HeckeElement.one(B(3)))


def test_twist_report_json():
    rep = twist_check(BraidWord(A(2), (1, 2)))
    out = rep.to_json()
    assert out["check"] == "twist" and out["pass"] is True
    assert out["beta"] == [1, 2]
    assert out["tau_minus"] == out["tau_plus_btw"]


def test_hecke_element_json_sorted():
    h = eval_braid(BraidWord(A(1), (1, 1)))
    assert h.to_json() == [[[], [[0, 1]]], [[1], [[-1, -1], [1, 1]]]]
