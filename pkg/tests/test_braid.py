import pytest

from hecketwist.braid import BraidWord, all_words, braid_concat, braid_of_element, full_twist, parse_letters
from hecketwist.coxeter import A, B, I2, cox_enumerate, cox_reduced_words, cox_w0
from hecketwist.errors import SystemMismatch
from hecketwist.hecke import eval_braid


def test_letters_validated():
    with pytest.raises(ValueError):
        BraidWord(A(1), (1, 2))
    assert len(BraidWord(A(2), (1, 2, 1))) == 3


def test_braid_of_element():
    assert braid_of_element(A(2).identity()).letters == ()
    assert braid_of_element(A(2).gen(2)).letters == (2,)
    assert len(braid_of_element(cox_w0(A(2)))) == 3


def test_full_twist():
    assert full_twist(A(1)).letters == (1, 1)
    assert len(full_twist(A(2))) == 6
    assert len(full_twist(I2(4))) == 8


def test_concat():
    b = BraidWord(A(2), (1, 2))
    assert braid_concat(b, BraidWord(A(2), ())) == b
    assert braid_concat(BraidWord(A(2), (1,)), BraidWord(A(2), (2,))).letters == (1, 2)
    assert len(braid_concat(b, full_twist(A(2)))) == len(b) + 6
    assert b * b == b.power(2)
    with pytest.raises(SystemMismatch):
        braid_concat(b, BraidWord(B(2), (1,)))


def test_parse_letters():
    assert parse_letters("1,2 1") == (1, 2, 1)
    assert parse_letters("  ") == ()


def test_all_words_counts():
    # 1 + 2 + ... + 2^6 words over two generators
    assert sum(1 for _ in all_words(A(2), 6)) == 127
    assert sum(1 for _ in all_words(A(1), 3)) == 4


@pytest.mark.parametrize("system", [A(2), B(2), I2(5)])
def test_reduced_words_agree_in_hecke(system):
    for w in cox_enumerate(system):
        values = {eval_braid(BraidWord(system, word)) for word in cox_reduced_words(w)}
        assert len(values) == 1
