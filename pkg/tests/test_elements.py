"""Sparse graded words and tensor squares."""

from fractions import Fraction

import pytest

from hopftower.elements import (TensorElement, TensorSquare, basis_words,
                                expand_letters)


def test_degree_word_length_validation():
    TensorElement(3, {(0, 1): 1})
    with pytest.raises(ValueError):
        TensorElement(3, {(0,): 1})
    with pytest.raises(ValueError):
        TensorElement(1, {(0,): 1})  # degree 1 is the empty word
    with pytest.raises(ValueError):
        TensorElement(-1)


def test_zero_terms_are_dropped():
    x = TensorElement(2, {(0,): 0})
    assert x.terms == {} and not x
    y = TensorElement(2, [((0,), 1), ((0,), -1)])
    assert not y
    assert TensorElement(2, {(1,): 1}) - TensorElement(2, {(1,): 1}) == (
        TensorElement.zero(2))


def test_arithmetic():
    x = TensorElement(2, {(0,): 1, (1,): 2})
    y = TensorElement(2, {(1,): Fraction(1, 2)})
    assert (x + y).terms == {(0,): 1, (1,): Fraction(5, 2)}
    assert (x - y).terms == {(0,): 1, (1,): Fraction(3, 2)}
    assert (3 * y).terms == {(1,): Fraction(3, 2)}
    assert (y * 0) == TensorElement.zero(2)
    assert (-x).coefficient((1,)) == -2
    with pytest.raises(ValueError):
        x + TensorElement(3)


def test_constructors_and_lookup():
    assert TensorElement.unit().terms == {(): 1}
    assert TensorElement.unit(5).coefficient(()) == 5
    b = TensorElement.basis(4, (1, 0, 1))
    assert b.coefficient((1, 0, 1)) == 1
    assert b.coefficient((0, 0, 0)) == 0
    assert b.sorted_terms() == [((1, 0, 1), Fraction(1))]


def test_equality_and_hash():
    a = TensorElement(2, {(0,): Fraction(2, 4)})
    b = TensorElement(2, {(0,): Fraction(1, 2)})
    assert a == b and hash(a) == hash(b)
    assert a != TensorElement(3, {(0, 0): Fraction(1, 2)})
    assert "TensorElement" in repr(a)


def test_basis_words_counts():
    for d in (2, 3):
        assert list(basis_words(d, 0)) == [()]
        assert list(basis_words(d, 1)) == [()]
        for n in range(2, 7):
            words = list(basis_words(d, n))
            assert len(words) == d ** (n - 1)
            assert len(set(words)) == len(words)
    assert list(basis_words(2, 3)) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_expand_letters():
    # fixed letters pass straight through
    assert expand_letters([0, 1], 2) == {(0, 1): 2}
    # coordinate tuples branch over nonzero entries
    out = expand_letters([(1, -2), 1])
    assert out == {(0, 1): 1, (1, 1): -2}
    # a zero template annihilates everything
    assert expand_letters([0, (0, 0)]) == {}
    assert expand_letters([], Fraction(1, 3)) == {(): Fraction(1, 3)}


def test_tensor_square_basic():
    x = TensorElement(2, {(0,): 2})
    y = TensorElement(1, {(): 3})
    sq = TensorSquare.tensor(x, y)
    assert sq.terms == {((2, (0,)), (1, ())): 6}
    sq.add_term(((2, (0,)), (1, ())), -6)
    assert not sq and sq == TensorSquare()


def test_tensor_square_arithmetic():
    a = TensorSquare({((1, ()), (1, ())): 1})
    b = TensorSquare({((1, ()), (1, ())): Fraction(1, 2),
                      ((0, ()), (2, (1,))): 1})
    s = a + b
    assert s.terms[((1, ()), (1, ()))] == Fraction(3, 2)
    assert (s - a) == b
    assert (2 * b).terms[((0, ()), (2, (1,)))] == 2
    assert sorted(k for k, _ in b.sorted_terms())[0][0] == (0, ())
    assert "TensorSquare" in repr(b)
