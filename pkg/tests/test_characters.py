"""Linear characters: morphism checking, convolution group law, inverses,
oddness, and the nonnegativity screen."""

from fractions import Fraction

import pytest

from hopftower.characters import (ContextMismatch, LinearCharacter,
                                  NotAMorphism, check_morphism,
                                  constant_character, convolve,
                                  counit_character, inverse, is_odd,
                                  looks_module_supported)
from hopftower.elements import TensorElement
from hopftower.hopf import all_ones_context, induction_context
from hopftower.theory import TheoryError, two_dim


def ones_ctx(q=3):
    return all_ones_context(two_dim(q))


def ind_ctx(q=3):
    return induction_context(two_dim(q))


def test_component_validation():
    ctx = ones_ctx()
    with pytest.raises(TheoryError):
        LinearCharacter(ctx, [])
    with pytest.raises(TheoryError):
        LinearCharacter(ctx, [ctx.unit(2)])  # degree-0 part must be 1
    with pytest.raises(TheoryError):
        LinearCharacter(ctx, [ctx.unit(), TensorElement(2)])


def test_evaluation():
    ctx = ones_ctx()
    chi = constant_character(ctx, ctx.basis.reg, 3)
    assert chi(ctx.unit(5)) == 5
    assert chi(TensorElement(2, {(0,): 1})) == 1
    # gram weight of the index-1 letter is q - 1 = 2
    assert chi(TensorElement(2, {(1,): 1})) == 2
    assert chi(TensorElement(3, {(0, 1): 1, (1, 1): 3})) == 2 + 3 * 4
    with pytest.raises(TheoryError):
        chi(TensorElement(4, {(0, 0, 0): 1}))


def test_counit_and_constants_are_morphisms():
    for ctx in (ones_ctx(), ind_ctx()):
        assert check_morphism(counit_character(ctx, 4)) is None
        assert check_morphism(constant_character(ctx, ctx.alpha, 4)) is None
        assert check_morphism(constant_character(ctx, ctx.beta, 4)) is None
    # any element pairing to 1 with iota works; reg does for iota = one
    assert check_morphism(
        constant_character(ones_ctx(), two_dim(3).reg, 4)) is None


def test_check_morphism_reports_first_failure():
    ctx = ones_ctx()
    bad = constant_character(ctx, 2 * ctx.basis.one, 3)
    got = check_morphism(bad)
    assert got is not None
    n, j, lhs, rhs = got
    assert (n, j) == (2, 1)
    assert lhs == {(): 2}
    assert rhs == {(): 1}


def test_convolution_identity_and_commutativity_spot():
    ctx = ind_ctx()
    eps = counit_character(ctx, 3)
    chi = constant_character(ctx, ctx.alpha, 3)
    assert convolve(eps, chi) == chi
    assert convolve(chi, eps) == chi


def test_convolution_associative():
    ctx = ind_ctx()
    a = constant_character(ctx, ctx.alpha, 3)
    b = constant_character(ctx, ctx.beta, 3)
    half = (ctx.alpha + ctx.beta) * Fraction(1, 2)
    c = constant_character(ctx, half, 3)
    assert convolve(convolve(a, b), c) == convolve(a, convolve(b, c))


def test_inverse_is_two_sided():
    for ctx in (ones_ctx(), ind_ctx()):
        chi = constant_character(ctx, ctx.alpha, 3)
        inv = inverse(chi)
        eps = counit_character(ctx, 3)
        assert convolve(chi, inv) == eps
        assert convolve(inv, chi) == eps


def test_inverse_of_all_ones_constant_alternates_signs():
    ctx = ones_ctx()
    chi = constant_character(ctx, ctx.basis.one, 5)
    inv = inverse(chi)
    for n in range(1, 6):
        sign = -1 if n % 2 else 1
        assert inv.components[n] == sign * chi.components[n]


def test_is_odd():
    assert is_odd(constant_character(ones_ctx(), two_dim(3).one, 5))
    assert is_odd(counit_character(ones_ctx(), 4))
    # the same functional over the induction context is not odd
    assert not is_odd(constant_character(ind_ctx(), two_dim(3).one, 4))


def test_group_operations_reject_non_morphisms():
    ctx = ones_ctx()
    bad = constant_character(ctx, 2 * ctx.basis.one, 3)
    good = constant_character(ctx, ctx.basis.one, 3)
    with pytest.raises(NotAMorphism):
        convolve(bad, good)
    with pytest.raises(NotAMorphism):
        inverse(bad)


def test_context_mismatch():
    a = constant_character(ones_ctx(), two_dim(3).one, 3)
    b = constant_character(ind_ctx(), two_dim(3).one, 3)
    with pytest.raises(ContextMismatch):
        convolve(a, b)


def test_looks_module_supported():
    ctx = ones_ctx()
    assert looks_module_supported(constant_character(ctx, ctx.basis.one, 4))
    assert looks_module_supported(constant_character(ctx, ctx.basis.reg, 4))
    # odd components of the inverse go negative
    assert not looks_module_supported(
        inverse(constant_character(ctx, ctx.basis.one, 4)))


def test_character_equality_and_hash():
    a = constant_character(ones_ctx(), two_dim(3).one, 3)
    b = constant_character(ones_ctx(), two_dim(3).one, 3)
    assert a == b
    assert hash(a) == hash(b)
    assert a != counit_character(ones_ctx(), 3)
