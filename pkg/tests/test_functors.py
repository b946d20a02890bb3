"""Bit-mask inflation/deflation/induction/restriction and the
set-composition refinement brackets."""

from itertools import product as cartesian

import pytest

from hopftower.combinatorics import (block_index, lc_bits,
                                     set_compositions, setcomp_refines)
from hopftower.elements import TensorElement, TensorSquare, basis_words
from hopftower.functors import (def_along, dn_bracket, ind_along, inf_along,
                                inf_bracket, pointwise_twist, res_along)
from hopftower.hopf import all_ones_context, induction_context
from hopftower.theory import cyclic4, two_dim


def all_bit_masks(n):
    return cartesian((0, 1), repeat=n)


def test_inf_along_fills_ones():
    t = two_dim(3)
    x = TensorElement(2, {(1,): 5})
    assert inf_along(t, (1, 0), x) == TensorElement(3, {(1, 0): 5})
    assert inf_along(t, (0, 1), x) == TensorElement(3, {(0, 1): 5})
    assert inf_along(t, (0, 0), TensorElement(1, {(): 1})) == TensorElement(
        3, {(0, 0): 1})
    with pytest.raises(ValueError):
        inf_along(t, (1, 1), x)


def test_def_along_pairs_against_ones():
    t = two_dim(3)
    # dropping a regm1 letter kills the term, dropping a one letter keeps it
    x = TensorElement(3, {(1, 0): 2, (1, 1): 7})
    assert def_along(t, (1, 0), x) == TensorElement(2, {(1,): 2})
    assert def_along(t, (0, 1), x) == TensorElement(2)
    with pytest.raises(ValueError):
        def_along(t, (1,), x)


def test_def_inverts_inf():
    for t in (two_dim(3), cyclic4()):
        for bits in all_bit_masks(3):
            k = sum(bits)
            for w in basis_words(t.dim, k + 1):
                x = TensorElement(k + 1, {w: 3})
                assert def_along(t, bits, inf_along(t, bits, x)) == x


def test_ind_along_fills_reg():
    t = two_dim(3)
    x = TensorElement(1, {(): 1})
    assert ind_along(t, (0,), x) == TensorElement(2, {(0,): 1, (1,): 1})
    got = ind_along(t, (0, 1), TensorElement(2, {(1,): 2}))
    assert got == TensorElement(3, {(0, 1): 2, (1, 1): 2})


def test_res_after_ind_scales_by_order():
    # <reg, reg> = |G|, once per filled slot
    for t in (two_dim(3), two_dim(5), cyclic4()):
        for bits in all_bit_masks(3):
            k = sum(bits)
            zeros = len(bits) - k
            for w in basis_words(t.dim, k + 1):
                x = TensorElement(k + 1, {w: 1})
                assert res_along(t, bits, ind_along(t, bits, x)) == (
                    t.order ** zeros * x)


def test_pointwise_twist():
    t = two_dim(3)
    x = TensorElement(3, {(1, 0): 1})
    assert pointwise_twist(t, x, 1, t.one) == x
    # regm1 . regm1 = 2*one + regm1 at q=3
    assert pointwise_twist(t, x, 1, t.basis_element(1)) == TensorElement(
        3, {(0, 0): 2, (1, 0): 1})
    assert pointwise_twist(t, x, 2, t.reg) == TensorElement(
        3, {(1, 0): 1, (1, 1): 1})
    with pytest.raises(ValueError):
        pointwise_twist(t, x, 3, t.one)


def test_induction_is_inflation_twisted_by_reg():
    """Filling slots with reg = inflating with ones then multiplying the
    new coordinates pointwise by reg, coordinatewise for every mask."""
    for t in (two_dim(3), cyclic4()):
        for bits in all_bit_masks(3):
            k = sum(bits)
            for w in basis_words(t.dim, k + 1):
                x = TensorElement(k + 1, {w: 1})
                via_inf = inf_along(t, bits, x)
                for j, b in enumerate(bits, start=1):
                    if not b:
                        via_inf = pointwise_twist(t, via_inf, j, t.reg)
                assert via_inf == ind_along(t, bits, x)


def test_restriction_is_deflation_of_reg_twist():
    for t in (two_dim(3), cyclic4()):
        for bits in all_bit_masks(3):
            n = len(bits) + 1
            for w in basis_words(t.dim, n):
                x = TensorElement(n, {w: 1})
                twisted = x
                for j, b in enumerate(bits, start=1):
                    if not b:
                        twisted = pointwise_twist(t, twisted, j, t.reg)
                assert def_along(t, bits, twisted) == res_along(t, bits, x)


# -- refinement brackets --------------------------------------------------------


def test_inf_bracket_consecutive_blocks_is_the_product():
    """Two consecutive blocks insert iota exactly where the graded
    product does."""
    for ctx in (all_ones_context(two_dim(3)), induction_context(two_dim(3))):
        t = ctx.basis
        n = 4
        B = (tuple(range(1, n + 1)),)
        for k in range(1, n):
            A = (tuple(range(1, k + 1)), tuple(range(k + 1, n + 1)))
            for u in basis_words(t.dim, k):
                for v in basis_words(t.dim, n - k):
                    x = TensorElement(k, {u: 1})
                    y = TensorElement(n - k, {v: 1})
                    flat = TensorElement(n - 1, {u + v: 1})
                    assert inf_bracket(t, A, B, ctx.iota, flat) == ctx.product(
                        x, y)


def test_inf_bracket_identity_refinement():
    t = two_dim(3)
    A = ((1, 2), (3,))
    x = TensorElement(2, {(1,): 4})
    assert inf_bracket(t, A, A, t.one, x) == x
    with pytest.raises(ValueError):
        inf_bracket(t, ((3,), (1, 2)), ((1, 2), (3,)), t.one, x)


def test_dn_bracket_two_blocks_matches_coproduct():
    """Splitting the full block in two reproduces the coproduct term of
    the corresponding subset, after unshuffling sides."""
    for ctx in (all_ones_context(two_dim(3)), induction_context(two_dim(3))):
        t = ctx.basis
        n = 3
        B = (tuple(range(1, n + 1)),)
        for w in basis_words(t.dim, n):
            x = TensorElement(n, {w: 1})
            expected = TensorSquare.tensor(x, ctx.unit()) + TensorSquare.tensor(
                ctx.unit(), x)
            for mask in range(1, 2 ** n - 1):
                left = tuple(j for j in range(1, n + 1) if (mask >> (j - 1)) & 1)
                right = tuple(j for j in range(1, n + 1) if not (mask >> (j - 1)) & 1)
                A = (left, right)
                flat = dn_bracket(t, A, B, ctx.iota, ctx.alpha, ctx.beta, x)
                # entries of the flat word belong to the side of their slot
                idx = block_index(A)
                slots = [j for j in range(1, n) if lc_bits(A)[j - 1]]
                for word, coeff in flat.terms.items():
                    lw = tuple(l for j, l in zip(slots, word) if idx[j] == 0)
                    rw = tuple(l for j, l in zip(slots, word) if idx[j] == 1)
                    expected.add_term(
                        ((len(left), lw), (len(right), rw)), coeff)
            assert expected == ctx.coproduct(x)


def test_dn_bracket_validates():
    t = two_dim(3)
    x = TensorElement(3, {(0, 0): 1})
    with pytest.raises(ValueError):
        dn_bracket(t, ((1,), (2,)), ((1, 2, 3),), t.one, t.one, t.one, x)


def test_brackets_compose_along_refinement_chains():
    """inf along A->B then B->C agrees with inf along A->C when iota is
    the all-ones element (the middle statistics cancel)."""
    t = two_dim(3)
    C = ((1, 2, 3),)
    for B in set_compositions(3):
        for A in set_compositions(3):
            if not (setcomp_refines(A, B) and setcomp_refines(B, C)):
                continue
            k = sum(lc_bits(A)) + 1
            for w in basis_words(t.dim, k):
                x = TensorElement(k, {w: 1})
                two_step = inf_bracket(t, B, C, t.one,
                                       inf_bracket(t, A, B, t.one, x))
                assert two_step == inf_bracket(t, A, C, t.one, x)
