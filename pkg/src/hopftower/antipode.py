"""Four independent routes to the antipode.

``antipode_closed`` sums over integer compositions of the degree: the
blocks, reversed, contribute difference letters (letter minus its
alpha-pairing times iota) joined by iota separators, weighted by beta
pairings of the boundary letters and signed by block count.

``antipode_all_setcomps`` evaluates the defining sum over every ordered
set partition of the tensor positions, straightening each one;
``antipode_toggle_free`` restricts that sum to the 3^(n-1) toggle-free set
compositions, which survive the sign-reversing cancellation.

``antipode_oracle`` uses none of the formulas: it solves the convolution
equation m(S ⊗ id)Δ = unit∘counit degree by degree.
"""

from __future__ import annotations

from fractions import Fraction

from .combinatorics import (bc_bits, compositions, lc_bits, llc_bits,
                            partial_sums, set_compositions, straighten,
                            toggle_free)
from .elements import TensorElement, expand_letters


def _diff_coords(ctx, letter):
    # letter minus <letter, alpha> * iota, as coordinates
    pa = ctx.pair_alpha[letter]
    return tuple((1 if i == letter else 0) - pa * ci
                 for i, ci in enumerate(ctx.iota_coords))


def antipode_closed(ctx, x):
    """Closed-form antipode, linear in x."""
    out = TensorElement(x.degree)
    n = x.degree
    if n == 0:
        out += x
        return out
    for word, coeff in x.terms.items():
        for mu in compositions(n):
            ell = len(mu)
            sign = -1 if ell % 2 else 1
            scalar = Fraction(coeff)
            cuts = partial_sums(mu)
            for cut in cuts:
                scalar *= ctx.pair_beta[word[cut - 1]]
                if not scalar:
                    break
            if not scalar:
                continue
            bounds = (0,) + cuts + (n,)
            entries = []
            for b in range(ell, 0, -1):  # reversed block order
                lo, hi = bounds[b - 1], bounds[b]
                for i in range(lo + 1, hi):
                    entries.append(_diff_coords(ctx, word[i - 1]))
                if b != 1:
                    entries.append(ctx.iota_coords)
            out += TensorElement(n, expand_letters(entries, sign * scalar))
    return out


def _setcomp_term(ctx, word, coeff, A):
    """One summand of the set-composition antipode formula."""
    n = len(word) + 1
    w = straighten(A)
    sign = -1 if len(A) % 2 else 1
    lc, llc, bc = lc_bits(A), llc_bits(A), bc_bits(A)
    slots = [None] * (n - 1)
    scalar = Fraction(coeff)
    for j in range(1, n + 1):
        if j < n:
            letter = word[j - 1]
            if bc[j - 1]:
                slots[w[j - 1] - 1] = letter
                continue
            scalar *= (ctx.pair_alpha[letter] if llc[j - 1]
                       else ctx.pair_beta[letter])
            if not scalar:
                return None
        if w[j - 1] != n:
            slots[w[j - 1] - 1] = ctx.iota_coords
    return expand_letters(slots, sign * scalar)


def _setcomp_sum(ctx, x, comps_of):
    out = TensorElement(x.degree)
    if x.degree == 0:
        out += x
        return out
    for word, coeff in x.terms.items():
        for A in comps_of(x.degree):
            term = _setcomp_term(ctx, word, coeff, A)
            if term:
                out += TensorElement(x.degree, term)
    return out


def antipode_all_setcomps(ctx, x):
    """Antipode as the full sum over ordered set partitions of the
    positions."""
    return _setcomp_sum(ctx, x, set_compositions)


def antipode_toggle_free(ctx, x):
    """Antipode as the reduced sum over toggle-free set compositions."""
    return _setcomp_sum(ctx, x, toggle_free)


def antipode_oracle(ctx, x):
    """Antipode from the convolution equation: on a degree-n word,
    S(x) = -x - sum of S(left)·right over the strictly intermediate
    coproduct terms.  Memoized per context and basis word."""
    out = TensorElement(x.degree)
    if x.degree == 0:
        out += x
        return out
    for word, coeff in x.terms.items():
        out += coeff * _oracle_word(ctx, x.degree, word)
    return out


def _oracle_word(ctx, degree, word):
    cache = ctx._antipode_cache
    key = (degree, word)
    if key in cache:
        return cache[key]
    base = TensorElement(degree, {word: 1})
    acc = -base
    for ((ld, lw), (rd, rw)), c in ctx.coproduct(base).terms.items():
        if ld == 0 or ld == degree:
            continue
        s_left = _oracle_word(ctx, ld, lw)
        acc -= c * ctx.product(s_left, TensorElement(rd, {rw: 1}))
    cache[key] = acc
    return acc
