"""The group of linear characters of a tower context.

A linear character is a truncated sequence of functionals, one per
degree, each given by an element of that degree (evaluation is the
graded inner product).  ``check_morphism`` tests multiplicativity
against the coproduct; the group law is convolution, computed two ways
(closed block formula and the definitional composite) which are checked
against each other on every call.
"""

from __future__ import annotations

from fractions import Fraction

from .combinatorics import compositions, partial_sums
from .elements import TensorElement, expand_letters
from .functors import def_along, pointwise_twist
from .theory import TheoryError, solve_linear_system


class ContextMismatch(TheoryError):
    """Two characters (or a character and an element) live over
    different contexts."""


class NotAMorphism(TheoryError):
    """A character sequence fails multiplicativity, so the group
    operations do not apply to it."""


class LinearCharacter:
    """A multiplicative functional, stored by components up to a degree.

    ``components[n]`` is a ``TensorElement`` of degree ``n``;
    ``components[0]`` must be the unit (the functional is 1 on the
    ground field).

    >>> from .theory import two_dim
    >>> from .hopf import all_ones_context
    >>> from .elements import TensorElement
    >>> eps = counit_character(all_ones_context(two_dim(3)), 2)
    >>> eps(TensorElement(2, {(0,): 1}))
    Fraction(0, 1)
    """

    __slots__ = ("ctx", "components")

    def __init__(self, ctx, components):
        components = tuple(components)
        if not components:
            raise TheoryError("need at least the degree-0 component")
        for n, comp in enumerate(components):
            if comp.degree != n:
                raise TheoryError(
                    "component %d has degree %d" % (n, comp.degree))
        if components[0] != ctx.unit():
            raise TheoryError("degree-0 component must be the unit")
        self.ctx = ctx
        self.components = components

    @property
    def max_degree(self):
        return len(self.components) - 1

    def __call__(self, x):
        """Evaluate on an element: sum over words of coefficient
        products weighted by the Gram factors of the letters."""
        n = x.degree
        if n > self.max_degree:
            raise TheoryError("character only defined up to degree %d"
                              % self.max_degree)
        comp = self.components[n]
        if n == 0:
            return (x.coefficient(()) * comp.coefficient(()))
        gram = self.ctx.basis.gram
        total = Fraction(0)
        for word, c in x.terms.items():
            cc = comp.coefficient(word)
            if cc:
                weight = Fraction(1)
                for letter in word:
                    weight *= gram[letter]
                total += c * cc * weight
        return total

    def __eq__(self, other):
        return (isinstance(other, LinearCharacter)
                and self.ctx == other.ctx
                and self.components == other.components)

    def __hash__(self):
        return hash((self.ctx, self.components))

    def __repr__(self):
        return "LinearCharacter(max_degree=%d)" % self.max_degree


def counit_character(ctx, max_degree):
    """The identity of the character group: counit in every degree."""
    comps = [ctx.unit()]
    for n in range(1, max_degree + 1):
        comps.append(TensorElement(n))  # zero functional above degree 0
    return LinearCharacter(ctx, comps)


def constant_character(ctx, psi, max_degree):
    """The character whose degree-n component is the pure tensor word
    with every letter psi (a basis-coefficient element of degree 1 in
    the underlying class-function space).

    Multiplicative exactly when psi pairs to 1 with iota.
    """
    coords = psi.coords if hasattr(psi, "coords") else tuple(psi)
    comps = [ctx.unit()]
    for n in range(1, max_degree + 1):
        entries = [coords] * (n - 1)
        comps.append(TensorElement(n, expand_letters(entries, 1)))
    return LinearCharacter(ctx, comps)


def check_morphism(chi):
    """Test multiplicativity of ``chi`` on every basis word up to its
    max degree.

    For each degree n and each split j, the word functional composed
    with the degree-(n-j) deflation of the j-th coordinate twist must
    agree with the tensor of the degree-j and degree-(n-j) components.
    Returns None if all checks pass, else ``(n, j, lhs, rhs)`` for the
    first failing pair of functionals (as coefficient dictionaries).
    """
    ctx = chi.ctx
    basis = ctx.basis
    for n in range(2, chi.max_degree + 1):
        comp = chi.components[n]
        for j in range(1, n):
            twisted = pointwise_twist(basis, comp, j, ctx.iota)
            bits = tuple(0 if i == j - 1 else 1 for i in range(n - 1))
            lhs = def_along(basis, bits, twisted)
            rhs_l = chi.components[j]
            rhs_r = chi.components[n - j]
            rhs = TensorElement(n - 1)
            for lw, lc in rhs_l.terms.items():
                for rw, rc in rhs_r.terms.items():
                    rhs += TensorElement(n - 1, {lw + rw: lc * rc})
            if lhs != rhs:
                return (n, j, dict(lhs.terms), dict(rhs.terms))
    return None


def _require_morphisms(*chis):
    ctx = chis[0].ctx
    for chi in chis:
        if chi.ctx != ctx:
            raise ContextMismatch("characters over different contexts")
        bad = check_morphism(chi)
        if bad is not None:
            raise NotAMorphism(
                "not multiplicative at degree %d, split %d" % bad[:2])


def _definitional_convolve(psi, gamma, x):
    """(psi * gamma)(x) via the coproduct — the defining composite."""
    ctx = psi.ctx
    total = Fraction(0)
    for ((ld, lw), (rd, rw)), c in ctx.coproduct(x).terms.items():
        total += (c * psi(TensorElement(ld, {lw: 1}))
                  * gamma(TensorElement(rd, {rw: 1})))
    return total


def convolve(psi, gamma):
    """Convolution product of two characters, as a character of the
    same max degree (the smaller of the two).

    Computed by the closed alternating-block formula, then re-checked
    on every basis word against the definitional composite through the
    coproduct; a mismatch raises (it would mean an internal error, not
    bad input).
    """
    _require_morphisms(psi, gamma)
    ctx = psi.ctx
    top = min(psi.max_degree, gamma.max_degree)
    comps = [ctx.unit()]
    for n in range(1, top + 1):
        comps.append(_convolve_component(psi, gamma, n))
    out = LinearCharacter(ctx, comps)
    for n in range(1, top + 1):
        for word in ctx.basis_words(n):
            x = TensorElement(n, {word: 1})
            got = out(x)
            want = _definitional_convolve(psi, gamma, x)
            if got != want:
                raise TheoryError(
                    "convolution formula disagrees with definition at "
                    "degree %d word %r: %s != %s" % (n, word, got, want))
    return out


def _block_entries(chi, lo, hi):
    """Letter templates for positions lo+1..hi-1 from chi's degree
    hi-lo component, plus that component's scalar weight handling.

    Returns a list of (entries, coeff) expansions, one per word of the
    component, each scaled by the word coefficient."""
    n = hi - lo
    comp = chi.components[n]
    out = []
    basis_dim = len(chi.ctx.basis.labels)
    for word, c in comp.terms.items():
        entries = []
        for letter in word:
            entries.append(tuple(1 if i == letter else 0
                                 for i in range(basis_dim)))
        out.append((entries, c))
    return out


def _interleave(chi_a, chi_b, mark_a, mark_b, mu, n):
    """Sum the word templates for one composition mu: blocks taken
    alternately chi_a, chi_b, chi_a, ..., with the finishing
    character's marker inserted after every block except the last."""
    bounds = (0,) + partial_sums(mu) + (n,)
    ell = len(mu)
    acc = [([], Fraction(1))]
    for b in range(1, ell + 1):
        use_a = b % 2 == 1
        chi = chi_a if use_a else chi_b
        mark = mark_a if use_a else mark_b
        lo, hi = bounds[b - 1], bounds[b]
        expansions = _block_entries(chi, lo, hi)
        nxt = []
        for prefix, scal in acc:
            for entries, c in expansions:
                row = prefix + entries
                if b != ell:
                    row = row + [mark]
                nxt.append((row, scal * c))
        acc = nxt
    total = {}
    for entries, scal in acc:
        if not scal:
            continue
        for word, c in expand_letters(entries, scal).items():
            c0 = total.get(word, 0) + c
            if c0:
                total[word] = c0
            else:
                total.pop(word, None)
    return total


def _convolve_component(psi, gamma, n):
    ctx = psi.ctx
    out = TensorElement(n)
    alpha = tuple(ctx.alpha.coords)
    beta = tuple(ctx.beta.coords)
    for mu in compositions(n):
        out += TensorElement(
            n, _interleave(psi, gamma, alpha, beta, mu, n))
        out += TensorElement(
            n, _interleave(gamma, psi, beta, alpha, mu, n))
    return out


def inverse(psi):
    """Convolution inverse: degree-n component is the signed sum over
    compositions of psi blocks joined by (alpha + beta) markers."""
    _require_morphisms(psi)
    ctx = psi.ctx
    mark = tuple(a + b for a, b in
                 zip(ctx.alpha.coords, ctx.beta.coords))
    comps = [ctx.unit()]
    for n in range(1, psi.max_degree + 1):
        total = {}
        for mu in compositions(n):
            ell = len(mu)
            sign = -1 if ell % 2 else 1
            bounds = (0,) + partial_sums(mu) + (n,)
            acc = [([], Fraction(sign))]
            for b in range(1, ell + 1):
                lo, hi = bounds[b - 1], bounds[b]
                expansions = _block_entries(psi, lo, hi)
                nxt = []
                for prefix, scal in acc:
                    for entries, c in expansions:
                        row = prefix + entries
                        if b != ell:
                            row = row + [mark]
                        nxt.append((row, scal * c))
                acc = nxt
            for entries, scal in acc:
                if not scal:
                    continue
                for word, c in expand_letters(entries, scal).items():
                    c0 = total.get(word, 0) + c
                    if c0:
                        total[word] = c0
                    else:
                        total.pop(word, None)
        comps.append(TensorElement(n, total))
    out = LinearCharacter(ctx, comps)
    _check_inverse(psi, out)
    return out


def _check_inverse(psi, inv):
    """Verify psi * inv = counit on every basis word (definitional)."""
    ctx = psi.ctx
    for n in range(1, inv.max_degree + 1):
        for word in ctx.basis_words(n):
            x = TensorElement(n, {word: 1})
            got = _definitional_convolve(psi, inv, x)
            if got != 0:
                raise TheoryError(
                    "inverse formula fails at degree %d word %r: %s"
                    % (n, word, got))


def is_odd(psi):
    """True when the inverse negates every odd component and fixes the
    even ones, i.e. the inverse component equals (-1)^n times the
    original in each degree n."""
    inv = inverse(psi)
    for n in range(1, psi.max_degree + 1):
        sign = -1 if n % 2 else 1
        if inv.components[n] != sign * psi.components[n]:
            return False
    return True


def looks_module_supported(chi):
    """Heuristic nonnegativity screen: every word coefficient times the
    Gram weights of its letters is a nonnegative integer.  Necessary
    (not sufficient) for the functional to count module dimensions."""
    gram = chi.ctx.basis.gram
    for comp in chi.components:
        for word, c in comp.terms.items():
            weight = c
            for letter in word:
                weight *= gram[letter]
            if weight < 0 or Fraction(weight).denominator != 1:
                return False
    return True
