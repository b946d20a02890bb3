"""Exhaustive small-degree verification suites.

Every suite walks basis words (and pairs/triples of them) up to a degree
bound, compares two independently computed sides of an identity, and
returns a report dict with the number of comparisons made, the number
that agreed, and a description of the first failure (or None).  Nothing
is sampled unless a seed is passed explicitly; the default runs are
exhaustive and deterministic.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .antipode import (antipode_all_setcomps, antipode_closed,
                       antipode_oracle, antipode_toggle_free)
from .characters import (check_morphism, constant_character,
                         convolve, counit_character, inverse)
from .combinatorics import toggle_free
from .elements import TensorElement, TensorSquare


def _report():
    return {"checked": 0, "passed": 0, "first_failure": None}


def _run(report, name, lhs, rhs):
    report["checked"] += 1
    if lhs == rhs:
        report["passed"] += 1
    elif report["first_failure"] is None:
        report["first_failure"] = {"inputs": name, "lhs": lhs, "rhs": rhs}


def _word_elements(ctx, degree):
    for w in ctx.basis_words(degree):
        yield w, TensorElement(degree, {w: 1})


def verify_axioms(ctx, max_degree, seed=None, spot_checks=0):
    """Unit, counit, associativity, coassociativity, product/coproduct
    compatibility, and both antipode convolution identities, exhaustively
    on basis words up to total degree max_degree."""
    rep = _report()
    unit = ctx.unit()

    for n in range(max_degree + 1):
        for w, x in _word_elements(ctx, n):
            _run(rep, ("left_unit", n, w), ctx.product(unit, x), x)
            _run(rep, ("right_unit", n, w), ctx.product(x, unit), x)

            cop = ctx.coproduct(x)
            left_strip = TensorElement(n)
            right_strip = TensorElement(n)
            for ((ld, lw), (rd, rw)), c in cop.terms.items():
                if ld == 0:
                    left_strip += TensorElement(n, {rw: c})
                if rd == 0:
                    right_strip += TensorElement(n, {lw: c})
            _run(rep, ("left_counit", n, w), left_strip, x)
            _run(rep, ("right_counit", n, w), right_strip, x)

            triple_a = {}
            triple_b = {}
            for ((ld, lw), (rd, rw)), c in cop.terms.items():
                for ((l2, w2), (r2, w3)), c2 in ctx.coproduct(
                        TensorElement(ld, {lw: 1})).terms.items():
                    key = ((l2, w2), (r2, w3), (rd, rw))
                    triple_a[key] = triple_a.get(key, 0) + c * c2
                for ((l2, w2), (r2, w3)), c2 in ctx.coproduct(
                        TensorElement(rd, {rw: 1})).terms.items():
                    key = ((ld, lw), (l2, w2), (r2, w3))
                    triple_b[key] = triple_b.get(key, 0) + c * c2
            _run(rep, ("coassociativity", n, w),
                 {k: v for k, v in triple_a.items() if v},
                 {k: v for k, v in triple_b.items() if v})

            if n >= 1:
                s = antipode_closed(ctx, x)
                left_conv = TensorElement(n)
                right_conv = TensorElement(n)
                for ((ld, lw), (rd, rw)), c in cop.terms.items():
                    l_el = TensorElement(ld, {lw: 1})
                    r_el = TensorElement(rd, {rw: 1})
                    left_conv += c * ctx.product(
                        antipode_closed(ctx, l_el), r_el)
                    right_conv += c * ctx.product(
                        l_el, antipode_closed(ctx, r_el))
                zero = TensorElement(n)
                _run(rep, ("antipode_left", n, w), left_conv, zero)
                _run(rep, ("antipode_right", n, w), right_conv, zero)

    for total in range(2, max_degree + 1):
        for a in range(1, total):
            for wx, x in _word_elements(ctx, a):
                cx = ctx.coproduct(x)
                for wy, y in _word_elements(ctx, total - a):
                    _run(rep, ("compatibility", (a, wx), (total - a, wy)),
                         ctx.coproduct(ctx.product(x, y)),
                         ctx.square_product(cx, ctx.coproduct(y)))

    for total in range(3, max_degree + 1):
        for a in range(1, total - 1):
            for b in range(1, total - a):
                c = total - a - b
                for wx, x in _word_elements(ctx, a):
                    for wy, y in _word_elements(ctx, b):
                        xy = ctx.product(x, y)
                        for wz, z in _word_elements(ctx, c):
                            _run(rep, ("associativity",
                                       (a, wx), (b, wy), (c, wz)),
                                 ctx.product(xy, z),
                                 ctx.product(x, ctx.product(y, z)))

    if spot_checks:
        rng = random.Random(seed)
        dim = ctx.basis.dim
        for k in range(spot_checks):
            a = rng.randint(1, max(1, max_degree - 1))
            b = rng.randint(1, max(1, max_degree - a))
            x1 = _random_element(rng, ctx, a)
            x2 = _random_element(rng, ctx, a)
            y = _random_element(rng, ctx, b)
            _run(rep, ("bilinearity_left", k),
                 ctx.product(x1 + x2, y),
                 ctx.product(x1, y) + ctx.product(x2, y))
            _run(rep, ("bilinearity_right", k),
                 ctx.product(y, x1 + x2),
                 ctx.product(y, x1) + ctx.product(y, x2))
    return rep


def _random_element(rng, ctx, degree):
    out = TensorElement(degree)
    words = list(ctx.basis_words(degree))
    for _ in range(rng.randint(1, 3)):
        w = words[rng.randrange(len(words))]
        out += TensorElement(degree, {w: Fraction(rng.randint(-4, 4))})
    return out


def find_compat_counterexample(ctx, max_degree):
    """First basis-word pair (by total degree, then enumeration order)
    where the coproduct of the product differs from the product of the
    coproducts.  Returns None when compatibility holds throughout."""
    for total in range(2, max_degree + 1):
        for a in range(1, total):
            for wx, x in _word_elements(ctx, a):
                cx = ctx.coproduct(x)
                for wy, y in _word_elements(ctx, total - a):
                    lhs = ctx.coproduct(ctx.product(x, y))
                    rhs = ctx.square_product(cx, ctx.coproduct(y))
                    if lhs != rhs:
                        return {
                            "inputs": {"x": (a, wx), "y": (total - a, wy)},
                            "lhs": lhs,
                            "rhs": rhs,
                        }
    return None


def verify_antipode_equivalence(ctx, max_degree):
    """All four antipode computations agree on every basis word up to
    max_degree: the closed composition formula, the full ordered-set-
    partition sum, its toggle-free reduction, and the convolution-
    equation solution."""
    rep = _report()
    routes = (("all_setcomps", antipode_all_setcomps),
              ("toggle_free", antipode_toggle_free),
              ("oracle", antipode_oracle))
    for n in range(max_degree + 1):
        for w, x in _word_elements(ctx, n):
            reference = antipode_closed(ctx, x)
            for name, route in routes:
                _run(rep, ("closed_vs_" + name, n, w), route(ctx, x),
                     reference)
    rep["toggle_free_counts"] = {
        n: sum(1 for _ in toggle_free(n)) for n in range(1, max_degree + 1)}
    return rep


def verify_characters(ctx, max_degree, odd_degree=None):
    """Group laws for linear characters built from the context's own
    pairing elements: multiplicativity, convolution identity and
    associativity, two-sided inverses, and a non-multiplicative negative
    control."""
    rep = _report()
    eps = counit_character(ctx, max_degree)
    half = (ctx.alpha + ctx.beta) / 2
    psis = [constant_character(ctx, ctx.alpha, max_degree),
            constant_character(ctx, ctx.beta, max_degree),
            constant_character(ctx, half, max_degree)]

    for i, psi in enumerate(psis):
        _run(rep, ("multiplicative", i), check_morphism(psi), None)
        _run(rep, ("convolve_identity_left", i), convolve(eps, psi), psi)
        _run(rep, ("convolve_identity_right", i), convolve(psi, eps), psi)
        inv = inverse(psi)
        _run(rep, ("inverse_left", i), convolve(inv, psi), eps)
        _run(rep, ("inverse_right", i), convolve(psi, inv), eps)

    _run(rep, ("convolve_associative",),
         convolve(convolve(psis[0], psis[1]), psis[2]),
         convolve(psis[0], convolve(psis[1], psis[2])))

    doubled = constant_character(ctx, 2 * ctx.basis.one, max_degree)
    bad = check_morphism(doubled)
    _run(rep, ("negative_control",),
         None if bad is None else bad[:2], (2, 1))
    return rep


def verify_all(ctx, max_degree):
    """Run every suite that applies to the context."""
    out = {
        "axioms": verify_axioms(ctx, max_degree),
        "antipode": verify_antipode_equivalence(ctx, max_degree),
        "characters": verify_characters(ctx, min(max_degree, 4)),
    }
    if ctx.basis.dim == 2 and ctx.alpha != ctx.beta:
        from .nsym import antipode_corollaries, verify_nsym_rules
        out["nsym"] = verify_nsym_rules(ctx, max_degree)
        out["antipode_corollaries"] = antipode_corollaries(
            ctx, min(max_degree, 5))
    elif ctx.basis.dim == 2:
        from .nsym import antipode_corollaries
        out["antipode_corollaries"] = antipode_corollaries(
            ctx, min(max_degree, 5))
    return out
