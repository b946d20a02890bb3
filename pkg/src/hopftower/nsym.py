"""Distinguished bases over rank-2 theories and their rewriting rules.

For a two-character basis the degree-n component has dimension 2^(n-1),
matching the compositions of n, and three families of elements behave
like the complete, ribbon, and primitive-generator bases of
noncommutative symmetric functions: products concatenate or smash
compositions, the coproduct of a single-block element deconcatenates,
and the antipode alternates over refinements of the reversed
composition.  ``verify_nsym_rules`` checks all of those identities by
direct expansion; ``product_constants`` / ``coproduct_constants``
re-expand products and coproducts in a chosen family so structure
constants can be compared across different theories.
"""

from __future__ import annotations

from fractions import Fraction

from .combinatorics import (boundary_bits, coarsenings, compositions, concat,
                            descents, interior_bits, inverse, partial_sums,
                            permutations, refinements, smash)
from .elements import TensorElement, TensorSquare, basis_words, expand_letters
from .functors import ind_along
from .theory import (DualBasisUndefined, TheoryError, dual_pair,
                     solve_linear_system)
from .antipode import antipode_closed

KINDS = ("h_basis", "ribbon", "shuffle_dual_primitive")


class InconsistentTag(TheoryError):
    """The requested family does not exist over this context (wrong rank,
    or the pairing elements do not satisfy the family's hypotheses)."""


def _check_composition(mu):
    mu = tuple(mu)
    if any(not isinstance(p, int) or p < 1 for p in mu):
        raise TheoryError("composition parts must be positive integers")
    return mu


def tau_iota_element(basis, tau, iota, mu):
    """The word with iota at the block boundaries of mu and tau inside
    the blocks, expanded over the basis.  Empty mu gives the unit.

    Swapping the two letters conjugates the composition:
    tau_iota_element(b, t, i, mu) == tau_iota_element(b, i, t, conjugate(mu)).
    """
    mu = _check_composition(mu)
    n = sum(mu)
    if n == 0:
        return TensorElement(0, {(): 1})
    bits = boundary_bits(mu)
    entries = [iota.coords if b else tau.coords for b in bits]
    return TensorElement(n, expand_letters(entries, 1))


def shuffle_dual_complement(ctx):
    """The class function orthogonal to beta (rank 2 only), scaled so its
    first nonzero coordinate is 1."""
    basis = ctx.basis
    if basis.dim != 2:
        raise InconsistentTag("complement letter needs a rank-2 basis")
    b0, b1 = ctx.beta.coords
    g0, g1 = basis.gram
    coords = (b1 * g1, -b0 * g0)
    if not any(coords):
        raise InconsistentTag("beta must be nonzero")
    lead = next(c for c in coords if c)
    return basis.element(tuple(c / lead for c in coords))


def nsym_element(ctx, kind, mu):
    """One member of a distinguished family over a rank-2 context.

    ``h_basis``    — dual of alpha inside blocks, iota at boundaries;
                     multiplies by concatenation.
    ``ribbon``     — dual of alpha inside blocks, dual of beta at
                     boundaries; multiplies by concatenation + smash.
    ``shuffle_dual_primitive`` — requires alpha == beta; the complement
                     of beta inside blocks, iota at boundaries; a single
                     block gives a primitive element.
    """
    basis = ctx.basis
    if basis.dim != 2:
        raise InconsistentTag("families are defined over rank-2 bases only")
    if kind in ("h_basis", "ribbon"):
        try:
            astar, bstar = dual_pair(ctx.alpha, ctx.beta)
        except DualBasisUndefined as exc:
            raise InconsistentTag(
                f"{kind} needs alpha, beta independent: {exc}") from exc
        boundary = ctx.iota if kind == "h_basis" else bstar
        return tau_iota_element(basis, astar, boundary, mu)
    if kind == "shuffle_dual_primitive":
        if ctx.alpha != ctx.beta:
            raise InconsistentTag(
                "shuffle_dual_primitive needs alpha == beta")
        tau = shuffle_dual_complement(ctx)
        if tau.inner(ctx.beta) != 0:
            raise InconsistentTag("complement letter not orthogonal to beta")
        det = (tau.coords[0] * ctx.iota_coords[1]
               - tau.coords[1] * ctx.iota_coords[0])
        if det == 0:
            raise InconsistentTag("complement letter and iota must span")
        return tau_iota_element(basis, tau, ctx.iota, mu)
    raise TheoryError(f"unknown family {kind!r}; choose one of {KINDS}")


# -- expansion in a family ---------------------------------------------------

_INV_CACHE = {}


def _family(ctx, kind, n):
    comps = tuple(compositions(n))
    return comps, [nsym_element(ctx, kind, mu) for mu in comps]


def _inverse_matrix(rows):
    n = len(rows)
    aug = [[Fraction(v) for v in row]
           + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise DualBasisUndefined("family is not a basis in this degree")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _expansion_data(ctx, kind, n):
    key = (ctx, kind, n)
    if key not in _INV_CACHE:
        comps, fam = _family(ctx, kind, n)
        words = list(basis_words(ctx.basis.dim, n))
        rows = [[f.coefficient(w) for f in fam] for w in words]
        _INV_CACHE[key] = (comps, words, _inverse_matrix(rows))
    return _INV_CACHE[key]


def expand_in_kind(ctx, kind, x):
    """Coefficients of x in the degree-matching family, as a dict from
    compositions to nonzero rationals."""
    n = x.degree
    if n == 0:
        c = x.coefficient(())
        return {(): c} if c else {}
    comps, words, inv = _expansion_data(ctx, kind, n)
    rhs = [x.coefficient(w) for w in words]
    out = {}
    for i, mu in enumerate(comps):
        c = sum(a * b for a, b in zip(inv[i], rhs) if b)
        if c:
            out[mu] = c
    return out


def expand_square_in_kind(ctx, kind, sq):
    """Coefficients of a tensor-square element in family ⊗ family."""
    grouped = {}
    for ((ld, lw), (rd, rw)), c in sq.terms.items():
        grouped.setdefault((ld, rd), {}).setdefault(rw, TensorElement(ld))
        grouped[(ld, rd)][rw] += TensorElement(ld, {lw: c})
    out = {}
    for (ld, rd), by_right in grouped.items():
        partial = {}
        for rw, left_elem in by_right.items():
            for mu, c in expand_in_kind(ctx, kind, left_elem).items():
                partial.setdefault(mu, TensorElement(rd))
                partial[mu] += TensorElement(rd, {rw: c})
        for mu, right_elem in partial.items():
            for nu, c in expand_in_kind(ctx, kind, right_elem).items():
                out[(mu, nu)] = out.get((mu, nu), 0) + c
    return {k: v for k, v in out.items() if v}


def product_constants(ctx, kind, max_degree):
    """Structure constants of every family product up to total degree,
    keyed by the pair of compositions, each value a sorted tuple of
    (composition, coefficient)."""
    out = {}
    for total in range(2, max_degree + 1):
        for a in range(1, total):
            for mu in compositions(a):
                xa = nsym_element(ctx, kind, mu)
                for nu in compositions(total - a):
                    prod = ctx.product(xa, nsym_element(ctx, kind, nu))
                    out[(mu, nu)] = tuple(
                        sorted(expand_in_kind(ctx, kind, prod).items()))
    return out


def coproduct_constants(ctx, kind, max_degree):
    """Coproduct structure constants of the family up to max_degree,
    keyed by composition, each value a sorted tuple of
    ((composition, composition), coefficient)."""
    out = {}
    for n in range(1, max_degree + 1):
        for mu in compositions(n):
            sq = ctx.coproduct(nsym_element(ctx, kind, mu))
            out[mu] = tuple(
                sorted(expand_square_in_kind(ctx, kind, sq).items()))
    return out


# -- rule verification --------------------------------------------------------

def verify_nsym_rules(ctx, max_degree):
    """Expand and compare the concatenation, ribbon, deconcatenation,
    coarsening, and compatibility rules up to max_degree.

    Returns {"checked", "passed", "first_failure"}.
    """
    report = {"checked": 0, "passed": 0, "first_failure": None}

    def run(name, lhs, rhs):
        report["checked"] += 1
        if lhs == rhs:
            report["passed"] += 1
        elif report["first_failure"] is None:
            report["first_failure"] = {"inputs": name, "lhs": lhs, "rhs": rhs}

    h = {}
    r = {}
    for n in range(1, max_degree + 1):
        for mu in compositions(n):
            h[mu] = nsym_element(ctx, "h_basis", mu)
            r[mu] = nsym_element(ctx, "ribbon", mu)
    h[()] = TensorElement(0, {(): 1})

    # products: concatenation for h, concatenation + smash for ribbons
    for total in range(2, max_degree + 1):
        for a in range(1, total):
            for mu in compositions(a):
                for nu in compositions(total - a):
                    run(("h_concat", mu, nu),
                        ctx.product(h[mu], h[nu]), h[concat(mu, nu)])
                    run(("ribbon_product", mu, nu),
                        ctx.product(r[mu], r[nu]),
                        r[concat(mu, nu)] + r[smash(mu, nu)])

    # coproduct of a single block deconcatenates
    for n in range(1, max_degree + 1):
        want = TensorSquare()
        for j in range(n + 1):
            want += TensorSquare.tensor(h[(j,) if j else ()],
                                        h[(n - j,) if n - j else ()])
        run(("h_deconcat", n), ctx.coproduct(h[(n,)]), want)

    # h is the coarsening sum of ribbons
    for n in range(1, max_degree + 1):
        for mu in compositions(n):
            want = TensorElement(n)
            for nu in coarsenings(mu):
                want += r[nu]
            run(("h_coarsening", mu), h[mu], want)

    # compatibility of the coproduct with h products (bounded)
    for total in range(2, min(max_degree, 4) + 1):
        for a in range(1, total):
            for mu in compositions(a):
                ca = ctx.coproduct(h[mu])
                for nu in compositions(total - a):
                    run(("h_compat", mu, nu),
                        ctx.coproduct(ctx.product(h[mu], h[nu])),
                        ctx.square_product(ca, ctx.coproduct(h[nu])))

    # independent route to h when iota is the regular character and the
    # dual of alpha is the all-ones character
    astar, _ = dual_pair(ctx.alpha, ctx.beta)
    if ctx.iota == ctx.basis.reg and astar == ctx.basis.one:
        for n in range(1, max_degree + 1):
            for mu in compositions(n):
                bits = interior_bits(mu)
                ones = TensorElement(
                    sum(bits) + 1,
                    {(ctx.basis.one_index,) * sum(bits): 1})
                run(("h_induced", mu),
                    h[mu], ind_along(ctx.basis, bits, ones))
    return report


def antipode_corollaries(ctx, max_n):
    """Check every closed antipode evaluation whose hypotheses the
    context satisfies, up to degree max_n.

    Returns {"checked", "passed", "first_failure", "cases"}.
    """
    basis = ctx.basis
    if basis.dim != 2:
        raise InconsistentTag("corollaries are stated over rank-2 bases")
    report = {"checked": 0, "passed": 0, "first_failure": None, "cases": []}

    def run(name, lhs, rhs):
        report["checked"] += 1
        if lhs == rhs:
            report["passed"] += 1
        elif report["first_failure"] is None:
            report["first_failure"] = {"inputs": name, "lhs": lhs, "rhs": rhs}

    if ctx.alpha == ctx.beta:
        tau = shuffle_dual_complement(ctx)
        det = (tau.coords[0] * ctx.iota_coords[1]
               - tau.coords[1] * ctx.iota_coords[0])
        if det:
            report["cases"].append("primitive_negation")
            for n in range(1, max_n + 1):
                x = tau_iota_element(basis, tau, ctx.iota, (n,))
                run(("primitive_negation", n), antipode_closed(ctx, x), -x)
        if ctx.iota == basis.one and ctx.alpha == basis.one:
            report["cases"].append("block_reversal")
            for n in range(1, max_n + 1):
                for mu in compositions(n):
                    x = tau_iota_element(basis, tau, ctx.iota, mu)
                    sign = -1 if len(mu) % 2 else 1
                    y = tau_iota_element(basis, tau, ctx.iota,
                                         tuple(reversed(mu)))
                    run(("block_reversal", mu),
                        antipode_closed(ctx, x), sign * y)
    else:
        try:
            astar, _ = dual_pair(ctx.alpha, ctx.beta)
        except DualBasisUndefined as exc:
            raise InconsistentTag(str(exc)) from exc
        report["cases"].append("generator_shift")
        shifted = astar - ctx.iota
        for n in range(1, max_n + 1):
            x = tau_iota_element(basis, astar, ctx.iota, (n,))
            y = tau_iota_element(basis, shifted, ctx.iota, (n,))
            run(("generator_shift", n), antipode_closed(ctx, x), -y)
        if ctx.iota == basis.reg and astar == basis.one:
            report["cases"].append("h_alternating_sum")
            for n in range(1, max_n + 1):
                for mu in compositions(n):
                    x = nsym_element(ctx, "h_basis", mu)
                    want = TensorElement(n)
                    for nu in refinements(tuple(reversed(mu))):
                        sign = -1 if len(nu) % 2 else 1
                        want += sign * nsym_element(ctx, "h_basis", nu)
                    run(("h_alternating_sum", mu),
                        antipode_closed(ctx, x), want)
    return report


# -- descent classes -----------------------------------------------------------

class FundamentalImage:
    """The permutations whose inverse has a prescribed descent set."""

    __slots__ = ("mu", "perms")

    def __init__(self, mu, perms):
        self.mu = tuple(mu)
        self.perms = tuple(perms)

    def __len__(self):
        return len(self.perms)

    def __iter__(self):
        return iter(self.perms)

    def __contains__(self, w):
        return tuple(w) in self.perms

    def __eq__(self, other):
        return (isinstance(other, FundamentalImage)
                and self.mu == other.mu and self.perms == other.perms)

    def __repr__(self):
        return f"FundamentalImage(mu={self.mu}, size={len(self.perms)})"


def descent_embedding(mu, bound=7):
    """All permutations of sum(mu) letters whose inverse descent set is
    the partial-sum set of mu.  The classes over all compositions of n
    partition the symmetric group."""
    mu = _check_composition(mu)
    if not mu:
        raise TheoryError("composition must be nonempty")
    n = sum(mu)
    if n > bound:
        raise ValueError(
            f"degree {n} exceeds the bound {bound} for descent classes")
    target = set(partial_sums(mu))
    perms = tuple(w for w in permutations(n)
                  if descents(inverse(w)) == target)
    return FundamentalImage(mu, perms)
