"""Integer compositions, set compositions, and permutation helpers.

Compositions of n are tuples of positive integers summing to n.  They are
identified with binary words of length n-1 in two complementary ways:
``boundary_bits`` marks each internal part boundary with a 1, while
``interior_bits`` marks it with a 0.  Set compositions of {1, ..., n} are
tuples of pairwise disjoint nonempty blocks (each block a sorted tuple)
whose union is {1, ..., n}; the order of the blocks matters.
"""

from __future__ import annotations

from itertools import permutations as _lex_permutations


# ---------------------------------------------------------------------------
# integer compositions


def compositions(n):
    """Yield the compositions of n, ordered by boundary bits read as a
    binary counter.

    >>> list(compositions(3))
    [(3,), (2, 1), (1, 2), (1, 1, 1)]
    >>> list(compositions(0))
    [()]
    >>> len(list(compositions(6)))
    32
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield ()
        return
    for mask in range(1 << (n - 1)):
        yield composition_from_boundary_bits(
            tuple((mask >> (n - 2 - i)) & 1 for i in range(n - 1)))


def _check_composition(mu):
    if any(not isinstance(p, int) or p <= 0 for p in mu):
        raise ValueError(f"not a composition: {mu!r}")


def boundary_bits(mu):
    """Binary word of length n-1 with a 1 at each internal boundary of mu.

    >>> boundary_bits((2, 2))
    (0, 1, 0)
    >>> boundary_bits((4,))
    (0, 0, 0)
    >>> boundary_bits((1, 1, 1))
    (1, 1)
    """
    _check_composition(mu)
    n = sum(mu)
    cuts = set(partial_sums(mu))
    return tuple(1 if j in cuts else 0 for j in range(1, n))


def interior_bits(mu):
    """Binary word of length n-1 with a 0 at each internal boundary of mu.

    >>> interior_bits((2, 2))
    (1, 0, 1)
    """
    return tuple(1 - b for b in boundary_bits(mu))


def composition_from_boundary_bits(bits):
    """Inverse of :func:`boundary_bits`.

    >>> composition_from_boundary_bits((0, 1, 0))
    (2, 2)
    >>> composition_from_boundary_bits(())
    (1,)
    """
    parts = []
    size = 1
    for b in bits:
        if b:
            parts.append(size)
            size = 1
        else:
            size += 1
    parts.append(size)
    return tuple(parts)


def composition_from_interior_bits(bits):
    """Inverse of :func:`interior_bits`."""
    return composition_from_boundary_bits(tuple(1 - b for b in bits))


def partial_sums(mu):
    """The internal partial sums of mu (the boundary positions).

    >>> partial_sums((2, 3, 1))
    (2, 5)
    """
    out = []
    total = 0
    for part in mu[:-1]:
        total += part
        out.append(total)
    return tuple(out)


def conjugate(mu):
    """The composition whose boundary bits are the complement of mu's.

    >>> conjugate((2, 2))
    (1, 2, 1)
    >>> conjugate(conjugate((3, 1, 2)))
    (3, 1, 2)
    """
    return composition_from_boundary_bits(interior_bits(mu))


def concat(mu, nu):
    """Concatenation: inserts a boundary between mu and nu.

    >>> concat((2, 1), (3,))
    (2, 1, 3)
    """
    return tuple(mu) + tuple(nu)


def smash(mu, nu):
    """Near-concatenation: the last part of mu absorbs the first of nu.

    >>> smash((2, 1), (3,))
    (2, 4)
    """
    if not mu:
        return tuple(nu)
    if not nu:
        return tuple(mu)
    return tuple(mu[:-1]) + (mu[-1] + nu[0],) + tuple(nu[1:])


def refines(nu, mu):
    """True when every boundary of mu is also a boundary of nu.

    >>> refines((1, 1, 2), (2, 2))
    True
    >>> refines((2, 2), (1, 3))
    False
    >>> refines((2, 2), (2, 2))
    True
    """
    if sum(nu) != sum(mu):
        return False
    return all(x >= y for x, y in zip(boundary_bits(nu), boundary_bits(mu)))


def refinements(mu):
    """Yield every composition refining mu (mu itself included).

    >>> sorted(refinements((2, 1)))
    [(1, 1, 1), (2, 1)]
    """
    for nu in compositions(sum(mu)):
        if refines(nu, mu):
            yield nu


def coarsenings(mu):
    """Yield every composition that mu refines (mu itself included).

    >>> sorted(coarsenings((1, 2)))
    [(1, 2), (3,)]
    """
    for nu in compositions(sum(mu)):
        if refines(mu, nu):
            yield nu


# ---------------------------------------------------------------------------
# set compositions


def _ordered_set_compositions(elements):
    # all ways to arrange `elements` into an ordered sequence of nonempty
    # blocks; first block ranges over nonempty subsets by increasing bitmask
    if not elements:
        yield ()
        return
    m = len(elements)
    for mask in range(1, 1 << m):
        block = tuple(elements[i] for i in range(m) if (mask >> i) & 1)
        rest = tuple(elements[i] for i in range(m) if not (mask >> i) & 1)
        for tail in _ordered_set_compositions(rest):
            yield (block,) + tail


def set_compositions(n):
    """Yield the ordered set partitions of {1, ..., n}.

    >>> list(set_compositions(2))
    [((1,), (2,)), ((2,), (1,)), ((1, 2),)]
    >>> [len(list(set_compositions(n))) for n in range(5)]
    [1, 1, 3, 13, 75]
    """
    yield from _ordered_set_compositions(tuple(range(1, n + 1)))


def block_index(A):
    """Map each element of the ground set to the index of its block."""
    out = {}
    for k, blk in enumerate(A):
        for x in blk:
            out[x] = k
    return out


def ground_size(A):
    return sum(len(b) for b in A)


def lc_bits(A):
    """For j = 1..n-1: 1 when j is not the largest element of its block.

    >>> lc_bits(((1, 3, 4, 5, 7), (6,), (8, 9), (2, 10)))
    (1, 1, 1, 1, 1, 0, 0, 1, 0)
    """
    n = ground_size(A)
    idx = block_index(A)
    mx = [max(b) for b in A]
    return tuple(1 if mx[idx[j]] != j else 0 for j in range(1, n))


def llc_bits(A):
    """For j = 1..n-1: 1 when j's block comes no later than (j+1)'s block.

    >>> llc_bits(((1, 3, 4, 5, 7), (6,), (8, 9), (2, 10)))
    (1, 0, 1, 1, 1, 0, 1, 1, 1)
    """
    n = ground_size(A)
    idx = block_index(A)
    return tuple(1 if idx[j] <= idx[j + 1] else 0 for j in range(1, n))


def bc_bits(A):
    """For j = 1..n-1: 1 when j and j+1 share a block.

    >>> bc_bits(((1, 3, 4, 5, 7), (6,), (8, 9), (2, 10)))
    (0, 0, 1, 1, 0, 0, 0, 1, 0)
    """
    n = ground_size(A)
    idx = block_index(A)
    return tuple(1 if idx[j] == idx[j + 1] else 0 for j in range(1, n))


def setcomp_refines(A, B):
    """True when A lists, in order, an ordered set composition of each
    block of B.

    >>> setcomp_refines(((2,), (1,), (3,)), ((1, 2), (3,)))
    True
    >>> setcomp_refines(((3,), (1,), (2,)), ((1, 2), (3,)))
    False
    >>> setcomp_refines(((1, 2), (3,)), ((1, 2), (3,)))
    True
    """
    ai = 0
    for target in B:
        tset = set(target)
        seen = set()
        while seen != tset:
            if ai >= len(A):
                return False
            blk = set(A[ai])
            if not blk <= tset or blk & seen:
                return False
            seen |= blk
            ai += 1
    return ai == len(A)


def setcomp_refinements(B):
    """Yield every A with ``setcomp_refines(A, B)``.

    >>> len(list(setcomp_refinements(((1, 2), (3,)))))
    3
    """
    def rec(i):
        if i == len(B):
            yield ()
            return
        for head in _ordered_set_compositions(tuple(B[i])):
            for tail in rec(i + 1):
                yield head + tail
    yield from rec(0)


def toggle_points(A):
    """The positions where the pairing move of the cancellation argument
    applies: j is listed when it is the largest element of its block and
    the following block starts above j+1 (a split point), or when it is
    not the largest and j+1 lies in another block (a fused point).

    >>> toggle_points(((1,), (3,), (2,)))
    [1]
    >>> toggle_points(((1, 3), (2,)))
    [1]
    >>> toggle_points(((1,), (2,), (3,)))
    []
    """
    idx = block_index(A)
    n = ground_size(A)
    out = []
    for j in range(1, n + 1):
        k = idx[j]
        if j == max(A[k]):
            if k + 1 < len(A) and min(A[k + 1]) > j + 1:
                out.append(j)
        elif j + 1 not in A[k]:
            out.append(j)
    return out


def is_toggle_free(A):
    return not toggle_points(A)


def toggle_free(n):
    """Yield the toggle-free set compositions of {1, ..., n}.

    Built by inserting 1, ..., n in turn: each new element joins the block
    of its predecessor, opens a new block right after that block, or opens
    a new first block — 3^(n-1) outcomes in all.

    >>> sorted(toggle_free(2)) == sorted(set_compositions(2))
    True
    >>> len(list(toggle_free(4)))
    27
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield ()
        return

    def rec(j, blocks, kj):
        if j == n:
            yield tuple(tuple(b) for b in blocks)
            return
        nxt = j + 1
        blocks[kj].append(nxt)
        yield from rec(nxt, blocks, kj)
        blocks[kj].pop()
        blocks.insert(kj + 1, [nxt])
        yield from rec(nxt, blocks, kj + 1)
        del blocks[kj + 1]
        blocks.insert(0, [nxt])
        yield from rec(nxt, blocks, 0)
        del blocks[0]

    yield from rec(1, [[1]], 0)


def straighten(A):
    """The permutation w sending each element to its position when the
    blocks of A are laid out consecutively in block order.

    Returned as a tuple with ``w[j-1] == w(j)``.

    >>> straighten(((2,), (1,)))
    (2, 1)
    >>> inverse(straighten(((7, 8), (9, 10), (3, 4, 5, 6), (1,), (2,))))
    (7, 8, 9, 10, 3, 4, 5, 6, 1, 2)
    """
    w = [0] * ground_size(A)
    pos = 0
    for blk in A:
        for x in blk:
            pos += 1
            w[x - 1] = pos
    return tuple(w)


# ---------------------------------------------------------------------------
# permutations (one-line notation, 1-based)


def inverse(w):
    """
    >>> inverse((2, 3, 1))
    (3, 1, 2)
    """
    out = [0] * len(w)
    for i, v in enumerate(w, start=1):
        out[v - 1] = i
    return tuple(out)


def descents(w):
    """The positions i with w(i) > w(i+1).

    >>> sorted(descents((4, 2, 9, 5, 8, 3, 1, 7, 6)))
    [1, 3, 5, 6, 8]
    """
    return {i for i in range(1, len(w)) if w[i - 1] > w[i]}


def permutations(n):
    """All permutations of {1, ..., n} in lexicographic one-line order."""
    return _lex_permutations(range(1, n + 1))
