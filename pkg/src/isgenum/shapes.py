"""Integer partitions, admissible compositions, D-partitions, group assignments.

A D-partition of a meet-semilattice E is a set partition such that any two
elements of one block see, inside every block, the same number of elements
below them.  Only those partitions can arise by restricting Green's
D-relation of an inverse semigroup to its idempotents.
"""

from __future__ import annotations

from functools import lru_cache

__all__ = [
    "partitions",
    "admissible_compositions",
    "d_partitions",
    "is_d_partition",
    "group_maps",
]


@lru_cache(maxsize=None)
def partitions(m: int):
    """All partitions of m as weakly decreasing tuples, in descending lex order."""
    if m < 1:
        raise ValueError("m must be positive")

    def rec(remaining, maxpart):
        if remaining == 0:
            yield ()
            return
        for p in range(min(remaining, maxpart), 0, -1):
            for rest in rec(remaining - p, p):
                yield (p,) + rest

    return tuple(rec(m, m))


def admissible_compositions(n: int, shape) -> list:
    """All positive C with sum(shape[i]^2 * C[i]) == n, ascending lex order."""
    shape = tuple(shape)
    if not shape or any(p < 1 for p in shape):
        raise ValueError("shape must be a nonempty positive tuple")
    if sum(shape) > n:
        raise ValueError("shape exceeds the target order")
    weights = [p * p for p in shape]
    k = len(weights)
    tail_min = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        tail_min[i] = tail_min[i + 1] + weights[i]
    out = []
    comp = [0] * k

    def rec(i, left):
        if i == k:
            if left == 0:
                out.append(tuple(comp))
            return
        w = weights[i]
        hi = (left - tail_min[i + 1]) // w
        for c in range(1, hi + 1):
            comp[i] = c
            rec(i + 1, left - w * c)

    rec(0, n)
    return out


def _down_profiles(E, blocks):
    """For each element, its count of down-set members inside every block."""
    masks = [sum(1 << x for x in X) for X in blocks]
    return [
        tuple((E.down[e] & bm).bit_count() for bm in masks)
        for e in range(E.size)
    ]


def is_d_partition(E, blocks) -> bool:
    """Check the defining count condition on a set partition of E."""
    profiles = _down_profiles(E, blocks)
    for X in blocks:
        first = profiles[X[0]]
        if any(profiles[e] != first for e in X[1:]):
            return False
    return True


def d_partitions(E, shape) -> list:
    """All D-partitions of E with the given block-size shape, as ordered tuples.

    Blocks are sorted by (size descending, min element ascending); each set
    partition appears exactly once.  Elements are assigned in ascending order;
    a new block may be opened once per distinct remaining size, which is what
    makes equal-size blocks come out with increasing minima.
    """
    shape = tuple(shape)
    if sum(shape) != E.size:
        raise ValueError("shape must sum to the order of E")
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        raise ValueError("shape must be weakly decreasing")
    down = E.down
    dsize = [down[e].bit_count() for e in range(E.size)]
    remaining = {}
    for p in shape:
        remaining[p] = remaining.get(p, 0) + 1
    open_blocks = []  # (size, members list)
    out = []

    def close_check(members):
        # completed block: members must agree on their total down-set size and
        # on their down-counts into every other completed block
        bm = sum(1 << x for x in members)
        first = down[members[0]]
        for e in members[1:]:
            if (down[e] & bm).bit_count() != (first & bm).bit_count():
                return False
        for size, other in open_blocks:
            if size != len(other):
                continue
            om = sum(1 << x for x in other)
            c0 = (down[members[0]] & om).bit_count()
            if any((down[e] & om).bit_count() != c0 for e in members[1:]):
                return False
        return True

    def rec(e):
        if e == E.size:
            blocks = tuple(
                tuple(mem) for _, mem in
                sorted(open_blocks, key=lambda b: (-b[0], b[1][0]))
            )
            if is_d_partition(E, blocks):
                out.append(blocks)
            return
        # join an open block with spare room
        for size, members in open_blocks:
            if len(members) < size and dsize[members[0]] == dsize[e]:
                members.append(e)
                if len(members) < size or close_check(members):
                    rec(e + 1)
                members.pop()
        # or open one new block per distinct remaining size
        for size in sorted(remaining, reverse=True):
            if remaining[size] == 0:
                continue
            remaining[size] -= 1
            entry = (size, [e])
            open_blocks.append(entry)
            if size > 1 or close_check(entry[1]):
                rec(e + 1)
            open_blocks.pop()
            remaining[size] += 1

    rec(0)
    return out


def group_maps(P, C, group_catalog) -> list:
    """All per-block group assignments with |f(X_i)| = C_i, as tuples of groups."""
    if len(P) != len(C):
        raise ValueError("partition and composition must have equal length")
    per_block = []
    for c in C:
        opts = [G for G in group_catalog if G.order == c]
        if not opts:
            return []
        per_block.append(opts)
    out = [()]
    for opts in per_block:
        out = [tup + (G,) for tup in out for G in opts]
    return out
