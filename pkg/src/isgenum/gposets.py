"""Groupoid basis of a block-matrix algebra and the search for its orders.

Given a meet-semilattice E, a D-partition (X_1, ..., X_k) of E and a group
per block, the basis consists of all tuples (block, row, col, g).  The
search enumerates every partial order on the basis that restricts to the
semilattice order on idempotents, to equality inside blocks, and admits
unique restrictions and corestrictions; each such order yields one inverse
semigroup downstream.

Orders are stored as per-element bitmasks over a global element index in
which idempotent (block, e, e, identity) is element e of E.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple

from .groups import Group

__all__ = [
    "GroupoidBasis",
    "BasisOrder",
    "SearchNode",
    "e_groupoid",
    "block_order",
    "poset_possibilities",
    "children",
    "passes_cardinality_test",
    "g_posets",
    "validate_hypotheses",
]

DEBUG_VALIDATE = False


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class GroupoidBasis:
    """Matrix-unit basis with blocks indexed by a D-partition of E."""

    __slots__ = (
        "E", "partition", "groups", "size", "elem", "index", "inv",
        "dom", "ran", "block_of", "compose",
        "pos_blocks", "pos_of_block", "pos_elems", "pos_mask",
        "covered_positions", "_poss_memo",
    )

    def __init__(self, E, partition, groups):
        partition = tuple(tuple(X) for X in partition)
        groups = tuple(groups)
        if len(partition) != len(groups):
            raise ValueError("one group per block required")
        flat = sorted(x for X in partition for x in X)
        if flat != list(range(E.size)):
            raise ValueError("blocks must partition the elements of E")
        if any(len(partition[i]) < len(partition[i + 1])
               for i in range(len(partition) - 1)):
            raise ValueError("blocks must be weakly decreasing in size")
        self.E = E
        self.partition = partition
        self.groups = groups

        block_of_label = [0] * E.size
        for i, X in enumerate(partition):
            for x in X:
                block_of_label[x] = i

        elem = [(block_of_label[e], e, e, 0) for e in range(E.size)]
        for i, X in enumerate(partition):
            g_order = groups[i].order
            for a in X:
                for b in X:
                    for g in range(g_order):
                        if a == b and g == 0:
                            continue
                        elem.append((i, a, b, g))
        self.elem = tuple(elem)
        self.size = len(elem)
        self.index = {t: s for s, t in enumerate(elem)}
        self.block_of = tuple(t[0] for t in elem)
        self.ran = tuple(t[1] for t in elem)
        self.dom = tuple(t[2] for t in elem)
        self.inv = tuple(
            self.index[(i, b, a, groups[i].inv[g])] for i, a, b, g in elem
        )

        # partial product: (i,a,b,g)(i,b,c,h) = (i,a,c,gh), else -1
        compose = []
        for i, a, b, g in elem:
            grow = groups[i].mul[g]
            idx = self.index
            row = [
                idx[(i, a, d, grow[h])] if (j == i and c == b) else -1
                for j, c, d, h in elem
            ]
            compose.append(tuple(row))
        self.compose = tuple(compose)

        # search order: deepest-reaching blocks first
        def sort_key(i):
            X = partition[i]
            reach = max(E.down_level_of(x) for x in X)
            return (-reach, -len(X), X)

        self.pos_blocks = tuple(sorted(range(len(partition)), key=sort_key))
        pos_of_block = [0] * len(partition)
        for p, i in enumerate(self.pos_blocks):
            pos_of_block[i] = p
        self.pos_of_block = tuple(pos_of_block)
        self.pos_elems = tuple(
            tuple(s for s in range(self.size) if self.block_of[s] == i)
            for i in self.pos_blocks
        )
        self.pos_mask = tuple(
            sum(1 << s for s in elems) for elems in self.pos_elems
        )

        cov = [set() for _ in partition]
        for lo, hi in E.covers:
            bl, bh = block_of_label[lo], block_of_label[hi]
            if bl != bh:
                cov[pos_of_block[bh]].add(pos_of_block[bl])
        self.covered_positions = tuple(tuple(sorted(c)) for c in cov)
        self._poss_memo = {}

    def __repr__(self):
        sig = ", ".join(
            f"{len(X)}x{len(X)}({G.name})"
            for X, G in zip(self.partition, self.groups)
        )
        return f"GroupoidBasis({sig})"

    def root_down(self):
        """Order on idempotents inherited from E; everything else reflexive."""
        E = self.E
        return tuple(
            E.down[s] if s < E.size else 1 << s for s in range(self.size)
        )


class SearchNode(NamedTuple):
    depth: int          # number of blocks (in search order) already related
    down: tuple         # per-element down-set masks


class BasisOrder:
    """A partial order on a basis satisfying the construction hypotheses."""

    __slots__ = ("basis", "down")

    def __init__(self, basis: GroupoidBasis, down):
        self.basis = basis
        self.down = tuple(down)

    def leq(self, s: int, t: int) -> bool:
        return bool((self.down[t] >> s) & 1)

    def __eq__(self, other):
        return (
            isinstance(other, BasisOrder)
            and self.basis is other.basis
            and self.down == other.down
        )

    def __hash__(self):
        return hash(self.down)


def e_groupoid(E, P, f) -> GroupoidBasis:
    """Basis of the block algebra determined by (E, D-partition, groups)."""
    return GroupoidBasis(E, P, f)


def block_order(basis: GroupoidBasis) -> list:
    """Blocks in search order: deeper down-level reach first, ties by size."""
    return [
        (basis.partition[i], basis.groups[i]) for i in basis.pos_blocks
    ]


# ---------------------------------------------------------------------------
# cross-block possibilities

_WREATH_HOM_CACHE: dict = {}


def _wmul(w1, w2, hmul):
    s1, h1 = w1
    s2, h2 = w2
    return (
        tuple(s1[z] for z in s2),
        tuple(hmul[h1[s2[z]]][h2[z]] for z in range(len(s2))),
    )


def _winv(w, hinv):
    s, h = w
    si = [0] * len(s)
    for z, v in enumerate(s):
        si[v] = z
    return (tuple(si), tuple(hinv[h[si[c]]] for c in range(len(s))))


def _wreath_homs(G: Group, H: Group, m: int):
    """All homomorphisms from G into the wreath-style group of pairs
    (permutation of m slots, H-element per slot); one image per G element."""
    key = (G.name, H.name, m)
    cached = _WREATH_HOM_CACHE.get(key)
    if cached is not None:
        return cached
    elements = [
        (s, h)
        for s in sorted(itertools.permutations(range(m)))
        for h in itertools.product(range(H.order), repeat=m)
    ]
    index = {w: i for i, w in enumerate(elements)}
    hmul = H.mul
    table = tuple(
        tuple(index[_wmul(w1, w2, hmul)] for w2 in elements) for w1 in elements
    )
    W = Group(table, f"Wr({H.name},{m})")
    gens = G.generating_set()
    homs = []
    if not gens:
        homs.append((elements[0],) * G.order)
    else:
        cands = []
        for g in gens:
            o = G.element_order(g)
            ok = []
            for wi in range(W.order):
                acc, k = 0, 0
                while k < o:
                    acc = table[acc][wi]
                    k += 1
                if acc == 0:
                    ok.append(wi)
            cands.append(ok)
        for imgs in itertools.product(*cands):
            ext = G.extend_hom(imgs, table)
            if ext is not None:
                homs.append(tuple(elements[wi] for wi in ext))
    _WREATH_HOM_CACHE[key] = tuple(homs)
    return _WREATH_HOM_CACHE[key]


def poset_possibilities(basis: GroupoidBasis, hi_pos: int, lo_pos: int):
    """All cross-block partial orders between two blocks of the basis.

    Returns a list of possibilities, each a tuple of direct-down masks (over
    elements of the lower block) aligned with basis.pos_elems[hi_pos].  Each
    possibility restricts to the idempotent order between the two blocks, to
    equality inside them, and satisfies closure under inverses and products
    as well as unique restriction/corestriction on the pair.
    """
    memo = basis._poss_memo
    cached = memo.get((hi_pos, lo_pos))
    if cached is not None:
        return cached

    E = basis.E
    i_hi = basis.pos_blocks[hi_pos]
    i_lo = basis.pos_blocks[lo_pos]
    X, G = basis.partition[i_hi], basis.groups[i_hi]
    Y, H = basis.partition[i_lo], basis.groups[i_lo]
    below = {
        a: tuple(c for c in Y if (E.down[a] >> c) & 1) for a in X
    }
    elems = basis.pos_elems[hi_pos]
    m = len(below[X[0]])
    if any(len(v) != m for v in below.values()):
        memo[(hi_pos, lo_pos)] = []
        return []
    if m == 0:
        memo[(hi_pos, lo_pos)] = [tuple(0 for _ in elems)]
        return memo[(hi_pos, lo_pos)]

    hmul, hinv = H.mul, H.inv
    identity = (tuple(range(m)), (0,) * m)
    tau_options = [
        (s, h)
        for s in sorted(itertools.permutations(range(m)))
        for h in itertools.product(range(H.order), repeat=m)
    ]
    homs = _wreath_homs(G, H, m)
    index = basis.index
    results = []
    others = X[1:]
    for hom in homs:
        for choice in itertools.product(tau_options, repeat=len(others)):
            tau = {X[0]: identity}
            for a, w in zip(others, choice):
                tau[a] = w
            tauinv = {a: _winv(w, hinv) for a, w in tau.items()}
            masks = []
            for s in elems:
                _, a, b, g = basis.elem[s]
                sig, hv = _wmul(tau[a], _wmul(hom[g], tauinv[b], hmul), hmul)
                rows, cols = below[a], below[b]
                mask = 0
                for z in range(m):
                    mask |= 1 << index[(i_lo, rows[sig[z]], cols[z], hv[z])]
                masks.append(mask)
            results.append(tuple(masks))
    memo[(hi_pos, lo_pos)] = results
    return results


# ---------------------------------------------------------------------------
# depth-first search


def passes_cardinality_test(basis: GroupoidBasis, down, new_pos: int) -> bool:
    """Every element of the new block must dominate, in each earlier block,
    as many elements as the block's least idempotent does."""
    elems = basis.pos_elems[new_pos]
    ref = min(basis.partition[basis.pos_blocks[new_pos]])
    for q in range(new_pos):
        bm = basis.pos_mask[q]
        r = (down[ref] & bm).bit_count()
        for t in elems:
            if (down[t] & bm).bit_count() != r:
                return False
    return True


def children(basis: GroupoidBasis, node: SearchNode):
    """Extend the order of `node` over the next block in every valid way."""
    new_pos = node.depth
    if new_pos >= len(basis.pos_blocks):
        return
    down = node.down
    elems = basis.pos_elems[new_pos]
    covered = basis.covered_positions[new_pos]
    polists = [poset_possibilities(basis, new_pos, q) for q in covered]
    if any(not pl for pl in polists):
        return
    qmasks = [basis.pos_mask[q] for q in covered]
    for combo in itertools.product(*polists):
        nd = list(down)
        for ti, t in enumerate(elems):
            direct = 0
            for part in combo:
                direct |= part[ti]
            acc = nd[t] | direct
            dd = direct
            while dd:
                low = dd & -dd
                dd ^= low
                acc |= down[low.bit_length() - 1]
            nd[t] = acc
        # the closure must not add cross-block pairs beyond the chosen
        # possibility on any covered block; anything else cannot satisfy
        # the uniqueness hypotheses downstream
        ok = True
        for part, bm in zip(combo, qmasks):
            for ti, t in enumerate(elems):
                if nd[t] & bm != part[ti]:
                    ok = False
                    break
            if not ok:
                break
        if ok and passes_cardinality_test(basis, nd, new_pos):
            yield SearchNode(node.depth + 1, tuple(nd))


def g_posets(basis: GroupoidBasis):
    """Stream every partial order on the basis usable by the construction."""
    k = len(basis.pos_blocks)

    def rec(node):
        if node.depth == k:
            if DEBUG_VALIDATE:
                validate_hypotheses(basis, node.down)
            yield BasisOrder(basis, node.down)
            return
        for child in children(basis, node):
            yield from rec(child)

    yield from rec(SearchNode(1, basis.root_down()))


# ---------------------------------------------------------------------------
# full validation (tests and debug runs)


def validate_hypotheses(basis: GroupoidBasis, down) -> bool:
    """Check all construction hypotheses on a full basis order; raises on failure."""
    n = basis.size
    E = basis.E
    inv = basis.inv
    compose = basis.compose
    dom, ran = basis.dom, basis.ran

    for t in range(n):
        if not (down[t] >> t) & 1:
            raise AssertionError("order not reflexive")
        for u in _bits(down[t]):
            if u != t and (down[u] >> t) & 1:
                raise AssertionError("order not antisymmetric")
            if down[u] & ~down[t]:
                raise AssertionError("order not transitive")

    m = E.size
    for e in range(m):
        if down[e] != E.down[e]:
            raise AssertionError("order does not restrict to the semilattice")

    for t in range(n):
        for s in _bits(down[t]):
            if not (down[inv[t]] >> inv[s]) & 1:
                raise AssertionError("order not closed under inverses")

    for y in range(n):
        for z in range(n):
            yz = compose[y][z]
            if yz < 0:
                continue
            for s in _bits(down[y]):
                for t in _bits(down[z]):
                    st = compose[s][t]
                    if st >= 0 and not (down[yz] >> st) & 1:
                        raise AssertionError("order not closed under products")

    for s in range(n):
        ds, rs = dom[s], ran[s]
        for e in range(m):
            if (E.down[ds] >> e) & 1:
                matches = [u for u in _bits(down[s]) if dom[u] == e]
                if len(matches) != 1:
                    raise AssertionError("restriction not unique")
            if (E.down[rs] >> e) & 1:
                matches = [u for u in _bits(down[s]) if ran[u] == e]
                if len(matches) != 1:
                    raise AssertionError("corestriction not unique")
    return True
