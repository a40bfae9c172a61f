"""The distributive lattice of prunings of a plane tree.

A pruning keeps the root together with a parent-closed set of further
vertices (an order ideal of the ancestor order).  Prunings are stored as
bitmasks over the preorder numbering of the base tree, so join and meet
are bitwise or/and, the rank of a pruning is its edge count, and cover
moves add one frontier vertex (a vertex outside whose parent is inside).

The rank generating function of this lattice factors over root subtrees,
which keeps it computable far beyond the sizes the lattice itself can be
materialized at; both routes live here and are cross-checked in tests.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from . import poly
from .perm import separator_placements
from .tree import (
    PlaneTree,
    TreeIndex,
    first_inversion_tree,
    index_labeled_tree,
    index_tree,
    vertex_count,
)

MATERIALIZE_LIMIT = 20


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _subtree_masks(idx: TreeIndex, v: int) -> list[int]:
    base = 1 << v
    opts = [[0, *_subtree_masks(idx, c)] for c in idx.children[v]]
    if not opts:
        return [base]
    out = []
    for combo in itertools.product(*opts):
        m = base
        for x in combo:
            m |= x
        out.append(m)
    return out


class PruningLattice:
    """All prunings of a base tree, materialized and ordered by rank then
    bitmask value.  Only sensible for small trees; the constructor
    refuses more than ``MATERIALIZE_LIMIT`` vertices."""

    def __init__(self, base: PlaneTree):
        size = vertex_count(base)
        if size > MATERIALIZE_LIMIT:
            raise ValueError(
                f"tree has {size} vertices; lattices are materialized only up to {MATERIALIZE_LIMIT}"
            )
        self.base = base
        self.index = index_tree(base)
        self.size = size
        self.masks = sorted(_subtree_masks(self.index, 0), key=lambda m: (m.bit_count(), m))
        self._members = frozenset(self.masks)
        childmask = [0] * size
        for v, par in enumerate(self.index.parent):
            if par >= 0:
                childmask[par] |= 1 << v
        self._childmask = tuple(childmask)

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[int]:
        return iter(self.masks)

    def __contains__(self, mask: int) -> bool:
        return mask in self._members

    @property
    def bottom(self) -> int:
        return 1

    @property
    def top(self) -> int:
        return (1 << self.size) - 1

    def rank(self, mask: int) -> int:
        return mask.bit_count() - 1

    def frontier(self, mask: int) -> int:
        out = 0
        for v in _bits(mask):
            out |= self._childmask[v]
        return out & ~mask

    def cover_count(self, mask: int) -> int:
        """Number of prunings covering ``mask`` (one per frontier vertex)."""
        if mask not in self._members:
            raise ValueError("mask is not a pruning of the base tree")
        return self.frontier(mask).bit_count()

    def covers_above(self, mask: int) -> list[int]:
        if mask not in self._members:
            raise ValueError("mask is not a pruning of the base tree")
        return sorted(mask | (1 << v) for v in _bits(self.frontier(mask)))

    def join(self, a: int, b: int) -> int:
        return a | b

    def meet(self, a: int, b: int) -> int:
        return a & b

    def rank_histogram(self) -> list[int]:
        out = [0] * self.size
        for m in self.masks:
            out[m.bit_count() - 1] += 1
        return out

    def rank_polynomial(self) -> poly.Poly:
        return poly.Poly(self.rank_histogram())

    def pruned_subtree(self, mask: int) -> PlaneTree:
        """The pruning itself as a plane tree (base child order kept)."""
        if mask not in self._members:
            raise ValueError("mask is not a pruning of the base tree")

        def build(v: int) -> PlaneTree:
            return tuple(build(c) for c in self.index.children[v] if mask >> c & 1)

        return build(0)


def _rank_poly_product(t: PlaneTree) -> poly.Poly:
    out = poly.ONE
    for c in t:
        out = out * (poly.ONE + poly.Q * _rank_poly_product(c))
    return out


def rank_generating_function(t: PlaneTree) -> poly.Poly:
    """Sum of q^rank over prunings: by direct enumeration while the
    lattice fits, by the product over root subtrees beyond that.

    >>> str(rank_generating_function(((), ())))
    '1 + 2*q + q^2'
    >>> str(rank_generating_function((((),),)))
    '1 + q + q^2'
    """
    if vertex_count(t) <= MATERIALIZE_LIMIT:
        return PruningLattice(t).rank_polynomial()
    return _rank_poly_product(t)


def placements_match_prunings(p: Sequence[int]) -> bool:
    """Check that mapping a valid separator set S of ``p`` to the vertex
    set {p(i) : i in S} plus the root of its first-inversion tree is a
    rank-preserving order isomorphism onto the tree's prunings."""
    lt = first_inversion_tree(p)
    idx, labels = index_labeled_tree(lt)
    lat = PruningLattice(_strip_index(idx))
    id_of = {lbl: v for v, lbl in enumerate(labels)}

    mapped: list[tuple[frozenset[int], int]] = []
    for placement in separator_placements(p):
        m = 1
        for i in placement.separators:
            m |= 1 << id_of[p[i - 1]]
        if m not in lat:
            return False
        if len(placement.separators) != lat.rank(m):
            return False
        mapped.append((placement.separators, m))

    if len(mapped) != len(lat):
        return False
    if len({m for _, m in mapped}) != len(mapped):
        return False
    for s1, m1 in mapped:
        for s2, m2 in mapped:
            if (s1 <= s2) != (m1 & ~m2 == 0):
                return False
    return True


def _strip_index(idx: TreeIndex, v: int = 0) -> PlaneTree:
    return tuple(_strip_index(idx, c) for c in idx.children[v])
