"""Subsets of a finite carrier as int bitmasks.

Carriers are indexed 0..n-1 and a subset is the int with bit i set iff
element i is in the subset. Union is |, intersection &, the empty set 0.
All hyperoperation tables in this package store one mask per cell.
"""

from __future__ import annotations


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def iter_bits(mask: int):
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_count(mask: int) -> int:
    return mask.bit_count()


def is_singleton(mask: int) -> bool:
    return mask != 0 and mask & (mask - 1) == 0


def singleton_index(mask: int) -> int:
    """Index of the unique element of a singleton mask."""
    assert is_singleton(mask)
    return mask.bit_length() - 1


def full_mask(n: int) -> int:
    return (1 << n) - 1


class SetOps:
    """Memoized setwise extensions of a binary hyperoperation table.

    table[x][y] is the mask of the hyperoperation value at elements x, y.
    apply(A, B) is the union of table[x][y] over x in A, y in B. Results
    are cached per (A, B) mask pair; singleton arguments short-circuit to
    direct table lookups.
    """

    def __init__(self, table):
        self.table = table
        self.n = len(table)
        self._cache = {}

    def apply(self, a_mask: int, b_mask: int) -> int:
        if is_singleton(a_mask) and is_singleton(b_mask):
            return self.table[a_mask.bit_length() - 1][b_mask.bit_length() - 1]
        key = (a_mask, b_mask)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        out = 0
        table = self.table
        for x in iter_bits(a_mask):
            row = table[x]
            for y in iter_bits(b_mask):
                out |= row[y]
        self._cache[key] = out
        return out

    def fold(self, masks) -> int:
        """Left fold of apply over a nonempty sequence of masks."""
        it = iter(masks)
        acc = next(it)
        for m in it:
            acc = self.apply(acc, m)
        return acc


def masks_to_sorted_sets(masks):
    """Canonical list-of-lists form: each mask as sorted indices, rows sorted."""
    rows = sorted(tuple(iter_bits(m)) for m in masks)
    return [list(r) for r in rows]
