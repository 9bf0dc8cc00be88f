"""Word-level bitset helpers for sets of variable indices.

A square-free monomial on n <= 63 variables is one machine word: bit j-1
set means the variable x_j divides the monomial.  All enumeration helpers
yield masks in ascending numeric order, which is the canonical order used
everywhere in this package.
"""
from __future__ import annotations

from typing import Iterable, Iterator


def mask_from_indices(indices: Iterable[int], n: int) -> int:
    """Build a mask from 1-based variable indices, checking the range."""
    from .errors import IndexOutOfRangeError

    mask = 0
    for j in indices:
        if not 1 <= j <= n:
            raise IndexOutOfRangeError(f"variable index {j} outside [1..{n}]")
        mask |= 1 << (j - 1)
    return mask


def indices_from_mask(mask: int) -> tuple[int, ...]:
    """1-based variable indices of a mask, ascending."""
    return tuple(p + 1 for p in iter_bits(mask))


def iter_bits(mask: int) -> Iterator[int]:
    """Yield 0-based bit positions of a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def fixed_popcount_masks(n: int, k: int) -> Iterator[int]:
    """All k-bit subsets of [0..n), ascending (Gosper's hack)."""
    if k < 0 or k > n:
        return
    if k == 0:
        yield 0
        return
    m = (1 << k) - 1
    top = 1 << n
    while m < top:
        yield m
        low = m & -m
        ripple = m + low
        m = ripple | (((m ^ ripple) >> 2) // low)


def subsets_of_mask(mask: int, k: int) -> Iterator[int]:
    """All k-element subsets of the set bits of mask, ascending as masks."""
    positions = list(iter_bits(mask))
    # ascending compressed masks scatter to ascending expanded masks
    for packed in fixed_popcount_masks(len(positions), k):
        out = 0
        for t in iter_bits(packed):
            out |= 1 << positions[t]
        yield out
