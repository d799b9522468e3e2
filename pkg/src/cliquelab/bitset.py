"""Small helpers for vertex sets stored as Python int bitmasks.

A vertex set over 0..n-1 is an int whose bit i is set iff vertex i is a
member.  Intersection/union/difference are the usual &, |, &~ operators;
these helpers cover iteration and conversion.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def bit(i: int) -> int:
    return 1 << i


def mask_of(members: Iterable[int]) -> int:
    m = 0
    for v in members:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_list(mask: int) -> list[int]:
    return list(bits(mask))


def lowest_bit(mask: int) -> int:
    if not mask:
        raise ValueError("empty mask")
    return (mask & -mask).bit_length() - 1


def full_mask(n: int) -> int:
    return (1 << n) - 1
