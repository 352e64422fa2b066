"""Bitset helpers on plain Python ints (bit i = membership of i)."""

from __future__ import annotations

from collections.abc import Iterator


def ones(n: int) -> int:
    return (1 << n) - 1 if n > 0 else 0


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def highest_bit(mask: int) -> int:
    return mask.bit_length() - 1


def bit_positions(mask: int) -> Iterator[int]:
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


def reverse_bits(mask: int, width: int) -> int:
    if width <= 0:
        return 0
    return int(format(mask & ones(width), f"0{width}b")[::-1], 2)


def runs_of_length(mask: int, n: int) -> int:
    """Mask of positions i such that bits i .. i+n-1 are all set."""
    result = mask
    have = 1
    while have < n and result:
        step = min(have, n - have)
        result &= result >> step
        have += step
    return result
