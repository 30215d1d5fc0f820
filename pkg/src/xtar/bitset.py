"""Vertex sets as Python ints.

Bit ``i`` of a mask is set when vertex ``i`` belongs to the set. Every
operation in the package passes masks around; union is ``|``, intersection
``&``, symmetric difference ``^`` and cardinality ``mask.bit_count()``.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator


def vset(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if v < 0:
            raise ValueError(f"negative vertex index {v}")
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    """Vertices of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_members(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def full(n: int) -> int:
    return (1 << n) - 1


def complement(mask: int, n: int) -> int:
    return full(n) & ~mask


def subsets_of_size(universe: int, k: int) -> Iterator[int]:
    """All k-subsets of ``universe`` in ascending mask order."""
    verts = members(universe)
    # combinations of ascending vertices yields ascending masks only up to
    # reordering, so collect and sort per layer.
    masks = [vset(c) for c in combinations(verts, k)]
    masks.sort()
    return iter(masks)


def masks_by_popcount(n: int) -> list[int]:
    """All subsets of {0..n-1}, ordered by (cardinality, mask value)."""
    return sorted(range(1 << n), key=lambda m: (m.bit_count(), m))


def fmt(mask: int) -> str:
    return "{" + ",".join(str(v) for v in members(mask)) + "}"


def shift(mask: int, offset: int) -> int:
    return mask << offset
