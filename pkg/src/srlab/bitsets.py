"""Vertex sets packed as Python int bitmasks; vertex v occupies bit v-1."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length())
        mask ^= b
    return tuple(out)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def iter_vertices(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length()
        mask ^= b


def submasks(mask: int) -> Iterator[int]:
    """All submasks of mask, including 0 and mask itself."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def ksubsets(mask: int, k: int) -> Iterator[int]:
    """Size-k submasks, in lexicographic order of their vertex tuples."""
    for combo in combinations(vertices_of(mask), k):
        yield mask_of(combo)


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def maximal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal members, deduplicated."""
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in uniq:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return kept


def minimal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal members, deduplicated."""
    uniq = sorted(set(masks), key=lambda m: m.bit_count())
    kept: list[int] = []
    for m in uniq:
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return kept


def sort_canonical(masks: Iterable[int]) -> tuple[int, ...]:
    """Sort masks lexicographically by their ascending vertex tuples."""
    return tuple(sorted(masks, key=vertices_of))
