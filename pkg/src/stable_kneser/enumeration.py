"""Streaming enumeration of vertices and rotation classes."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Dict, Iterator, List

from .core import ClassInfo, GapSequence, Params, Vertex, class_from_necklace, is_stable

BRUTE_FORCE_MAX_N = 20


def enumerate_vertices(p: Params) -> Iterator[Vertex]:
    """Yield every s-stable k-subset in lexicographic order.

    Memory is O(k): the generator walks a single partial vertex.
    """
    n, k, s = p.n, p.k, p.s
    cur = [0] * k

    def rec(j: int, lo: int, hi_last: int) -> Iterator[Vertex]:
        # the remaining k-j elements need room for s-step spacing below hi_last
        hi = hi_last - (k - 1 - j) * s
        for e in range(lo, hi + 1):
            cur[j] = e
            if j == k - 1:
                yield tuple(cur)
            else:
                yield from rec(j + 1, e + s, hi_last)

    for first in range(1, n + 1):
        cur[0] = first
        # the wrap gap from the last element back to ``first`` must be >= s
        last_max = min(n, first + n - s)
        if k == 1:
            yield (first,)
        else:
            yield from rec(1, first + s, last_max)


def count_by_composition(p: Params) -> int:
    """n * C(r + k - 1, k - 1) / k, counting (vertex, marked cell) pairs."""
    return p.n * comb(p.r + p.k - 1, p.k - 1) // p.k


def count_by_brute_force(p: Params) -> int:
    return sum(
        1 for c in combinations(range(1, p.n + 1), p.k) if is_stable(c, p)
    )


def count_vertices(p: Params) -> int:
    if p.n <= BRUTE_FORCE_MAX_N:
        return count_by_brute_force(p)
    return count_by_composition(p)


@dataclass
class ClassCatalog:
    params: Params
    classes: List[ClassInfo]
    total_vertices: int
    _index: Dict[GapSequence, ClassInfo] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {c.necklace: c for c in self.classes}

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __getitem__(self, necklace) -> ClassInfo:
        return self._index[tuple(necklace)]

    def __contains__(self, necklace) -> bool:
        return tuple(necklace) in self._index


def necklaces_with_sum(length: int, total: int) -> Iterator[GapSequence]:
    """Necklaces (least rotations, periodic ones included) of nonnegative
    integers with the given length and sum, in lexicographic order.

    Recursive prenecklace generation with a running-sum cut.
    """
    a = [0] * (length + 1)

    def gen(t: int, period: int, left: int) -> Iterator[GapSequence]:
        if t > length:
            if left == 0 and length % period == 0:
                yield tuple(a[1:])
            return
        lo = a[t - period]
        if t == length:
            # the last entry is forced by the sum
            if left >= lo:
                a[t] = left
                yield from gen(t + 1, period if left == lo else t, 0)
            return
        for v in range(lo, left + 1):
            a[t] = v
            yield from gen(t + 1, period if v == lo else t, left - v)

    for first in range(0, total + 1):
        # every entry of a necklace is >= its first entry
        if first * length > total:
            break
        a[1] = first
        if length == 1:
            if first == total:
                yield (first,)
            continue
        yield from gen(2, 1, total - first)


def iter_classes(p: Params) -> Iterator[ClassInfo]:
    shift = p.s - 1
    for word in necklaces_with_sum(p.k, p.r):
        yield class_from_necklace(tuple(x + shift for x in word), p)


def enumerate_classes(p: Params) -> ClassCatalog:
    classes = list(iter_classes(p))
    return ClassCatalog(p, classes, sum(c.order for c in classes))
