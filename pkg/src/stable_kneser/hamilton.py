"""Explicit Hamiltonian cycles of s-stable Kneser graphs.

Every rotation class already spans a cycle (``V, V+1, ..., V``).  The class
cycles are merged one at a time along a BFS spanning tree of the friend-class
graph: a tree edge ``B - C`` swaps ``B_i B_{i+1}`` and ``C_i C_{i+1}`` for
``B_i C_i`` and ``B_{i+1} C_{i+1}``, which joins the two cycles into one.
Rotation is an automorphism, so a single adjacent witness pair ``(u, v)``
gives adjacent pairs ``(B_i, C_i)`` at every index once the anchors are shifted
to agree.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .classgraph import FriendEdge, SckGraph, build_sck, root_necklace
from .core import (
    ClassInfo,
    GapSequence,
    Params,
    Vertex,
    format_gaps,
    from_mask,
    make_params,
    rotate,
    rotate_mask,
    to_mask,
)
from .enumeration import enumerate_classes
from .errors import Disconnected, KneserError, NotHamiltonian, SlotOccupied, WitnessMismatch

log = logging.getLogger(__name__)


@dataclass
class SpanningTree:
    root: ClassInfo
    classes: Dict[GapSequence, ClassInfo]
    parent: Dict[GapSequence, Tuple[GapSequence, FriendEdge]]
    children: Dict[GapSequence, List[GapSequence]]
    level: Dict[GapSequence, int]
    bfs_order: List[GapSequence]

    def degree(self, necklace: GapSequence) -> int:
        return len(self.children[necklace]) + (necklace in self.parent)

    def edges(self):
        """(parent, child, friend edge) triples in BFS order."""
        for c in self.bfs_order:
            if c in self.parent:
                b, fe = self.parent[c]
                yield b, c, fe


def spanning_tree(g: SckGraph) -> SpanningTree:
    p = g.params
    root_key = root_necklace(p)
    classes = {c.necklace: c for c in g.catalog}
    if root_key not in classes:
        raise KneserError(f"root class {format_gaps(root_key)} missing from catalog")
    parent: Dict[GapSequence, Tuple[GapSequence, FriendEdge]] = {}
    children: Dict[GapSequence, List[GapSequence]] = {nk: [] for nk in classes}
    level = {root_key: 0}
    order = [root_key]
    queue = deque([root_key])
    while queue:
        b = queue.popleft()
        for c in g.neighbors(b):
            if c in level:
                continue
            level[c] = level[b] + 1
            parent[c] = (b, g.edge(b, c))
            children[b].append(c)
            order.append(c)
            queue.append(c)
    if len(level) != len(classes):
        raise Disconnected(
            f"friend-class graph of {p} reaches {len(level)} of {len(classes)} classes"
        )
    tree = SpanningTree(classes[root_key], classes, parent, children, level, order)
    for nk, c in classes.items():
        if tree.degree(nk) > c.order:
            raise KneserError(
                f"class {format_gaps(nk)} has tree degree {tree.degree(nk)} > order {c.order}"
            )
    return tree


@dataclass
class ClassIndexing:
    """Anchors ``A_0`` per class; ``A_i`` is the anchor rotated by ``i``."""

    params: Params
    anchors: Dict[GapSequence, Vertex]

    def vertex(self, necklace: GapSequence, i: int) -> Vertex:
        return rotate(self.anchors[necklace], i, self.params.n)


def _orbit_offset(anchor: int, target: int, order: int, n: int) -> Optional[int]:
    m = anchor
    for j in range(order):
        if m == target:
            return j
        m = rotate_mask(m, 1, n)
    return None


def align_indexing(t: SpanningTree, p: Params) -> ClassIndexing:
    n = p.n
    anchors = {t.root.necklace: t.root.base_vertex}
    masks = {t.root.necklace: to_mask(t.root.base_vertex)}
    for b, c, fe in t.edges():
        u, v = fe.witness_for(b)
        ob, oc = t.classes[b].order, t.classes[c].order
        j = _orbit_offset(masks[b], to_mask(u), ob, n)
        if j is None:
            raise WitnessMismatch(f"witness {u} is not in the orbit of {format_gaps(b)}")
        anchor = rotate_mask(to_mask(v), -j, n)
        masks[c] = anchor
        anchors[c] = from_mask(anchor)
        for i in (0, 1, ob - 1, oc - 1):
            if rotate_mask(masks[b], i, n) & rotate_mask(anchor, i, n):
                raise WitnessMismatch(
                    f"anchors of {format_gaps(b)} and {format_gaps(c)} meet at index {i}"
                )
    return ClassIndexing(p, anchors)


class CycleStructure:
    """2-regular graph on vertex masks, stored as two neighbours per vertex."""

    def __init__(self, n: int):
        self.n = n
        self.nbr: Dict[int, List[int]] = {}
        self.consumed: Dict[GapSequence, int] = {}

    def __len__(self) -> int:
        return len(self.nbr)

    def add_rotation_cycle(self, anchor: int, order: int) -> None:
        ring = [anchor]
        for _ in range(order - 1):
            ring.append(rotate_mask(ring[-1], 1, self.n))
        nbr = self.nbr
        for i, m in enumerate(ring):
            nbr[m] = [ring[i - 1], ring[(i + 1) % order]]

    def has_edge(self, x: int, y: int) -> bool:
        return y in self.nbr.get(x, ())

    def exchange(self, b0: int, b1: int, c0: int, c1: int) -> None:
        """Replace edges b0-b1 and c0-c1 with b0-c0 and b1-c1."""
        if not self.has_edge(b0, b1) or not self.has_edge(c0, c1):
            raise SlotOccupied("edge to exchange is no longer in the structure")
        self._relink(b0, b1, c0)
        self._relink(b1, b0, c1)
        self._relink(c0, c1, b0)
        self._relink(c1, c0, b1)

    def _relink(self, x: int, old: int, new: int) -> None:
        pair = self.nbr[x]
        pair[pair.index(old)] = new

    def traverse(self, start: int) -> List[int]:
        nbr = self.nbr
        out = [start]
        prev, cur = start, nbr[start][1]
        while cur != start:
            out.append(cur)
            a, b = nbr[cur]
            prev, cur = cur, (b if a == prev else a)
        return out

    def cycle_count(self) -> int:
        seen = set()
        count = 0
        for m in self.nbr:
            if m not in seen:
                count += 1
                seen.update(self.traverse(m))
        return count


def splice(
    cs: CycleStructure, b: ClassInfo, c: ClassInfo, slot: int, idx: ClassIndexing
) -> CycleStructure:
    n = idx.params.n
    ab = to_mask(idx.anchors[b.necklace])
    ac = to_mask(idx.anchors[c.necklace])
    b0, b1 = rotate_mask(ab, slot, n), rotate_mask(ab, slot + 1, n)
    c0, c1 = rotate_mask(ac, slot, n), rotate_mask(ac, slot + 1, n)
    if not cs.has_edge(b0, b1):
        raise SlotOccupied(f"slot {slot} of {format_gaps(b.necklace)} already exchanged")
    cs.exchange(b0, b1, c0, c1)
    cs.consumed[c.necklace] = slot % c.order
    return cs


@dataclass
class Construction:
    """Everything built on the way to a Hamiltonian cycle."""

    params: Params
    sck: SckGraph
    tree: SpanningTree
    indexing: ClassIndexing
    cycle: CycleStructure = field(repr=False)

    def start(self) -> int:
        return to_mask(self.indexing.anchors[self.tree.root.necklace])

    def masks(self) -> List[int]:
        return self.cycle.traverse(self.start())

    def vertices(self) -> List[Vertex]:
        return [from_mask(m) for m in self.masks()]


def _check_hamiltonian(p: Params) -> None:
    if p.s == 2 and p.n == 2 * p.k:
        raise NotHamiltonian(
            f"{p} has only 2 vertices; a 2-stable Kneser graph needs n >= 2k+1 = {2 * p.k + 1}"
        )


def construct(p: Params) -> Construction:
    _check_hamiltonian(p)
    catalog = enumerate_classes(p)
    g = build_sck(p, catalog)
    tree = spanning_tree(g)
    idx = align_indexing(tree, p)
    cs = CycleStructure(p.n)
    for c in catalog:
        if c.order < 3:
            raise NotHamiltonian(f"class {format_gaps(c.necklace)} has order {c.order} < 3")
        cs.add_rotation_cycle(to_mask(idx.anchors[c.necklace]), c.order)
    log.debug("%s: %d classes, %d vertices seeded", p, len(catalog), len(cs))
    cs.consumed[tree.root.necklace] = 0
    for b in tree.bfs_order:
        base = cs.consumed[b]
        for alpha, c in enumerate(tree.children[b], start=1):
            splice(cs, tree.classes[b], tree.classes[c], base + alpha, idx)
    return Construction(p, g, tree, idx, cs)


def assemble_hamiltonian(p: Params) -> List[Vertex]:
    """Hamiltonian cycle of K_{s-stab}(n, k), first vertex = root anchor."""
    return construct(p).vertices()


def hamiltonian_cycle(n: int, k: int, s: int) -> List[Vertex]:
    return assemble_hamiltonian(make_params(n, k, s))
