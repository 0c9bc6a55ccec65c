"""Friend classes, the friend-class graph SCK and the brute-force class graph CK."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Set, Tuple

from .core import (
    ClassInfo,
    GapSequence,
    Params,
    Vertex,
    adjacent,
    canonical_necklace,
    class_from_necklace,
    format_gaps,
    format_vertex,
    gap_sequence,
    rotate,
    to_mask,
    vertex_from_gaps,
)
from .enumeration import ClassCatalog, enumerate_classes, enumerate_vertices
from .errors import InadmissibleMove, TooLarge, WitnessMismatch

CK_GUARD = 5000

EdgeKey = Tuple[GapSequence, GapSequence]


@dataclass(frozen=True)
class FriendEdge:
    from_class: ClassInfo
    to_class: ClassInfo
    move_index: int
    witness_u: Vertex
    witness_v: Vertex

    @property
    def key(self) -> EdgeKey:
        return edge_key(self.from_class.necklace, self.to_class.necklace)

    def witness_for(self, necklace: GapSequence) -> Tuple[Vertex, Vertex]:
        """Witness pair ordered so that the first vertex lies in ``necklace``."""
        if necklace == self.from_class.necklace:
            return self.witness_u, self.witness_v
        if necklace == self.to_class.necklace:
            return self.witness_v, self.witness_u
        raise KeyError(necklace)


def edge_key(a: GapSequence, b: GapSequence) -> EdgeKey:
    return (a, b) if a <= b else (b, a)


def apply_move(gaps: GapSequence, i: int, s: int) -> GapSequence:
    """Move the marked cell closing gap ``i`` (1-based, cyclic) one step right.

    Gap ``i`` gains a blank, the cyclically next gap loses one.
    """
    k = len(gaps)
    if not 1 <= i <= k:
        raise InadmissibleMove(f"move index {i} outside 1..{k}")
    j = i % k
    if k == 1 or gaps[j] < s:
        raise InadmissibleMove(
            f"gap {j + 1} of {format_gaps(gaps)} has fewer than {s} blanks"
        )
    out = list(gaps)
    out[i - 1] += 1
    out[j] -= 1
    return tuple(out)


def friend_witness(a: ClassInfo, i: int, p: Params) -> Tuple[Vertex, Vertex]:
    target = canonical_necklace(apply_move(a.necklace, i, p.s))
    u = vertex_from_gaps(a.necklace, p)
    moved = u[i % p.k]
    w = tuple(sorted(e + 1 if e == moved else e for e in u))
    v = rotate(w, 1, p.n)
    if not adjacent(u, v):
        raise WitnessMismatch(f"{format_vertex(u)} meets {format_vertex(v)}")
    if canonical_necklace(gap_sequence(u, p)) != a.necklace:
        raise WitnessMismatch(f"{format_vertex(u)} not in {format_gaps(a.necklace)}")
    if canonical_necklace(gap_sequence(v, p)) != target:
        raise WitnessMismatch(f"{format_vertex(v)} not in {format_gaps(target)}")
    return u, v


def friends(a: ClassInfo, p: Params) -> List[FriendEdge]:
    """One FriendEdge per distinct friend class, lowest move index first."""
    seen = {a.necklace}
    out = []
    for i in range(1, p.k + 1):
        try:
            moved = apply_move(a.necklace, i, p.s)
        except InadmissibleMove:
            continue
        target = canonical_necklace(moved)
        if target in seen:
            continue
        seen.add(target)
        u, v = friend_witness(a, i, p)
        out.append(FriendEdge(a, class_from_necklace(target, p), i, u, v))
    return out


@dataclass
class SckGraph:
    catalog: ClassCatalog
    edges: Dict[EdgeKey, FriendEdge]
    adjacency: Dict[GapSequence, List[GapSequence]] = field(default_factory=dict)

    def __post_init__(self):
        adj: Dict[GapSequence, List[GapSequence]] = {c.necklace: [] for c in self.catalog}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        for nbrs in adj.values():
            nbrs.sort()
        self.adjacency = adj

    @property
    def params(self) -> Params:
        return self.catalog.params

    def degree(self, necklace: GapSequence) -> int:
        return len(self.adjacency[tuple(necklace)])

    def neighbors(self, necklace: GapSequence) -> List[GapSequence]:
        return self.adjacency[tuple(necklace)]

    def edge(self, a: GapSequence, b: GapSequence) -> FriendEdge:
        return self.edges[edge_key(tuple(a), tuple(b))]

    def reachable_from(self, start: GapSequence) -> Set[GapSequence]:
        seen = {start}
        queue = deque([start])
        while queue:
            for b in self.adjacency[queue.popleft()]:
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return seen

    def is_connected(self) -> bool:
        if not self.catalog.classes:
            return True
        return len(self.reachable_from(self.catalog.classes[0].necklace)) == len(self.catalog)


def build_sck(p: Params, catalog: ClassCatalog | None = None) -> SckGraph:
    if catalog is None:
        catalog = enumerate_classes(p)
    edges: Dict[EdgeKey, FriendEdge] = {}
    for a in catalog:
        for fe in friends(a, p):
            edges.setdefault(fe.key, fe)
    return SckGraph(catalog, dict(sorted(edges.items())))


@dataclass
class ClassGraph:
    nodes: List[GapSequence]
    edges: Set[FrozenSet[GapSequence]]


def build_ck_bruteforce(p: Params, guard: int = CK_GUARD) -> ClassGraph:
    """Class graph from an all-pairs adjacency scan of the explicit graph."""
    verts = []
    for v in enumerate_vertices(p):
        verts.append(v)
        if len(verts) > guard:
            raise TooLarge(f"{p} has more than {guard} vertices")
    masks = [to_mask(v) for v in verts]
    labels = [canonical_necklace(gap_sequence(v, p)) for v in verts]
    edges: Set[FrozenSet[GapSequence]] = set()
    for x in range(len(masks)):
        mx, lx = masks[x], labels[x]
        for y in range(x + 1, len(masks)):
            if lx != labels[y] and not mx & masks[y]:
                edges.add(frozenset((lx, labels[y])))
    return ClassGraph(sorted(set(labels)), edges)


def root_necklace(p: Params) -> GapSequence:
    return (p.s - 1,) * (p.k - 1) + (p.s - 1 + p.r,)


def sck_path_to_root(a: ClassInfo, p: Params) -> List[ClassInfo]:
    """Friend path from the root class to ``a``.

    Starting from ``(s-1, ..., s-1, s-1+r)`` the gaps are fixed from the last
    coordinate backwards; each unit step hands one blank to the gap on the left.
    """
    word = list(root_necklace(p))
    target = a.necklace
    path = [canonical_necklace(tuple(word))]
    for j in range(p.k - 1, 0, -1):
        while word[j] > target[j]:
            word[j] -= 1
            word[j - 1] += 1
            nk = canonical_necklace(tuple(word))
            if nk != path[-1]:
                path.append(nk)
    return [class_from_necklace(nk, p) for nk in path]


# -- export -------------------------------------------------------------------

def to_dot(g: SckGraph, name: str = "SCK") -> str:
    lines = [f"graph {name} {{"]
    for c in g.catalog:
        lines.append(f'  "{format_gaps(c.necklace)}" [order={c.order}];')
    for (a, b), fe in g.edges.items():
        lines.append(
            f'  "{format_gaps(a)}" -- "{format_gaps(b)}" [label="{fe.move_index}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def edge_records(g: SckGraph) -> Iterator[dict]:
    for fe in g.edges.values():
        yield {
            "from": list(fe.from_class.necklace),
            "to": list(fe.to_class.necklace),
            "move_index": fe.move_index,
            "witness": [list(fe.witness_u), list(fe.witness_v)],
        }


def format_edge(fe: FriendEdge) -> str:
    return (
        f"{format_gaps(fe.from_class.necklace)} -- {format_gaps(fe.to_class.necklace)}"
        f" i={fe.move_index} {format_vertex(fe.witness_u)} {format_vertex(fe.witness_v)}"
    )
