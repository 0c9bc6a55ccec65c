"""Independent checks: a Hamiltonian-cycle verifier, a backtracking oracle and
a replay of the structural facts the construction relies on.

The verifier only shares the stability/adjacency predicates with the rest of
the package; the vertex count is recomputed here rather than imported.
"""
from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from itertools import combinations
from math import comb, gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .core import (
    Params,
    Vertex,
    adjacent,
    canonical_necklace,
    gap_sequence,
    is_stable,
    rotate,
)
from .errors import MalformedSet, SearchExhausted, TooLarge

BRUTE_COUNT_MAX_N = 20
NODE_BUDGET = 10**7


def _independent_count(p: Params) -> int:
    if p.n <= BRUTE_COUNT_MAX_N:
        return sum(1 for c in combinations(range(1, p.n + 1), p.k) if is_stable(c, p))
    # pick the cell of one marked element (n ways) and a composition of the
    # r spare blanks into k gaps; every vertex is hit once per element
    return p.n * comb(p.r + p.k - 1, p.k - 1) // p.k


@dataclass
class VerificationReport:
    ok: bool
    vertex_count: int
    expected_count: int
    missing: int = 0
    duplicates: int = 0
    bad_edges: List[Tuple[int, int]] = field(default_factory=list)
    bad_vertices: List[int] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def verify_cycle(p: Params, seq: Sequence[Sequence[int]]) -> VerificationReport:
    """Check that ``seq`` lists every vertex once with consecutive entries disjoint.

    ``bad_vertices`` and ``bad_edges`` hold positions into ``seq``; an edge
    ``(i, i+1)`` wraps around at the end.
    """
    expected = _independent_count(p)
    bad_vertices = []
    seen = set()
    duplicates = 0
    sets = []
    for pos, v in enumerate(seq):
        try:
            v = tuple(v)
            ok = is_stable(v, p)
        except (MalformedSet, TypeError):
            ok = False
        if not ok:
            bad_vertices.append(pos)
        elif v in seen:
            duplicates += 1
        else:
            seen.add(v)
        sets.append(frozenset(v) if isinstance(v, tuple) else frozenset())
    bad_edges = []
    m = len(sets)
    if m >= 2:
        for i in range(m):
            j = (i + 1) % m
            if not sets[i].isdisjoint(sets[j]):
                bad_edges.append((i, j))
    missing = expected - len(seen)
    ok = (
        not bad_vertices
        and not bad_edges
        and duplicates == 0
        and missing == 0
        and m == expected
        and m >= 3
    )
    return VerificationReport(ok, m, expected, missing, duplicates, bad_edges, bad_vertices)


def _explicit_graph(p: Params, limit: int) -> Tuple[List[Vertex], List[List[int]]]:
    verts = [c for c in combinations(range(1, p.n + 1), p.k) if is_stable(c, p)]
    if len(verts) > limit:
        raise TooLarge(f"{p} has {len(verts)} vertices > limit {limit}")
    sets = [set(v) for v in verts]
    adj = [
        [j for j in range(len(verts)) if j != i and sets[i].isdisjoint(sets[j])]
        for i in range(len(verts))
    ]
    return verts, adj


def bruteforce_hamiltonian(
    p: Params, limit: int = 40, budget: int = NODE_BUDGET
) -> Optional[List[Vertex]]:
    """Backtracking search for a Hamiltonian cycle; None if there is none.

    Branches try the neighbour with the fewest unvisited neighbours first.
    Raises SearchExhausted if ``budget`` expansions pass without an answer.
    """
    verts, adj = _explicit_graph(p, limit)
    m = len(verts)
    if m < 3:
        return None
    visited = [False] * m
    free_deg = [len(a) for a in adj]
    path = [0]
    visited[0] = True
    for y in adj[0]:
        free_deg[y] -= 1
    expansions = 0

    def extend() -> bool:
        nonlocal expansions
        expansions += 1
        if expansions > budget:
            raise SearchExhausted(f"no answer for {p} within {budget} expansions")
        x = path[-1]
        if len(path) == m:
            return 0 in adj[x]
        cands = sorted((y for y in adj[x] if not visited[y]), key=lambda y: (free_deg[y], y))
        for y in cands:
            visited[y] = True
            path.append(y)
            for z in adj[y]:
                free_deg[z] -= 1
            if extend():
                return True
            for z in adj[y]:
                free_deg[z] += 1
            path.pop()
            visited[y] = False
        return False

    if extend():
        return [verts[i] for i in path]
    return None


# -- claim replay -------------------------------------------------------------

@dataclass
class ClaimReport:
    params: Params
    results: Dict[str, bool] = field(default_factory=dict)
    notes: Dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    def record(self, name: str, passed: bool, note: str = "") -> None:
        self.results[name] = passed
        if note:
            self.notes[name] = note

    def to_dict(self) -> dict:
        return {
            "params": asdict(self.params),
            "ok": self.ok,
            "claims": self.results,
            "notes": self.notes,
        }


def _orbit(v: Vertex, n: int) -> List[Vertex]:
    out = [v]
    w = rotate(v, 1, n)
    while w != v:
        out.append(w)
        w = rotate(w, 1, n)
    return out


def replay_claims(
    p: Params, guard: int = 5000, exhaustive_pairs: int = 400, seed: int = 0
) -> ClaimReport:
    """Check every structural fact the construction uses on one instance."""
    from .classgraph import build_sck, friends, root_necklace, sck_path_to_root
    from .enumeration import enumerate_classes
    from .hamilton import assemble_hamiltonian, align_indexing, spanning_tree
    from .errors import NotHamiltonian

    rep = ClaimReport(p)
    n = p.n
    verts = [c for c in combinations(range(1, n + 1), p.k) if is_stable(c, p)]
    if len(verts) > guard:
        raise TooLarge(f"{p} has {len(verts)} vertices > guard {guard}")

    # rotation orbits computed by brute force
    orbit_of: Dict[Vertex, Tuple[Vertex, ...]] = {}
    for v in verts:
        if v not in orbit_of:
            orb = tuple(_orbit(v, n))
            for w in orb:
                orbit_of[w] = orb
    orbits = {orb for orb in orbit_of.values()}

    # Claim 2: rotating a vertex walks a cycle through its class
    rot_ok = True
    for orb in orbits:
        if len(orb) < 3:
            continue
        for i, v in enumerate(orb):
            if not adjacent(v, orb[(i + 1) % len(orb)]):
                rot_ok = False
    rep.record("rotation_cycles", rot_ok)

    # Claim 3: orbit size is n over the block repetition count of the gap word
    catalog = enumerate_classes(p)
    by_neck = {c.necklace: c for c in catalog}
    order_ok = len(catalog) == len(orbits) and catalog.total_vertices == len(verts)
    for orb in orbits:
        nk = canonical_necklace(gap_sequence(orb[0], p))
        c = by_neck.get(nk)
        if c is None or c.order != len(orb) or orb[0] not in orbit_of[c.base_vertex]:
            order_ok = False
        elif n % c.order or gcd(p.k, p.n - p.k) % (n // c.order):
            order_ok = False
    rep.record("class_orders", order_ok)

    # Lemma 4: rotation preserves adjacency
    if len(verts) <= exhaustive_pairs:
        pairs = [(a, b) for a in verts for b in verts]
        note = "exhaustive"
    else:
        rng = random.Random(seed)
        pairs = [(rng.choice(verts), rng.choice(verts)) for _ in range(20000)]
        note = "20000 random pairs"
    inv_ok = all(
        adjacent(a, b) == adjacent(rotate(a, 1, n), rotate(b, 1, n)) for a, b in pairs
    )
    rep.record("rotation_invariance", inv_ok, note)

    # friend classes are adjacent (witness check), degree bound, connectivity
    g = build_sck(p, catalog)
    wit_ok = True
    for (a, b), fe in g.edges.items():
        u, v = fe.witness_for(a)
        if not (
            adjacent(u, v)
            and canonical_necklace(gap_sequence(u, p)) == a
            and canonical_necklace(gap_sequence(v, p)) == b
            and is_stable(u, p)
            and is_stable(v, p)
        ):
            wit_ok = False
    rep.record("friend_witnesses", wit_ok)

    # a class makes at most k/d distinct friend moves, and is the target of at
    # most k/d more, so its degree stays below n/d = order since n > 2k
    out_ok = all(len(friends(c, p)) <= p.k // c.period_d for c in catalog)
    rep.record("friend_count", out_ok)
    deg_ok = all(
        g.degree(c.necklace) <= 2 * p.k // c.period_d and g.degree(c.necklace) < c.order
        for c in catalog
    ) if p.n > 2 * p.k else all(g.degree(c.necklace) == 0 for c in catalog)
    rep.record("degree_below_order", deg_ok)

    root = root_necklace(p)
    reach = g.reachable_from(root) if root in by_neck else set()
    path_ok = len(reach) == len(catalog)
    for c in catalog:
        path = sck_path_to_root(c, p)
        if path[0].necklace != root or path[-1].necklace != c.necklace:
            path_ok = False
        for x, y in zip(path, path[1:]):
            if y.necklace not in g.neighbors(x.necklace):
                path_ok = False
    rep.record("sck_connected", path_ok)

    # index alignment and the final cycle
    if p.s == 2 and p.n == 2 * p.k:
        try:
            assemble_hamiltonian(p)
            rep.record("hamiltonian", False, "expected NotHamiltonian")
        except NotHamiltonian:
            rep.record("hamiltonian", True, "NotHamiltonian as expected")
        return rep
    tree = spanning_tree(g)
    idx = align_indexing(tree, p)
    align_ok = True
    for b, c, _ in tree.edges():
        ob, oc = tree.classes[b].order, tree.classes[c].order
        for i in range(ob * oc // gcd(ob, oc)):
            if not adjacent(idx.vertex(b, i), idx.vertex(c, i)):
                align_ok = False
    rep.record("index_alignment", align_ok)
    rep.record("hamiltonian", verify_cycle(p, assemble_hamiltonian(p)).ok)
    return rep
