from math import gcd

import pytest

from stable_kneser.classgraph import build_sck
from stable_kneser.core import adjacent, from_mask, make_params, to_mask
from stable_kneser.enumeration import enumerate_classes
from stable_kneser.errors import NotHamiltonian, SlotOccupied
from stable_kneser.hamilton import (
    CycleStructure,
    align_indexing,
    assemble_hamiltonian,
    construct,
    spanning_tree,
    splice,
)
from stable_kneser.verify import bruteforce_hamiltonian, verify_cycle

from oracles import stable_subsets

P932 = make_params(9, 3, 2)
SWEEP = [(n, k, s) for s in (2, 3, 4) for k in (1, 2, 3, 4) for n in range(s * k + 1, s * k + 8)]


def tree_edges(t):
    return [(b, c) for b, c, _ in t.edges()]


def test_spanning_tree_932():
    t = spanning_tree(build_sck(P932))
    assert t.root.necklace == (1, 1, 4)
    assert tree_edges(t) == [
        ((1, 1, 4), (1, 2, 3)),
        ((1, 1, 4), (1, 3, 2)),
        ((1, 2, 3), (2, 2, 2)),
    ]
    assert t.level == {(1, 1, 4): 0, (1, 2, 3): 1, (1, 3, 2): 1, (2, 2, 2): 2}


def test_spanning_tree_small():
    t = spanning_tree(build_sck(make_params(7, 3, 2)))
    assert t.bfs_order == [(1, 1, 2)] and not t.parent
    t = spanning_tree(build_sck(make_params(8, 3, 2)))
    assert tree_edges(t) == [((1, 1, 3), (1, 2, 2))]


@pytest.mark.parametrize("n,k,s", SWEEP)
def test_tree_invariants(n, k, s):
    p = make_params(n, k, s)
    t = spanning_tree(build_sck(p))
    assert len(t.bfs_order) == len(t.classes)
    for c in t.bfs_order:
        if c in t.parent:
            assert t.level[c] == t.level[t.parent[c][0]] + 1
        assert t.degree(c) <= t.classes[c].order


@pytest.mark.parametrize("n,k,s", [(9, 3, 2), (8, 3, 2)] + SWEEP)
def test_alignment_full_sweep(n, k, s):
    p = make_params(n, k, s)
    t = spanning_tree(build_sck(p))
    idx = align_indexing(t, p)
    assert idx.anchors[t.root.necklace] == t.root.base_vertex
    for b, c, _ in t.edges():
        ob, oc = t.classes[b].order, t.classes[c].order
        for i in range(ob * oc // gcd(ob, oc)):
            assert adjacent(idx.vertex(b, i), idx.vertex(c, i))


def _seeded(p):
    t = spanning_tree(build_sck(p))
    idx = align_indexing(t, p)
    cs = CycleStructure(p.n)
    for c in t.classes.values():
        cs.add_rotation_cycle(to_mask(idx.anchors[c.necklace]), c.order)
    cs.consumed[t.root.necklace] = 0
    return t, idx, cs


def test_splice_932():
    t, idx, cs = _seeded(P932)
    assert cs.cycle_count() == 4
    root = t.classes[(1, 1, 4)]
    splice(cs, root, t.classes[(1, 2, 3)], 1, idx)
    assert cs.cycle_count() == 3
    splice(cs, root, t.classes[(1, 3, 2)], 2, idx)
    assert cs.cycle_count() == 2
    assert len(cs.traverse(to_mask(root.base_vertex))) == 27
    with pytest.raises(SlotOccupied):
        splice(cs, root, t.classes[(2, 2, 2)], 1, idx)


@pytest.mark.parametrize("n,k,s", [(9, 3, 2), (12, 4, 2), (13, 3, 3), (11, 2, 4)])
def test_each_splice_removes_one_cycle(n, k, s):
    p = make_params(n, k, s)
    t, idx, cs = _seeded(p)
    count = cs.cycle_count()
    assert count == len(t.classes)
    for b in t.bfs_order:
        for alpha, c in enumerate(t.children[b], start=1):
            splice(cs, t.classes[b], t.classes[c], cs.consumed[b] + alpha, idx)
            count -= 1
            assert cs.cycle_count() == count
    assert count == 1


def test_slot_feasibility():
    # consumed edge and child slots are distinct edges of each class cycle
    for n, k, s in SWEEP:
        p = make_params(n, k, s)
        con = construct(p)
        for b in con.tree.bfs_order:
            order = con.tree.classes[b].order
            used = [con.cycle.consumed[b]] + [
                (con.cycle.consumed[b] + a) % order
                for a in range(1, len(con.tree.children[b]) + 1)
            ]
            assert len(set(used)) == len(used)


def test_not_hamiltonian_622():
    with pytest.raises(NotHamiltonian, match="2k\\+1"):
        assemble_hamiltonian(make_params(6, 3, 2))


def test_complete_graph_case():
    assert assemble_hamiltonian(make_params(9, 3, 3)) == [(1, 4, 7), (2, 5, 8), (3, 6, 9)]


def test_single_class_rotation():
    cyc = assemble_hamiltonian(make_params(7, 3, 2))
    assert cyc[0] == (1, 3, 5) and len(cyc) == 7
    assert all(adjacent(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1]))


def test_932_verified_and_oracle_agrees():
    p = P932
    cyc = assemble_hamiltonian(p)
    rep = verify_cycle(p, cyc)
    assert rep.ok and rep.vertex_count == 30
    assert set(cyc) == set(stable_subsets(9, 3, 2))
    assert bruteforce_hamiltonian(p) is not None


@pytest.mark.parametrize("n,k,s", SWEEP)
def test_sweep_verified(n, k, s):
    p = make_params(n, k, s)
    cyc = assemble_hamiltonian(p)
    assert verify_cycle(p, cyc).ok
    assert cyc[0] == construct(p).indexing.anchors[root_of(p)]


def root_of(p):
    return (p.s - 1,) * (p.k - 1) + (p.s - 1 + p.r,)


def test_output_deterministic():
    p = make_params(16, 4, 2)
    assert assemble_hamiltonian(p) == assemble_hamiltonian(p)


def test_masks_and_vertices_consistent():
    con = construct(make_params(13, 3, 3))
    assert [from_mask(m) for m in con.masks()] == con.vertices()
    assert len(con.cycle) == sum(c.order for c in enumerate_classes(con.params))
