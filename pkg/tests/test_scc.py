"""Tests for strongly connected component decomposition."""

import random

import pytest

from compspec.digraph import from_arcs
from compspec.scc import decompose, is_acyclic, is_strongly_connected


def reachability(d):
    """Transitive closure by repeated squaring of the reachability relation."""
    reach = [set(d.out_adj[v]) | {v} for v in range(d.n)]
    changed = True
    while changed:
        changed = False
        for v in range(d.n):
            extra = set()
            for w in reach[v]:
                extra |= reach[w]
            if not extra <= reach[v]:
                reach[v] |= extra
                changed = True
    return reach


def random_digraph(rnd, n, p):
    arcs = [(u, v) for u in range(n) for v in range(n)
            if u != v and rnd.random() < p]
    return from_arcs(n, arcs)


class TestDecompose:
    def test_path_gives_singletons_in_topological_order(self):
        d = from_arcs(3, [(0, 1), (1, 2)])
        dec = decompose(d)
        assert dec.components == ((0,), (1,), (2,))
        assert dec.component_of == (0, 1, 2)
        assert dec.topological_order == (0, 1, 2)

    def test_cycle_is_single_component(self):
        d = from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        dec = decompose(d)
        assert dec.components == ((0, 1, 2, 3),)

    def test_two_cycles_with_bridge(self):
        # component {0,1} must precede component {2,3}
        d = from_arcs(4, [(0, 1), (1, 0), (1, 2), (2, 3), (3, 2)])
        dec = decompose(d)
        assert dec.components == ((0, 1), (2, 3))
        assert dec.component_of == (0, 0, 1, 1)

    def test_empty_digraph(self):
        dec = decompose(from_arcs(0, []))
        assert dec.components == ()
        assert dec.component_of == ()

    def test_matches_mutual_reachability(self):
        rnd = random.Random(23)
        for _ in range(60):
            n = rnd.randint(1, 6)
            d = random_digraph(rnd, n, rnd.choice([0.15, 0.3, 0.5]))
            dec = decompose(d)
            reach = reachability(d)
            for u in range(n):
                for v in range(n):
                    same = dec.component_of[u] == dec.component_of[v]
                    mutual = v in reach[u] and u in reach[v]
                    assert same == mutual

    def test_order_is_topological(self):
        rnd = random.Random(29)
        for _ in range(60):
            n = rnd.randint(2, 7)
            d = random_digraph(rnd, n, 0.3)
            dec = decompose(d)
            for u, v in d.arcs:
                assert dec.component_of[u] <= dec.component_of[v]

    def test_components_partition_vertices(self):
        rnd = random.Random(31)
        for _ in range(30):
            n = rnd.randint(1, 8)
            d = random_digraph(rnd, n, 0.25)
            dec = decompose(d)
            seen = [v for comp in dec.components for v in comp]
            assert sorted(seen) == list(range(n))
            for i, comp in enumerate(dec.components):
                assert comp == tuple(sorted(comp))
                for v in comp:
                    assert dec.component_of[v] == i

    def test_deep_path_no_recursion_error(self):
        n = 5000
        d = from_arcs(n, [(i, i + 1) for i in range(n - 1)])
        assert len(decompose(d).components) == n


class TestPredicates:
    def test_strongly_connected_basics(self):
        assert is_strongly_connected(from_arcs(0, []))
        assert is_strongly_connected(from_arcs(1, []))
        assert not is_strongly_connected(from_arcs(2, [(0, 1)]))
        assert is_strongly_connected(from_arcs(2, [(0, 1), (1, 0)]))
        assert not is_strongly_connected(from_arcs(3, [(0, 1), (1, 0)]))

    def test_acyclic_basics(self):
        assert is_acyclic(from_arcs(0, []))
        assert is_acyclic(from_arcs(3, [(0, 1), (0, 2), (1, 2)]))
        assert not is_acyclic(from_arcs(2, [(0, 1), (1, 0)]))

    def test_acyclic_matches_closure(self):
        rnd = random.Random(37)
        for _ in range(60):
            n = rnd.randint(1, 6)
            d = random_digraph(rnd, n, 0.3)
            reach = reachability(d)
            has_cycle = any(
                v in reach[u] and u in reach[v]
                for u, v in d.arcs
            )
            assert is_acyclic(d) == (not has_cycle)
