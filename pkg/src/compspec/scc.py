"""Strongly connected components via Tarjan's algorithm.

The traversal is iterative (explicit work stack), so deep digraphs never hit
Python's recursion limit. Components come out in reverse topological order of
the condensation; the decomposition records a topological order explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph


@dataclass(frozen=True)
class SccDecomposition:
    """Partition of the vertex set into strongly connected components.

    components: each component as a sorted vertex tuple, listed in a
    topological order of the condensation (arcs between distinct components
    go from an earlier component to a later one).
    component_of: component index for every vertex.
    topological_order: component indices in condensation topological order;
    with the chosen component ordering this is simply (0, 1, ..., k-1).
    """

    components: tuple[tuple[int, ...], ...]
    component_of: tuple[int, ...]
    topological_order: tuple[int, ...]


def decompose(d: Digraph) -> SccDecomposition:
    """Tarjan's strongly connected components, iteratively."""
    n = d.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[tuple[int, ...]] = []
    comp_of = [-1] * n
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            descended = False
            adj = d.out_adj[v]
            while pi < len(adj):
                w = adj[pi]
                pi += 1
                if index[w] == -1:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if descended:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                members = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp_of[w] = len(comps)
                    members.append(w)
                    if w == v:
                        break
                comps.append(tuple(sorted(members)))

    # Tarjan emits components in reverse topological order; flip them so the
    # stored order is topological and indices read naturally.
    k = len(comps)
    return SccDecomposition(
        components=tuple(reversed(comps)),
        component_of=tuple(k - 1 - c for c in comp_of),
        topological_order=tuple(range(k)),
    )


def is_strongly_connected(d: Digraph) -> bool:
    """True when the whole digraph is one strongly connected component.

    The empty digraph and the single vertex count as strongly connected.
    """
    return d.n <= 1 or len(decompose(d).components) == 1


def is_acyclic(d: Digraph) -> bool:
    """True when the digraph has no directed cycle (all components trivial)."""
    return all(len(c) == 1 for c in decompose(d).components)
