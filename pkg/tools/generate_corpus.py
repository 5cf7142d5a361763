"""Regenerate data/cubic_connected_le14.g6: all connected simple cubic graphs
on at most 14 vertices, one graph6 line each, grouped by order.

The sweep closes the class of connected cubic pseudographs under the three
inverse reductions that add two vertices:

  op1   subdivide two distinct edges and join the new vertices
  op2   subdivide one edge twice and join the new vertices (parallel pair)
  op3   subdivide one edge and hang a new vertex carrying a loop on it

Reducing any edge of a connected cubic pseudograph on n >= 4 vertices
(delete both endpoints, weld the leftover stub pairs, drop free circles)
lands back in the class whenever the edge is a non-loop cycle edge or the
bridge of a loop-leaf, and one of the three ops inverts it; every graph on
n >= 4 has such an edge, so closure from the two cubic pseudographs on two
vertices (three parallel edges; two loop vertices joined by a bridge) is
complete.  Simple self-loop-free, parallel-free members of each level are
the census; the per-order counts are asserted against the known sizes
(1, 2, 5, 19, 85, 509), so an incomplete sweep cannot go unnoticed.

Dev tool only: depends on networkx and numpy for isomorphism rejection,
which the shipped package never needs.
"""

from __future__ import annotations

import sys
import time
from itertools import combinations
from pathlib import Path
from typing import Dict, List, Tuple

import networkx as nx
import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from normal7.graph_core import PseudoGraph, write_graph6

MAX_N = 14
EXPECTED = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509}

Edges = Tuple[Tuple[int, int], ...]


def _norm(pairs: List[Tuple[int, int]]) -> Edges:
    return tuple(sorted(tuple(sorted(p)) for p in pairs))


def _subdivided(edges: Edges, idx: int, new: int) -> List[Tuple[int, int]]:
    out = [p for k, p in enumerate(edges) if k != idx]
    u, v = edges[idx]
    out.extend([(u, new), (new, v)])
    return out


def op1(edges: Edges, i: int, j: int, n: int) -> Edges:
    assert i != j
    x, y = n, n + 1
    out = [p for k, p in enumerate(edges) if k not in (i, j)]
    for idx, new in ((i, x), (j, y)):
        u, v = edges[idx]
        out.extend([(u, new), (new, v)])
    out.append((x, y))
    return _norm(out)


def op2(edges: Edges, i: int, n: int) -> Edges:
    x, y = n, n + 1
    u, v = edges[i]
    out = [p for k, p in enumerate(edges) if k != i]
    out.extend([(u, x), (x, y), (y, v), (x, y)])
    return _norm(out)


def op3(edges: Edges, i: int, n: int) -> Edges:
    c, x = n, n + 1
    out = _subdivided(edges, i, c)
    out.extend([(c, x), (x, x)])
    return _norm(out)


def badness(edges: Edges) -> int:
    """2 per loop plus the multiplicity excess of every parallel class.

    One op removes at most two units, so a graph whose badness exceeds the
    number of vertex slots left before MAX_N cannot reach a simple graph.
    """
    mult: Dict[Tuple[int, int], int] = {}
    score = 0
    for u, v in edges:
        if u == v:
            score += 2
        else:
            mult[(u, v)] = mult.get((u, v), 0) + 1
    score += sum(m - 1 for m in mult.values())
    return score


def is_simple(edges: Edges) -> bool:
    return badness(edges) == 0


def _to_nx(n: int, edges: Edges) -> nx.MultiGraph:
    g = nx.MultiGraph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return g


def _invariant(n: int, edges: Edges) -> Tuple:
    adj = np.zeros((n, n))
    profile: List[Tuple[int, Tuple[int, ...]]] = []
    mult: List[Dict[int, int]] = [dict() for _ in range(n)]
    loops = [0] * n
    for u, v in edges:
        if u == v:
            loops[u] += 1
            adj[u][u] += 2.0
        else:
            mult[u][v] = mult[u].get(v, 0) + 1
            mult[v][u] = mult[v].get(u, 0) + 1
            adj[u][v] += 1.0
            adj[v][u] += 1.0
    for v in range(n):
        profile.append((loops[v], tuple(sorted(mult[v].values()))))
    spectrum = tuple(round(x, 6) for x in np.linalg.eigvalsh(adj))
    return (tuple(sorted(profile)), spectrum)


class Level:
    """Isomorphism classes of one order, bucketed by a cheap invariant."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.buckets: Dict[Tuple, List[nx.MultiGraph]] = {}
        self.members: List[Edges] = []

    def add(self, edges: Edges) -> bool:
        g = _to_nx(self.n, edges)
        known = self.buckets.setdefault(_invariant(self.n, edges), [])
        if any(nx.is_isomorphic(g, h) for h in known):
            return False
        known.append(g)
        self.members.append(edges)
        return True


def grow(parents: List[Edges], n: int) -> List[Edges]:
    child_n = n + 2
    slack = MAX_N - child_n
    level = Level(child_n)
    for edges in parents:
        m = len(edges)
        for i, j in combinations(range(m), 2):
            cand = op1(edges, i, j, n)
            if badness(cand) <= slack:
                level.add(cand)
        if slack >= 1:  # op2 and op3 outputs are never simple
            for i in range(m):
                cand = op2(edges, i, n)
                if badness(cand) <= slack:
                    level.add(cand)
                cand = op3(edges, i, n)
                if badness(cand) <= slack:
                    level.add(cand)
    return level.members


def main() -> None:
    theta = _norm([(0, 1), (0, 1), (0, 1)])
    dumbbell = _norm([(0, 0), (0, 1), (1, 1)])
    levels: Dict[int, List[Edges]] = {2: [theta, dumbbell]}
    for n in range(2, MAX_N, 2):
        start = time.time()
        levels[n + 2] = grow(levels[n], n)
        simple = sum(is_simple(e) for e in levels[n + 2])
        print(
            f"n={n + 2}: {len(levels[n + 2])} pseudographs, {simple} simple "
            f"({time.time() - start:.1f}s)"
        )

    lines: List[str] = []
    for n in sorted(EXPECTED):
        block = [e for e in levels[n] if is_simple(e)]
        assert len(block) == EXPECTED[n], (n, len(block))
        lines.extend(
            sorted(write_graph6(PseudoGraph.from_edges(n, list(e))) for e in block)
        )

    out = Path(__file__).resolve().parent.parent / "data" / "cubic_connected_le14.g6"
    out.parent.mkdir(exist_ok=True)
    out.write_text("\n".join(lines) + "\n", encoding="ascii")
    print(f"wrote {len(lines)} graphs to {out}")


if __name__ == "__main__":
    main()
