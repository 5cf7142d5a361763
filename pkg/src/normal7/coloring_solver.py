"""Normal edge-coloring semantics, the independent verifier, flow-to-coloring
conversion, and an exact backtracking solver for the normal chromatic index.

An edge is poor when the colors seen by its two endpoints span exactly 3
values and rich when they span exactly 5; a coloring is normal when every
non-exempt edge is poor or rich.  The union rule is applied literally at
endpoints of degree below 3, so a pendant edge hanging off a cubic vertex is
always poor.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Set, Tuple

from normal7.flows_trees import GroupFlow
from normal7.graph_core import PseudoGraph


class EdgeStatus(enum.Enum):
    POOR = "poor"
    RICH = "rich"
    INVALID = "invalid"


class ImproperColoringError(Exception):
    """Two edges sharing an endpoint carry the same color."""


@dataclass
class EdgeColoring:
    graph: PseudoGraph
    k: int
    colors: Dict[int, int]
    exempt: frozenset = frozenset()

    def status_label(self, eid: int) -> str:
        if eid in self.exempt:
            return "exempt"
        return edge_status(self, eid).value


@dataclass
class SolverResult:
    chi: Optional[int]
    witness: Optional[EdgeColoring]
    nodes_explored: int
    timed_out: bool


@dataclass
class EnumerationResult:
    count: int
    nodes_explored: int
    timed_out: bool
    aborted: bool


def color_set(c: EdgeColoring, v: int) -> Set[int]:
    """Colors on the edges incident to v."""
    out = set()
    for eid in set(c.graph.incident(v)):
        if eid not in c.colors:
            raise ValueError(f"edge {eid} at vertex {v} is uncolored")
        out.add(c.colors[eid])
    return out


def edge_status(c: EdgeColoring, e: int) -> EdgeStatus:
    u, v = c.graph.endpoints(e)
    union = color_set(c, u) | color_set(c, v)
    if len(union) == 3:
        return EdgeStatus.POOR
    if len(union) == 5:
        return EdgeStatus.RICH
    return EdgeStatus.INVALID


def is_normal(c: EdgeColoring) -> Tuple[bool, Dict[int, EdgeStatus]]:
    """Check properness (raising if violated) and report every edge's status.

    Exempt edges still receive a status in the report but do not affect the
    verdict.
    """
    g = c.graph
    for eid in g.edge_ids():
        if eid not in c.colors:
            raise ValueError(f"edge {eid} is uncolored")
        col = c.colors[eid]
        if not 1 <= col <= c.k:
            raise ValueError(f"color {col} outside palette 1..{c.k}")
    for v in g.vertices():
        seen: Dict[int, int] = {}
        for eid in set(g.incident(v)):
            if g.is_loop(eid):
                raise ImproperColoringError(f"loop {eid} cannot be properly colored")
            col = c.colors[eid]
            if col in seen:
                raise ImproperColoringError(
                    f"edges {seen[col]} and {eid} share color {col} at vertex {v}"
                )
            seen[col] = eid
    report = {eid: edge_status(c, eid) for eid in g.edge_ids()}
    ok = all(
        status != EdgeStatus.INVALID
        for eid, status in report.items()
        if eid not in c.exempt
    )
    return ok, report


def coloring_from_flow(f: GroupFlow) -> EdgeColoring:
    """Read a nowhere-zero Z_2^3 flow as a 7-edge-coloring.

    On a cubic graph the result is proper and every edge is poor or rich: the
    three values at a vertex are distinct (they sum to zero pairwise-unequal)
    and the five values around an edge span 3 or 5 colors.
    """
    g = f.graph
    if f.k != 3:
        raise ValueError("flow must be over Z_2^3")
    for eid in g.edge_ids():
        if g.is_loop(eid):
            raise ValueError("graph must be loopless")
    for v in g.vertices():
        if g.degree(v) > 3:
            raise ValueError("maximum degree 3 required")
    for eid, val in f.values.items():
        if val == 0:
            raise ValueError(f"flow value zero on edge {eid}")
        if not 0 < val < 8:
            raise ValueError(f"value {val} on edge {eid} is not a Z_2^3 element")
    return EdgeColoring(g, 7, dict(f.values), frozenset())


def _dfs_edge_order(g: PseudoGraph) -> List[int]:
    """All edges, discovered depth-first from the first max-degree vertex.

    Consecutive edges share vertices wherever possible, which is what makes
    the neighborhood-completion pruning bite early.
    """
    order: List[int] = []
    seen: Set[int] = set()
    visited = [False] * g.num_vertices
    degs = [g.degree(v) for v in g.vertices()]
    maxd = max(degs, default=0)
    anchor = next((v for v in g.vertices() if degs[v] == maxd), None)
    roots = ([anchor] if anchor is not None else []) + list(g.vertices())
    for root in roots:
        if visited[root]:
            continue
        visited[root] = True
        stack = [(root, iter(sorted(set(g.incident(root)))))]
        while stack:
            v, it = stack[-1]
            for eid in it:
                if eid in seen:
                    continue
                seen.add(eid)
                order.append(eid)
                w = g.other_endpoint(eid, v)
                if not visited[w]:
                    visited[w] = True
                    stack.append((w, iter(sorted(set(g.incident(w))))))
                break
            else:
                stack.pop()
    return order


class _Stats:
    __slots__ = ("nodes", "timed_out")

    def __init__(self) -> None:
        self.nodes = 0
        self.timed_out = False


def _canonical_colorings(
    g: PseudoGraph, k: int, budget: Optional[int], stats: _Stats
) -> Iterator[Dict[int, int]]:
    """Yield every normal k-coloring in canonical form.

    Canonical means: the first max-degree vertex, when cubic, has its edges
    colored 1,2,3 in ascending id, and any further color j > 3 first appears
    only after all of 4..j-1 have.  Each palette-permutation class of normal
    colorings has exactly one canonical member.
    """
    if k < 0:
        raise ValueError("palette size must be nonnegative")
    for eid in g.edge_ids():
        if g.is_loop(eid):
            raise ValueError("graph must be loopless")
    for v in g.vertices():
        if g.degree(v) > 3:
            raise ValueError("maximum degree 3 required")

    order = _dfs_edge_order(g)
    if not order:
        yield {}
        return

    size = max(order) + 1
    color: List[int] = [0] * size  # 0 = uncolored
    adj: List[Tuple[int, ...]] = [()] * size
    nbhd: List[Tuple[int, ...]] = [()] * size
    for eid, u, v in g.edges():
        others = sorted((set(g.incident(u)) | set(g.incident(v))) - {eid})
        adj[eid] = tuple(others)
        nbhd[eid] = tuple([eid] + others)
    remaining = [0] * size
    for eid in order:
        remaining[eid] = len(nbhd[eid])

    def assign_ok(e: int, col: int) -> bool:
        for f in adj[e]:
            if color[f] == col:
                return False
        color[e] = col
        for f in nbhd[e]:
            remaining[f] -= 1
        for f in nbhd[e]:
            union = {color[x] for x in nbhd[f] if color[x]}
            n = len(union)
            left = remaining[f]
            if (left == 0 and n not in (3, 5)) or n > 5 or n + left < 3:
                for x in nbhd[e]:
                    remaining[x] += 1
                color[e] = 0
                return False
        return True

    def undo(e: int) -> None:
        for f in nbhd[e]:
            remaining[f] += 1
        color[e] = 0

    max_used = 0
    degs = [g.degree(v) for v in g.vertices()]
    anchor = next((v for v in g.vertices() if degs[v] == max(degs)), None)
    preassigned: List[int] = []
    if anchor is not None and degs[anchor] == 3:
        if k < 3:
            return
        for col, eid in enumerate(sorted(set(g.incident(anchor))), start=1):
            if not assign_ok(eid, col):
                for done in reversed(preassigned):
                    undo(done)
                return
            preassigned.append(eid)
        max_used = 3

    pending = [e for e in order if color[e] == 0]
    if not pending:
        yield {e: color[e] for e in order}
        for done in reversed(preassigned):
            undo(done)
        return

    depth = 0
    iters: List[Iterator[int]] = [iter(())] * len(pending)
    saved_max: List[int] = [0] * len(pending)
    iters[0] = iter(range(1, min(k, max_used + 1) + 1))
    while depth >= 0:
        if depth == len(pending):
            yield {e: color[e] for e in order}
            depth -= 1
            max_used = saved_max[depth]
            undo(pending[depth])
            continue
        e = pending[depth]
        moved = False
        for col in iters[depth]:
            if budget is not None and stats.nodes >= budget:
                stats.timed_out = True
                for d in range(depth - 1, -1, -1):
                    undo(pending[d])
                for done in reversed(preassigned):
                    undo(done)
                return
            stats.nodes += 1
            if assign_ok(e, col):
                saved_max[depth] = max_used
                max_used = max(max_used, col)
                moved = True
                break
        if moved:
            depth += 1
            if depth < len(pending):
                iters[depth] = iter(range(1, min(k, max_used + 1) + 1))
        else:
            depth -= 1
            if depth >= 0:
                max_used = saved_max[depth]
                undo(pending[depth])
    for done in reversed(preassigned):
        undo(done)


def find_normal_coloring(
    g: PseudoGraph, k: int, budget: Optional[int] = None
) -> SolverResult:
    """First normal k-coloring in canonical order, or proof none exists."""
    stats = _Stats()
    for colors in _canonical_colorings(g, k, budget, stats):
        witness = EdgeColoring(g, k, colors, frozenset())
        ok, _ = is_normal(witness)
        assert ok
        return SolverResult(k, witness, stats.nodes, False)
    return SolverResult(None, None, stats.nodes, stats.timed_out)


def exact_chi_n(
    g: PseudoGraph, k_max: int, budget: Optional[int] = None
) -> SolverResult:
    """Least palette size up to k_max admitting a normal coloring.

    An exact claim needs every smaller palette refuted, so a timeout at any
    level makes the whole answer inconclusive.
    """
    total = 0
    for k in range(0, k_max + 1):
        res = find_normal_coloring(g, k, budget)
        total += res.nodes_explored
        if res.timed_out:
            return SolverResult(None, None, total, True)
        if res.chi is not None:
            return SolverResult(k, res.witness, total, False)
    return SolverResult(None, None, total, False)


def enumerate_normal_colorings(
    g: PseudoGraph,
    k: int,
    callback: Optional[Callable[[EdgeColoring], Optional[bool]]] = None,
    budget: Optional[int] = None,
) -> EnumerationResult:
    """Visit every normal k-coloring once per palette-permutation class.

    The callback may return False to stop early; any other return keeps the
    enumeration going.
    """
    stats = _Stats()
    count = 0
    aborted = False
    for colors in _canonical_colorings(g, k, budget, stats):
        count += 1
        if callback is not None:
            keep = callback(EdgeColoring(g, k, colors, frozenset()))
            if keep is False:
                aborted = True
                break
    return EnumerationResult(count, stats.nodes, stats.timed_out, aborted)


def is_three_edge_colorable(g: PseudoGraph, budget: Optional[int] = None) -> bool:
    """Whether a loopless cubic graph is 3-edge-colorable.

    On cubic graphs proper 3-colorings and normal 3-colorings coincide: both
    endpoints of any edge see all three colors, so every edge is poor.
    """
    if not g.is_cubic():
        raise ValueError("graph must be cubic")
    res = find_normal_coloring(g, 3, budget)
    return res.chi is not None
