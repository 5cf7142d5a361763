"""Edge connectivity, small edge cuts, cut reductions and ladders.

Cut enumeration is brute force over edge subsets; all callers work on graphs
small enough that this is far from the bottleneck.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from normal7.graph_core import PseudoGraph, remove_vertices


@dataclass(frozen=True)
class EdgeCut:
    """An edge cut with its two vertex sides; side_a contains vertex 0."""

    edges: frozenset
    side_a: frozenset
    side_b: frozenset

    @property
    def pair(self) -> Tuple[int, ...]:
        return tuple(sorted(self.edges))


@dataclass
class ReductionPiece:
    """One side of a cut reduction, as a fresh graph plus correspondences."""

    graph: PseudoGraph
    vmap: Dict[int, int]  # original vertex -> piece vertex
    emap: Dict[int, int]  # original eid -> piece eid, non-cut edges only
    arising: Tuple[int, ...]  # piece eids of arising edges, aligned with cut
    nu: Optional[int] = None  # hub vertex of a 3-cut reduction


@dataclass
class ReductionTrace:
    """Everything needed to splice a reduction back into the original graph."""

    kind: str  # "two_cut" or "three_cut"
    cut: Tuple[int, ...]  # sorted original cut eids
    cut_endpoints: Tuple[Tuple[int, int], ...]  # original endpoint tuples
    n: int  # original vertex count
    pieces: Tuple[ReductionPiece, ReductionPiece] = field(default=None)  # type: ignore[assignment]


def find_bridges(g: PseudoGraph) -> List[int]:
    """All bridge edge ids, sorted.  Parallel edges and loops are never bridges."""
    n = g.num_vertices
    disc = [-1] * n
    low = [0] * n
    bridges: List[int] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        # Stack frames: (vertex, entering eid, iterator index into incident list).
        inc = g.incident(root)
        disc[root] = low[root] = timer
        timer += 1
        stack: List[Tuple[int, int, List[int], int]] = [(root, -1, inc, 0)]
        while stack:
            v, ein, edges_v, idx = stack.pop()
            advanced = False
            while idx < len(edges_v):
                eid = edges_v[idx]
                idx += 1
                if eid == ein:
                    ein = -2  # skip the entering edge exactly once
                    continue
                if g.is_loop(eid):
                    continue
                w = g.other_endpoint(eid, v)
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((v, ein, edges_v, idx))
                    stack.append((w, eid, g.incident(w), 0))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if not advanced and stack:
                pv, pein, pedges, pidx = stack[-1]
                low[pv] = min(low[pv], low[v])
                if low[v] > disc[pv]:
                    # The entering edge of v is a bridge.
                    entry = pedges[pidx - 1]
                    bridges.append(entry)
    return sorted(bridges)


def _components_after_removal(g: PseudoGraph, removed: Set[int]) -> List[Set[int]]:
    seen = [False] * g.num_vertices
    comps: List[Set[int]] = []
    for s in g.vertices():
        if seen[s]:
            continue
        comp = {s}
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for eid in g.incident(v):
                if eid in removed:
                    continue
                w = g.other_endpoint(eid, v)
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def _cut_from_sides(g: PseudoGraph, edges: Iterable[int], comps: List[Set[int]]) -> EdgeCut:
    assert len(comps) == 2
    side_a, side_b = comps
    if 0 in side_b:
        side_a, side_b = side_b, side_a
    return EdgeCut(frozenset(edges), frozenset(side_a), frozenset(side_b))


def find_2_edge_cuts(g: PseudoGraph) -> List[EdgeCut]:
    """All 2-edge-cuts of a connected bridgeless graph, sorted by edge pair."""
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if find_bridges(g):
        raise ValueError("graph must be bridgeless")
    non_loops = [e for e in g.edge_ids() if not g.is_loop(e)]
    cuts: List[EdgeCut] = []
    for e, f in combinations(non_loops, 2):
        comps = _components_after_removal(g, {e, f})
        if len(comps) == 2:
            cuts.append(_cut_from_sides(g, (e, f), comps))
    return sorted(cuts, key=lambda c: c.pair)


def find_nontrivial_3_edge_cuts(g: PseudoGraph) -> List[EdgeCut]:
    """3-edge-cuts of a cubic graph whose sides both have at least 2 vertices.

    Only genuine cuts count: all three edges must cross between the two
    resulting components.
    """
    if not g.is_cubic():
        raise ValueError("graph must be cubic")
    if not g.is_connected():
        raise ValueError("graph must be connected")
    non_loops = [e for e in g.edge_ids() if not g.is_loop(e)]
    cuts: List[EdgeCut] = []
    for triple in combinations(non_loops, 3):
        comps = _components_after_removal(g, set(triple))
        if len(comps) != 2:
            continue
        side = comps[0]
        if not all(
            (g.endpoints(e)[0] in side) != (g.endpoints(e)[1] in side) for e in triple
        ):
            continue
        if min(len(comps[0]), len(comps[1])) < 2:
            continue
        cuts.append(_cut_from_sides(g, triple, comps))
    return sorted(cuts, key=lambda c: c.pair)


def is_cyclically_4ec(g: PseudoGraph) -> bool:
    """Cubic g: connected, bridgeless, no 2-cuts, every 3-cut trivial."""
    if not g.is_cubic():
        raise ValueError("graph must be cubic")
    if not g.is_connected():
        return False
    if find_bridges(g):
        return False
    if find_2_edge_cuts(g):
        return False
    return not find_nontrivial_3_edge_cuts(g)


def _oriented_cut_endpoints(
    g: PseudoGraph, cut: Sequence[int], side_a: Set[int]
) -> List[Tuple[int, int]]:
    """Per cut edge, its endpoints ordered (side_a endpoint, side_b endpoint)."""
    out = []
    for c in cut:
        u, v = g.endpoints(c)
        out.append((u, v) if u in side_a else (v, u))
    return out


def _normalize_cut(g: PseudoGraph, cut) -> Tuple[Tuple[int, ...], Set[int], Set[int]]:
    if isinstance(cut, EdgeCut):
        edges = cut.pair
    else:
        edges = tuple(sorted(cut))
    comps = _components_after_removal(g, set(edges))
    if len(comps) != 2:
        raise ValueError(f"edges {edges} are not a cut into two sides")
    ec = _cut_from_sides(g, edges, comps)
    return edges, set(ec.side_a), set(ec.side_b)


def two_cut_reduction(
    g: PseudoGraph, cut, strict: bool = True
) -> Tuple[ReductionPiece, ReductionPiece, ReductionTrace]:
    """Split g along a 2-edge-cut into two pieces, each closed by an arising edge.

    The arising edge of a piece joins the endpoint of the smaller cut edge to
    the endpoint of the larger one (in that order).  With strict=True the cut
    edges must be vertex disjoint; otherwise a shared endpoint turns the
    arising edge of that side into a loop.
    """
    edges, side_a, side_b = _normalize_cut(g, cut)
    if len(edges) != 2:
        raise ValueError("two_cut_reduction needs exactly two cut edges")
    endpoints = {v for c in edges for v in g.endpoints(c)}
    if strict and len(endpoints) != 4:
        raise ValueError("cut edges must be vertex disjoint")
    oriented = _oriented_cut_endpoints(g, edges, side_a)
    pieces = []
    for side, slot in ((side_b, 0), (side_a, 1)):
        h, vmap, emap = remove_vertices(g, side)
        p1, p2 = (pt[slot] for pt in oriented)
        arising = h.add_edge(vmap[p1], vmap[p2])
        pieces.append(ReductionPiece(h, vmap, emap, (arising,)))
    for piece in pieces:
        for ov, pv in piece.vmap.items():
            assert piece.graph.degree(pv) == g.degree(ov)
    trace = ReductionTrace(
        kind="two_cut",
        cut=edges,
        cut_endpoints=tuple(g.endpoints(c) for c in edges),
        n=g.num_vertices,
        pieces=(pieces[0], pieces[1]),
    )
    return pieces[0], pieces[1], trace


def three_cut_reduction(g: PseudoGraph, cut) -> Tuple[ReductionPiece, ReductionPiece, ReductionTrace]:
    """Split g along a matching 3-edge-cut; each piece gains a hub vertex.

    The hub is joined to the three cut endpoints of its side in ascending
    cut edge order, so arising edges correspond 1-1 to cut edges.
    """
    edges, side_a, side_b = _normalize_cut(g, cut)
    if len(edges) != 3:
        raise ValueError("three_cut_reduction needs exactly three cut edges")
    endpoints = [v for c in edges for v in g.endpoints(c)]
    if len(set(endpoints)) != 6:
        raise ValueError("cut edges must form a matching")
    oriented = _oriented_cut_endpoints(g, edges, side_a)
    pieces = []
    for side, slot in ((side_b, 0), (side_a, 1)):
        h, vmap, emap = remove_vertices(g, side)
        nu = h.add_vertex()
        arising = tuple(h.add_edge(vmap[pt[slot]], nu) for pt in oriented)
        pieces.append(ReductionPiece(h, vmap, emap, arising, nu=nu))
    if g.is_cubic():
        assert pieces[0].graph.is_cubic() and pieces[1].graph.is_cubic()
    trace = ReductionTrace(
        kind="three_cut",
        cut=edges,
        cut_endpoints=tuple(g.endpoints(c) for c in edges),
        n=g.num_vertices,
        pieces=(pieces[0], pieces[1]),
    )
    return pieces[0], pieces[1], trace


def splice_reduction(trace: ReductionTrace) -> PseudoGraph:
    """Rebuild the original labeled graph from a reduction's pieces and maps."""
    labeled: List[Tuple[int, int, int]] = []
    for piece in trace.pieces:
        inv_v = {pv: ov for ov, pv in piece.vmap.items()}
        inv_e = {pe: oe for oe, pe in piece.emap.items()}
        skip = set(piece.arising)
        for pe, pu, pv in piece.graph.edges():
            if pe in skip:
                continue
            if piece.nu is not None and piece.nu in (pu, pv):
                continue
            labeled.append((inv_e[pe], inv_v[pu], inv_v[pv]))
    for eid, (u, v) in zip(trace.cut, trace.cut_endpoints):
        labeled.append((eid, u, v))
    return PseudoGraph.from_labeled_edges(trace.n, labeled)


@dataclass
class StarProduct:
    graph: PseudoGraph
    vmap1: Dict[int, int]
    vmap2: Dict[int, int]
    emap1: Dict[int, int]
    emap2: Dict[int, int]
    joins: Tuple[int, int, int]


def star_product(
    g1: PseudoGraph,
    u1: int,
    g2: PseudoGraph,
    u2: int,
    pairing: Optional[Sequence[Tuple[int, int]]] = None,
) -> StarProduct:
    """Delete a degree-3 vertex from each graph and join the stubs pairwise.

    pairing lists (edge of u1, edge of u2) couples; by default the incident
    edges of u1 and u2 are matched in ascending id order.
    """
    for g, u in ((g1, u1), (g2, u2)):
        if g.degree(u) != 3 or any(g.is_loop(e) for e in g.incident(u)):
            raise ValueError("star product needs loopless degree-3 vertices")
    if pairing is None:
        pairing = list(zip(sorted(g1.incident(u1)), sorted(g2.incident(u2))))
    pairing = list(pairing)
    if sorted(e for e, _ in pairing) != sorted(g1.incident(u1)) or sorted(
        e for _, e in pairing
    ) != sorted(g2.incident(u2)):
        raise ValueError("pairing must cover each stub edge exactly once")
    stubs1 = {e: g1.other_endpoint(e, u1) for e in g1.incident(u1)}
    stubs2 = {e: g2.other_endpoint(e, u2) for e in g2.incident(u2)}
    h1, vmap1, emap1 = remove_vertices(g1, [u1])
    h = h1
    vmap2: Dict[int, int] = {}
    emap2: Dict[int, int] = {}
    offset_of: Dict[int, int] = {}
    for v in g2.vertices():
        if v != u2:
            offset_of[v] = h.add_vertex()
    vmap2 = offset_of
    for eid, a, b in g2.edges():
        if u2 in (a, b):
            continue
        emap2[eid] = h.add_edge(vmap2[a], vmap2[b])
    joins = tuple(
        h.add_edge(vmap1[stubs1[e1]], vmap2[stubs2[e2]]) for e1, e2 in pairing
    )
    return StarProduct(h, vmap1, vmap2, emap1, emap2, joins)  # type: ignore[arg-type]


# -- ladders -------------------------------------------------------------------


@dataclass(frozen=True)
class Ladder:
    """Two induced rail paths of equal length joined by interior rungs.

    Rails hold m+1 vertices each; rungs join u_rail[i] to v_rail[i] for
    1 <= i <= m-1.  End pairs (index 0 and m) are non-adjacent.
    """

    u_rail: Tuple[int, ...]
    v_rail: Tuple[int, ...]
    u_edges: Tuple[int, ...]
    v_edges: Tuple[int, ...]
    rungs: Tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.u_edges)

    def vertices(self) -> Set[int]:
        return set(self.u_rail) | set(self.v_rail)

    def edges(self) -> Set[int]:
        return set(self.u_edges) | set(self.v_edges) | set(self.rungs)

    def rail_pair(self, i: int) -> Tuple[int, int]:
        """The i-th rail edge pair, a 2-edge-cut; 0 <= i < m."""
        return (self.u_edges[i], self.v_edges[i])


def validate_ladder(g: PseudoGraph, L: Ladder) -> bool:
    m = L.m
    if m < 1:
        return False
    if len(L.u_rail) != m + 1 or len(L.v_rail) != m + 1:
        return False
    if len(L.v_edges) != m or len(L.rungs) != m - 1:
        return False
    verts = list(L.u_rail) + list(L.v_rail)
    if len(set(verts)) != 2 * (m + 1):
        return False
    try:
        for rail, redges in ((L.u_rail, L.u_edges), (L.v_rail, L.v_edges)):
            for i in range(m):
                if set(g.endpoints(redges[i])) != {rail[i], rail[i + 1]}:
                    return False
        for i in range(1, m):
            if set(g.endpoints(L.rungs[i - 1])) != {L.u_rail[i], L.v_rail[i]}:
                return False
    except ValueError:
        return False
    if g.has_edge(L.u_rail[0], L.v_rail[0]) or g.has_edge(L.u_rail[m], L.v_rail[m]):
        return False
    vset = L.vertices()
    induced = sum(1 for _, a, b in g.edges() if a in vset and b in vset)
    if induced != 2 * m + (m - 1):
        return False
    for i in range(m):
        comps = _components_after_removal(g, set(L.rail_pair(i)))
        if len(comps) != 2:
            return False
        low = next(c for c in comps if L.u_rail[i] in c)
        if L.v_rail[i] not in low:
            return False
        if L.u_rail[i + 1] in low or L.v_rail[i + 1] in low:
            return False
    return True


def ladder_containing(g: PseudoGraph, cut) -> Ladder:
    """The unique maximal ladder whose rail pair set contains the given 2-cut.

    Requires a connected simple cubic bridgeless graph; growth invariants are
    asserted at every step and the result is validated before return.
    """
    if not (g.is_cubic() and g.is_simple() and g.is_connected()):
        raise ValueError("ladders are defined here for connected simple cubic graphs")
    edges, side_a, side_b = _normalize_cut(g, cut)
    if len(edges) != 2:
        raise ValueError("a ladder grows from a 2-edge-cut")
    oriented = _oriented_cut_endpoints(g, edges, side_a)
    (a1, b1), (a2, b2) = oriented

    def grow(x0: int, y0: int, into_x: int, into_y: int, known: Set[int]):
        """Extend rails outward from the pair (x0, y0); into_* are the rail
        edges by which the pair was reached.  Returns (xs, ys, xe, ye) with
        vertices and rail edges listed outward."""
        xs, ys, xe, ye = [], [], [], []
        x, y, ex, ey = x0, y0, into_x, into_y
        while True:
            rung = g.edges_between(x, y)
            if not rung:
                return xs, ys, xe, ye
            third_x = [e for e in g.incident(x) if e not in (ex, rung[0])]
            third_y = [e for e in g.incident(y) if e not in (ey, rung[0])]
            assert len(third_x) == 1 and len(third_y) == 1
            nx_, ny_ = g.other_endpoint(third_x[0], x), g.other_endpoint(third_y[0], y)
            assert nx_ != ny_ and nx_ not in known and ny_ not in known
            comps = _components_after_removal(g, {third_x[0], third_y[0]})
            assert len(comps) == 2
            known.update((nx_, ny_))
            xs.append(nx_)
            ys.append(ny_)
            xe.append(third_x[0])
            ye.append(third_y[0])
            x, y, ex, ey = nx_, ny_, third_x[0], third_y[0]

    known = {a1, a2, b1, b2}
    lx, ly, lxe, lye = grow(a1, a2, edges[0], edges[1], known)
    rx, ry, rxe, rye = grow(b1, b2, edges[0], edges[1], known)
    rail1 = list(reversed(lx)) + [a1, b1] + rx
    rail2 = list(reversed(ly)) + [a2, b2] + ry
    redges1 = list(reversed(lxe)) + [edges[0]] + rxe
    redges2 = list(reversed(lye)) + [edges[1]] + rye
    if rail2[0] < rail1[0]:
        rail1, rail2, redges1, redges2 = rail2, rail1, redges2, redges1
    m = len(redges1)
    rungs = []
    for i in range(1, m):
        between = g.edges_between(rail1[i], rail2[i])
        assert len(between) == 1
        rungs.append(between[0])
    L = Ladder(tuple(rail1), tuple(rail2), tuple(redges1), tuple(redges2), tuple(rungs))
    assert validate_ladder(g, L)
    return L
