"""Constructive normal 7-edge-colorings of simple cubic graphs.

The entry point normal7_coloring takes any simple cubic graph and returns a
proper 7-edge-coloring in which every edge is poor or rich.  It works in
three layers, each exposed on its own:

  * flow_edge_poor / flow_two_adjacent_rich / flow_edge_rich build
    nowhere-zero Z_2^3 flows on bridgeless cubic graphs whose induced
    colorings pin the status of named edges, recursing through 2- and
    3-edge-cuts down to a cyclically-4-edge-connected base solved by
    contracting the 2-factor of a perfect matching.
  * color_pendant_block colors the gadget obtained from a bridgeless cubic
    graph by subdividing one edge and hanging a pendant off the new vertex;
    every edge except the pendant bridge ends up poor or rich.  The case
    split keys on how the chosen edge sits relative to maximal ladders.
  * color_degree13_graph handles graphs whose degrees are all 1 or 3 and
    whose bridges are all pendant, by merging pendant edges two at a time;
    normal7_coloring splits an arbitrary simple cubic graph at its bridges,
    colors each piece, and glues along the bridges with palette renamings.

Every operation re-verifies its output before returning.  Callers may pass
a trace list; each case decision appends a replayable CertificateStep.
"""

from __future__ import annotations

import enum
import hashlib
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from normal7.coloring_solver import (
    EdgeColoring,
    EdgeStatus,
    coloring_from_flow,
    edge_status,
    is_normal,
)
from normal7.cuts_reductions import (
    EdgeCut,
    Ladder,
    ReductionPiece,
    find_2_edge_cuts,
    find_bridges,
    find_nontrivial_3_edge_cuts,
    ladder_containing,
    three_cut_reduction,
    two_cut_reduction,
)
from normal7.flows_trees import (
    GF2Automorphism,
    GroupFlow,
    all_automorphisms,
    apply_automorphism,
    automorphism_extending,
    find_automorphism,
    flow_edge_status,
    flow_three_edges_distinct,
    flow_two_edges_equal,
    nz_z23_flow,
    verify_flow,
)
from normal7.graph_core import (
    PseudoGraph,
    attach_pendant,
    remove_vertices,
    subdivide_edge,
)
from normal7.matching import contract_two_factor, lift_flow, perfect_matching_through


class CaseTag(enum.Enum):
    """Which construction step produced a piece of the coloring."""

    ThreeEC_Case1 = "ThreeEC_Case1"
    ThreeEC_Case2 = "ThreeEC_Case2"
    LadderAvoidsE = "LadderAvoidsE"
    InitialEdge = "InitialEdge"
    Horizontal = "Horizontal"
    Vertical = "Vertical"
    ManyPendant_t0 = "ManyPendant_t0"
    ManyPendant_t1 = "ManyPendant_t1"
    ManyPendant_t2 = "ManyPendant_t2"
    Triangle = "Triangle"
    Merge = "Merge"
    # two tags beyond the core case analysis: a parallel edge survives
    # subdivision (no ladder machinery applies), and a bridge-glue renaming
    DoubledEdge = "DoubledEdge"
    Glue = "Glue"


# identity on the palette 0..7 (0 is unused by colorings; kept so tuples index
# directly by color value)
IDENTITY_PERMUTATION: Tuple[int, ...] = tuple(range(8))


@dataclass(frozen=True)
class CertificateStep:
    """One replayable decision: the case taken, on which labeled graph, and
    the palette permutation applied to a recursively obtained coloring."""

    tag: CaseTag
    fingerprint: str
    permutation: Tuple[int, ...] = IDENTITY_PERMUTATION


class PipelineVerificationError(RuntimeError):
    """An assembled coloring or flow failed re-verification."""

    def __init__(self, message: str, trace: Sequence[CertificateStep] = ()):
        super().__init__(message)
        self.trace: Tuple[CertificateStep, ...] = tuple(trace)


def graph_fingerprint(g: PseudoGraph, *marks: int) -> str:
    """Short stable hash of a labeled graph plus distinguished edge ids."""
    rows = []
    for eid in g.edge_ids():
        u, v = g.endpoints(eid)
        rows.append((min(u, v), max(u, v), eid))
    payload = "{}|{}|{}".format(
        g.num_vertices, sorted(rows), tuple(marks)
    )
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def _perm_of_automorphism(auto: GF2Automorphism) -> Tuple[int, ...]:
    return (0,) + tuple(auto.apply(v) for v in range(1, 8))


def _extend_palette_perm(partial: Dict[int, int]) -> Tuple[int, ...]:
    """Complete a partial injection on 1..7 to a permutation (0 fixed)."""
    if len(set(partial.values())) != len(partial):
        raise ValueError("partial renaming is not injective")
    free = iter([c for c in range(1, 8) if c not in partial.values()])
    out = [0] * 8
    for c in range(1, 8):
        out[c] = partial[c] if c in partial else next(free)
    return tuple(out)


def _record(
    steps: List[CertificateStep],
    tag: CaseTag,
    g: PseudoGraph,
    marks: Sequence[int] = (),
    perm: Optional[Tuple[int, ...]] = None,
) -> None:
    steps.append(
        CertificateStep(
            tag,
            graph_fingerprint(g, *marks),
            IDENTITY_PERMUTATION if perm is None else perm,
        )
    )


# ---------------------------------------------------------------------------
# validation helpers


def _check_bridgeless_cubic(g: PseudoGraph, who: str) -> None:
    if not g.is_cubic():
        raise ValueError(f"{who} requires a cubic graph")
    if find_bridges(g):
        raise ValueError(f"{who} requires a bridgeless graph")


def _others_at(g: PseudoGraph, v: int, exclude: int) -> List[int]:
    """Incident edges at v except one, ascending."""
    out = [d for d in g.incident(v) if d != exclude]
    return sorted(out)


def _far_endpoint(g: PseudoGraph, eid: int, near: int) -> int:
    u, v = g.endpoints(eid)
    return v if u == near else u


def _flow_values_at(flow: GroupFlow, v: int, exclude: int) -> List[int]:
    return [flow.values[d] for d in _others_at(flow.graph, v, exclude)]


# ---------------------------------------------------------------------------
# flow splicing across reductions


def _splice_cut_flows(
    g: PseudoGraph,
    cut_eids: Sequence[int],
    pa: ReductionPiece,
    fa: GroupFlow,
    pb: ReductionPiece,
    fb: GroupFlow,
) -> GroupFlow:
    """Rebuild a flow on g from aligned piece flows.

    The piece flows must already agree on corresponding arising edges; each
    cut edge of g takes that common value.
    """
    values: Dict[int, int] = {}
    for orig, pe in pa.emap.items():
        values[orig] = fa.values[pe]
    for orig, pe in pb.emap.items():
        values[orig] = fb.values[pe]
    if len(pa.arising) == 1:
        va = fa.values[pa.arising[0]]
        vb = fb.values[pb.arising[0]]
        assert va == vb, "piece flows disagree on the arising edge"
        for ce in cut_eids:
            values[ce] = va
    else:
        for ce, ea, eb in zip(cut_eids, pa.arising, pb.arising):
            va, vb = fa.values[ea], fb.values[eb]
            assert va == vb, "piece flows disagree on an arising edge"
            values[ce] = va
    flow = GroupFlow(g, 3, values)
    check = verify_flow(flow)
    if not (check.conserving and check.nowhere_zero):
        raise PipelineVerificationError("spliced flow is not nowhere-zero conserving")
    return flow


def _aligned(flow: GroupFlow, pairs=(), set_pairs=()) -> GroupFlow:
    auto = find_automorphism(pairs=pairs, set_pairs=set_pairs)
    assert auto is not None, "no value automorphism satisfies the constraints"
    return apply_automorphism(flow, auto)


def _vertex_disjoint_2_cuts(g: PseudoGraph) -> Tuple[List[EdgeCut], bool]:
    """(2-cuts whose four endpoints are distinct, any-2-cut-exists flag)."""
    cuts = find_2_edge_cuts(g)
    disjoint = []
    for c in cuts:
        pts: Set[int] = set()
        for d in c.pair:
            pts.update(g.endpoints(d))
        if len(pts) == 4:
            disjoint.append(c)
    return disjoint, bool(cuts)


# ---------------------------------------------------------------------------
# flows with one poor edge


def flow_edge_poor(g: PseudoGraph, e: int) -> GroupFlow:
    """Nowhere-zero Z_2^3 flow on a bridgeless cubic graph making e poor.

    Poor means the value sets at the two endpoints of e coincide, so the
    five values around e span only three distinct elements.  Parallel edges
    are allowed; bridges are not.
    """
    _check_bridgeless_cubic(g, "flow_edge_poor")
    g.endpoints(e)
    if g.is_connected():
        flow = _flow_edge_poor_connected(g, e)
    else:
        values: Dict[int, int] = {}
        for comp in g.connected_components():
            sub, _, emap = remove_vertices(g, set(g.vertices()) - set(comp))
            inv = {loc: orig for orig, loc in emap.items()}
            if e in emap:
                f = _flow_edge_poor_connected(sub, emap[e])
            else:
                f = nz_z23_flow(sub)
            for loc, val in f.values.items():
                values[inv[loc]] = val
        flow = GroupFlow(g, 3, values)
    check = verify_flow(flow)
    if not (check.conserving and check.nowhere_zero):
        raise PipelineVerificationError("flow_edge_poor produced an invalid flow")
    if flow_edge_status(flow, e) != "poor":
        raise PipelineVerificationError("flow_edge_poor failed to make the edge poor")
    return flow


def _flow_edge_poor_connected(g: PseudoGraph, e: int) -> GroupFlow:
    if g.num_vertices == 2:
        # three parallel edges; any bijection onto {1,2,3} conserves and
        # makes every edge poor
        ids = g.edge_ids()
        assert len(ids) == 3
        return GroupFlow(g, 3, {d: i + 1 for i, d in enumerate(ids)})

    disjoint_cuts, any_cut = _vertex_disjoint_2_cuts(g)
    if any_cut:
        # a 2-cut with a repeated endpoint would need a parallel pair, and
        # any parallel pair's complementary third edges form a cut with four
        # distinct endpoints, so a vertex-disjoint cut always exists here
        assert disjoint_cuts, "2-cut exists but no vertex-disjoint one"
        cut = disjoint_cuts[0]
        pa, pb, _ = two_cut_reduction(g, cut, strict=True)
        assert pa.graph.num_vertices < g.num_vertices
        assert pb.graph.num_vertices < g.num_vertices
        if e in cut.edges:
            fa = _flow_edge_poor_connected(pa.graph, pa.arising[0])
            fb = _flow_edge_poor_connected(pb.graph, pb.arising[0])
            u, v = g.endpoints(e)
            ua = u if u in pa.vmap else v
            vb = v if v in pb.vmap else u
            cv = fa.values[pa.arising[0]]
            p_set = set(_flow_values_at(fa, pa.vmap[ua], pa.arising[0]))
            q_set = set(_flow_values_at(fb, pb.vmap[vb], pb.arising[0]))
            fb = _aligned(
                fb,
                pairs=[(fb.values[pb.arising[0]], cv)],
                set_pairs=[(q_set, p_set)],
            )
            return _splice_cut_flows(g, cut.pair, pa, fa, pb, fb)
        px, py = (pa, pb) if e in pa.emap else (pb, pa)
        fx = _flow_edge_poor_connected(px.graph, px.emap[e])
        fy = nz_z23_flow(py.graph)
        fy = _aligned(
            fy, pairs=[(fy.values[py.arising[0]], fx.values[px.arising[0]])]
        )
        return _splice_cut_flows(g, cut.pair, px, fx, py, fy)

    cuts3 = find_nontrivial_3_edge_cuts(g)
    if cuts3:
        cut = cuts3[0]
        pa, pb, _ = three_cut_reduction(g, cut)
        assert pa.graph.num_vertices < g.num_vertices
        assert pb.graph.num_vertices < g.num_vertices
        if e in cut.edges:
            j = cut.pair.index(e)
            fa = _flow_edge_poor_connected(pa.graph, pa.arising[j])
            fb = _flow_edge_poor_connected(pb.graph, pb.arising[j])
            auto = automorphism_extending(
                (fb.values[pb.arising[0]], fb.values[pb.arising[1]]),
                (fa.values[pa.arising[0]], fa.values[pa.arising[1]]),
            )
            fb = apply_automorphism(fb, auto)
            # the third slot follows from conservation at the hub
            assert fb.values[pb.arising[2]] == fa.values[pa.arising[2]]
            return _splice_cut_flows(g, cut.pair, pa, fa, pb, fb)
        px, py = (pa, pb) if e in pa.emap else (pb, pa)
        fx = _flow_edge_poor_connected(px.graph, px.emap[e])
        fy = nz_z23_flow(py.graph)
        auto = automorphism_extending(
            (fy.values[py.arising[0]], fy.values[py.arising[1]]),
            (fx.values[px.arising[0]], fx.values[px.arising[1]]),
        )
        fy = apply_automorphism(fy, auto)
        assert fy.values[py.arising[2]] == fx.values[px.arising[2]]
        return _splice_cut_flows(g, cut.pair, px, fx, py, fy)

    # cyclically 4-edge-connected base: route a perfect matching through an
    # edge adjacent to e; contracting the complementary 2-factor sends e's
    # endpoints to cycle vertices whose matching values we equalize
    u, w = g.endpoints(e)
    adjacent = sorted(
        d for vv in (u, w) for d in g.incident(vv) if d != e
    )
    gp = adjacent[0]
    matching = perfect_matching_through(g, gp)
    m_at: Dict[int, int] = {}
    for d in matching.edges:
        for vv in g.endpoints(d):
            m_at[vv] = d
    lift = contract_two_factor(g, matching)
    theta = flow_two_edges_equal(
        lift.h, lift.edge_map[m_at[u]], lift.edge_map[m_at[w]]
    )
    flow = lift_flow(lift, theta)
    assert flow_edge_status(flow, e) == "poor"
    return flow


# ---------------------------------------------------------------------------
# flows with two adjacent rich edges


def flow_two_adjacent_rich(g: PseudoGraph, e: int, f: int) -> GroupFlow:
    """Nowhere-zero Z_2^3 flow making two adjacent edges both rich.

    Requires a 3-edge-connected cubic graph on at least four vertices (such
    a graph is necessarily simple).  Rich means the value sets at an edge's
    endpoints share only the edge's own value, so five values show around it.
    """
    if e == f:
        raise ValueError("the two edges must be distinct")
    shared = set(g.endpoints(e)) & set(g.endpoints(f))
    if not shared:
        raise ValueError("the two edges must share a vertex")
    _check_bridgeless_cubic(g, "flow_two_adjacent_rich")
    if not g.is_connected():
        raise ValueError("flow_two_adjacent_rich requires a connected graph")
    if g.num_vertices < 4:
        raise ValueError("graph too small: no flow makes an edge rich here")
    if find_2_edge_cuts(g):
        raise ValueError("flow_two_adjacent_rich requires 3-edge-connectivity")
    assert g.is_simple()
    assert len(shared) == 1
    flow = _flow_two_adjacent_rich(g, e, f)
    check = verify_flow(flow)
    if not (check.conserving and check.nowhere_zero):
        raise PipelineVerificationError("flow_two_adjacent_rich: invalid flow")
    if flow_edge_status(flow, e) != "rich" or flow_edge_status(flow, f) != "rich":
        raise PipelineVerificationError(
            "flow_two_adjacent_rich failed to make both edges rich"
        )
    return flow


def _flow_two_adjacent_rich(g: PseudoGraph, e: int, f: int) -> GroupFlow:
    cuts3 = find_nontrivial_3_edge_cuts(g)
    if not cuts3:
        return _rich_pair_base(g, e, f)
    cut = cuts3[0]
    pa, pb, _ = three_cut_reduction(g, cut)
    assert pa.graph.num_vertices < g.num_vertices
    assert pb.graph.num_vertices < g.num_vertices
    crossing = cut.edges & {e, f}
    # a nontrivial 3-cut in a cubic graph is a matching, so at most one of
    # two adjacent edges crosses it
    assert len(crossing) <= 1
    if not crossing:
        px, py = (pa, pb) if e in pa.emap else (pb, pa)
        assert f in px.emap
        fx = _recurse_rich_piece(px.graph, px.emap[e], px.emap[f])
        fy = nz_z23_flow(py.graph)
        auto = automorphism_extending(
            (fy.values[py.arising[0]], fy.values[py.arising[1]]),
            (fx.values[px.arising[0]], fx.values[px.arising[1]]),
        )
        fy = apply_automorphism(fy, auto)
        assert fy.values[py.arising[2]] == fx.values[px.arising[2]]
        return _splice_cut_flows(g, cut.pair, px, fx, py, fy)
    cr = next(iter(crossing))
    other = f if cr == e else e
    v = (set(g.endpoints(e)) & set(g.endpoints(f))).pop()
    j = cut.pair.index(cr)
    px, py = (pa, pb) if v in pa.vmap else (pb, pa)
    assert other in px.emap
    fx = _recurse_rich_piece(px.graph, px.arising[j], px.emap[other])
    fy = _flow_edge_poor_connected(py.graph, py.arising[j])
    auto = automorphism_extending(
        (fy.values[py.arising[0]], fy.values[py.arising[1]]),
        (fx.values[px.arising[0]], fx.values[px.arising[1]]),
    )
    fy = apply_automorphism(fy, auto)
    assert fy.values[py.arising[2]] == fx.values[px.arising[2]]
    flow = _splice_cut_flows(g, cut.pair, px, fx, py, fy)
    assert flow_edge_status(flow, e) == "rich"
    assert flow_edge_status(flow, f) == "rich"
    return flow


def _recurse_rich_piece(h: PseudoGraph, e: int, f: int) -> GroupFlow:
    # pieces of a nontrivial 3-cut reduction of a 3-edge-connected cubic
    # graph are again 3-edge-connected with at least four vertices
    assert not find_bridges(h)
    assert not find_2_edge_cuts(h)
    assert h.num_vertices >= 4
    return _flow_two_adjacent_rich(h, e, f)


def _rich_pair_base(g: PseudoGraph, e: int, f: int) -> GroupFlow:
    v = (set(g.endpoints(e)) & set(g.endpoints(f))).pop()
    third = [d for d in g.incident(v) if d not in (e, f)]
    assert len(third) == 1
    gpp = third[0]
    matching = perfect_matching_through(g, gpp)
    assert e not in matching.edges and f not in matching.edges
    a = _far_endpoint(g, e, v)
    b = _far_endpoint(g, f, v)
    m_at: Dict[int, int] = {}
    for d in matching.edges:
        for vv in g.endpoints(d):
            m_at[vv] = d
    m_e, m_f = m_at[a], m_at[b]
    assert m_e != gpp and m_f != gpp
    lift = contract_two_factor(g, matching)
    theta = flow_three_edges_distinct(
        lift.h, lift.edge_map[gpp], lift.edge_map[m_e], lift.edge_map[m_f]
    )
    flow = lift_flow(lift, theta)
    # cycle edges carry values >= 4 while matching values stay below 4, so
    # the collision that would make e or f poor cannot occur
    assert flow_edge_status(flow, e) == "rich"
    assert flow_edge_status(flow, f) == "rich"
    return flow


def flow_edge_rich(g: PseudoGraph, e: int) -> GroupFlow:
    """Nowhere-zero Z_2^3 flow making e rich, on a 3-edge-connected cubic
    graph with at least four vertices.  Pairs e with its lowest-id neighbor."""
    u, w = g.endpoints(e)
    partners = sorted(d for vv in (u, w) for d in g.incident(vv) if d != e)
    assert partners
    return flow_two_adjacent_rich(g, e, partners[0])


# ---------------------------------------------------------------------------
# the pendant-block gadget


@dataclass(frozen=True)
class PendantBlockInput:
    """A bridgeless cubic graph g with a marked edge e = uw, together with
    the gadget g_prime made by subdividing e at v_e and hanging a pendant
    leaf off v_e.

    half_u and half_w are the subdivision halves at u and w, bridge is the
    pendant edge, and w1, w2 are the far endpoints of w's other two edges
    in ascending edge-id order.  Subdividing e must leave g_prime simple:
    every parallel class of g is either trivial or exactly {e, partner}.
    """

    g: PseudoGraph
    e: int
    u: int
    w: int
    w1: int
    w2: int
    g_prime: PseudoGraph
    v_e: int
    half_u: int
    half_w: int
    bridge: int
    leaf: int

    @classmethod
    def from_edge(cls, g: PseudoGraph, e: int) -> "PendantBlockInput":
        _check_bridgeless_cubic(g, "PendantBlockInput")
        if not g.is_connected():
            raise ValueError("PendantBlockInput requires a connected graph")
        u, w = g.endpoints(e)
        if u == w:
            raise ValueError("the marked edge must not be a loop")
        classes: Dict[Tuple[int, int], List[int]] = {}
        for eid in g.edge_ids():
            a, b = g.endpoints(eid)
            classes.setdefault((min(a, b), max(a, b)), []).append(eid)
        for pair_ids in classes.values():
            if len(pair_ids) > 1 and (e not in pair_ids or len(pair_ids) > 2):
                raise ValueError(
                    "subdividing the marked edge must leave a simple graph"
                )
        others = _others_at(g, w, e)
        w1 = _far_endpoint(g, others[0], w)
        w2 = _far_endpoint(g, others[1], w)
        g1, v_e, (half_u, half_w) = subdivide_edge(g, e)
        g_prime, leaf, bridge = attach_pendant(g1, v_e)
        assert g_prime.is_simple()
        return cls(
            g=g,
            e=e,
            u=u,
            w=w,
            w1=w1,
            w2=w2,
            g_prime=g_prime,
            v_e=v_e,
            half_u=half_u,
            half_w=half_w,
            bridge=bridge,
            leaf=leaf,
        )


def _finish_block_coloring(
    block: PendantBlockInput,
    colors: Dict[int, int],
    steps: List[CertificateStep],
) -> EdgeColoring:
    gp = block.g_prime
    missing = [d for d in gp.edge_ids() if d not in colors]
    assert not missing, f"uncolored gadget edges: {missing}"
    assert set(colors) == set(gp.edge_ids())
    col = EdgeColoring(gp, 7, dict(colors), exempt=frozenset({block.bridge}))
    ok, _ = is_normal(col)
    if not ok:
        raise PipelineVerificationError(
            "pendant-block coloring failed verification", steps
        )
    return col


# --- case: 3-edge-connected ------------------------------------------------


def _case_three_ec(
    block: PendantBlockInput, steps: List[CertificateStep]
) -> EdgeColoring:
    g, e = block.g, block.e
    others_w = _others_at(g, block.w, e)
    theta = flow_two_adjacent_rich(g, others_w[0], others_w[1])
    s1 = set(_flow_values_at(theta, block.w1, others_w[0]))
    s2 = set(_flow_values_at(theta, block.w2, others_w[1]))
    shared = s1 & s2
    assert len(shared) == 1
    x = shared.pop()
    y = (s1 - {x}).pop()
    z = (s2 - {x}).pop()
    assert theta.values[others_w[0]] == x ^ y
    assert theta.values[others_w[1]] == x ^ z
    assert theta.values[e] == y ^ z
    assert x ^ y ^ z != 0
    t_set = set(_flow_values_at(theta, block.u, e))
    t1, t2 = sorted(t_set)
    assert t1 ^ t2 == y ^ z
    assert t_set in ({x ^ y, x ^ z}, {x, x ^ y ^ z}, {y, z})
    tag = (
        CaseTag.ThreeEC_Case1
        if t_set == {x ^ y, x ^ z}
        else CaseTag.ThreeEC_Case2
    )
    _record(steps, tag, g, (e,))
    colors = {d: theta.values[d] for d in g.edge_ids() if d != e}
    colors[block.half_u] = y ^ z
    colors[block.half_w] = x ^ y ^ z
    colors[block.bridge] = x
    return _finish_block_coloring(block, colors, steps)


# --- case: e has a parallel partner ----------------------------------------


def _case_doubled_edge(
    block: PendantBlockInput, partner: int, steps: List[CertificateStep]
) -> EdgeColoring:
    g, e = block.g, block.e
    u, w = block.u, block.w
    _record(steps, CaseTag.DoubledEdge, g, (e, partner))
    t_u = [d for d in g.incident(u) if d not in (e, partner)]
    g_w = [d for d in g.incident(w) if d not in (e, partner)]
    assert len(t_u) == 1 and len(g_w) == 1
    t_u, g_w = t_u[0], g_w[0]
    p = _far_endpoint(g, t_u, u)
    q = _far_endpoint(g, g_w, w)
    assert p != q, "a doubled edge with shared third neighbor means a bridge"
    h0, vmap, emap = remove_vertices(g, {u, w})
    eh = h0.add_edge(vmap[p], vmap[q])
    assert h0.num_vertices < g.num_vertices
    sub = PendantBlockInput.from_edge(h0, eh)
    rec = color_pendant_block(sub, steps)
    lam = rec.colors[sub.half_u]
    mu = rec.colors[sub.half_w]
    pi = rec.colors[sub.bridge]
    colors: Dict[int, int] = {}
    for orig, loc in emap.items():
        colors[orig] = rec.colors[loc]
    colors[t_u] = lam
    colors[g_w] = mu
    colors[partner] = pi
    colors[block.half_u] = mu
    colors[block.half_w] = lam
    colors[block.bridge] = pi
    return _finish_block_coloring(block, colors, steps)


# --- ladder geometry helpers ------------------------------------------------


def _flip_ladder(lad: Ladder) -> Ladder:
    return Ladder(
        u_rail=tuple(reversed(lad.u_rail)),
        v_rail=tuple(reversed(lad.v_rail)),
        u_edges=tuple(reversed(lad.u_edges)),
        v_edges=tuple(reversed(lad.v_edges)),
        rungs=tuple(reversed(lad.rungs)),
    )


def _swap_rails(lad: Ladder) -> Ladder:
    return Ladder(
        u_rail=lad.v_rail,
        v_rail=lad.u_rail,
        u_edges=lad.v_edges,
        v_edges=lad.u_edges,
        rungs=lad.rungs,
    )


def _component_vertices(g: PseudoGraph, banned_edges: Set[int], start: int) -> Set[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for d in g.incident(v):
            if d in banned_edges:
                continue
            nxt = _far_endpoint(g, d, v)
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def _side_pieces(
    g: PseudoGraph, lad: Ladder
) -> Tuple[ReductionPiece, ReductionPiece]:
    """(piece containing rail start, piece containing rail end) for the two
    boundary rail cuts of a maximal ladder."""
    pa0, pb0, _ = two_cut_reduction(g, _cut_of_pair(g, lad.rail_pair(0)), strict=True)
    p_g1 = pa0 if lad.u_rail[0] in pa0.vmap else pb0
    assert lad.u_rail[0] in p_g1.vmap and lad.v_rail[0] in p_g1.vmap
    pam, pbm, _ = two_cut_reduction(
        g, _cut_of_pair(g, lad.rail_pair(lad.m - 1)), strict=True
    )
    p_g2 = pam if lad.u_rail[lad.m] in pam.vmap else pbm
    assert lad.u_rail[lad.m] in p_g2.vmap and lad.v_rail[lad.m] in p_g2.vmap
    return p_g1, p_g2


def _cut_of_pair(g: PseudoGraph, pair: Tuple[int, int]) -> EdgeCut:
    for c in find_2_edge_cuts(g):
        if set(c.pair) == set(pair):
            return c
    raise AssertionError(f"rail pair {pair} is not a 2-edge-cut")


# --- case: some maximal ladder avoids e --------------------------------------


def _case_ladder_avoids_e(
    block: PendantBlockInput, lad: Ladder, steps: List[CertificateStep]
) -> EdgeColoring:
    g, e = block.g, block.e
    comp0 = _component_vertices(g, set(lad.edges()), lad.u_rail[0])
    endpoints = set(g.endpoints(e))
    if not endpoints <= comp0:
        lad = _flip_ladder(lad)
        comp0 = _component_vertices(g, set(lad.edges()), lad.u_rail[0])
        assert endpoints <= comp0
    cut = _cut_of_pair(g, lad.rail_pair(0))
    pa, pb, _ = two_cut_reduction(g, cut, strict=True)
    p_h = pa if lad.u_rail[0] in pa.vmap else pb
    p_rest = pb if p_h is pa else pa
    assert e in p_h.emap
    assert p_h.graph.num_vertices < g.num_vertices

    sub_h = PendantBlockInput.from_edge(p_h.graph, p_h.emap[e])
    c1 = color_pendant_block(sub_h, steps)
    arising_h = p_h.arising[0]
    x = c1.colors[arising_h]
    u0_hat = p_h.vmap[lad.u_rail[0]]
    v0_hat = p_h.vmap[lad.v_rail[0]]
    t_u = sorted(
        c1.colors[d] for d in _others_at(sub_h.g_prime, u0_hat, arising_h)
    )
    t_v = sorted(
        c1.colors[d] for d in _others_at(sub_h.g_prime, v0_hat, arising_h)
    )
    status1 = edge_status(c1, arising_h)

    theta = nz_z23_flow(p_rest.graph)
    c2 = coloring_from_flow(theta)
    arising_r = p_rest.arising[0]
    u1_hat = p_rest.vmap[lad.u_rail[1]]
    v1_hat = p_rest.vmap[lad.v_rail[1]]
    s_u = sorted(c2.colors[d] for d in _others_at(p_rest.graph, u1_hat, arising_r))
    s_v = sorted(c2.colors[d] for d in _others_at(p_rest.graph, v1_hat, arising_r))
    status2 = edge_status(c2, arising_r)

    partial = {c2.colors[arising_r]: x}
    if status1 == EdgeStatus.RICH and status2 == EdgeStatus.RICH:
        # five distinct source values map to five distinct targets, lining
        # both rail seams up as poor edges
        for src, dst in zip(s_u, t_u):
            partial[src] = dst
        for src, dst in zip(s_v, t_v):
            partial[src] = dst
    else:
        for src, dst in zip(s_u, t_u):
            partial[src] = dst
    perm = _extend_palette_perm(partial)
    _record(steps, CaseTag.LadderAvoidsE, g, (e,), perm)

    colors: Dict[int, int] = {}
    for orig, loc in p_h.emap.items():
        if orig == e:
            continue
        colors[orig] = c1.colors[loc]
    for orig, loc in p_rest.emap.items():
        colors[orig] = perm[c2.colors[loc]]
    for ce in cut.pair:
        colors[ce] = x
    colors[block.half_u] = c1.colors[sub_h.half_u]
    colors[block.half_w] = c1.colors[sub_h.half_w]
    colors[block.bridge] = c1.colors[sub_h.bridge]
    return _finish_block_coloring(block, colors, steps)


# --- rich flows at the two ends of a ladder ----------------------------------


def _rich_end_flow(
    piece: ReductionPiece, w_orig: int
) -> Tuple[GroupFlow, int, int, int]:
    """Rich flow on a ladder-side piece at the image of end vertex w_orig.

    Returns (flow, arising value, absent value, arising edge id); the absent
    value is the unique element of 1..7 not appearing on the seven edges at
    distance <= 1 from the image of w_orig.
    """
    h = piece.graph
    w_hat = piece.vmap[w_orig]
    arising = piece.arising[0]
    o1, o2 = _others_at(h, w_hat, arising)
    theta = _checked_rich_pair(h, o1, o2)
    near = {theta.values[arising], theta.values[o1], theta.values[o2]}
    for d, vv in ((o1, _far_endpoint(h, o1, w_hat)), (o2, _far_endpoint(h, o2, w_hat))):
        near.update(_flow_values_at(theta, vv, d))
    absent = set(range(1, 8)) - near
    assert len(absent) == 1, "rich end flow must miss exactly one value nearby"
    return theta, theta.values[arising], absent.pop(), arising


def _checked_rich_pair(h: PseudoGraph, o1: int, o2: int) -> GroupFlow:
    assert not find_bridges(h)
    assert not find_2_edge_cuts(h)
    assert h.num_vertices >= 4
    return flow_two_adjacent_rich(h, o1, o2)


def _align_second_end(
    theta2: GroupFlow, arising2: int, absent2: int, x: int, y: int
) -> Tuple[GroupFlow, int, GF2Automorphism]:
    """Rename theta2 so its arising edge carries x and its absent value
    avoids y; returns (renamed flow, new absent value, automorphism)."""
    for auto in all_automorphisms():
        if auto.apply(theta2.values[arising2]) == x and auto.apply(absent2) != y:
            z = auto.apply(absent2)
            return apply_automorphism(theta2, auto), z, auto
    raise AssertionError("no automorphism aligns the second ladder end")


# --- cases: e inside every maximal ladder ------------------------------------


def _horizontal_symbols(lad: Ladder, e: int) -> Tuple[Dict[int, str], Dict[int, str], int, int]:
    """Symbolic colors for a ladder whose rail edge e = u_edges[p] is
    internal (1 <= p <= m-2).  Returns (edge symbols, half symbols keyed by
    e's endpoint vertex, left junction vertex, right junction vertex)."""
    m = lad.m
    p = lad.u_edges.index(e)
    assert 1 <= p <= m - 2
    sym: Dict[int, str] = {}
    for j in range(m):
        if j == p:
            continue
        if j < p:
            sym[lad.u_edges[j]] = "x" if (p - j) % 2 == 1 else "y"
        else:
            sym[lad.u_edges[j]] = "x" if (j - p) % 2 == 1 else "z"
    for j in range(m):
        if j <= p:
            sym[lad.v_edges[j]] = "x" if (p - j) % 2 == 0 else "y"
        else:
            sym[lad.v_edges[j]] = "z" if (j - p) % 2 == 1 else "x"
    for i in range(1, m):
        sym[lad.rungs[i - 1]] = "xy" if i <= p else "xz"
    halves = {lad.u_rail[p]: "y", lad.u_rail[p + 1]: "z"}
    # the junction vertex carrying symbol y sits where rail edge 0 reads y;
    # the rails are anti-phased so exactly one end of each boundary does
    w_left = lad.u_rail[0] if sym[lad.u_edges[0]] == "y" else lad.v_rail[0]
    w_right = lad.u_rail[m] if sym[lad.u_edges[m - 1]] == "z" else lad.v_rail[m]
    assert sym[lad.u_edges[0] if w_left == lad.u_rail[0] else lad.v_edges[0]] == "y"
    assert (
        sym[lad.u_edges[m - 1] if w_right == lad.u_rail[m] else lad.v_edges[m - 1]]
        == "z"
    )
    return sym, halves, w_left, w_right


def _vertical_symbols(lad: Ladder, e: int) -> Tuple[Dict[int, str], Dict[int, str], int, int]:
    """Symbolic colors for a ladder whose rung e joins the rails at index q
    (1 <= q <= m-1).  Returns the same shape as _horizontal_symbols."""
    m = lad.m
    q = lad.rungs.index(e) + 1
    assert 1 <= q <= m - 1
    sym: Dict[int, str] = {}
    for j in range(m):
        if j < q:
            sym[lad.u_edges[j]] = "y" if (q - 1 - j) % 2 == 0 else "x"
            sym[lad.v_edges[j]] = "x" if (q - 1 - j) % 2 == 0 else "y"
        else:
            sym[lad.u_edges[j]] = "x" if (j - q) % 2 == 0 else "z"
            sym[lad.v_edges[j]] = "z" if (j - q) % 2 == 0 else "x"
    for i in range(1, m):
        if i == q:
            continue
        sym[lad.rungs[i - 1]] = "xy" if i < q else "xz"
    halves = {lad.u_rail[q]: "xy", lad.v_rail[q]: "xz"}
    w_left = lad.u_rail[0] if sym[lad.u_edges[0]] == "y" else lad.v_rail[0]
    w_right = lad.u_rail[m] if sym[lad.u_edges[m - 1]] == "z" else lad.v_rail[m]
    return sym, halves, w_left, w_right


def _case_ladder_template(
    block: PendantBlockInput,
    lad: Ladder,
    tag: CaseTag,
    steps: List[CertificateStep],
) -> EdgeColoring:
    g, e = block.g, block.e
    if tag is CaseTag.Horizontal:
        if e in lad.v_edges:
            lad = _swap_rails(lad)
        sym, halves, w_left, w_right = _horizontal_symbols(lad, e)
    else:
        sym, halves, w_left, w_right = _vertical_symbols(lad, e)

    p_g1, p_g2 = _side_pieces(g, lad)
    assert w_left in p_g1.vmap and w_right in p_g2.vmap
    # x flows into the ladder at the left junction; y is the unique value
    # missing near that junction, so the junction edge labeled y stays rich
    theta1, x, y, _ = _rich_end_flow(p_g1, w_left)
    theta2, _, absent2, arising2 = _rich_end_flow(p_g2, w_right)
    theta2, z, auto = _align_second_end(theta2, arising2, absent2, x, y)
    assert len({x, y, z}) == 3
    _record(steps, tag, g, (e,), _perm_of_automorphism(auto))

    lookup = {
        "x": x,
        "y": y,
        "z": z,
        "xy": x ^ y,
        "xz": x ^ z,
        "yz": y ^ z,
    }
    colors: Dict[int, int] = {}
    for orig, loc in p_g1.emap.items():
        colors[orig] = theta1.values[loc]
    for orig, loc in p_g2.emap.items():
        colors[orig] = theta2.values[loc]
    for eid, s in sym.items():
        assert eid not in colors
        colors[eid] = lookup[s]
    hu, hw = block.u, block.w
    assert set(halves) == {hu, hw}
    colors[block.half_u] = lookup[halves[hu]]
    colors[block.half_w] = lookup[halves[hw]]
    colors[block.bridge] = lookup["yz"]
    return _finish_block_coloring(block, colors, steps)


# --- case: e is a boundary rail edge ------------------------------------------


def _case_initial_edge(
    block: PendantBlockInput, lad: Ladder, steps: List[CertificateStep]
) -> EdgeColoring:
    g, e = block.g, block.e
    m = lad.m
    if e in (lad.u_edges[0], lad.v_edges[0]) and m > 1:
        lad = _flip_ladder(lad)
    if e == lad.v_edges[lad.m - 1]:
        lad = _swap_rails(lad)
    m = lad.m
    assert e == lad.u_edges[m - 1]
    _record(steps, CaseTag.InitialEdge, g, (e,))

    cut = _cut_of_pair(g, lad.rail_pair(m - 1))
    pa, pb, _ = two_cut_reduction(g, cut, strict=True)
    p_h1 = pa if lad.u_rail[m - 1] in pa.vmap else pb
    p_h2 = pb if p_h1 is pa else pa
    assert lad.u_rail[m] in p_h2.vmap

    w_hat = p_h2.vmap[lad.u_rail[m]]
    a2 = p_h2.arising[0]
    ew1, ew2 = _others_at(p_h2.graph, w_hat, a2)
    theta2 = _checked_rich_pair(p_h2.graph, ew1, ew2)
    # frame at the far endpoint of e: x_f on the third edge's side, y_f and
    # z_f so that the arising edge carries y_f ^ z_f
    s1 = set(
        _flow_values_at(theta2, _far_endpoint(p_h2.graph, ew1, w_hat), ew1)
    )
    s2 = set(
        _flow_values_at(theta2, _far_endpoint(p_h2.graph, ew2, w_hat), ew2)
    )
    shared = s1 & s2
    assert len(shared) == 1
    xf = shared.pop()
    yf = (s1 - {xf}).pop()
    zf = (s2 - {xf}).pop()
    x = theta2.values[a2]
    assert x == yf ^ zf

    theta1 = nz_z23_flow(p_h1.graph)
    a1 = p_h1.arising[0]
    vm1_hat = p_h1.vmap[lad.v_rail[m - 1]]
    vm_hat = p_h2.vmap[lad.v_rail[m]]
    q_set = set(_flow_values_at(theta1, vm1_hat, a1))
    p_set = set(_flow_values_at(theta2, vm_hat, a2))
    theta1 = _aligned(
        theta1,
        pairs=[(theta1.values[a1], x)],
        set_pairs=[(q_set, p_set)],
    )

    colors: Dict[int, int] = {}
    for orig, loc in p_h1.emap.items():
        colors[orig] = theta1.values[loc]
    for orig, loc in p_h2.emap.items():
        colors[orig] = theta2.values[loc]
    colors[lad.v_edges[m - 1]] = x
    colors[block.half_u if block.u == lad.u_rail[m - 1] else block.half_w] = x
    colors[block.half_w if block.u == lad.u_rail[m - 1] else block.half_u] = (
        xf ^ yf ^ zf
    )
    colors[block.bridge] = xf
    return _finish_block_coloring(block, colors, steps)


# --- dispatch -----------------------------------------------------------------


def color_pendant_block(
    block: PendantBlockInput,
    trace: Optional[List[CertificateStep]] = None,
) -> EdgeColoring:
    """Color the subdivide-plus-pendant gadget with at most 7 colors so that
    every edge except the pendant bridge is poor or rich.

    The pendant bridge is exempt from the status requirement (its color is
    still constrained by properness at the subdivision vertex).
    """
    steps: List[CertificateStep] = trace if trace is not None else []
    g, e = block.g, block.e
    partners = [
        d
        for d in g.edge_ids()
        if d != e and set(g.endpoints(d)) == set(g.endpoints(e))
    ]
    if partners:
        assert len(partners) == 1
        return _case_doubled_edge(block, partners[0], steps)
    cuts = find_2_edge_cuts(g)
    if not cuts:
        return _case_three_ec(block, steps)
    ladders = []
    for cut in cuts:
        lad = ladder_containing(g, cut)
        ladders.append(lad)
        if e not in lad.edges():
            return _case_ladder_avoids_e(block, lad, steps)
    # every maximal ladder contains e; they all agree on the case e falls in
    lad = ladders[0]
    if e in lad.rungs:
        return _case_ladder_template(block, lad, CaseTag.Vertical, steps)
    m = lad.m
    boundary = {lad.u_edges[0], lad.v_edges[0], lad.u_edges[m - 1], lad.v_edges[m - 1]}
    if e in boundary:
        return _case_initial_edge(block, lad, steps)
    return _case_ladder_template(block, lad, CaseTag.Horizontal, steps)


# ---------------------------------------------------------------------------
# graphs with degrees 1 and 3, all bridges pendant


def color_degree13_graph(
    g: PseudoGraph,
    trace: Optional[List[CertificateStep]] = None,
) -> EdgeColoring:
    """Normal 7-edge-coloring of a simple graph with every degree 1 or 3 and
    every bridge pendant.  No edge is exempt: pendant edges are poor by the
    size of their color neighborhood.

    Raises ValueError for a single-edge component, which admits no normal
    coloring at any number of colors.
    """
    steps: List[CertificateStep] = trace if trace is not None else []
    if not g.is_simple():
        raise ValueError("color_degree13_graph requires a simple graph")
    degs = {v: g.degree(v) for v in g.vertices()}
    if any(d not in (1, 3) for d in degs.values()):
        raise ValueError("every vertex degree must be 1 or 3")
    leaves = {v for v, d in degs.items() if d == 1}
    for b in find_bridges(g):
        bu, bv = g.endpoints(b)
        if bu not in leaves and bv not in leaves:
            raise ValueError("every bridge must be a pendant edge")

    if not g.is_connected():
        colors: Dict[int, int] = {}
        for comp in g.connected_components():
            sub, _, emap = remove_vertices(g, set(g.vertices()) - set(comp))
            rec = color_degree13_graph(sub, steps)
            for orig, loc in emap.items():
                colors[orig] = rec.colors[loc]
        return _verified_normal(g, colors, steps)

    if g.num_vertices == 2 and len(g.edge_ids()) == 1:
        raise ValueError(
            "a lone edge admits no normal coloring: only one color appears "
            "around it"
        )

    pendants = sorted(d for d in g.edge_ids() if set(g.endpoints(d)) & leaves)
    t = len(pendants)

    if t == 0:
        theta = nz_z23_flow(g)
        col = coloring_from_flow(theta)
        _record(steps, CaseTag.ManyPendant_t0, g)
        ok, _ = is_normal(col)
        if not ok:
            raise PipelineVerificationError("flow coloring not normal", steps)
        return col

    def attach_vertex(d: int) -> int:
        a, b = g.endpoints(d)
        return b if a in leaves else a

    attach = [attach_vertex(d) for d in pendants]

    if t >= 2 and len(set(attach)) == 1:
        # all pendant edges share their attachment: the whole graph is a
        # 3-star, colored directly (two pendants at one vertex would make
        # its third edge a non-pendant bridge, rejected above)
        assert t == 3 and g.num_vertices == 4
        _record(steps, CaseTag.Triangle, g)
        colors = {d: i + 1 for i, d in enumerate(pendants)}
        return _verified_normal(g, colors, steps)
    assert len(set(attach)) == t

    if t == 1:
        return _suppress_single_pendant(g, pendants[0], attach[0], steps)

    if t == 2:
        u, v = attach
        lu = _far_endpoint(g, pendants[0], u)
        lv = _far_endpoint(g, pendants[1], v)
        h0, vmap, emap = remove_vertices(g, {lu, lv})
        ne = h0.add_edge(vmap[u], vmap[v])
        assert h0.is_cubic() and not find_bridges(h0)
        theta = nz_z23_flow(h0)
        _record(steps, CaseTag.ManyPendant_t2, g, tuple(pendants))
        colors = {orig: theta.values[loc] for orig, loc in emap.items()}
        colors[pendants[0]] = theta.values[ne]
        colors[pendants[1]] = theta.values[ne]
        return _verified_normal(g, colors, steps)

    # t >= 3: merge two pendant edges at non-adjacent attachments
    pair = None
    for i in range(t):
        for j in range(i + 1, t):
            if not g.edges_between(attach[i], attach[j]):
                pair = (i, j)
                break
        if pair:
            break
    if pair is None:
        # pairwise adjacent attachments in a simple cubic-ish graph force a
        # triangle with one pendant at each corner
        assert t == 3 and g.num_vertices == 6
        _record(steps, CaseTag.Triangle, g)
        tri = sorted(d for d in g.edge_ids() if d not in pendants)
        assert len(tri) == 3
        colors = {d: i + 1 for i, d in enumerate(tri)}
        for d in pendants:
            av = attach_vertex(d)
            here = {colors[x] for x in g.incident(av) if x != d}
            colors[d] = ({1, 2, 3} - here).pop()
        return _verified_normal(g, colors, steps)

    i, j = pair
    u, v = attach[i], attach[j]
    lu = _far_endpoint(g, pendants[i], u)
    lv = _far_endpoint(g, pendants[j], v)
    h0, vmap, emap = remove_vertices(g, {lu, lv})
    ne = h0.add_edge(vmap[u], vmap[v])
    assert h0.is_simple()
    assert h0.num_vertices < g.num_vertices
    _record(steps, CaseTag.Merge, g, (pendants[i], pendants[j]))
    rec = color_degree13_graph(h0, steps)
    colors = {orig: rec.colors[loc] for orig, loc in emap.items()}
    colors[pendants[i]] = rec.colors[ne]
    colors[pendants[j]] = rec.colors[ne]
    return _verified_normal(g, colors, steps)


def _suppress_single_pendant(
    g: PseudoGraph, pendant: int, s: int, steps: List[CertificateStep]
) -> EdgeColoring:
    """One pendant edge: remove it and smooth its attachment vertex, color
    the resulting bridgeless cubic graph through the pendant-block gadget,
    and pull the three gadget colors back."""
    leaf = _far_endpoint(g, pendant, s)
    e1, e2 = _others_at(g, s, pendant)
    p = _far_endpoint(g, e1, s)
    q = _far_endpoint(g, e2, s)
    assert p != q
    h0, vmap, emap = remove_vertices(g, {leaf, s})
    eh = h0.add_edge(vmap[p], vmap[q])
    assert h0.num_vertices < g.num_vertices
    _record(steps, CaseTag.ManyPendant_t1, g, (pendant,))
    sub = PendantBlockInput.from_edge(h0, eh)
    rec = color_pendant_block(sub, steps)
    colors = {orig: rec.colors[loc] for orig, loc in emap.items()}
    colors[e1] = rec.colors[sub.half_u]
    colors[e2] = rec.colors[sub.half_w]
    colors[pendant] = rec.colors[sub.bridge]
    return _verified_normal(g, colors, steps)


def _verified_normal(
    g: PseudoGraph, colors: Dict[int, int], steps: List[CertificateStep]
) -> EdgeColoring:
    assert set(colors) == set(g.edge_ids())
    col = EdgeColoring(g, 7, colors, exempt=frozenset())
    ok, _ = is_normal(col)
    if not ok:
        raise PipelineVerificationError("assembled coloring is not normal", steps)
    return col


# ---------------------------------------------------------------------------
# arbitrary simple cubic graphs: split at bridges, color, glue


@dataclass(frozen=True)
class GlueForest:
    """Decomposition of a cubic graph at its bridges.

    components lists the vertex sets of the bridgeless pieces (singletons
    are vertices all of whose edges are bridges); comp_of maps each vertex
    to its piece; roots holds one piece index per connected component of g,
    the piece containing its smallest vertex."""

    bridges: Tuple[int, ...]
    components: Tuple[Tuple[int, ...], ...]
    comp_of: Dict[int, int]
    roots: Tuple[int, ...]


def build_glue_forest(g: PseudoGraph) -> GlueForest:
    bridges = tuple(find_bridges(g))
    banned = set(bridges)
    comp_of: Dict[int, int] = {}
    components: List[Tuple[int, ...]] = []
    for v in g.vertices():
        if v in comp_of:
            continue
        verts = _component_vertices(g, banned, v)
        idx = len(components)
        components.append(tuple(sorted(verts)))
        for w in verts:
            comp_of[w] = idx
    # a vertex of a cubic graph lies on 0, 1, or 3 bridges: a cycle through
    # it would need two non-bridge edges
    for v in g.vertices():
        nb = sum(1 for d in g.incident(v) if d in banned)
        assert nb in (0, 1, 3)
        assert (nb == 3) == (len(components[comp_of[v]]) == 1)
    roots = []
    seen: Set[int] = set()
    for comp in g.connected_components():
        lead = min(comp)
        idx = comp_of[lead]
        if idx not in seen:
            roots.append(idx)
            seen.update(comp_of[w] for w in comp)
    return GlueForest(bridges, tuple(components), comp_of, tuple(roots))


def normal7_coloring(
    g: PseudoGraph,
    trace: Optional[List[CertificateStep]] = None,
) -> EdgeColoring:
    """Normal 7-edge-coloring of any simple cubic graph.

    Bridgeless graphs are colored straight from a nowhere-zero Z_2^3 flow.
    Otherwise the graph splits at its bridges into bridgeless pieces and
    isolated 3-bridge vertices; each piece gets a pendant edge per boundary
    vertex, is colored by color_degree13_graph, and the pieces are glued
    back with palette renamings that make every bridge poor.
    """
    steps: List[CertificateStep] = trace if trace is not None else []
    if not g.is_cubic():
        raise ValueError("normal7_coloring requires a cubic graph")
    if not g.is_simple():
        raise ValueError("normal7_coloring requires a simple graph")
    if not find_bridges(g):
        theta = nz_z23_flow(g)
        col = coloring_from_flow(theta)
        _record(steps, CaseTag.ManyPendant_t0, g)
        ok, _ = is_normal(col)
        if not ok:
            raise PipelineVerificationError("flow coloring not normal", steps)
        return col

    forest = build_glue_forest(g)
    banned = set(forest.bridges)

    # color each non-singleton piece with a pendant edge per boundary vertex
    piece_colors: Dict[int, Dict[int, int]] = {}
    piece_emap: Dict[int, Dict[int, int]] = {}
    piece_vmap: Dict[int, Dict[int, int]] = {}
    piece_pendant: Dict[int, Dict[int, int]] = {}
    piece_graph: Dict[int, PseudoGraph] = {}
    for ci, verts in enumerate(forest.components):
        if len(verts) == 1:
            continue
        sub, vmap, emap = remove_vertices(g, set(g.vertices()) - set(verts))
        pend: Dict[int, int] = {}
        for v in sorted(sub.vertices()):
            if sub.degree(v) == 2:
                sub, _, pe = attach_pendant(sub, v)
                pend[v] = pe
        assert all(sub.degree(v) in (1, 3) for v in sub.vertices())
        rec = color_degree13_graph(sub, steps)
        piece_colors[ci] = dict(rec.colors)
        piece_emap[ci] = emap
        piece_vmap[ci] = vmap
        piece_pendant[ci] = pend
        piece_graph[ci] = sub

    def slot_color(ci: int, v: int) -> int:
        loc = piece_vmap[ci][v]
        return piece_colors[ci][piece_pendant[ci][loc]]

    def other_colors(ci: int, v: int) -> List[int]:
        loc = piece_vmap[ci][v]
        pe = piece_pendant[ci][loc]
        return sorted(
            piece_colors[ci][d]
            for d in piece_graph[ci].incident(loc)
            if d != pe
        )

    def apply_perm(ci: int, perm: Tuple[int, ...]) -> None:
        piece_colors[ci] = {d: perm[c] for d, c in piece_colors[ci].items()}

    bridges_at: Dict[int, List[int]] = {}
    for b in forest.bridges:
        for v in g.endpoints(b):
            bridges_at.setdefault(forest.comp_of[v], []).append(b)

    bridge_color: Dict[int, int] = {}
    visited: Set[int] = set()
    for root in forest.roots:
        visited.add(root)
        if root in piece_colors:
            _record(steps, CaseTag.Glue, g, tuple(forest.components[root]))
        else:
            own = sorted(bridges_at.get(root, []))
            assert len(own) == 3
            for i, b in enumerate(own):
                bridge_color[b] = i + 1
            _record(steps, CaseTag.Glue, g, tuple(own))
        queue = deque([root])
        while queue:
            ci = queue.popleft()
            for b in sorted(bridges_at.get(ci, [])):
                bu, bv = g.endpoints(b)
                alpha, beta = (
                    (bu, bv) if forest.comp_of[bu] == ci else (bv, bu)
                )
                cj = forest.comp_of[beta]
                if cj in visited:
                    assert b in bridge_color
                    continue
                if ci in piece_colors:
                    bridge_color[b] = slot_color(ci, alpha)
                    others_a = other_colors(ci, alpha)
                else:
                    # alpha is a 3-bridge vertex whose edges were all colored
                    # when its piece was glued (or seeded at the root)
                    assert b in bridge_color
                    others_a = sorted(
                        bridge_color[d] for d in g.incident(alpha) if d != b
                    )
                if cj in piece_colors:
                    partial = {slot_color(cj, beta): bridge_color[b]}
                    for src, dst in zip(other_colors(cj, beta), others_a):
                        partial[src] = dst
                    perm = _extend_palette_perm(partial)
                    apply_perm(cj, perm)
                    _record(
                        steps,
                        CaseTag.Glue,
                        g,
                        (b,),
                        perm,
                    )
                else:
                    rest = sorted(d for d in g.incident(beta) if d != b)
                    assert len(rest) == 2
                    for d, c in zip(rest, others_a):
                        bridge_color[d] = c
                    _record(steps, CaseTag.Glue, g, (b,))
                visited.add(cj)
                queue.append(cj)

    colors: Dict[int, int] = {}
    for ci in piece_colors:
        for orig, loc in piece_emap[ci].items():
            colors[orig] = piece_colors[ci][loc]
    for b in forest.bridges:
        assert b in bridge_color
        colors[b] = bridge_color[b]
    col = _verified_normal(g, colors, steps)
    # the glue keeps the color sets at both ends of each bridge equal
    ok, report = is_normal(col)
    assert ok
    for b in forest.bridges:
        assert report[b] == EdgeStatus.POOR
    return col
