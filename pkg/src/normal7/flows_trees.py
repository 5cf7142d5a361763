"""GF(2)^k flows, spanning tree packing, and constrained-flow constructions.

Group elements of Z_2^k are stored as k-bit ints; addition is xor.  The
generator convention is fixed project-wide: x = 001, y = 010, z = 100.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from normal7.cuts_reductions import find_2_edge_cuts, find_bridges, two_cut_reduction
from normal7.graph_core import PseudoGraph, remove_vertices

GF2Vector = int  # k-bit value; addition is bitwise xor

X: GF2Vector = 1
Y: GF2Vector = 2
Z: GF2Vector = 4


class PackingError(Exception):
    """No packing of edge-disjoint spanning trees exists."""


@dataclass
class GroupFlow:
    """An assignment of Z_2^k values to all edges of a graph."""

    graph: PseudoGraph
    k: int
    values: Dict[int, GF2Vector]


@dataclass(frozen=True)
class FlowCheck:
    conserving: bool
    nowhere_zero: bool

    def __bool__(self) -> bool:
        return self.conserving


@dataclass(frozen=True)
class TreePair:
    t1: FrozenSet[int]
    t2: FrozenSet[int]


def verify_flow(flow: GroupFlow) -> FlowCheck:
    """Check conservation at every vertex; report nowhere-zero separately.

    A loop appears twice in its vertex's incidence list, so it cancels out
    of the conservation sum on its own.
    """
    g = flow.graph
    vals = flow.values
    ids = g.edge_ids()
    if set(vals) != set(ids):
        raise ValueError("flow values must cover exactly the edge set")
    limit = 1 << flow.k
    if any(not 0 <= v < limit for v in vals.values()):
        raise ValueError(f"flow values must lie in [0, {limit})")
    conserving = True
    for v in g.vertices():
        acc = 0
        for eid in g.incident(v):
            acc ^= vals[eid]
        if acc:
            conserving = False
            break
    nowhere_zero = all(vals[e] != 0 for e in ids)
    return FlowCheck(conserving, nowhere_zero)


def flow_value_set(flow: GroupFlow, v: int) -> Set[GF2Vector]:
    """Distinct flow values on edges at v; a loop contributes its value once."""
    return {flow.values[e] for e in flow.graph.incident(v)}


def flow_edge_status(flow: GroupFlow, eid: int) -> str:
    """'poor', 'rich', or 'neither' by the size of the two-endpoint value union."""
    u, v = flow.graph.endpoints(eid)
    union = flow_value_set(flow, u) | flow_value_set(flow, v)
    if len(union) == 3:
        return "poor"
    if len(union) == 5:
        return "rich"
    return "neither"


# -- spanning tree packing ----------------------------------------------------


def _forest_path(g: PseudoGraph, forest: Set[int], s: int, t: int) -> Optional[List[int]]:
    """Edge ids on the forest path s..t, or None if disconnected there."""
    if s == t:
        return []
    parent: Dict[int, Tuple[int, int]] = {s: (-1, -1)}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for eid in sorted(e for e in g.incident(v) if e in forest):
            w = g.other_endpoint(eid, v)
            if w not in parent:
                parent[w] = (v, eid)
                if w == t:
                    path = []
                    cur = t
                    while cur != s:
                        pv, pe = parent[cur]
                        path.append(pe)
                        cur = pv
                    return path
                queue.append(w)
    return None


def _try_augment(g: PseudoGraph, forests: List[Set[int]], e: int) -> bool:
    """One matroid-union augmentation step: try to absorb edge e."""
    parent: Dict[int, Optional[Tuple[int, int]]] = {e: None}
    queue = deque([e])
    while queue:
        y = queue.popleft()
        uy, vy = g.endpoints(y)
        for i, forest in enumerate(forests):
            if y in forest:
                continue
            path = _forest_path(g, forest, uy, vy)
            if path is None:
                # Direct insertion, then unwind the exchange chain.
                forests[i].add(y)
                cur = y
                while parent[cur] is not None:
                    prev, j = parent[cur]  # type: ignore[misc]
                    forests[j].discard(cur)
                    forests[j].add(prev)
                    cur = prev
                return True
            for x in path:
                if x not in parent:
                    parent[x] = (y, i)
                    queue.append(x)
    return False


def _is_spanning_tree(g: PseudoGraph, edges: Set[int]) -> bool:
    n = g.num_vertices
    if len(edges) != n - 1:
        return False
    seen = {0} if n else set()
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for eid in g.incident(v):
            if eid in edges:
                w = g.other_endpoint(eid, v)
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return len(seen) == n


def _assert_forests(g: PseudoGraph, forests: List[Set[int]]) -> None:
    seen: Set[int] = set()
    for forest in forests:
        assert not (forest & seen)
        seen |= forest
        comp: Dict[int, int] = {}

        def find(a: int) -> int:
            while comp.get(a, a) != a:
                comp[a] = comp.get(comp[a], comp[a])
                a = comp[a]
            return a

        for eid in forest:
            u, v = g.endpoints(eid)
            ru, rv = find(u), find(v)
            assert ru != rv
            comp[ru] = rv


def _pack_exhaustive(g: PseudoGraph, k: int) -> Optional[List[Set[int]]]:
    """Brute-force packing for tiny graphs; k = 2 only."""
    if k != 2:
        return None
    n = g.num_vertices
    ids = [e for e in g.edge_ids() if not g.is_loop(e)]
    for t1 in combinations(ids, n - 1):
        s1 = set(t1)
        if not _is_spanning_tree(g, s1):
            continue
        rest = [e for e in ids if e not in s1]
        for t2 in combinations(rest, n - 1):
            s2 = set(t2)
            if _is_spanning_tree(g, s2):
                return [s1, s2]
    return None


def _pack_spanning_trees(g: PseudoGraph, k: int) -> List[Set[int]]:
    n = g.num_vertices
    if n <= 1:
        return [set() for _ in range(k)]
    if not g.is_connected():
        raise PackingError("graph is disconnected")
    forests: List[Set[int]] = [set() for _ in range(k)]
    for e in g.edge_ids():
        if g.is_loop(e):
            continue
        if _try_augment(g, forests, e):
            _assert_forests(g, forests)
    if all(len(f) == n - 1 for f in forests):
        for f in forests:
            assert _is_spanning_tree(g, f)
        return forests
    if g.num_edges <= 12:
        fallback = _pack_exhaustive(g, k)
        if fallback is not None:
            return fallback
    raise PackingError(f"no packing of {k} edge-disjoint spanning trees")


def pack_two_spanning_trees(g: PseudoGraph) -> TreePair:
    """Two edge-disjoint spanning trees, or a PackingError."""
    t1, t2 = _pack_spanning_trees(g, 2)
    return TreePair(frozenset(t1), frozenset(t2))


def parity_subgraph_in_tree(g: PseudoGraph, tree: Iterable[int]) -> Set[int]:
    """The parity subgraph of g contained in the given spanning tree.

    Returns A with deg_A(v) = deg_g(v) (mod 2) for all v; leaf-stripping
    makes the choice at every step forced, so A is unique within the tree.
    """
    tset = set(tree)
    if not _is_spanning_tree(g, tset):
        raise ValueError("not a spanning tree of the graph")
    need = [g.degree(v) % 2 for v in g.vertices()]
    adj: Dict[int, List[int]] = {v: [] for v in g.vertices()}
    for eid in tset:
        u, v = g.endpoints(eid)
        adj[u].append(eid)
        adj[v].append(eid)
    removed: Set[int] = set()
    result: Set[int] = set()
    leaves = deque(v for v in g.vertices() if len(adj[v]) == 1)
    dead: Set[int] = set()
    while leaves:
        v = leaves.popleft()
        live = [e for e in adj[v] if e not in removed]
        if not live or v in dead:
            continue
        (t,) = live
        w = g.other_endpoint(t, v)
        if need[v] % 2 == 1:
            result.add(t)
            need[w] += 1
        removed.add(t)
        dead.add(v)
        if len([e for e in adj[w] if e not in removed]) == 1:
            leaves.append(w)
    for v in g.vertices():
        inc = sum(1 for e in g.incident(v) if e in result)
        assert inc % 2 == g.degree(v) % 2
    return result


# -- flow constructions --------------------------------------------------------


def flow_from_even_subgraphs(
    g: PseudoGraph, p1: Iterable[int], p2: Iterable[int]
) -> GroupFlow:
    """The Z_2^2 flow whose x-support is p1 and y-support is p2.

    Both sets must be even subgraphs and together cover every edge.
    """
    s1, s2 = set(p1), set(p2)
    ids = set(g.edge_ids())
    for s in (s1, s2):
        if not s <= ids:
            raise ValueError("even subgraph contains unknown edges")
        for v in g.vertices():
            if sum(1 for e in g.incident(v) if e in s) % 2:
                raise ValueError("subgraph is not even")
    if s1 | s2 != ids:
        raise ValueError("even subgraphs must cover every edge")
    values = {e: (X if e in s1 else 0) | (Y if e in s2 else 0) for e in ids}
    flow = GroupFlow(g, 2, values)
    check = verify_flow(flow)
    assert check.conserving and check.nowhere_zero
    return flow


def nz_flow_from_tree_pair(g: PseudoGraph, tp: TreePair) -> GroupFlow:
    """Nowhere-zero Z_2^2 flow from two disjoint spanning trees.

    Every edge outside both trees gets x+y; tree edges avoid zero because
    the trees are disjoint.
    """
    if tp.t1 & tp.t2:
        raise ValueError("trees must be edge-disjoint")
    a1 = parity_subgraph_in_tree(g, tp.t1)
    a2 = parity_subgraph_in_tree(g, tp.t2)
    ids = set(g.edge_ids())
    flow = flow_from_even_subgraphs(g, ids - a1, ids - a2)
    for e in ids:
        if e not in tp.t1 and e not in tp.t2:
            assert flow.values[e] == X | Y
    return flow


def flow_two_edges_equal(g: PseudoGraph, e: int, f: int) -> GroupFlow:
    """Nowhere-zero Z_2^2 flow with equal values on e and f.

    Works on any pseudograph in which g-e-f still packs two spanning trees
    (4-edge-connectivity is enough).  Both named edges end up outside both
    trees and so receive x+y.
    """
    for d in (e, f):
        g.endpoints(d)
    h = g.copy()
    h.remove_edge(e)
    if f != e:
        h.remove_edge(f)
    t1, t2 = _pack_spanning_trees(h, 2)
    flow = nz_flow_from_tree_pair(g, TreePair(frozenset(t1), frozenset(t2)))
    assert flow.values[e] == flow.values[f]
    return flow


def _share_vertex(g: PseudoGraph, eids: Sequence[int]) -> bool:
    common = set(g.endpoints(eids[0]))
    for e in eids[1:]:
        common &= set(g.endpoints(e))
    return bool(common)


def flow_three_edges_distinct(g: PseudoGraph, e: int, f: int, gg: int) -> GroupFlow:
    """Nowhere-zero Z_2^2 flow with values[e] != values[f] and values[e] != values[gg].

    e, f, gg must share a vertex; f and gg may coincide, e may not equal
    either.  Loops take the free-value route; otherwise pack trees in
    g-e-f, flip the second parity subgraph along the fundamental cycle of
    e so that e drops out of the second even subgraph.
    """
    if e in (f, gg):
        raise ValueError("cannot separate an edge's value from itself")
    if not _share_vertex(g, (e, f, gg)):
        raise ValueError("the three edges must share a vertex")
    loops = {d for d in (e, f, gg) if g.is_loop(d)}
    if loops:
        flow = _flow_with_free_loops(g, e, f, gg, loops)
    else:
        h = g.copy()
        h.remove_edge(e)
        h.remove_edge(f)
        t1, t2 = _pack_spanning_trees(h, 2)
        if gg in t2:
            t1, t2 = t2, t1
        a1 = parity_subgraph_in_tree(g, t1)
        a2 = parity_subgraph_in_tree(g, t2)
        cyc = set(_forest_path(g, t2, *g.endpoints(e)) or []) | {e}
        ids = set(g.edge_ids())
        flow = flow_from_even_subgraphs(g, ids - a1, ids - (a2 ^ cyc))
    assert flow.values[e] != flow.values[f] and flow.values[e] != flow.values[gg]
    return flow


def _any_nz2_flow(g: PseudoGraph) -> GroupFlow:
    non_loop_ids = [d for d in g.edge_ids() if not g.is_loop(d)]
    if non_loop_ids:
        return flow_two_edges_equal(g, non_loop_ids[0], non_loop_ids[0])
    return GroupFlow(g, 2, {d: X | Y for d in g.edge_ids()})


def _flow_with_free_loops(
    g: PseudoGraph, e: int, f: int, gg: int, loops: Set[int]
) -> GroupFlow:
    """Loop values are free, so satisfy non-loop constraints first and then
    overwrite the loop entries."""
    if e in loops:
        base = _any_nz2_flow(g)
        values = dict(base.values)
        taken = {values[f], values[gg]}
        values[e] = next(v for v in (X, Y, X | Y) if v not in taken)
    else:
        targets = [d for d in (f, gg) if d not in loops]
        if targets:
            base = flow_three_edges_distinct(g, e, targets[0], targets[-1])
        else:
            base = _any_nz2_flow(g)
        values = dict(base.values)
        for d in (f, gg):
            if d in loops:
                values[d] = next(v for v in (X, Y, X | Y) if v != values[e])
    flow = GroupFlow(g, 2, values)
    check = verify_flow(flow)
    assert check.conserving and check.nowhere_zero
    return flow


def flow_two_adjacent_distinct(g: PseudoGraph, e: int, f: int) -> GroupFlow:
    """Nowhere-zero Z_2^2 flow with different values on two adjacent edges."""
    return flow_three_edges_distinct(g, e, f, f)


# -- nowhere-zero Z_2^3 flows on bridgeless graphs ------------------------------


def nz_z23_flow(g: PseudoGraph) -> GroupFlow:
    """Nowhere-zero Z_2^3 flow of a bridgeless graph (possibly disconnected).

    2-edge-cuts are split recursively; flows on the two closed pieces are
    aligned by a group automorphism so they agree on the cut.  On
    3-edge-connected graphs, three spanning trees packed in the doubled
    graph give three complement-of-parity even subgraphs covering E.
    """
    if find_bridges(g):
        raise ValueError("graph has a bridge, so it admits no nowhere-zero flow")
    values: Dict[int, GF2Vector] = {}
    for comp in g.connected_components():
        if len(comp) == g.num_vertices:
            values.update(_nz3_connected(g))
        else:
            sub, _, emap = remove_vertices(g, set(g.vertices()) - set(comp))
            inv = {pe: oe for oe, pe in emap.items()}
            for pe, val in _nz3_connected(sub).items():
                values[inv[pe]] = val
    flow = GroupFlow(g, 3, values)
    check = verify_flow(flow)
    assert check.conserving and check.nowhere_zero
    return flow


def _nz3_connected(g: PseudoGraph) -> Dict[int, GF2Vector]:
    values: Dict[int, GF2Vector] = {}
    loops = [e for e in g.edge_ids() if g.is_loop(e)]
    if loops:
        for e in loops:
            values[e] = X
        h = g.copy()
        for e in loops:
            h.remove_edge(e)
        if h.num_edges:
            values.update(_nz3_connected(h))
        return values
    if g.num_edges == 0:
        return values
    cuts = find_2_edge_cuts(g)
    if not cuts:
        return _nz3_three_connected(g)
    pa, pb, trace = two_cut_reduction(g, cuts[0], strict=False)
    va = _nz3_connected(pa.graph)
    vb = _nz3_connected(pb.graph)
    ea, eb = pa.arising[0], pb.arising[0]
    a_loop = pa.graph.is_loop(ea)
    b_loop = pb.graph.is_loop(eb)
    if not a_loop and not b_loop:
        auto = automorphism_extending((vb[eb],), (va[ea],))
        vb = {eid: auto.apply(val) for eid, val in vb.items()}
        s = va[ea]
    elif a_loop and not b_loop:
        s = vb[eb]
    elif not a_loop and b_loop:
        s = va[ea]
    else:
        s = X
    for old, new in pa.emap.items():
        values[old] = va[new]
    for old, new in pb.emap.items():
        values[old] = vb[new]
    for c in trace.cut:
        values[c] = s
    return values


def _nz3_three_connected(g: PseudoGraph) -> Dict[int, GF2Vector]:
    doubled = PseudoGraph(g.num_vertices)
    copy_to_orig: Dict[int, int] = {}
    for eid, u, v in g.edges():
        for _ in range(2):
            copy_to_orig[doubled.add_edge(u, v)] = eid
    forests = _pack_spanning_trees(doubled, 3)
    trees = [{copy_to_orig[c] for c in forest} for forest in forests]
    for t in trees:
        assert _is_spanning_tree(g, t)  # a tree never holds both copies
    parities = [parity_subgraph_in_tree(g, t) for t in trees]
    values: Dict[int, GF2Vector] = {}
    for e in g.edge_ids():
        val = 0
        for bit, par in zip((X, Y, Z), parities):
            if e not in par:
                val |= bit
        values[e] = val
    assert all(values[e] for e in g.edge_ids())
    return values


# -- automorphisms of Z_2^3 ------------------------------------------------------


@dataclass(frozen=True)
class GF2Automorphism:
    """Invertible linear map of Z_2^3, stored as images of the basis 1, 2, 4."""

    cols: Tuple[GF2Vector, GF2Vector, GF2Vector]

    def __post_init__(self):
        c1, c2, c3 = self.cols
        if c1 == 0 or c2 in (0, c1) or c3 in (0, c1, c2, c1 ^ c2):
            raise ValueError("columns are not linearly independent")

    def apply(self, v: GF2Vector) -> GF2Vector:
        acc = 0
        for bit, col in zip((1, 2, 4), self.cols):
            if v & bit:
                acc ^= col
        return acc

    @property
    def matrix(self) -> Tuple[Tuple[int, int, int], ...]:
        """Rows of the 3x3 GF(2) matrix whose columns are the basis images."""
        return tuple(
            tuple((col >> r) & 1 for col in self.cols) for r in range(3)
        )

    def compose(self, other: "GF2Automorphism") -> "GF2Automorphism":
        """self after other."""
        return GF2Automorphism(tuple(self.apply(c) for c in other.cols))  # type: ignore[arg-type]


IDENTITY_AUTOMORPHISM = GF2Automorphism((1, 2, 4))


@lru_cache(maxsize=1)
def all_automorphisms() -> Tuple[GF2Automorphism, ...]:
    """All 168 automorphisms of Z_2^3, ordered by their basis-image triples."""
    out = []
    for c1 in range(1, 8):
        for c2 in range(1, 8):
            if c2 == c1:
                continue
            for c3 in range(1, 8):
                if c3 in (c1, c2, c1 ^ c2):
                    continue
                out.append(GF2Automorphism((c1, c2, c3)))
    return tuple(out)


def automorphism_extending(
    src: Sequence[GF2Vector], dst: Sequence[GF2Vector]
) -> GF2Automorphism:
    """The unique automorphism mapping src_i to dst_i.

    src must be linearly independent (1 to 3 vectors); shorter tuples are
    completed to a basis in a deterministic way, so the result is the first
    qualifying automorphism in the fixed enumeration order.
    """
    if len(src) != len(dst):
        raise ValueError("src and dst must have equal length")
    if not 1 <= len(src) <= 3:
        raise ValueError("need between 1 and 3 vector pairs")
    span: Set[int] = {0}
    for v in src:
        if v in span:
            raise ValueError("src vectors are linearly dependent")
        span |= {v ^ w for w in span}
    pairs = tuple(zip(src, dst))
    for auto in all_automorphisms():
        if all(auto.apply(s) == d for s, d in pairs):
            return auto
    raise ValueError("dst vectors are linearly dependent")


def find_automorphism(
    pairs: Iterable[Tuple[GF2Vector, GF2Vector]] = (),
    set_pairs: Iterable[Tuple[Iterable[GF2Vector], Iterable[GF2Vector]]] = (),
) -> Optional[GF2Automorphism]:
    """First automorphism (in enumeration order) meeting all constraints.

    pairs are pointwise requirements A(s) = d; set_pairs require the image
    of the first set to equal the second set.
    """
    point = tuple(pairs)
    sets = tuple((frozenset(s), frozenset(d)) for s, d in set_pairs)
    for auto in all_automorphisms():
        if all(auto.apply(s) == d for s, d in point) and all(
            frozenset(auto.apply(v) for v in s) == d for s, d in sets
        ):
            return auto
    return None


def apply_automorphism(flow: GroupFlow, auto: GF2Automorphism) -> GroupFlow:
    """Rename flow values through an automorphism; k=2 flows embed into Z_2^3."""
    out = GroupFlow(flow.graph, 3, {e: auto.apply(v) for e, v in flow.values.items()})
    check = verify_flow(out)
    assert check.conserving == verify_flow(flow).conserving
    return out
