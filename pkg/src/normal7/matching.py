"""Perfect matchings through a prescribed edge, complementary 2-factors, and
the contract-then-lift flow machinery for cubic graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple, Union

from normal7.cuts_reductions import find_bridges
from normal7.flows_trees import GroupFlow, verify_flow
from normal7.graph_core import PseudoGraph, contract_edge_set


class MatchingError(Exception):
    """No perfect matching satisfying the request exists."""


@dataclass(frozen=True)
class PerfectMatching:
    edges: frozenset


@dataclass(frozen=True)
class FactorCycle:
    """One cycle of a 2-factor; edges[i] joins vertices[i] to vertices[i+1],
    cyclically."""

    vertices: Tuple[int, ...]
    edges: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)


@dataclass
class TwoFactorLift:
    """The pseudograph obtained by contracting a complementary 2-factor.

    Every 2-factor cycle collapses to one vertex of h; matching edges
    survive and are tracked by edge_map.
    """

    g: PseudoGraph
    h: PseudoGraph
    edge_map: Dict[int, int]  # matching eid in g -> eid in h
    cycles: List[FactorCycle]
    vertex_to_cycle: Dict[int, int]  # g vertex -> index into cycles


def _check_matchable(g: PseudoGraph) -> None:
    if not g.is_cubic():
        raise ValueError("graph must be cubic")
    if find_bridges(g):
        raise ValueError("graph must be bridgeless")


def _pm_extend(g: PseudoGraph, used: List[bool], chosen: List[int]) -> bool:
    v = next((w for w in g.vertices() if not used[w]), None)
    if v is None:
        return True
    # Dead-end pruning: every uncovered vertex still needs a free neighbor.
    for w in g.vertices():
        if not used[w] and all(
            used[g.other_endpoint(eid, w)] or g.is_loop(eid)
            for eid in g.incident(w)
        ):
            return False
    for eid in sorted(set(g.incident(v))):
        if g.is_loop(eid):
            continue
        w = g.other_endpoint(eid, v)
        if used[w]:
            continue
        used[v] = used[w] = True
        chosen.append(eid)
        if _pm_extend(g, used, chosen):
            return True
        chosen.pop()
        used[v] = used[w] = False
    return False


def perfect_matching_through(g: PseudoGraph, e: int) -> PerfectMatching:
    """A perfect matching containing e; exists for every edge of a bridgeless
    cubic graph."""
    _check_matchable(g)
    u, v = g.endpoints(e)
    used = [False] * g.num_vertices
    used[u] = used[v] = True
    chosen = [e]
    if not _pm_extend(g, used, chosen):
        raise MatchingError(f"no perfect matching through edge {e}")
    covered = [w for eid in chosen for w in g.endpoints(eid)]
    assert sorted(covered) == list(g.vertices())
    return PerfectMatching(frozenset(chosen))


def _check_perfect_matching(g: PseudoGraph, m: PerfectMatching) -> None:
    covered = []
    for eid in m.edges:
        a, b = g.endpoints(eid)
        if a == b:
            raise ValueError("a loop cannot belong to a matching")
        covered.extend((a, b))
    if sorted(covered) != list(g.vertices()):
        raise ValueError("not a perfect matching of the graph")


def complementary_two_factor(g: PseudoGraph, m: PerfectMatching) -> List[FactorCycle]:
    """Cycle decomposition of the non-matching edges of a cubic graph.

    Each cycle starts at its lowest edge id, traversed toward that edge's
    lower endpoint; cycles are listed by ascending seed id.
    """
    _check_perfect_matching(g, m)
    factor = [e for e in g.edge_ids() if e not in m.edges]
    unused = set(factor)
    cycles: List[FactorCycle] = []
    for seed in factor:
        if seed not in unused:
            continue
        a, b = g.endpoints(seed)
        start, cur = max(a, b), min(a, b)
        vertices = [start]
        edges = [seed]
        unused.discard(seed)
        prev = seed
        while cur != start:
            vertices.append(cur)
            nxt = next(
                e
                for e in sorted(set(g.incident(cur)))
                if e in unused and e != prev
            )
            edges.append(nxt)
            unused.discard(nxt)
            prev = nxt
            cur = g.other_endpoint(nxt, cur)
        cycles.append(FactorCycle(tuple(vertices), tuple(edges)))
    assert sum(len(c) for c in cycles) == len(factor)
    return cycles


def contract_two_factor(g: PseudoGraph, m: PerfectMatching) -> TwoFactorLift:
    """Contract the complementary 2-factor; one vertex remains per cycle."""
    cycles = complementary_two_factor(g, m)
    factor = [e for e in g.edge_ids() if e not in m.edges]
    h, edge_map, vertex_map = contract_edge_set(g, factor)
    assert h.num_vertices == len(cycles)
    vertex_to_cycle: Dict[int, int] = {}
    for idx, cyc in enumerate(cycles):
        for v in cyc.vertices:
            vertex_to_cycle[v] = idx
    # Contraction must collapse each cycle to a single vertex.
    for idx, cyc in enumerate(cycles):
        assert len({vertex_map[v] for v in cyc.vertices}) == 1
    return TwoFactorLift(g, h, edge_map, cycles, vertex_to_cycle)


def lift_flow(
    lift: TwoFactorLift,
    theta: GroupFlow,
    x0: Union[int, Mapping[int, int]] = 4,
) -> GroupFlow:
    """Extend a Z_2^2 flow on the contracted graph to a Z_2^3 flow of g.

    Matching edges keep their theta value (high bit 0); each cycle is seeded
    with x0 (high bit must be 1) on its lowest edge and propagated by
    conservation, so cycle values keep the high bit and never collide with
    matching values.
    """
    if theta.k != 2:
        raise ValueError("the contracted flow must be over Z_2^2")
    check = verify_flow(theta)
    if not (check.conserving and check.nowhere_zero):
        raise ValueError("the contracted flow must be a nowhere-zero flow")

    def seed(idx: int) -> int:
        val = x0 if isinstance(x0, int) else x0.get(idx, 4)
        if not 0 <= val < 8 or not val & 4:
            raise ValueError("cycle seeds must have their high bit set")
        return val

    g = lift.g
    values: Dict[int, int] = {}
    match_at: Dict[int, int] = {}
    for eid in lift.edge_map:
        for w in g.endpoints(eid):
            match_at[w] = eid
        values[eid] = theta.values[lift.edge_map[eid]]
    for idx, cyc in enumerate(lift.cycles):
        values[cyc.edges[0]] = seed(idx)
        for i in range(1, len(cyc)):
            shared = cyc.vertices[i]
            values[cyc.edges[i]] = values[cyc.edges[i - 1]] ^ values[match_at[shared]]
        closing = values[cyc.edges[-1]] ^ values[match_at[cyc.vertices[0]]]
        assert closing == values[cyc.edges[0]]
    flow = GroupFlow(g, 3, values)
    out = verify_flow(flow)
    assert out.conserving and out.nowhere_zero
    return flow
