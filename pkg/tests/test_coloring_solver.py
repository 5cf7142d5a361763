"""Coloring semantics, the verifier, flow conversion, and the exact solver."""

import itertools

import pytest

from normal7.coloring_solver import (
    EdgeColoring,
    EdgeStatus,
    ImproperColoringError,
    color_set,
    coloring_from_flow,
    edge_status,
    enumerate_normal_colorings,
    exact_chi_n,
    find_normal_coloring,
    is_normal,
    is_three_edge_colorable,
)
from normal7.flows_trees import GroupFlow, nz_z23_flow
from normal7.graph_core import PseudoGraph

from tests.corpora import k4, k33, petersen, prism, theta_graph
from tests.test_flows_trees import cycle_space_flows


def oracle_is_normal(g, colors, exempt=()):
    """Independent re-statement of the definition, sharing no solver code."""
    for v in g.vertices():
        cs = [colors[e] for e in set(g.incident(v))]
        if len(cs) != len(set(cs)):
            return False
    for e, u, v in g.edges():
        if e in exempt:
            continue
        around = set(g.incident(u)) | set(g.incident(v))
        if len({colors[x] for x in around}) not in (3, 5):
            return False
    return True


def brute_chi(g, k_max):
    """Exhaustive oracle over all k^m colorings, smallest palette first."""
    ids = g.edge_ids()
    for k in range(0, k_max + 1):
        for combo in itertools.product(range(1, k + 1), repeat=len(ids)):
            if oracle_is_normal(g, dict(zip(ids, combo))):
                return k
        if not ids:
            return 0
    return None


def spider():
    # A center edge with two cherries: vertices 0-1 carry leaves 2,3 and 4,5.
    return PseudoGraph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])


def cycle(n):
    return PseudoGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return PseudoGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


class TestColorSet:
    def test_cubic_vertex_sees_three(self):
        g = k4()
        c = EdgeColoring(g, 7, {0: 1, 1: 2, 2: 3, 3: 4, 4: 5, 5: 6})
        for v in g.vertices():
            assert len(color_set(c, v)) == 3

    def test_pendant_vertex_singleton(self):
        g = spider()
        c = EdgeColoring(g, 5, {0: 1, 1: 2, 2: 3, 3: 4, 4: 5})
        assert color_set(c, 2) == {2}

    def test_parallel_pair_with_third(self):
        g = PseudoGraph.from_edges(3, [(0, 1), (0, 1), (0, 2)])
        c = EdgeColoring(g, 3, {0: 1, 1: 2, 2: 3})
        assert color_set(c, 0) == {1, 2, 3}

    def test_uncolored_incident_edge(self):
        g = k4()
        c = EdgeColoring(g, 7, {0: 1})
        with pytest.raises(ValueError):
            color_set(c, 0)


class TestEdgeStatus:
    def test_k4_any_proper_3_coloring_all_poor(self):
        g = k4()
        ids = g.edge_ids()
        count = 0
        for combo in itertools.product((1, 2, 3), repeat=6):
            colors = dict(zip(ids, combo))
            if not all(
                len({colors[e] for e in set(g.incident(v))}) == 3
                for v in g.vertices()
            ):
                continue
            count += 1
            c = EdgeColoring(g, 3, colors)
            assert all(edge_status(c, e) == EdgeStatus.POOR for e in ids)
        assert count == 6  # one factorization times 3! palette orders

    def test_five_distinct_is_rich(self):
        g = spider()
        c = EdgeColoring(g, 5, {0: 1, 1: 2, 2: 3, 3: 4, 4: 5})
        assert edge_status(c, 0) == EdgeStatus.RICH

    def test_union_four_is_invalid(self):
        g = spider()
        c = EdgeColoring(g, 4, {0: 1, 1: 2, 2: 3, 3: 2, 4: 4})
        assert edge_status(c, 0) == EdgeStatus.INVALID

    def test_pendant_edge_at_cubic_vertex_poor(self):
        g = spider()
        c = EdgeColoring(g, 5, {0: 1, 1: 2, 2: 3, 3: 4, 4: 5})
        assert edge_status(c, 1) == EdgeStatus.POOR


class TestIsNormal:
    def test_petersen_identity_coloring_all_rich(self):
        g = petersen()
        c = EdgeColoring(g, 15, {e: e + 1 for e in g.edge_ids()})
        ok, report = is_normal(c)
        assert ok
        assert all(s == EdgeStatus.RICH for s in report.values())

    def test_k33_proper_3_coloring_all_poor(self):
        g = k33()
        colors = {e: ((u + v) % 3) + 1 for e, u, v in g.edges()}
        c = EdgeColoring(g, 3, colors)
        ok, report = is_normal(c)
        assert ok
        assert all(s == EdgeStatus.POOR for s in report.values())

    def test_improper_raises(self):
        g = k4()
        c = EdgeColoring(g, 7, {e: 1 for e in g.edge_ids()})
        with pytest.raises(ImproperColoringError):
            is_normal(c)

    def test_proper_but_not_normal(self):
        c = EdgeColoring(cycle(4), 2, {0: 1, 1: 2, 2: 1, 3: 2})
        ok, report = is_normal(c)
        assert not ok
        assert all(s == EdgeStatus.INVALID for s in report.values())

    def test_exempt_edges_skipped(self):
        g = cycle(4)
        colors = {0: 1, 1: 2, 2: 1, 3: 2}
        assert not is_normal(EdgeColoring(g, 2, colors, frozenset({0})))[0]
        assert is_normal(EdgeColoring(g, 2, colors, frozenset({0, 1, 2, 3})))[0]

    def test_uncolored_edge_raises(self):
        g = k4()
        with pytest.raises(ValueError):
            is_normal(EdgeColoring(g, 7, {0: 1}))

    def test_out_of_palette_raises(self):
        g = cycle(4)
        with pytest.raises(ValueError):
            is_normal(EdgeColoring(g, 2, {0: 1, 1: 2, 2: 1, 3: 3}))

    def test_loop_raises(self):
        g = PseudoGraph.from_edges(2, [(0, 0), (0, 1), (1, 1)])
        with pytest.raises(ImproperColoringError):
            is_normal(EdgeColoring(g, 3, {0: 1, 1: 2, 2: 3}))

    def test_matches_oracle_on_random_colorings(self):
        import random

        rng = random.Random(7)
        g = prism()
        ids = g.edge_ids()
        for _ in range(300):
            colors = {e: rng.randint(1, 5) for e in ids}
            c = EdgeColoring(g, 5, colors)
            try:
                got = is_normal(c)[0]
            except ImproperColoringError:
                got = None
            want = oracle_is_normal(g, colors)
            if got is None:
                assert not want
            else:
                assert got == want


class TestColoringFromFlow:
    def test_theta_flow_all_poor(self):
        g = theta_graph()
        c = coloring_from_flow(GroupFlow(g, 3, {0: 1, 1: 2, 2: 3}))
        assert c.k == 7
        ok, report = is_normal(c)
        assert ok
        assert all(s == EdgeStatus.POOR for s in report.values())

    def test_petersen_flow_coloring_normal(self):
        g = petersen()
        c = coloring_from_flow(nz_z23_flow(g))
        assert is_normal(c)[0]

    def test_k4_exhaustive_over_all_flows(self):
        g = k4()
        for values in cycle_space_flows(g, 3):
            if any(v == 0 for v in values.values()):
                continue
            c = coloring_from_flow(GroupFlow(g, 3, values))
            assert is_normal(c)[0]

    def test_zero_value_rejected(self):
        g = theta_graph()
        with pytest.raises(ValueError):
            coloring_from_flow(GroupFlow(g, 3, {0: 0, 1: 1, 2: 1}))

    def test_wrong_group_rejected(self):
        g = theta_graph()
        with pytest.raises(ValueError):
            coloring_from_flow(GroupFlow(g, 2, {0: 1, 1: 2, 2: 3}))

    def test_loop_rejected(self):
        g = PseudoGraph.from_edges(1, [(0, 0)])
        with pytest.raises(ValueError):
            coloring_from_flow(GroupFlow(g, 3, {0: 1}))

    def test_degree_four_rejected(self):
        g = PseudoGraph.from_edges(2, [(0, 1)] * 4)
        with pytest.raises(ValueError):
            coloring_from_flow(GroupFlow(g, 3, {0: 1, 1: 1, 2: 1, 3: 1}))


class TestSolverAgainstBruteForce:
    @pytest.mark.parametrize(
        "builder,expected",
        [
            (k4, 3),
            (theta_graph, 3),
            (lambda: cycle(4), 4),
            (lambda: cycle(5), 5),
            (prism, 3),
            (lambda: path(3), None),
            (lambda: PseudoGraph.from_edges(2, [(0, 1)]), None),
            (lambda: PseudoGraph.from_edges(3, []), 0),
        ],
    )
    def test_small_graphs(self, builder, expected):
        g = builder()
        assert brute_chi(g, 5) == expected
        res = exact_chi_n(g, 5)
        assert res.chi == expected
        assert not res.timed_out
        if expected is not None and g.num_edges:
            ok, _ = is_normal(res.witness)
            assert ok and oracle_is_normal(g, res.witness.colors)

    def test_k33_chi_three(self):
        g = k33()
        assert brute_chi(g, 3) == 3
        res = exact_chi_n(g, 7)
        assert res.chi == 3 and not res.timed_out

    def test_petersen_chi_five(self):
        res = exact_chi_n(petersen(), 7)
        assert res.chi == 5
        assert oracle_is_normal(petersen(), res.witness.colors)

    def test_monotone_in_palette(self):
        for builder in (k4, k33, prism):
            g = builder()
            base = exact_chi_n(g, 7).chi
            for k in range(base, 8):
                assert find_normal_coloring(g, k).chi == k

    def test_budget_times_out(self):
        res = find_normal_coloring(petersen(), 4, budget=50)
        assert res.timed_out and res.chi is None
        assert res.nodes_explored == 50

    def test_exact_chi_inconclusive_on_timeout(self):
        res = exact_chi_n(petersen(), 7, budget=50)
        assert res.timed_out and res.chi is None

    def test_deterministic(self):
        a = exact_chi_n(petersen(), 5)
        b = exact_chi_n(petersen(), 5)
        assert a.nodes_explored == b.nodes_explored
        assert a.witness.colors == b.witness.colors

    def test_loop_rejected(self):
        g = PseudoGraph.from_edges(1, [(0, 0)])
        with pytest.raises(ValueError):
            find_normal_coloring(g, 3)

    def test_degree_four_rejected(self):
        g = PseudoGraph.from_edges(5, [(0, i) for i in range(1, 5)])
        with pytest.raises(ValueError):
            find_normal_coloring(g, 3)


class TestEnumeration:
    def test_k4_one_class_of_normal_3_colorings(self):
        g = k4()
        res = enumerate_normal_colorings(g, 3)
        assert res.count == 1 and not res.timed_out and not res.aborted
        ids = g.edge_ids()
        brute = sum(
            oracle_is_normal(g, dict(zip(ids, combo)))
            for combo in itertools.product((1, 2, 3), repeat=6)
        )
        assert brute == res.count * 6  # orbits under the 3! palette symmetry

    def test_cycle5_class_count_matches_brute(self):
        g = cycle(5)
        res = enumerate_normal_colorings(g, 5)
        ids = g.edge_ids()
        brute = sum(
            oracle_is_normal(g, dict(zip(ids, combo)))
            for combo in itertools.product((1, 2, 3, 4, 5), repeat=5)
        )
        # Every normal coloring of C5 uses exactly 5 colors, orbits are free.
        assert brute == res.count * 120

    def test_callback_can_abort(self):
        seen = []

        def cb(coloring):
            seen.append(dict(coloring.colors))
            return False

        res = enumerate_normal_colorings(k4(), 3, cb)
        assert res.aborted and res.count == 1 and len(seen) == 1

    def test_every_enumerated_coloring_is_normal(self):
        g = k33()

        def check(coloring):
            ok, _ = is_normal(coloring)
            assert ok
            return True

        res = enumerate_normal_colorings(g, 3, check)
        assert res.count >= 1 and not res.aborted


class TestThreeEdgeColorable:
    def test_known_values(self):
        assert is_three_edge_colorable(k4())
        assert is_three_edge_colorable(k33())
        assert not is_three_edge_colorable(petersen())

    def test_non_cubic_rejected(self):
        with pytest.raises(ValueError):
            is_three_edge_colorable(cycle(4))
