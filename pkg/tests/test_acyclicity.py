"""Ordering verification, the level recognizers, and classify."""

import random

import pytest

from pcgraph import (
    CapacityError,
    ClassifyResult,
    Conflict,
    GraphError,
    Orientation,
    PrecheckFailure,
    build_graph,
    classify,
    count_cycle_monochromatic,
    procedure1_orient,
    recognize_type1,
    recognize_type2,
    recognize_type3,
    recognize_type4,
    recognize_type5,
    trail_deletion_fixpoint,
    verify_ordering,
)
from pcgraph import Walk, fixtures, oracle


def fx(name):
    return fixtures.fixture(name).graph


class TestVerifyOrdering:
    def test_level_bounds(self):
        G = fx("path-br")
        with pytest.raises(GraphError):
            verify_ordering(G, (1, 2, 3), 0)
        with pytest.raises(GraphError):
            verify_ordering(G, (1, 2, 3), 6)

    def test_permutation_checked(self):
        G = fx("path-br")
        with pytest.raises(GraphError):
            verify_ordering(G, (1, 2), 1)
        with pytest.raises(GraphError):
            verify_ordering(G, (1, 2, 2), 1)
        with pytest.raises(GraphError):
            verify_ordering(G, (1, 2, 9), 1)

    def test_levels_nest_on_path(self):
        # a blue-red path satisfies every level
        G = fx("path-br")
        for k in (1, 2, 3, 4, 5):
            assert verify_ordering(G, (1, 2, 3), k)

    def test_level1_splits_by_component(self):
        # vertex 3 sees blue into {1,2} and red into {4,5}; distinct
        # components, so the level-1 clause tolerates the mix
        G = fx("k3k3")
        assert verify_ordering(G, (3, 1, 2, 4, 5), 1)
        assert not verify_ordering(G, (3, 1, 2, 4, 5), 2)

    def test_level2_ignores_bridges(self):
        G = fx("ab-trail")
        ordering = recognize_type2(G)
        assert ordering is not None
        assert verify_ordering(G, ordering, 2)
        assert recognize_type3(G) is None

    def test_level3_all_forward_one_color(self):
        G = fx("triangle-2b1r")
        ordering = recognize_type3(G)
        assert ordering is not None
        assert verify_ordering(G, ordering, 3)
        assert recognize_type4(G) is None

    def test_level5_rejects_equal_in_out(self):
        # a one-colored triangle is level 4 but never level 5
        G = fx("allblue-k3")
        ordering = recognize_type4(G)
        assert ordering is not None
        assert verify_ordering(G, ordering, 4)
        assert not verify_ordering(G, ordering, 5)
        assert recognize_type5(G) is None


class TestRecognizersSmall:
    def test_k3k3_pins(self):
        G = fx("k3k3")
        assert recognize_type1(G) == (3, 1, 2, 4, 5)
        assert recognize_type2(G) is None

    def test_c4_alt_level0(self):
        G = fx("c4-alt")
        assert recognize_type1(G) is None

    def test_empty_and_single(self):
        E = build_graph(0, [])
        assert recognize_type1(E) == ()
        assert recognize_type5(E) == ()
        S = build_graph(1, [])
        assert recognize_type5(S) == (1,)

    def test_trail_deletion_fixpoint(self):
        # level >= 2 graphs dissolve completely
        alive_v, alive_e = trail_deletion_fixpoint(fx("ab-trail"))
        assert not alive_v and not alive_e
        # a graph with a closed trail leaves a core
        alive_v, alive_e = trail_deletion_fixpoint(fx("k3k3"))
        assert alive_v == {1, 2, 3, 4, 5}
        assert len(alive_e) == 6

    def test_every_returned_ordering_verifies(self, corpus_small):
        recs = {
            1: recognize_type1,
            2: recognize_type2,
            3: recognize_type3,
            4: recognize_type4,
            5: recognize_type5,
        }
        for G in corpus_small[:400]:
            for k, rec in recs.items():
                got = rec(G)
                if got is not None:
                    assert verify_ordering(G, got, k), (k, G.edges)


class TestType4Engines:
    def _random_graph(self, rng, n, m):
        edges = []
        seen = set()
        while len(edges) < m:
            u, v = rng.sample(range(1, n + 1), 2)
            color = rng.randint(1, 2)
            if (min(u, v), max(u, v), color) in seen:
                continue
            seen.add((min(u, v), max(u, v), color))
            edges.append((u, v, color))
        return build_graph(n, edges, c=2)

    def test_engines_agree_midsize(self):
        rng = random.Random(7)
        for _ in range(6):
            G = self._random_graph(rng, 10, 18)
            a = recognize_type4(G, engine="python")
            b = recognize_type4(G, engine="numpy")
            assert a == b
            if a is not None:
                assert verify_ordering(G, a, 4)

    def test_engines_agree_at_cutover(self):
        rng = random.Random(11)
        G = self._random_graph(rng, 17, 30)
        a = recognize_type4(G, engine="python")
        b = recognize_type4(G, engine="numpy")
        assert a == b

    def test_bound_enforced(self):
        G = self._random_graph(random.Random(3), 8, 10)
        with pytest.raises(CapacityError):
            recognize_type4(G, bound=7)

    def test_unknown_engine(self):
        G = fx("path-br")
        with pytest.raises(GraphError):
            recognize_type4(G, engine="fortran")


class TestProcedure:
    def test_monochromatic_triangle_conflict(self):
        G = fx("allblue-k3")
        res = procedure1_orient(G, 1, 1)
        assert isinstance(res, Conflict)
        assert res.vertex == 3
        assert res.kind == "in-out-same"
        assert res.edges == (1, 2)

    def test_two_block_cycle_orders(self):
        G = build_graph(4, [(1, 2, 1), (2, 3, 1), (3, 4, 2), (4, 1, 2)])
        assert recognize_type5(G) == (4, 1, 3, 2)

    def test_orientation_marks(self):
        G = fx("path-br")
        res = procedure1_orient(G, 1, 1)
        assert isinstance(res, Orientation)
        assert set(res.arcs) == {0, 1}
        # both edges leave vertex 1's side of the walk in a line
        for eid, (tail, head) in res.arcs.items():
            assert G.edge(eid).joins(tail, head)

    def test_precheck_failure(self):
        G = build_graph(4, [(1, 2, 1), (1, 3, 2), (1, 4, 3)], c=3)
        res = procedure1_orient(G, 2, 1)
        assert isinstance(res, PrecheckFailure)
        assert res.vertex == 1
        assert res.colors == frozenset({1, 2, 3})

    def test_disconnected_rejected(self):
        G = build_graph(4, [(1, 2, 1), (3, 4, 1)])
        with pytest.raises(GraphError):
            procedure1_orient(G, 1, 1)

    def test_unknown_start(self):
        G = fx("path-br")
        with pytest.raises(GraphError):
            procedure1_orient(G, 9, 1)

    def test_verdict_choice_invariance_sample(self, corpus_small):
        from pcgraph.acyclicity import _topological_order

        for G in corpus_small[:300]:
            verdicts = set()
            for x in G.vertices:
                for fc in (1, 2):
                    res = procedure1_orient(G, x, fc)
                    if isinstance(res, Orientation):
                        order = _topological_order(list(G.vertices), res.arcs.values())
                        verdicts.add(order is not None)
                    else:
                        verdicts.add(False)
            assert len(verdicts) == 1
            assert verdicts.pop() == (recognize_type5(G) is not None)


class TestType5Assembly:
    def test_isolated_vertices_go_last(self):
        G = build_graph(4, [(1, 3, 1)])
        ordering = recognize_type5(G)
        assert ordering is not None
        assert ordering[-2:] == (2, 4)

    def test_components_by_smallest_vertex(self):
        G = build_graph(6, [(2, 5, 1), (5, 6, 2), (1, 3, 1), (3, 4, 2)])
        ordering = recognize_type5(G)
        assert ordering is not None
        # the component holding vertex 1 comes out first
        assert set(ordering[:3]) == {1, 3, 4}
        assert verify_ordering(G, ordering, 5)


class TestCycleParity:
    def test_counts(self):
        G = fx("allblue-k3")
        cyc = Walk(vertices=(1, 2, 3, 1), edges=(0, 2, 1))
        assert count_cycle_monochromatic(G, cyc) == 3
        H = fx("c4-alt")
        alt = Walk(vertices=(1, 2, 3, 4, 1), edges=(0, 1, 2, 3))
        assert count_cycle_monochromatic(H, alt) == 0

    def test_rejects_non_cycles(self):
        from pcgraph import InvalidWalkError

        G = fx("path-br")
        with pytest.raises(InvalidWalkError):
            count_cycle_monochromatic(G, Walk(vertices=(1, 2, 3), edges=(0, 1)))


class TestClassify:
    LEVELS = {
        "c4-alt": 0,
        "k3k3": 1,
        "ab-trail": 2,
        "triangle-2b1r": 3,
        "allblue-k3": 4,
        "fig1-gadget": 4,
        "fig2-fragment": 3,
        "fig3": 3,
        "path-br": 5,
    }

    def test_fixture_levels(self):
        for name, want in self.LEVELS.items():
            res = classify(fx(name))
            assert res.level == want, name
            assert not res.type4_skipped

    def test_verdict_shape(self):
        res = classify(fx("triangle-2b1r"))
        assert res.verdicts == {1: True, 2: True, 3: True, 4: False, 5: False}
        assert set(res.orderings) == {1, 2, 3}

    def test_level0_shortcuts(self):
        res = classify(fx("c4-alt"))
        assert res.level == 0
        assert res.verdicts == {1: False, 2: False, 3: False, 4: False, 5: False}
        assert res.orderings == {}

    def test_skip_leaves_level_open(self):
        # a one-colored odd cycle sits at level 4, but with the level-4
        # search skipped the answer genuinely hangs: levels 1..3 hold
        # and level 5 fails on parity
        n = 27
        G = build_graph(n, [(i, i % n + 1, 1) for i in range(1, n + 1)], c=1)
        res = classify(G, type4_bound=10)
        assert res.type4_skipped
        assert res.level is None
        assert res.verdicts[3] is True
        assert res.verdicts[4] is None
        assert res.verdicts[5] is False

    def test_skip_backfills_from_level5(self):
        # blue-red path on 30 vertices is level 5; skipping the level-4
        # search must not dent the answer
        n = 30
        edges = [(i, i + 1, 1 + (i % 2)) for i in range(1, n)]
        G = build_graph(n, edges, c=2)
        res = classify(G, type4_bound=10)
        assert res.level == 5
        assert res.verdicts[4] is True
        assert res.verdicts[5] is True
        assert res.orderings[4] == res.orderings[5]

    def test_result_type(self):
        assert isinstance(classify(fx("path-br")), ClassifyResult)

    def test_matches_permutation_scan(self, corpus_small):
        rng = random.Random(5)
        sample = rng.sample(corpus_small, 120)
        for G in sample:
            res = classify(G)
            for k in (1, 2, 3, 4, 5):
                want = oracle.brute_recognize(G, k) is not None
                assert res.verdicts[k] == want, (G.edges, k)
