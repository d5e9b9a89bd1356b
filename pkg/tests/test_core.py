"""Graph container, walks, and the file format."""

import pytest

from pcgraph import (
    EdgeColoredGraph,
    GraphError,
    InvalidWalkError,
    ParseError,
    Walk,
    bridges,
    build_graph,
    connected_components,
    is_pc_walk,
    monochromatic_vertices,
    parse_graph,
    serialize_graph,
)
from pcgraph.core import ParallelEdgeWarning


def g_k3k3():
    # two triangles sharing vertex 3, one color flipped between them
    return build_graph(
        5,
        [(1, 2, 2), (1, 3, 1), (2, 3, 1), (4, 5, 1), (4, 3, 2), (5, 3, 2)],
        c=2,
    )


class TestBuild:
    def test_basic_counts(self):
        G = g_k3k3()
        assert (G.n, G.m, G.c) == (5, 6, 2)
        assert G.vertices == (1, 2, 3, 4, 5)
        assert [e.eid for e in G.edges] == [0, 1, 2, 3, 4, 5]

    def test_color_defaults_to_max(self):
        G = build_graph(2, [(1, 2, 3)])
        assert G.c == 3

    def test_bad_color_rejected(self):
        with pytest.raises(GraphError):
            build_graph(2, [(1, 2, 0)])
        with pytest.raises(GraphError):
            build_graph(2, [(1, 2, 3)], c=2)

    def test_bad_endpoints_rejected(self):
        with pytest.raises(GraphError):
            build_graph(2, [(1, 3, 1)])
        with pytest.raises(GraphError):
            build_graph(2, [(1, 1, 1)])

    def test_parallel_same_color_warns(self):
        with pytest.warns(ParallelEdgeWarning):
            G = build_graph(2, [(1, 2, 1), (1, 2, 1)])
        assert G.m == 2

    def test_parallel_distinct_colors_silent(self):
        G = build_graph(2, [(1, 2, 1), (1, 2, 2)])
        assert G.m == 2
        assert G.colors_at(1) == frozenset({1, 2})

    def test_queries(self):
        G = g_k3k3()
        assert G.degree(3) == 4
        assert G.colors_at(4) == frozenset({1, 2})
        assert G.has_edge_between(1, 2)
        assert not G.has_edge_between(1, 4)
        e = G.edge(0)
        assert (e.u, e.v, e.color) == (1, 2, 2)
        assert e.other(1) == 2
        assert e.joins(2, 1)
        assert not e.joins(1, 3)


class TestSubgraphs:
    def test_induced_keeps_ids(self):
        G = g_k3k3()
        H = G.induced([3, 4, 5])
        assert H.vertices == (3, 4, 5)
        assert sorted(e.eid for e in H.edges) == [3, 4, 5]
        # the edge objects are shared, ids included
        assert H.edge(4) == G.edge(4)

    def test_without_vertices(self):
        G = g_k3k3()
        H = G.without_vertices([3])
        assert H.vertices == (1, 2, 4, 5)
        assert sorted(e.eid for e in H.edges) == [0, 3]

    def test_without_edges(self):
        G = g_k3k3()
        H = G.without_edges([0, 5])
        assert H.n == 5
        assert sorted(e.eid for e in H.edges) == [1, 2, 3, 4]

    def test_components(self):
        G = g_k3k3()
        assert connected_components(G) == [[1, 2, 3, 4, 5]]
        H = G.without_vertices([3])
        assert connected_components(H) == [[1, 2], [4, 5]]
        assert connected_components(G, restrict=[1, 2, 4]) == [[1, 2], [4]]


class TestStructureScans:
    def test_bridges(self):
        G = build_graph(4, [(1, 2, 1), (2, 3, 1), (3, 1, 2), (3, 4, 1)])
        assert bridges(G) == frozenset({3})

    def test_bridges_restricted(self):
        G = build_graph(4, [(1, 2, 1), (2, 3, 1), (3, 1, 2), (3, 4, 1)])
        # inside the triangle alone every remaining edge stays non-bridge
        assert bridges(G, restrict=[1, 2, 3]) == frozenset()
        assert bridges(G, restrict=[2, 3, 4]) == frozenset({1, 3})

    def test_monochromatic_vertices(self):
        G = g_k3k3()
        assert monochromatic_vertices(G) == frozenset()
        H = build_graph(3, [(1, 2, 1), (2, 3, 2)])
        assert monochromatic_vertices(H) == frozenset({1, 3})


class TestWalk:
    def test_predicates(self):
        G = build_graph(4, [(1, 2, 1), (2, 3, 2), (3, 4, 1), (4, 1, 2)])
        w = Walk(vertices=(1, 2, 3, 4, 1), edges=(0, 1, 2, 3))
        assert w.closed
        assert w.is_trail()
        assert w.is_cycle()
        assert not w.is_path()
        p = Walk(vertices=(1, 2, 3), edges=(0, 1))
        assert p.is_path() and not p.closed

    def test_reverse_and_rotate(self):
        w = Walk(vertices=(1, 2, 3, 1), edges=(0, 1, 2))
        assert w.reverse().vertices == (1, 3, 2, 1)
        r = w.rotate(1)
        assert r.vertices == (2, 3, 1, 2)
        assert r.edges == (1, 2, 0)

    def test_rotate_requires_closed(self):
        with pytest.raises(InvalidWalkError):
            Walk(vertices=(1, 2), edges=(0,)).rotate(1)

    def test_validate_in(self):
        G = build_graph(3, [(1, 2, 1), (2, 3, 2)])
        Walk(vertices=(1, 2, 3), edges=(0, 1)).validate_in(G)
        with pytest.raises(InvalidWalkError):
            Walk(vertices=(1, 3), edges=(0,)).validate_in(G)
        with pytest.raises(InvalidWalkError):
            Walk(vertices=(1, 2, 3), edges=(0,)).validate_in(G)

    def test_is_pc_walk(self):
        G = build_graph(4, [(1, 2, 1), (2, 3, 2), (3, 4, 1), (4, 1, 2)])
        assert is_pc_walk(G, Walk(vertices=(1, 2, 3, 4, 1), edges=(0, 1, 2, 3)))
        # the wrap-around pair counts for closed walks
        H = build_graph(3, [(1, 2, 1), (2, 3, 2), (3, 1, 1)])
        w = Walk(vertices=(1, 2, 3, 1), edges=(0, 1, 2))
        assert not is_pc_walk(H, w)
        assert is_pc_walk(H, Walk(vertices=(1, 2, 3), edges=(0, 1)))


class TestFileFormat:
    def test_round_trip(self):
        G = g_k3k3()
        H = parse_graph(serialize_graph(G))
        assert H.vertices == G.vertices
        assert [(e.u, e.v, e.color) for e in H.edges] == [
            (e.u, e.v, e.color) for e in G.edges
        ]
        assert H.c == G.c

    def test_comments_and_blanks(self):
        text = "# corpus entry\n\np ecg 2 1 2\n# inline note\ne 1 2 2\n"
        G = parse_graph(text)
        assert (G.n, G.m, G.c) == (2, 1, 2)

    def test_parse_errors_carry_line_numbers(self):
        with pytest.raises(ParseError) as err:
            parse_graph("p ecg 2 1 2\ne 1 2\n")
        assert err.value.line == 2
        with pytest.raises(ParseError) as err:
            parse_graph("e 1 2 1\n")
        assert err.value.line == 1

    def test_header_mismatch(self):
        with pytest.raises(ParseError):
            parse_graph("p ecg 2 2 2\ne 1 2 1\n")
        with pytest.raises(ParseError):
            parse_graph("p ecg 2 1 1\ne 1 2 2\n")

    def test_serialize_needs_contiguous_ids(self):
        G = g_k3k3().without_vertices([2])
        with pytest.raises(GraphError):
            serialize_graph(G)

    def test_graph_is_hashable_and_frozen(self):
        G = g_k3k3()
        assert isinstance(G, EdgeColoredGraph)
        assert isinstance(hash(G), int)
        with pytest.raises(AttributeError):
            G.c = 3
