import json

import pytest

from u6n_ncg.graphs import (
    Graph,
    export_graph,
    find_induced,
    is_complete_multipartite,
    is_k_regular,
    non_commuting_graph,
    to_dot,
    to_json,
)
from u6n_ncg.groups import group_from_table, omega_partition, u6n_group

TRIANGLE = Graph.from_edges(["x", "y", "z"], [(0, 1), (1, 2), (0, 2)])
PATH4 = Graph.from_edges(["p0", "p1", "p2", "p3"], [(0, 1), (1, 2), (2, 3)])

N1_DOT = """graph G {
  0 [label="b"];
  1 [label="b^2"];
  2 [label="a"];
  3 [label="ab"];
  4 [label="ab^2"];
  0 -- 2;
  0 -- 3;
  0 -- 4;
  1 -- 2;
  1 -- 3;
  1 -- 4;
  2 -- 3;
  2 -- 4;
  3 -- 4;
}"""


def ncg(n):
    return non_commuting_graph(u6n_group(n))


def vid(graph, label):
    return graph.labels.index(label)


class TestConstruction:
    def test_n1_vertices_and_edges(self):
        graph = ncg(1)
        assert graph.vertex_count == 5
        assert graph.edge_count() == 9
        assert graph.labels == ("b", "b^2", "a", "ab", "ab^2")

    def test_n2_vertices_and_edges(self):
        graph = ncg(2)
        assert graph.vertex_count == 10
        assert graph.edge_count() == 36

    @pytest.mark.parametrize("n", range(1, 7))
    def test_edge_count_formula(self, n):
        assert ncg(n).edge_count() == 9 * n * n

    def test_abelian_group_rejected(self):
        c3 = group_from_table(["e", "g", "g2"], [[0, 1, 2], [1, 2, 0], [2, 0, 1]])
        with pytest.raises(ValueError, match="abelian"):
            non_commuting_graph(c3)

    def test_validation_rejects_loops_and_asymmetry(self):
        with pytest.raises(ValueError, match="loop"):
            Graph(labels=("u",), adj=(1,))
        with pytest.raises(ValueError, match="asymmetric"):
            Graph(labels=("u", "v"), adj=(2, 0))
        with pytest.raises(ValueError, match="unique"):
            Graph.from_edges(["u", "u"], [])


class TestDegrees:
    def test_class_degrees_n2(self):
        graph = ncg(2)
        assert graph.degree(vid(graph, "a")) == 8
        assert graph.degree(vid(graph, "b")) == 6

    def test_isolated_vertex(self):
        graph = Graph.from_edges(["u", "v", "w"], [(0, 1)])
        assert graph.degree(2) == 0

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            TRIANGLE.degree(3)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_degree_is_order_minus_centralizer(self, n):
        g = u6n_group(n)
        graph = non_commuting_graph(g)
        non_central = g.non_central()
        for v, x in enumerate(non_central):
            assert graph.degree(v) == g.order - len(g.centralizer(x))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_degree_sum_is_twice_edges(self, n):
        graph = ncg(n)
        total = sum(graph.degree(v) for v in range(graph.vertex_count))
        assert total == 2 * graph.edge_count()


class TestInducedSubgraph:
    def test_full_subset_is_identity(self):
        graph = ncg(1)
        sub = graph.induced_subgraph(range(5))
        assert sub == graph

    def test_empty_subset(self):
        sub = TRIANGLE.induced_subgraph([])
        assert sub.vertex_count == 0 and sub.edge_count() == 0

    def test_commuting_pair_has_no_edge(self):
        graph = ncg(1)
        sub = graph.induced_subgraph([vid(graph, "b"), vid(graph, "b^2")])
        assert sub.vertex_count == 2
        assert sub.edge_count() == 0

    def test_invalid_vertex(self):
        with pytest.raises(IndexError):
            TRIANGLE.induced_subgraph([0, 5])


class TestCompleteMultipartite:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_witness_matches_omega_classes(self, n):
        g = u6n_group(n)
        graph = non_commuting_graph(g)
        witness = is_complete_multipartite(graph)
        assert witness is not None
        assert witness.sizes() == tuple(sorted([n, n, n, 2 * n]))
        witness_labels = {
            frozenset(graph.labels[v] for v in c) for c in witness.classes
        }
        omega_labels = {
            frozenset(g.labels[x] for x in c) for c in omega_partition(g).classes()
        }
        assert witness_labels == omega_labels

    def test_triangle_is_k111(self):
        witness = is_complete_multipartite(TRIANGLE)
        assert witness is not None and witness.sizes() == (1, 1, 1)

    def test_path4_is_not_multipartite(self):
        assert is_complete_multipartite(PATH4) is None

    def test_witness_certificate_holds(self):
        graph = ncg(2)
        witness = is_complete_multipartite(graph)
        for cls in witness.classes:
            for u in cls:
                for v in cls:
                    assert u == v or not graph.has_edge(u, v)
        classes = witness.classes
        for i, ci in enumerate(classes):
            for cj in classes[i + 1 :]:
                for u in ci:
                    for v in cj:
                        assert graph.has_edge(u, v)


class TestFindInduced:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_no_induced_c5(self, n):
        assert find_induced(ncg(n), "cycle_5") is None

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_no_induced_p4(self, n):
        assert find_induced(ncg(n), "path_4") is None

    def test_p3_witness_exists_n1(self):
        graph = ncg(1)
        combo = find_induced(graph, "path_3")
        assert combo is not None
        sub = graph.induced_subgraph(combo)
        degrees = sorted(sub.degree(v) for v in range(3))
        assert degrees == [1, 1, 2]

    def test_triangle_contains_c3(self):
        assert find_induced(TRIANGLE, "cycle_3") == (0, 1, 2)

    def test_c5_found_in_c5(self):
        c5 = Graph.from_edges(
            ["0", "1", "2", "3", "4"], [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
        )
        assert find_induced(c5, "cycle_5") == (0, 1, 2, 3, 4)

    def test_pattern_cap(self):
        with pytest.raises(ValueError, match="cap"):
            find_induced(TRIANGLE, "path_9")

    def test_bad_pattern(self):
        with pytest.raises(ValueError):
            find_induced(TRIANGLE, "star_3")
        with pytest.raises(ValueError):
            find_induced(TRIANGLE, "cycle_2")


class TestRegularity:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_omega123_is_2n_regular(self, n):
        g = u6n_group(n)
        graph = non_commuting_graph(g)
        omega = omega_partition(g)
        non_central = g.non_central()
        pos = {x: i for i, x in enumerate(non_central)}
        keep = sorted(pos[x] for x in omega.omega1 | omega.omega2 | omega.omega3)
        assert is_k_regular(graph.induced_subgraph(keep)) == 2 * n

    @pytest.mark.parametrize("n", range(1, 7))
    def test_full_graph_not_regular(self, n):
        assert is_k_regular(ncg(n)) is None

    def test_single_vertex(self):
        assert is_k_regular(Graph.from_edges(["u"], [])) == 0


class TestExport:
    def test_dot_golden_n1(self):
        assert to_dot(ncg(1)) == N1_DOT

    def test_dot_triangle_edge_lines(self):
        lines = to_dot(TRIANGLE).splitlines()
        assert sum("--" in line for line in lines) == 3

    def test_json_empty_graph(self):
        empty = Graph.from_edges([], [])
        assert to_json(empty) == '{"vertices": [], "edges": []}'

    def test_json_n1_structure(self):
        data = json.loads(to_json(ncg(1)))
        assert [v["label"] for v in data["vertices"]] == ["b", "b^2", "a", "ab", "ab^2"]
        assert len(data["edges"]) == 9
        assert data["edges"] == sorted([sorted(e) for e in data["edges"]])

    def test_export_dispatch(self):
        assert export_graph(TRIANGLE, "dot") == to_dot(TRIANGLE)
        assert export_graph(TRIANGLE, "json") == to_json(TRIANGLE)
        with pytest.raises(ValueError, match="format"):
            export_graph(TRIANGLE, "gml")

    def test_edges_lexicographic(self):
        graph = ncg(2)
        assert list(graph.edges()) == sorted(graph.edges())
