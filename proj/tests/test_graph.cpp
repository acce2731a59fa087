#include <doctest.h>

#include "csf/graph.hpp"

using namespace csf;

TEST_CASE("construction and structure queries") {
    Graph p4 = Graph::path(4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.has_edge(1, 2));
    CHECK(!p4.has_edge(0, 2));
    CHECK(is_tree(p4));
    CHECK(is_connected(p4));
    CHECK(is_bipartite(p4));
    CHECK(chromatic_number(p4) == 2);

    Graph k4 = Graph::complete(4);
    CHECK(k4.edge_count() == 6);
    CHECK(!is_bipartite(k4));
    CHECK(chromatic_number(k4) == 4);
    CHECK(!is_tree(k4));

    Graph two(2); // no edges
    CHECK(!is_connected(two));
    CHECK(chromatic_number(two) == 1);
}

TEST_CASE("components of spanning subgraphs") {
    Graph p3 = Graph::path(3); // edges (0,1), (1,2) in canonical order
    CHECK(components_partition(p3, {0b00}) == Partition({1, 1, 1}));
    CHECK(components_partition(p3, {0b01}) == Partition({2, 1}));
    CHECK(components_partition(p3, {0b11}) == Partition({3}));

    RootedGraph mid(p3, 1);
    auto [rs, rest] = rooted_split(mid, {0b01});
    CHECK(rs == 2);
    CHECK(rest == Partition({1}));
}

TEST_CASE("chromatic polynomials of standard graphs") {
    // chi(P3) = q(q-1)^2, chi(K3) = q(q-1)(q-2), chi(C4) = (q-1)^4 + (q-1).
    CHECK(chromatic_polynomial(Graph::path(3)) == UniPoly({0, 1, -2, 1}));
    CHECK(chromatic_polynomial(Graph::complete(3)) == UniPoly({0, 2, -3, 1}));
    Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(chromatic_polynomial(c4) == UniPoly({0, -3, 6, -4, 1}));
    CHECK(chromatic_polynomial(Graph(2)) == UniPoly({0, 0, 1}));
}

TEST_CASE("deletion and root contraction") {
    Graph p3 = Graph::path(3);
    RootedGraph end(p3, 0);
    RootedGraph del = delete_edge(end, Edge(0, 1));
    CHECK(del.graph().edge_count() == 1);
    CHECK(del.root() == 0);

    RootedGraph con = contract_root_edge(end, Edge(0, 1));
    CHECK(con.n() == 2);
    CHECK(con.graph().edge_count() == 1); // the contracted P3 is a single edge

    // Contracting one edge of a triangle merges the parallel pair.
    RootedGraph tri(Graph::complete(3), 0);
    RootedGraph tcon = contract_root_edge(tri, Edge(0, 1));
    CHECK(tcon.n() == 2);
    CHECK(tcon.graph().edge_count() == 1);
}

TEST_CASE("independent sets with and without a forced root") {
    Graph p4 = Graph::path(4);
    CHECK(independent_sets(p4, 2).size() == 3);         // {0,2},{0,3},{1,3}
    CHECK(independent_sets(p4, 2, 0).size() == 2);      // containing vertex 0
    CHECK(independent_sets(p4, 0).size() == 1);         // the empty set
    CHECK(independent_sets(Graph::complete(3), 2).empty());
}

TEST_CASE("connected spanning subsets") {
    // K3: all of E, plus the three 2-edge subsets.
    CHECK(connected_spanning_subsets(Graph::complete(3)).size() == 4);
    CHECK(connected_spanning_subsets(Graph::path(3)).size() == 1);
}

TEST_CASE("induced subgraph and vertex deletion") {
    Graph p4 = Graph::path(4);
    Graph sub = induced_subgraph(p4, 0b1011); // vertices 0,1,3
    CHECK(sub.n() == 3);
    CHECK(sub.has_edge(0, 1));
    CHECK(!sub.has_edge(1, 2)); // old edge (1,2) lost with vertex 2

    Graph rest = delete_vertices(p4, 0b0001);
    CHECK(rest.n() == 3);
    CHECK(rest == Graph::path(3));
}

TEST_CASE("text round trip") {
    Graph p3 = Graph::path(3);
    auto [g, r] = graph_from_text(graph_to_text(p3, 1));
    CHECK(g == p3);
    CHECK(r == 1);
    auto [g2, r2] = graph_from_text(graph_to_text(p3));
    CHECK(g2 == p3);
    CHECK(r2 == -1);
}

TEST_CASE("weighted graph validation") {
    WeightedGraph wg = WeightedGraph::unit_weights(Graph::path(3));
    CHECK(wg.n == 3);
    CHECK(wg.edges.size() == 2);
    wg.weights[1] = 0;
    CHECK_THROWS(wg.validate());
}
