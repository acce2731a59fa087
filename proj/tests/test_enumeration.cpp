#include <doctest.h>

#include <numeric>
#include <random>

#include "csf/enumeration.hpp"

using namespace csf;

TEST_CASE("rooted tree counts match the known sequence") {
    const long expect[] = {1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842, 4766};
    for (int n = 1; n <= 12; ++n)
        CHECK(static_cast<long>(rooted_trees(n).size()) == expect[n - 1]);
}

TEST_CASE("free tree counts match the known sequence") {
    const long expect[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235};
    for (int n = 1; n <= 11; ++n)
        CHECK(static_cast<long>(free_trees(n).size()) == expect[n - 1]);
}

TEST_CASE("naive labeled-tree dedup agrees with the fast enumerators") {
    for (int n = 1; n <= 7; ++n) {
        CHECK(naive_rooted_tree_count(n) ==
              static_cast<long>(rooted_trees(n).size()));
        CHECK(naive_free_tree_count(n) == static_cast<long>(free_trees(n).size()));
    }
}

TEST_CASE("level sequences produce valid rooted trees") {
    for (const RootedTree& rt : rooted_trees(6)) {
        RootedGraph rg = rt.to_rooted_graph();
        CHECK(is_tree(rg.graph()));
        CHECK(rg.root() == 0);
    }
}

TEST_CASE("unlabeled graph counts") {
    const long all[] = {1, 2, 4, 11, 34, 156};
    const long conn[] = {1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        CHECK(static_cast<long>(small_graphs(n, false).size()) == all[n - 1]);
        CHECK(static_cast<long>(small_graphs(n, true).size()) == conn[n - 1]);
    }
}

TEST_CASE("poset counts and (3+1)-freeness") {
    const long expect[] = {1, 2, 5, 16, 63, 318};
    for (int n = 1; n <= 6; ++n)
        CHECK(static_cast<long>(posets(n).size()) == expect[n - 1]);

    // 3-chain plus an incomparable element is the forbidden pattern.
    Poset bad;
    bad.n = 4;
    auto link = [&](Poset& p, int i, int j) { p.rel |= uint64_t(1) << (i * p.n + j); };
    link(bad, 0, 1);
    link(bad, 1, 2);
    link(bad, 0, 2);
    CHECK(!is_31_free(bad));
    CHECK(is_31_free(delete_element(bad, 3)));

    Poset chain;
    chain.n = 4;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) link(chain, i, j);
    CHECK(is_31_free(chain));

    Poset anti;
    anti.n = 4; // antichain: incomparability graph is complete
    CHECK(is_31_free(anti));
    CHECK(incomparability_graph(anti) == Graph::complete(4));
    CHECK(incomparability_graph(chain).edge_count() == 0);
}

TEST_CASE("AHU isomorphism agrees with permutation search") {
    std::mt19937 rng(11);
    auto trees = rooted_trees(6);
    for (const RootedTree& rt : trees) {
        RootedGraph a = rt.to_rooted_graph();
        std::vector<int> perm(6);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph g2(6);
        for (const Edge& e : a.graph().edges()) g2.add_edge(perm[e.u], perm[e.v]);
        RootedGraph b(g2, perm[a.root()]);
        CHECK(rooted_iso(a, b));
        CHECK(rooted_iso_naive(a, b));
    }
    // Distinct canonical trees are pairwise non-isomorphic.
    for (size_t i = 0; i < trees.size(); ++i) {
        for (size_t j = i + 1; j < trees.size(); ++j) {
            RootedGraph a = trees[i].to_rooted_graph();
            RootedGraph b = trees[j].to_rooted_graph();
            CHECK(!rooted_iso(a, b));
            CHECK(!rooted_iso_naive(a, b));
        }
    }
}

TEST_CASE("centroids") {
    CHECK(tree_centroids(Graph::path(4)) == std::vector<int>{1, 2});
    CHECK(tree_centroids(Graph::path(5)) == std::vector<int>{2});
    Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(tree_centroids(star) == std::vector<int>{0});
}

TEST_CASE("free tree keys identify unrooted isomorphism classes") {
    // The two distinct 4-vertex trees: path and star.
    Graph p4 = Graph::path(4);
    Graph relabeled = Graph::from_edges(4, {{2, 0}, {0, 3}, {3, 1}});
    CHECK(free_tree_key(p4) == free_tree_key(relabeled));
    Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(free_tree_key(p4) != free_tree_key(star));
}
