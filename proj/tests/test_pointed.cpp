#include <doctest.h>

#include <random>

#include "csf/chromatic.hpp"
#include "csf/pointed.hpp"

using namespace csf;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }

ZPoly z_shift(const ZPoly& x, int s) {
    ZPoly out(x.basis());
    for (const auto& [k, sym] : x.terms()) out.add(k + s, sym);
    return out;
}
} // namespace

TEST_CASE("pointed function of a single edge") {
    // P = p_1 - z: S = {} gives p_1, S = {e} gives -z.
    ZPoly p = pointed_P(RootedGraph(Graph::path(2), 0));
    ZPoly expect(Basis::P);
    expect.add(0, P({1}), 1);
    expect.add(1, Partition(), -1);
    CHECK(p == expect);
}

TEST_CASE("pointed function of the 5-vertex fork (frozen from a hand check)") {
    Graph fork = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
    RootedGraph rg(fork, 1);
    ZPoly expect(Basis::P);
    expect.add(0, P({1, 1, 1, 1}), 1);
    expect.add(0, P({2, 1, 1}), -2);
    expect.add(0, P({3, 1}), 1);
    expect.add(1, P({1, 1, 1}), -2);
    expect.add(1, P({2, 1}), 2);
    expect.add(1, P({3}), -1);
    expect.add(2, P({1, 1}), 3);
    expect.add(3, P({1}), -3);
    expect.add(4, Partition(), 1);
    CHECK(pointed_P(rg) == expect);
}

TEST_CASE("phi and psi are inverse ring maps linking P and X_0") {
    for (const Graph& g : {Graph::path(4), Graph::complete(4)}) {
        for (int r = 0; r < 2; ++r) {
            RootedGraph rg(g, r);
            ZPoly zp = z_shift(pointed_P(rg), 1);
            ZPoly x0 = powersum_X0_to_m(powersum_X0(rg));
            CHECK(phi_transform(zp).converted(Basis::M) == x0);
            CHECK(psi_transform(x0).converted(Basis::M) == zp.converted(Basis::M));
            CHECK(psi_transform(phi_transform(zp)) == zp);
        }
    }
}

TEST_CASE("f(H): involution fixed points equal the signed sum") {
    auto f = [](const Graph& g) { return internal_spanning_trees(g); };
    CHECK(f(Graph::complete(3)) == std::pair<Integer, Integer>{2, 2});
    Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(f(c4) == std::pair<Integer, Integer>{3, 3});
    CHECK(f(Graph::path(4)) == std::pair<Integer, Integer>{1, 1}); // trees: f = 1

    // The count is independent of the edge processing order.
    Graph k4 = Graph::complete(4);
    auto base = internal_spanning_trees(k4);
    CHECK(base.first == base.second);
    std::vector<Edge> order = k4.edges();
    std::mt19937 rng(7);
    for (int t = 0; t < 10; ++t) {
        std::shuffle(order.begin(), order.end(), rng);
        CHECK(internal_spanning_trees(k4, order) == base);
    }
}

TEST_CASE("coefficient of (-z)^k in P as an f(H)-weighted sum") {
    Graph paw = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    for (int r = 0; r < 4; ++r)
        for (int k = 0; k < 4; ++k)
            CHECK(ans_paw_check(RootedGraph(paw, r), k));
}

TEST_CASE("U polynomial of the 3-vertex path") {
    UWPoly expect;
    expect.add(P({1, 1, 1}), 0, UniPoly::constant(1));
    expect.add(P({2, 1}), 0, UniPoly::constant(2));
    expect.add(P({3}), 0, UniPoly::constant(1));
    CHECK(u_poly(Graph::path(3)) == expect);
}

TEST_CASE("W polynomial of the weighted 3-vertex path (3,1,1)") {
    WeightedGraph wg;
    wg.n = 3;
    wg.edges = {{0, 1}, {1, 2}};
    wg.weights = {3, 1, 1};
    UWPoly expect;
    expect.add(P({3, 1, 1}), 0, UniPoly::constant(1));
    expect.add(P({3, 2}), 0, UniPoly::constant(1));
    expect.add(P({4, 1}), 0, UniPoly::constant(1));
    expect.add(P({5}), 0, UniPoly::constant(1));
    CHECK(w_poly(wg) == expect);
}

TEST_CASE("W at unit weights equals U, including cyclic graphs") {
    for (const Graph& g : {Graph::path(3), Graph::complete(3), Graph::complete(4),
                           Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})})
        CHECK(w_poly(WeightedGraph::unit_weights(g)) == u_poly(g));
}

TEST_CASE("W handles loops by powers of y") {
    WeightedGraph wg;
    wg.n = 1;
    wg.edges = {{0, 0}, {0, 0}};
    wg.weights = {2};
    UWPoly expect;
    expect.add(P({2}), 0, UniPoly::monomial(1, 2)); // x_2 y^2
    CHECK(w_poly(wg) == expect);
}

TEST_CASE("rooted U of the path rooted at the middle") {
    UWPoly expect;
    expect.add(P({1, 1}), 1, UniPoly::constant(1));
    expect.add(P({1}), 2, UniPoly::constant(2));
    expect.add(Partition(), 3, UniPoly::constant(1));
    CHECK(rooted_u(RootedGraph(Graph::path(3), 1)) == expect);
}

TEST_CASE("X and P are recovered from U and rooted U") {
    for (const Graph& g : {Graph::path(4), Graph::complete(4)}) {
        CHECK(X_from_U(u_poly(g)) == powersum_X(g));
        for (int r = 0; r < g.n(); ++r) {
            RootedGraph rg(g, r);
            CHECK(P_from_rootedU(rooted_u(rg), g.n()) == pointed_P(rg));
        }
    }
}

TEST_CASE("uwpoly json is deterministic") {
    std::string a = uwpoly_json(u_poly(Graph::path(3)));
    std::string b = uwpoly_json(u_poly(Graph::path(3)));
    CHECK(a == b);
    CHECK(a.find("\"parts\":[2,1]") != std::string::npos);
}
