#include <doctest.h>

#include "csf/enumeration.hpp"
#include "csf/special.hpp"

using namespace csf;

TEST_CASE("f_0 of small rooted trees") {
    // Single vertex: f_0 = q. Single edge rooted anywhere: f_0 = q(q + 2).
    CHECK(f0_tree_fast(RootedGraph(Graph(1), 0)) == UniPoly({0, 1}));
    CHECK(f0_tree_fast(RootedGraph(Graph::path(2), 0)) == UniPoly({0, 2, 1}));

    // 3-vertex path rooted at an endpoint: q^3 + 6q^2 + 2q.
    // (Direct count over colors {0,1,2,3} with values (q,q,1,1): the root is
    // fixed to color 0; enumerate the 9 proper colorings of the rest.)
    UniPoly f = f0_tree_fast(RootedGraph(Graph::path(3), 0));
    CHECK(f == UniPoly({0, 2, 6, 1}));

    // Rooted at the middle: f_0 = q(q + 2)^2.
    CHECK(f0_tree_fast(RootedGraph(Graph::path(3), 1)) == UniPoly({0, 4, 4, 1}));
}

TEST_CASE("fast univariate f_0 equals the specialization oracle") {
    for (int n = 1; n <= 7; ++n) {
        for (const RootedTree& rt : rooted_trees(n)) {
            RootedGraph rg = rt.to_rooted_graph();
            CHECK(f0_tree_fast(rg) == f_specialize(rg, FWhich::F0));
        }
    }
}

TEST_CASE("reversal identities on trees and cycles") {
    CHECK(x0det2_relations(RootedGraph(Graph::path(3), 0)).all());
    CHECK(x0det2_relations(RootedGraph(Graph::path(3), 1)).all());
    CHECK(x0det2_relations(RootedGraph(Graph::complete(3), 0)).all());
    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(x0det2_relations(RootedGraph(c5, 2)).all());
}

TEST_CASE("spec_kp coefficients match the a_j subset formula") {
    for (const Graph& g : {Graph::path(4), Graph::complete(4),
                           Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})}) {
        for (auto [k, p] : {std::pair{2, 3}, {1, 2}, {3, 2}}) {
            UniPoly f = spec_kp(g, k, p);
            for (int j = 0; j <= g.n(); ++j)
                CHECK(Rational(aj_formula(g, k, p, j)) == f.coeff(j));
        }
    }
}

TEST_CASE("x_2p coefficients match the disjoint-pair formula") {
    Graph paw = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    for (int r : {0, 3}) {
        RootedGraph rg(paw, r);
        for (int p : {2, 3}) {
            for (ColorMode m : {ColorMode::RootEquals, ColorMode::RootNotEquals}) {
                UniPoly f = x_2p(rg, p, m);
                for (int j = 0; j <= 4; ++j)
                    CHECK(Rational(aj2_formula(rg, p, j, m)) == f.coeff(j));
            }
        }
    }
}

TEST_CASE("Eisenstein criterion on textbook cases") {
    CHECK(eisenstein(UniPoly({2, 0, 1}), 2).satisfied);   // q^2 + 2
    CHECK(!eisenstein(UniPoly({4, 0, 1}), 2).satisfied);  // 4 divisible by p^2
    CHECK(!eisenstein(UniPoly({1, 1, 1}), 2).satisfied);  // constant not divisible
    CHECK(!eisenstein(UniPoly({3, 3, 3}), 3).satisfied);  // leading divisible
    CHECK(eisenstein(UniPoly({6, 9, 3, 1}), 3).satisfied);
    CHECK_THROWS(eisenstein(UniPoly({2, 0, 1}), 4));              // p not prime
    CHECK_THROWS(eisenstein(UniPoly({Rational(1, 2), 1}), 2));    // non-integer
}

TEST_CASE("irreducibility certificates for small graphs") {
    // P3: chi = q(q-1)^2, chromatic number 2, chi(2) = 2, c_1 = 1; the
    // smallest prime dividing neither is 3.
    IrredCertificate c = irreducibility_certificate(Graph::path(3));
    CHECK(c.k == 2);
    CHECK(c.p == 3);
    CHECK(c.M == 5);
    CHECK(c.report.satisfied);
    CHECK(c.f.degree() == 3);

    IrredCertificate t = irreducibility_certificate(Graph::complete(3));
    CHECK(t.k == 3);
    CHECK(t.report.satisfied);

    CHECK_THROWS(irreducibility_certificate(Graph(2))); // disconnected
}

TEST_CASE("parity of the linear chromatic coefficient") {
    CHECK(linear_coeff_parity(Graph::path(3)));     // c_1 = 1, bipartite connected
    CHECK(linear_coeff_parity(Graph::complete(3))); // c_1 = 2, not bipartite
    CHECK(linear_coeff_parity(Graph(3)));           // disconnected
    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(linear_coeff_parity(c5)); // odd cycle: connected, not bipartite
}

TEST_CASE("f_G decomposition via the reversal identity (part c)") {
    // f_G = 2 f_0 + 2 rev_n(f_0) for any rooted graph over colors {0,1,2,3}.
    RootedGraph rg(Graph::path(4), 1);
    UniPoly f0 = f_specialize(rg, FWhich::F0);
    UniPoly fg = f_specialize(rg, FWhich::FG);
    CHECK(fg == (f0 + rev_n(f0, 4)).scaled(2));
}
