#ifndef CSF_POINTED_HPP
#define CSF_POINTED_HPP

#include <string>
#include <utility>

#include "csf/graph.hpp"
#include "csf/poly.hpp"
#include "csf/sym.hpp"

namespace csf {

// Polynomial in part-size variables x_1, x_2, ... plus y and z, used by the
// U / W / rooted-U family. These x_i are indexed by component sizes, a
// different namespace from the color variables elsewhere.
class UWPoly {
public:
    // (multiset of x-subscripts, z-exponent) -> coefficient polynomial in y.
    using Key = std::pair<Partition, int>;

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, UniPoly>& terms() const { return terms_; }

    void add(const Partition& lam, int zexp, const UniPoly& ycoeff);
    UniPoly coeff(const Partition& lam, int zexp) const;

    UWPoly operator+(const UWPoly& o) const;
    bool operator==(const UWPoly&) const = default;

    std::string str() const;

private:
    std::map<Key, UniPoly> terms_;
};

// P_{G,v} = sum over S of (-1)^{|S|} p_{lambda_v^-} z^{lambda_v^+ - 1}.
// Guard: |E| <= 30.
ZPoly pointed_P(const RootedGraph& g);

// Ring maps on Lambda[z] acting by p_k -> z^k + p_k (phi) and
// p_k -> -z^k + p_k (psi); mutually inverse. Input converted to the p basis.
ZPoly phi_transform(const ZPoly& x);
ZPoly psi_transform(const ZPoly& x);

// f(H) computed two independent ways: fixed points of the edge-order
// involution, and the raw signed sum over connected spanning subgraphs.
// The optional edge order defaults to the canonical order.
std::pair<Integer, Integer> internal_spanning_trees(const Graph& h);
std::pair<Integer, Integer> internal_spanning_trees(const Graph& h,
                                                    const std::vector<Edge>& order);

// Checks that the (-z)^k coefficient of P_{G,v} equals
// sum over induced connected (k+1)-vertex subgraphs H containing the root
// of f(H) * X_{G \ H}.
bool ans_paw_check(const RootedGraph& g, int k);

// U_G = sum over S of x_{lambda(G_S)} (y-1)^{|S| - r(S)}. Guard: |E| <= 25.
UWPoly u_poly(const Graph& g);

// Rooted variant: x_{lambda_v^-} z^{lambda_v^+} (y-1)^{|S| - r(S)}.
UWPoly rooted_u(const RootedGraph& g);

// Noble-Welsh deletion-contraction on a weighted multigraph: edgeless graphs
// give prod x_{omega(v)}, loops multiply by y, contraction adds weights.
UWPoly w_poly(const WeightedGraph& g);

// y = 0, x_i -> -p_i, times (-1)^n: recovers X_G from U_G (loopless G).
SymExpansion X_from_U(const UWPoly& u);

// y = 0, x_i -> -p_i, times (-1)^{n+1} z^{-1}: recovers P_{G,v} from the
// rooted U-polynomial. Every term must carry z.
ZPoly P_from_rootedU(const UWPoly& ur, int n);

std::string uwpoly_json(const UWPoly& u);

} // namespace csf

#endif
