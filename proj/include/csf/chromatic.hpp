#ifndef CSF_CHROMATIC_HPP
#define CSF_CHROMATIC_HPP

#include <vector>

#include "csf/graph.hpp"
#include "csf/poly.hpp"
#include "csf/sym.hpp"

namespace csf {

// Root-color constraint for rooted chromatic invariants.
enum class ColorMode { All, RootEquals, RootNotEquals };

// Sum of prod x_{kappa(v)} over proper colorings kappa : V -> {0..N},
// restricted by the mode (root gets color i / avoids color i). Result lives
// in an (N+1)-variable MultiPoly with slots x_0..x_N.
// Guard: (N+1)^n <= 10^8.
MultiPoly brute_force(const Graph& g, int N);
MultiPoly brute_force(const RootedGraph& g, int N, ColorMode mode, int i = 0);

// X_0 of a rooted tree via the principal-subtree product recursion:
// X_0(T) = x_0 * prod_j X_{!=0}(T_j), with X_{!=0} = X - X_0 and
// X = sum_i (0,i)-swap of X_0. Errors on non-tree input.
MultiPoly x0_tree_recursion(const RootedGraph& t, int N);

// X_0 via deletion-contraction on a root-incident edge (smallest in canonical
// edge order); when the root is isolated, X_0 = x_0 * X(G - r).
MultiPoly x0_deletion_contraction(const RootedGraph& g, int N);

// X_G = sum over edge subsets S of (-1)^{|S|} p_{lambda(G_S)}.
// Guard: |E| <= 30.
SymExpansion powersum_X(const Graph& g);

// X_0(G_*) = sum over S of (-1)^{|S|} p_{lambda_v^-(S)} x_0^{lambda_v^+(S)}.
// Stored abstractly: z-degree = root-component size, p basis for the rest.
// NOTE: the p_k here are x_0-inclusive (p_k = x_0^k + x_1^k + ... + x_N^k);
// use expand_powersum_X0 / powersum_X0_to_m to resolve them.
ZPoly powersum_X0(const RootedGraph& g);

// Expand an x_0-inclusive p-basis ZPoly into concrete variables x_0..x_N
// (z -> x_0, p_k -> x_0^k + ... + x_N^k).
MultiPoly expand_powersum_X0(const ZPoly& x, int N);

// Resolve the x_0-inclusive p's abstractly: p_k -> z^k + p_k, then convert
// each z-coefficient to the m basis.
ZPoly powersum_X0_to_m(const ZPoly& x);

// x_0^k coefficient of X_0 (root_in = true) or of X_{!=0} (root_in = false):
// sum over k-element independent sets A (containing / avoiding the root) of
// X_{G-A}, as an m-basis expansion in x_1..x_N semantics.
SymExpansion coeff_zk(const RootedGraph& g, int k, bool root_in);

// Swap variables x_i and x_j.
MultiPoly apply_transposition(const MultiPoly& p, int i, int j);

// X = (1/N) * sum_{i=0}^{N} (0,i)-swap of X_{!=0}.
MultiPoly recover_X_from_Xne0(const MultiPoly& xne0, int N);

// X_0 = recover_X_from_Xne0(X_{!=0}) - X_{!=0}; asserts integer coefficients.
MultiPoly x0_from_xne0(const MultiPoly& xne0, int N);

// Checks x_0 * d/dx_0 X_G = sum over roots r of X_0(G_*^r).
bool pointing_check(const Graph& g, int N);

// Sum over proper colorings of prod_v value[kappa(v)] on a tree, by
// root-down dynamic programming; values has one UniPoly per color 0..N.
UniPoly tree_chromatic_dp(const Graph& t, const std::vector<UniPoly>& values);

// Same with a root-color constraint (used by the specialization sweeps).
UniPoly tree_chromatic_dp(const Graph& t, const std::vector<UniPoly>& values,
                          int root, ColorMode mode, int i = 0);

} // namespace csf

#endif
