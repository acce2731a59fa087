#ifndef CSF_SPECIAL_HPP
#define CSF_SPECIAL_HPP

#include <string>

#include "csf/chromatic.hpp"
#include "csf/graph.hpp"
#include "csf/poly.hpp"

namespace csf {

// Result of checking Eisenstein's hypotheses for one prime.
struct EisensteinReport {
    long prime = 0;
    bool satisfied = false;
    std::string witness; // empty when satisfied; otherwise the failed hypothesis
};

// Which specialization of X at (q,q,1,1) to compute.
enum class FWhich { F0, FNe0, FG };

// Pass/fail for the five reversal identities relating f_i, f_{!=i}, f_G.
struct X0Det2Report {
    bool a = false, b = false, c = false, d = false, e = false;
    bool all() const { return a && b && c && d && e; }
};

struct IrredCertificate {
    int k = 0;  // number of q-colors (the chromatic number)
    long p = 0; // certifying prime
    int M = 0;  // k + p
    UniPoly f;  // the (k,p) specialization of X_G
    EisensteinReport report;
};

// f_0 / f_{!=0} / f_G = the (q,q,1,1) specialization over colors {0,1,2,3}.
// Trees use the chromatic DP; other graphs fall back to brute force.
UniPoly f_specialize(const RootedGraph& g, FWhich which);

// f_i / f_{!=i} for an arbitrary root color constraint (used by the
// reversal identities below).
UniPoly f_specialize(const RootedGraph& g, ColorMode mode, int i);

// f_0 of a rooted tree entirely in univariate arithmetic:
// f_0(T) = q * prod_j (f_0(T_j) + 2 rev_{n_j}(f_0(T_j))).
UniPoly f0_tree_fast(const RootedGraph& t);

// The five identities (a)-(e) tying f_i, f_{!=i}, f_G and coefficient
// reversal together.
X0Det2Report x0det2_relations(const RootedGraph& g);

// X_G with x_1..x_k = q and x_{k+1}..x_{k+p} = 1 (k+p colors total).
UniPoly spec_kp(const Graph& g, int k, int p);

// Independent oracle for the q^j coefficient of spec_kp:
// a_j = sum over |S| = j of chi_{G|S}(k) * chi_{G|S^c}(p).
Integer aj_formula(const Graph& g, int k, int p, int j);

// X_0^{2,p} / X_{!=0}^{2,p}: x_0 = x_1 = q, x_2..x_{p+1} = 1, with the root
// constrained by the mode (color 0 / not color 0 / unconstrained).
UniPoly x_2p(const RootedGraph& g, int p, ColorMode mode);

// Independent oracle for the q^j coefficient of x_2p: sum over pairs of
// disjoint independent sets (S_0, S_1) with |S_0| + |S_1| = j (S_0 = color-0
// class, S_1 = color-1 class; root membership in S_0 fixed by the mode) of
// chi_{G|U}(p) where U is the remaining vertex set.
Integer aj2_formula(const RootedGraph& g, int p, int j, ColorMode mode);

// Check the three Eisenstein hypotheses for f at prime p.
EisensteinReport eisenstein(const UniPoly& f, long p);

// k = chromatic number, p = least prime dividing neither chi_G(k) nor the
// linear coefficient of chi_G (capped at 10^4), f = spec_kp(g, k, p).
IrredCertificate irreducibility_certificate(const Graph& g);

// (linear coefficient of chi_G is odd) == (G connected and bipartite).
bool linear_coeff_parity(const Graph& g);

std::string eisenstein_report_json(const EisensteinReport& r);

} // namespace csf

#endif
