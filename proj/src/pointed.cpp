#include "csf/pointed.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "csf/chromatic.hpp"
#include "vendor_json.hpp"

namespace csf {

void UWPoly::add(const Partition& lam, int zexp, const UniPoly& ycoeff) {
    if (ycoeff.is_zero()) return;
    Key k{lam, zexp};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), ycoeff);
    } else {
        it->second += ycoeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UniPoly UWPoly::coeff(const Partition& lam, int zexp) const {
    auto it = terms_.find({lam, zexp});
    return it == terms_.end() ? UniPoly() : it->second;
}

UWPoly UWPoly::operator+(const UWPoly& o) const {
    UWPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, c);
    return r;
}

std::string UWPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str("y") << ")*x" << k.first.str();
        if (k.second) os << "*z^" << k.second;
        first = false;
    }
    return os.str();
}

ZPoly pointed_P(const RootedGraph& g) {
    auto es = g.graph().edges();
    if (es.size() > 30) throw std::invalid_argument("edge-subset guard: more than 30 edges");
    ZPoly out(Basis::P);
    for (uint64_t mask = 0; mask < (uint64_t(1) << es.size()); ++mask) {
        int sign = (std::popcount(mask) % 2) ? -1 : 1;
        auto [root_size, rest] = rooted_split(g, EdgeSubset{mask});
        out.add(root_size - 1, rest, sign);
    }
    return out;
}

namespace {

// Apply p_k -> s*z^k + p_k termwise (s = +1 for phi, -1 for psi).
ZPoly pk_shift(const ZPoly& x, int s) {
    ZPoly in = x.basis() == Basis::P ? x : x.converted(Basis::P);
    ZPoly out(Basis::P);
    for (const auto& [zdeg, sym] : in.terms()) {
        for (const auto& [lam, c] : sym.coeffs()) {
            const auto& parts = lam.parts();
            int np = static_cast<int>(parts.size());
            if (np > 30) throw std::invalid_argument("partition too long to transform");
            for (uint64_t t = 0; t < (uint64_t(1) << np); ++t) {
                int zextra = 0, picked = 0;
                std::vector<int> rest;
                for (int i = 0; i < np; ++i) {
                    if ((t >> i) & 1) {
                        zextra += parts[i];
                        ++picked;
                    } else {
                        rest.push_back(parts[i]);
                    }
                }
                Rational coef = c;
                if (s < 0 && picked % 2) coef = -coef;
                out.add(zdeg + zextra, Partition(std::move(rest)), coef);
            }
        }
    }
    return out;
}

} // namespace

ZPoly phi_transform(const ZPoly& x) { return pk_shift(x, +1); }
ZPoly psi_transform(const ZPoly& x) { return pk_shift(x, -1); }

std::pair<Integer, Integer> internal_spanning_trees(const Graph& h) {
    return internal_spanning_trees(h, h.edges());
}

std::pair<Integer, Integer> internal_spanning_trees(const Graph& h,
                                                    const std::vector<Edge>& order) {
    if (!is_connected(h)) throw std::invalid_argument("graph must be connected");
    if (order.size() != static_cast<size_t>(h.edge_count()))
        throw std::invalid_argument("edge order must list every edge once");
    if (order.size() > 30) throw std::invalid_argument("edge-subset guard: more than 30 edges");
    const int m = static_cast<int>(order.size());
    const int k = h.n() - 1; // tree edge count

    // Signed sum and involution fixed points over connected spanning subsets.
    Integer fixed = 0, signed_sum = 0;
    std::vector<int> parent(h.n());
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (uint64_t mask = 0; mask < (uint64_t(1) << m); ++mask) {
        // Connectivity of the spanning subgraph (V, mask).
        for (int v = 0; v < h.n(); ++v) parent[v] = v;
        int comps = h.n();
        for (int j = 0; j < m; ++j) {
            if (!((mask >> j) & 1)) continue;
            int a = find(order[j].u), b = find(order[j].v);
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
        if (comps != 1) continue;
        signed_sum += ((std::popcount(mask) - k) % 2) ? -1 : 1;

        // Fixed point iff no edge's endpoints are already joined by the
        // strictly earlier subset edges when it is processed.
        for (int v = 0; v < h.n(); ++v) parent[v] = v;
        bool is_fixed = true;
        for (int j = 0; j < m; ++j) {
            int a = find(order[j].u), b = find(order[j].v);
            if (a == b) { is_fixed = false; break; }
            if ((mask >> j) & 1) parent[a] = b;
        }
        if (is_fixed) fixed += 1;
    }
    return {fixed, signed_sum};
}

bool ans_paw_check(const RootedGraph& g, int k) {
    const int n = g.n();
    if (n > 25) throw std::invalid_argument("vertex-subset guard: more than 25 vertices");
    if (k < 0 || k >= n) throw std::invalid_argument("k must be in 0..n-1");
    ZPoly p = pointed_P(g);
    SymExpansion lhs = p.coeff(k).scaled((k % 2) ? -1 : 1); // coefficient of (-z)^k

    SymExpansion rhs(Basis::P);
    uint64_t all = (n == 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
    uint64_t rbit = uint64_t(1) << g.root();
    for (uint64_t mask = 0; mask <= all; ++mask) {
        if (!(mask & rbit) || std::popcount(mask) != k + 1) continue;
        Graph hsub = induced_subgraph(g.graph(), mask);
        if (!is_connected(hsub)) continue;
        Integer f = internal_spanning_trees(hsub).second;
        if (mask == all) {
            rhs.add(Partition(), Rational(f));
        } else {
            SymExpansion x = powersum_X(delete_vertices(g.graph(), mask));
            rhs = rhs + x.scaled(Rational(f));
        }
        if (mask == all) break;
    }
    return lhs == rhs;
}

namespace {

UniPoly y_minus_one_pow(int e) {
    static const UniPoly ym1({-1, 1});
    return ym1.pow(e);
}

} // namespace

UWPoly u_poly(const Graph& g) {
    auto es = g.edges();
    if (es.size() > 25) throw std::invalid_argument("edge-subset guard: more than 25 edges");
    UWPoly out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << es.size()); ++mask) {
        Partition lam = components_partition(g, EdgeSubset{mask});
        int rank = g.n() - lam.size();
        out.add(lam, 0, y_minus_one_pow(std::popcount(mask) - rank));
    }
    return out;
}

UWPoly rooted_u(const RootedGraph& g) {
    auto es = g.graph().edges();
    if (es.size() > 25) throw std::invalid_argument("edge-subset guard: more than 25 edges");
    UWPoly out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << es.size()); ++mask) {
        auto [root_size, rest] = rooted_split(g, EdgeSubset{mask});
        int rank = g.n() - (rest.size() + 1);
        out.add(rest, root_size, y_minus_one_pow(std::popcount(mask) - rank));
    }
    return out;
}

namespace {

UWPoly w_poly_rec(WeightedGraph g) {
    // Loops first: each contributes a factor y.
    int ypow = 0;
    for (size_t i = 0; i < g.edges.size();) {
        if (g.edges[i].first == g.edges[i].second) {
            ++ypow;
            g.edges.erase(g.edges.begin() + i);
        } else {
            ++i;
        }
    }
    UWPoly out;
    if (g.edges.empty()) {
        std::vector<int> parts = g.weights;
        out.add(Partition(std::move(parts)), 0, UniPoly::monomial(1, ypow));
        return out;
    }
    auto [u, v] = g.edges.back();
    WeightedGraph del = g;
    del.edges.pop_back();
    // Contract: merge v into u, add weights, redirect edges (loops may form).
    WeightedGraph con;
    con.n = g.n - 1;
    auto remap = [&, u = u, v = v](int w) { return w == v ? (u > v ? u - 1 : u) : (w > v ? w - 1 : w); };
    for (int w = 0; w < g.n; ++w) {
        if (w == v) continue;
        con.weights.push_back(g.weights[w] + (w == u ? g.weights[v] : 0));
    }
    for (size_t i = 0; i + 1 < g.edges.size(); ++i)
        con.edges.emplace_back(remap(g.edges[i].first), remap(g.edges[i].second));
    UWPoly sum = w_poly_rec(std::move(del)) + w_poly_rec(std::move(con));
    if (ypow == 0) return sum;
    UWPoly scaled;
    UniPoly yf = UniPoly::monomial(1, ypow);
    for (const auto& [k, c] : sum.terms()) scaled.add(k.first, k.second, c * yf);
    return scaled;
}

} // namespace

UWPoly w_poly(const WeightedGraph& g) {
    g.validate();
    if (g.edges.size() > 25) throw std::invalid_argument("recursion guard: more than 25 edges");
    return w_poly_rec(g);
}

SymExpansion X_from_U(const UWPoly& u) {
    int n = 0;
    for (const auto& [k, c] : u.terms()) {
        if (k.second != 0) throw std::invalid_argument("unrooted U-polynomial cannot carry z");
        n = std::max(n, k.first.weight());
    }
    SymExpansion out(Basis::P);
    for (const auto& [k, c] : u.terms()) {
        Rational coef = c(0); // y = 0
        if ((n + k.first.size()) % 2) coef = -coef; // (-1)^n from x_i -> -p_i
        out.add(k.first, coef);
    }
    return out;
}

ZPoly P_from_rootedU(const UWPoly& ur, int n) {
    ZPoly out(Basis::P);
    for (const auto& [k, c] : ur.terms()) {
        if (k.second < 1)
            throw std::invalid_argument("rooted U-polynomial term not divisible by z");
        if (k.first.weight() + k.second != n)
            throw std::invalid_argument("term weight does not match vertex count");
        Rational coef = c(0);
        if ((n + 1 + k.first.size()) % 2) coef = -coef;
        out.add(k.second - 1, k.first, coef);
    }
    return out;
}

std::string uwpoly_json(const UWPoly& u) {
    nlohmann::json j;
    j["vars"] = {{"x", "part-size"}, {"y", "cycle"}, {"z", "root"}};
    auto& arr = j["terms"] = nlohmann::json::array();
    for (const auto& [k, c] : u.terms()) {
        nlohmann::json t;
        t["parts"] = k.first.parts();
        t["z"] = k.second;
        std::vector<std::string> ys;
        for (const Rational& q : c.coeffs()) ys.push_back(rational_str(q));
        t["y_coeffs"] = ys;
        arr.push_back(std::move(t));
    }
    return j.dump();
}

} // namespace csf
