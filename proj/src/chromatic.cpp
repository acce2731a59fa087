#include "csf/chromatic.hpp"

#include <bit>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace csf {

namespace {

// Color the vertices in BFS order from `start` (then any remaining
// components) so that each vertex after the first sees an already-colored
// neighbor whenever possible: this makes the conflict pruning effective.
std::vector<int> coloring_order(const Graph& g, int start) {
    std::vector<int> order;
    std::vector<char> seen(g.n(), 0);
    auto bfs = [&](int s) {
        seen[s] = 1;
        size_t head = order.size();
        order.push_back(s);
        while (head < order.size()) {
            int v = order[head++];
            uint64_t m = g.adj(v);
            while (m) {
                int w = std::countr_zero(m);
                m &= m - 1;
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
            }
        }
    };
    bfs(start);
    for (int v = 0; v < g.n(); ++v)
        if (!seen[v]) bfs(v);
    return order;
}

void check_guard(int n, int N) {
    if (N < 1 || N > 63) throw std::invalid_argument("color max N must be in 1..63");
    double steps = 1;
    for (int i = 0; i < n; ++i) steps *= N + 1;
    if (steps > 1e8)
        throw std::invalid_argument("coloring guard exceeded: (N+1)^n = " +
                                    std::to_string(steps) + " > 1e8");
}

// root < 0 means unconstrained (mode is then ignored).
MultiPoly brute_core(const Graph& g, int N, int root, ColorMode mode, int ci) {
    check_guard(g.n(), N);
    if (ci < 0 || ci > N) throw std::invalid_argument("mode color out of range");
    const int n = g.n();
    std::vector<int> order = coloring_order(g, root >= 0 ? root : 0);
    std::vector<int> color(n, -1);

    // Accumulate coloring counts per color-usage histogram. Fast path packs
    // the histogram into one word (4 bits per color).
    const bool packed = (N + 1) <= 16 && n <= 15;
    std::unordered_map<uint64_t, long> acc_packed;
    std::map<MultiPoly::Exponents, long> acc_slow;
    std::vector<uint8_t> counts(N + 1, 0);

    std::function<void(int, uint64_t)> rec = [&](int t, uint64_t key) {
        if (t == n) {
            if (packed) {
                ++acc_packed[key];
            } else {
                MultiPoly::Exponents e(counts.begin(), counts.end());
                ++acc_slow[e];
            }
            return;
        }
        int v = order[t];
        uint64_t forbidden = 0;
        uint64_t m = g.adj(v);
        while (m) {
            int w = std::countr_zero(m);
            m &= m - 1;
            if (color[w] >= 0) forbidden |= uint64_t(1) << color[w];
        }
        int lo = 0, hi = N;
        if (v == root && mode == ColorMode::RootEquals) lo = hi = ci;
        for (int c = lo; c <= hi; ++c) {
            if ((forbidden >> c) & 1) continue;
            if (v == root && mode == ColorMode::RootNotEquals && c == ci) continue;
            color[v] = c;
            ++counts[c];
            rec(t + 1, key + (packed ? uint64_t(1) << (4 * c) : 0));
            --counts[c];
            color[v] = -1;
        }
    };
    rec(0, 0);

    MultiPoly out(N + 1);
    if (packed) {
        for (auto [key, cnt] : acc_packed) {
            MultiPoly::Exponents e(N + 1);
            for (int c = 0; c <= N; ++c) e[c] = static_cast<uint8_t>((key >> (4 * c)) & 0xF);
            out.add_term(e, Rational(cnt));
        }
    } else {
        for (const auto& [e, cnt] : acc_slow) out.add_term(e, Rational(cnt));
    }
    return out;
}

} // namespace

MultiPoly brute_force(const Graph& g, int N) {
    return brute_core(g, N, -1, ColorMode::All, 0);
}

MultiPoly brute_force(const RootedGraph& g, int N, ColorMode mode, int i) {
    if (mode == ColorMode::All) return brute_core(g.graph(), N, -1, mode, 0);
    return brute_core(g.graph(), N, g.root(), mode, i);
}

namespace {

MultiPoly x0_tree_rec_impl(const RootedGraph& t, int N) {
    if (t.n() == 1) return MultiPoly::var(N + 1, 0, 1);
    const Graph& g = t.graph();
    const int r = t.root();
    MultiPoly result = MultiPoly::var(N + 1, 0, 1);
    uint64_t assigned = 0;
    uint64_t children = g.adj(r);
    while (children) {
        int c = std::countr_zero(children);
        children &= children - 1;
        if ((assigned >> c) & 1) continue;
        // Component of c in G - r = vertex set of the principal subtree at c.
        uint64_t mask = uint64_t(1) << c, frontier = mask;
        while (frontier) {
            uint64_t next = 0;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= g.adj(v) & ~mask & ~(uint64_t(1) << r);
            }
            mask |= next;
            frontier = next;
        }
        assigned |= mask;
        int sub_root = std::popcount(mask & ((uint64_t(1) << c) - 1));
        MultiPoly x0 = x0_tree_rec_impl(RootedGraph(induced_subgraph(g, mask), sub_root), N);
        // X = sum over i of (0,i)-swapped X_0; X_{!=0} = X - X_0.
        MultiPoly xne0(N + 1);
        for (int i = 1; i <= N; ++i) xne0 += apply_transposition(x0, 0, i);
        result = result * xne0;
    }
    return result;
}

} // namespace

MultiPoly x0_tree_recursion(const RootedGraph& t, int N) {
    if (!is_tree(t.graph())) throw std::invalid_argument("x0_tree_recursion requires a tree");
    if (N < 1 || N > 63) throw std::invalid_argument("color max N must be in 1..63");
    return x0_tree_rec_impl(t, N);
}

MultiPoly x0_deletion_contraction(const RootedGraph& g, int N) {
    if (N < 1 || N > 63) throw std::invalid_argument("color max N must be in 1..63");
    const int r = g.root();
    for (const Edge& e : g.graph().edges()) {
        if (e.u != r && e.v != r) continue;
        MultiPoly del = x0_deletion_contraction(delete_edge(g, e), N);
        MultiPoly con = x0_deletion_contraction(contract_root_edge(g, e), N);
        return del - MultiPoly::var(N + 1, 0, 1) * con;
    }
    // Root is isolated: X_0(G_*) = x_0 * X(G - r; x_0..x_N).
    if (g.n() == 1) return MultiPoly::var(N + 1, 0, 1);
    Graph rest = delete_vertices(g.graph(), uint64_t(1) << r);
    MultiPoly x = expand_vars_all(powersum_X(rest), N);
    return MultiPoly::var(N + 1, 0, 1) * x;
}

SymExpansion powersum_X(const Graph& g) {
    auto es = g.edges();
    if (es.size() > 30) throw std::invalid_argument("edge-subset guard: more than 30 edges");
    SymExpansion out(Basis::P);
    for (uint64_t mask = 0; mask < (uint64_t(1) << es.size()); ++mask) {
        int sign = (std::popcount(mask) % 2) ? -1 : 1;
        out.add(components_partition(g, EdgeSubset{mask}), sign);
    }
    return out;
}

ZPoly powersum_X0(const RootedGraph& g) {
    auto es = g.graph().edges();
    if (es.size() > 30) throw std::invalid_argument("edge-subset guard: more than 30 edges");
    ZPoly out(Basis::P);
    for (uint64_t mask = 0; mask < (uint64_t(1) << es.size()); ++mask) {
        int sign = (std::popcount(mask) % 2) ? -1 : 1;
        auto [root_size, rest] = rooted_split(g, EdgeSubset{mask});
        out.add(root_size, rest, sign);
    }
    return out;
}

MultiPoly expand_powersum_X0(const ZPoly& x, int N) {
    if (x.basis() != Basis::P) throw std::invalid_argument("expected a p-basis ZPoly");
    if (N < 1 || N > 63) throw std::invalid_argument("color max N must be in 1..63");
    // Cache p_k(x_0..x_N) by exponent.
    std::map<int, MultiPoly> pk;
    auto power_sum = [&](int k) -> const MultiPoly& {
        auto it = pk.find(k);
        if (it != pk.end()) return it->second;
        MultiPoly p(N + 1);
        for (int i = 0; i <= N; ++i) p += MultiPoly::var(N + 1, i, k);
        return pk.emplace(k, std::move(p)).first->second;
    };
    MultiPoly out(N + 1);
    for (const auto& [zdeg, sym] : x.terms()) {
        for (const auto& [lam, c] : sym.coeffs()) {
            MultiPoly term = MultiPoly::var(N + 1, 0, zdeg).scaled(c);
            for (int k : lam.parts()) term = term * power_sum(k);
            out += term;
        }
    }
    return out;
}

ZPoly powersum_X0_to_m(const ZPoly& x) {
    if (x.basis() != Basis::P) throw std::invalid_argument("expected a p-basis ZPoly");
    // Resolve each x_0-inclusive p_k as z^k + p_k, distributing over lambda.
    ZPoly resolved(Basis::P);
    for (const auto& [zdeg, sym] : x.terms()) {
        for (const auto& [lam, c] : sym.coeffs()) {
            const auto& parts = lam.parts();
            int np = static_cast<int>(parts.size());
            if (np > 30) throw std::invalid_argument("partition too long to resolve");
            for (uint64_t t = 0; t < (uint64_t(1) << np); ++t) {
                int zextra = 0;
                std::vector<int> rest;
                for (int i = 0; i < np; ++i) {
                    if ((t >> i) & 1) zextra += parts[i];
                    else rest.push_back(parts[i]);
                }
                resolved.add(zdeg + zextra, Partition(std::move(rest)), c);
            }
        }
    }
    return resolved.converted(Basis::M);
}

SymExpansion coeff_zk(const RootedGraph& g, int k, bool root_in) {
    const int n = g.n();
    if (root_in && (k < 1 || k > n))
        throw std::invalid_argument("root-in mode needs 1 <= k <= n");
    if (!root_in && k < 0) throw std::invalid_argument("k must be nonnegative");
    SymExpansion out(Basis::M);
    if (k > n) return out;
    uint64_t all = (n == 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
    for (uint64_t a : independent_sets(g.graph(), k)) {
        bool has_root = (a >> g.root()) & 1;
        if (has_root != root_in) continue;
        if (a == all) {
            out.add(Partition(), 1);
        } else {
            SymExpansion xm = convert(powersum_X(delete_vertices(g.graph(), a)), Basis::M);
            out = out + xm;
        }
    }
    return out;
}

MultiPoly apply_transposition(const MultiPoly& p, int i, int j) {
    if (i < 0 || j < 0 || i >= p.nvars() || j >= p.nvars())
        throw std::invalid_argument("transposition index out of range");
    if (i == j) return p;
    MultiPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        MultiPoly::Exponents e2 = e;
        std::swap(e2[i], e2[j]);
        out.add_term(e2, c);
    }
    return out;
}

MultiPoly recover_X_from_Xne0(const MultiPoly& xne0, int N) {
    if (N < 1) throw std::invalid_argument("recovery needs N >= 1");
    if (xne0.nvars() != N + 1) throw std::invalid_argument("expected N+1 variable slots");
    MultiPoly sum = xne0; // i = 0 term is the identity swap
    for (int i = 1; i <= N; ++i) sum += apply_transposition(xne0, 0, i);
    return sum.scaled(Rational(1, N));
}

MultiPoly x0_from_xne0(const MultiPoly& xne0, int N) {
    MultiPoly x0 = recover_X_from_Xne0(xne0, N) - xne0;
    for (const auto& [e, c] : x0.terms())
        if (!is_integral(c))
            throw std::logic_error("x0_from_xne0: non-integral coefficient " + rational_str(c));
    return x0;
}

bool pointing_check(const Graph& g, int N) {
    MultiPoly lhs = MultiPoly::var(N + 1, 0, 1) * brute_force(g, N).derivative(0);
    MultiPoly rhs(N + 1);
    for (int r = 0; r < g.n(); ++r)
        rhs += brute_force(RootedGraph(g, r), N, ColorMode::RootEquals, 0);
    return lhs == rhs;
}

UniPoly tree_chromatic_dp(const Graph& t, const std::vector<UniPoly>& values) {
    return tree_chromatic_dp(t, values, 0, ColorMode::All, 0);
}

UniPoly tree_chromatic_dp(const Graph& t, const std::vector<UniPoly>& values,
                          int root, ColorMode mode, int i) {
    if (!is_tree(t)) throw std::invalid_argument("tree_chromatic_dp requires a tree");
    if (values.empty()) throw std::invalid_argument("need at least one color value");
    if (root < 0 || root >= t.n()) throw std::invalid_argument("root out of range");
    if (mode != ColorMode::All && (i < 0 || i >= static_cast<int>(values.size())))
        throw std::invalid_argument("mode color out of range");

    // Compress equal color values into classes: the DP value of a vertex is
    // the same for every color in a class.
    std::vector<UniPoly> vals;
    std::vector<long> mult;
    std::vector<int> cls(values.size());
    for (size_t c = 0; c < values.size(); ++c) {
        size_t j = 0;
        while (j < vals.size() && !(vals[j] == values[c])) ++j;
        if (j == vals.size()) {
            vals.push_back(values[c]);
            mult.push_back(0);
        }
        ++mult[j];
        cls[c] = static_cast<int>(j);
    }
    const size_t K = vals.size();

    // W[c] = sum over colorings of the subtree with this vertex in class c.
    std::function<std::vector<UniPoly>(int, int)> rec =
        [&](int v, int parent) -> std::vector<UniPoly> {
        std::vector<UniPoly> w = vals;
        uint64_t m = t.adj(v);
        while (m) {
            int u = std::countr_zero(m);
            m &= m - 1;
            if (u == parent) continue;
            std::vector<UniPoly> wu = rec(u, v);
            UniPoly s;
            for (size_t c = 0; c < K; ++c) s += wu[c].scaled(Rational(mult[c]));
            for (size_t c = 0; c < K; ++c) w[c] *= s - wu[c];
        }
        return w;
    };
    std::vector<UniPoly> wr = rec(root, -1);
    UniPoly s;
    for (size_t c = 0; c < K; ++c) s += wr[c].scaled(Rational(mult[c]));
    switch (mode) {
        case ColorMode::All: return s;
        case ColorMode::RootEquals: return wr[cls[i]];
        case ColorMode::RootNotEquals: return s - wr[cls[i]];
    }
    throw std::logic_error("bad color mode");
}

} // namespace csf
