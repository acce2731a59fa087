#include "csf/special.hpp"

#include <bit>
#include <map>
#include <stdexcept>

#include "vendor_json.hpp"

namespace csf {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// chi_{G|mask}(x); the empty induced subgraph contributes 1.
Rational chi_induced(const Graph& g, uint64_t mask, const Rational& x,
                     std::map<uint64_t, UniPoly>& cache) {
    if (mask == 0) return 1;
    auto it = cache.find(mask);
    if (it == cache.end())
        it = cache.emplace(mask, chromatic_polynomial(induced_subgraph(g, mask))).first;
    return it->second(x);
}

// Specialize a rooted chromatic invariant at per-color q-power/constant
// values; trees go through the DP, everything else through brute force.
UniPoly specialize_rooted(const RootedGraph& g, const std::vector<UniPoly>& values,
                          ColorMode mode, int i) {
    if (is_tree(g.graph()))
        return tree_chromatic_dp(g.graph(), values, g.root(), mode, i);
    int N = static_cast<int>(values.size()) - 1;
    MultiPoly x = brute_force(g, N, mode, i);
    std::vector<VarTarget> targets;
    for (const UniPoly& v : values) {
        // Values here are always q^e or constants.
        if (v.degree() <= 0) targets.push_back(VarTarget::constant(v.coeff(0)));
        else targets.push_back(VarTarget::q_power(v.degree()));
    }
    return specialize_uni(x, targets);
}

std::vector<UniPoly> qq11_values() {
    UniPoly q = UniPoly::monomial(1, 1);
    UniPoly one = UniPoly::constant(1);
    return {q, q, one, one};
}

} // namespace

UniPoly f_specialize(const RootedGraph& g, ColorMode mode, int i) {
    return specialize_rooted(g, qq11_values(), mode, i);
}

UniPoly f_specialize(const RootedGraph& g, FWhich which) {
    switch (which) {
        case FWhich::F0: return f_specialize(g, ColorMode::RootEquals, 0);
        case FWhich::FNe0: return f_specialize(g, ColorMode::RootNotEquals, 0);
        case FWhich::FG: return f_specialize(g, ColorMode::All, 0);
    }
    throw std::logic_error("bad FWhich");
}

namespace {

UniPoly f0_tree_impl(const RootedGraph& t) {
    if (t.n() == 1) return UniPoly::monomial(1, 1);
    const Graph& g = t.graph();
    const int r = t.root();
    UniPoly result = UniPoly::monomial(1, 1);
    uint64_t assigned = 0;
    uint64_t children = g.adj(r);
    while (children) {
        int c = std::countr_zero(children);
        children &= children - 1;
        if ((assigned >> c) & 1) continue;
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
        int sub_n = std::popcount(mask);
        UniPoly f0 = f0_tree_impl(RootedGraph(induced_subgraph(g, mask), sub_root));
        // f_{!=0}(T_j) = f_0(T_j) + 2 rev_{n_j}(f_0(T_j)).
        result *= f0 + rev_n(f0, sub_n).scaled(2);
    }
    return result;
}

} // namespace

UniPoly f0_tree_fast(const RootedGraph& t) {
    if (!is_tree(t.graph())) throw std::invalid_argument("f0_tree_fast requires a tree");
    return f0_tree_impl(t);
}

X0Det2Report x0det2_relations(const RootedGraph& g) {
    const int n = g.n();
    UniPoly f[4], fne[4];
    for (int i = 0; i < 4; ++i) {
        f[i] = f_specialize(g, ColorMode::RootEquals, i);
        fne[i] = f_specialize(g, ColorMode::RootNotEquals, i);
    }
    UniPoly fg = f_specialize(g, FWhich::FG);
    X0Det2Report r;
    r.a = f[0] == f[1] && f[2] == f[3] && f[2] == rev_n(f[0], n);
    r.b = fne[0] == fne[1] && fne[2] == fne[3] && fne[2] == rev_n(fne[0], n);
    r.c = fg == (f[0] + rev_n(f[0], n)).scaled(2);
    r.d = fg == (fne[0] + rev_n(fne[0], n)).scaled(Rational(2, 3));
    r.e = f[0] == fg - fne[0] &&
          f[0] == fne[0].scaled(Rational(-1, 3)) + rev_n(fne[0], n).scaled(Rational(2, 3));
    return r;
}

UniPoly spec_kp(const Graph& g, int k, int p) {
    if (k < 1 || p < 1 || k + p > 64) throw std::invalid_argument("need 1 <= k, 1 <= p, k+p <= 64");
    UniPoly q = UniPoly::monomial(1, 1);
    UniPoly one = UniPoly::constant(1);
    std::vector<UniPoly> values;
    for (int i = 0; i < k; ++i) values.push_back(q);
    for (int i = 0; i < p; ++i) values.push_back(one);
    if (is_tree(g)) return tree_chromatic_dp(g, values);
    MultiPoly x = brute_force(g, k + p - 1);
    std::vector<VarTarget> targets;
    for (int i = 0; i < k; ++i) targets.push_back(VarTarget::q_power(1));
    for (int i = 0; i < p; ++i) targets.push_back(VarTarget::constant(1));
    return specialize_uni(x, targets);
}

Integer aj_formula(const Graph& g, int k, int p, int j) {
    const int n = g.n();
    if (n > 20) throw std::invalid_argument("subset guard: more than 20 vertices");
    if (j < 0 || j > n) return 0;
    std::map<uint64_t, UniPoly> cache;
    uint64_t all = (uint64_t(1) << n) - 1;
    Rational total = 0;
    for (uint64_t s = 0; s <= all; ++s) {
        if (std::popcount(s) == j)
            total += chi_induced(g, s, k, cache) * chi_induced(g, all & ~s, p, cache);
    }
    return to_integer(total);
}

UniPoly x_2p(const RootedGraph& g, int p, ColorMode mode) {
    if (p < 1 || p + 2 > 64) throw std::invalid_argument("need 1 <= p <= 62");
    UniPoly q = UniPoly::monomial(1, 1);
    UniPoly one = UniPoly::constant(1);
    std::vector<UniPoly> values{q, q};
    for (int i = 0; i < p; ++i) values.push_back(one);
    return specialize_rooted(g, values, mode, 0);
}

Integer aj2_formula(const RootedGraph& g, int p, int j, ColorMode mode) {
    const int n = g.n();
    if (n > 20) throw std::invalid_argument("subset guard: more than 20 vertices");
    if (j < 0 || j > n) return 0;
    // All independent vertex sets (any size), as bitmasks.
    std::vector<uint64_t> indep;
    uint64_t all = (n == 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
    for (uint64_t s = 0; s <= all; ++s) {
        bool ok = true;
        uint64_t m = s;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (g.graph().adj(v) & s) { ok = false; break; }
        }
        if (ok) indep.push_back(s);
        if (s == all) break;
    }
    uint64_t rbit = uint64_t(1) << g.root();
    std::map<uint64_t, UniPoly> cache;
    Rational total = 0;
    for (uint64_t s0 : indep) {
        if (mode == ColorMode::RootEquals && !(s0 & rbit)) continue;
        if (mode == ColorMode::RootNotEquals && (s0 & rbit)) continue;
        int need = j - std::popcount(s0);
        if (need < 0) continue;
        for (uint64_t s1 : indep) {
            if (s1 & s0) continue;
            if (std::popcount(s1) != need) continue;
            total += chi_induced(g.graph(), all & ~(s0 | s1), p, cache);
        }
    }
    return to_integer(total);
}

EisensteinReport eisenstein(const UniPoly& f, long p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (!f.integer_coeffs()) throw std::invalid_argument("Eisenstein needs integer coefficients");
    if (f.degree() < 1) throw std::invalid_argument("Eisenstein needs positive degree");
    EisensteinReport r;
    r.prime = p;
    auto divisible = [&](const Rational& c, unsigned long d) {
        Integer num = c.get_num();
        return mpz_divisible_ui_p(num.get_mpz_t(), d) != 0;
    };
    const int n = f.degree();
    if (divisible(f.coeff(n), p)) {
        r.witness = "leading coefficient divisible by p";
        return r;
    }
    for (int k = 0; k < n; ++k) {
        if (!divisible(f.coeff(k), p)) {
            r.witness = "coefficient of q^" + std::to_string(k) + " not divisible by p";
            return r;
        }
    }
    if (divisible(f.coeff(0), static_cast<unsigned long>(p) * p)) {
        r.witness = "constant term divisible by p^2";
        return r;
    }
    r.satisfied = true;
    return r;
}

IrredCertificate irreducibility_certificate(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("certificate requires a connected graph");
    IrredCertificate cert;
    cert.k = chromatic_number(g);
    UniPoly chi = chromatic_polynomial(g);
    Integer chik = to_integer(chi(cert.k));
    Integer c1 = to_integer(chi.coeff(1));
    for (long p = 2; ; ++p) {
        if (p > 10000)
            throw std::runtime_error("no certifying prime below 10^4");
        if (!is_prime(p)) continue;
        if (mpz_divisible_ui_p(chik.get_mpz_t(), p)) continue;
        if (mpz_divisible_ui_p(c1.get_mpz_t(), p)) continue;
        cert.p = p;
        break;
    }
    cert.M = cert.k + static_cast<int>(cert.p);
    cert.f = spec_kp(g, cert.k, static_cast<int>(cert.p));
    cert.report = eisenstein(cert.f, cert.p);
    return cert;
}

bool linear_coeff_parity(const Graph& g) {
    Integer c1 = to_integer(chromatic_polynomial(g).coeff(1));
    bool odd = mpz_odd_p(c1.get_mpz_t()) != 0;
    return odd == (is_connected(g) && is_bipartite(g));
}

std::string eisenstein_report_json(const EisensteinReport& r) {
    nlohmann::json j;
    j["prime"] = r.prime;
    j["satisfied"] = r.satisfied;
    j["witness"] = r.witness;
    return j.dump();
}

} // namespace csf
