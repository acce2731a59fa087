#include "csf/sym.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "vendor_json.hpp"

namespace csf {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::M: return "m";
        case Basis::MTilde: return "mt";
        case Basis::P: return "p";
        case Basis::E: return "e";
    }
    throw std::logic_error("bad basis tag");
}

Basis basis_from_name(const std::string& s) {
    if (s == "m") return Basis::M;
    if (s == "mt") return Basis::MTilde;
    if (s == "p") return Basis::P;
    if (s == "e") return Basis::E;
    throw std::invalid_argument("unknown basis: " + s);
}

int SymExpansion::max_weight() const {
    int w = 0;
    for (const auto& [lam, c] : coeffs_) w = std::max(w, lam.weight());
    return w;
}

void SymExpansion::add(const Partition& lam, const Rational& c) {
    if (c == 0) return;
    auto it = coeffs_.find(lam);
    if (it == coeffs_.end()) {
        coeffs_.emplace(lam, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Rational SymExpansion::coeff(const Partition& lam) const {
    auto it = coeffs_.find(lam);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

SymExpansion SymExpansion::operator+(const SymExpansion& o) const {
    if (basis_ != o.basis_) throw std::invalid_argument("basis mismatch in +");
    SymExpansion r = *this;
    for (const auto& [lam, c] : o.coeffs_) r.add(lam, c);
    return r;
}

SymExpansion SymExpansion::operator-(const SymExpansion& o) const {
    if (basis_ != o.basis_) throw std::invalid_argument("basis mismatch in -");
    SymExpansion r = *this;
    for (const auto& [lam, c] : o.coeffs_) r.add(lam, -c);
    return r;
}

SymExpansion SymExpansion::scaled(const Rational& c) const {
    SymExpansion r(basis_);
    if (c == 0) return r;
    for (const auto& [lam, c0] : coeffs_) r.coeffs_.emplace(lam, c0 * c);
    return r;
}

std::string SymExpansion::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : coeffs_) {
        if (!first) os << " + ";
        os << rational_str(c) << "*" << basis_name(basis_) << lam.str();
        first = false;
    }
    return os.str();
}

namespace {

// Multiply an m-basis expansion by p_k, staying in the m basis.
// Coefficient of m_nu in m_mu * p_k counts positions i with
// sorted(nu - k*chi_i) = mu.
SymExpansion mult_by_p(const SymExpansion& f, int k) {
    std::set<Partition> candidates;
    for (const auto& [mu, c] : f.coeffs()) {
        candidates.insert(mu.with_part(k));
        const auto& parts = mu.parts();
        for (size_t i = 0; i < parts.size(); ++i) {
            std::vector<int> v = parts;
            v[i] += k;
            candidates.insert(Partition(std::move(v)));
        }
    }
    SymExpansion out(Basis::M);
    for (const Partition& nu : candidates) {
        const auto& np = nu.parts();
        Rational coef = 0;
        for (size_t i = 0; i < np.size(); ++i) {
            if (np[i] < k) continue;
            std::vector<int> v;
            v.reserve(np.size());
            for (size_t j = 0; j < np.size(); ++j) {
                int x = (j == i) ? np[j] - k : np[j];
                if (x > 0) v.push_back(x);
            }
            coef += f.coeff(Partition(std::move(v)));
        }
        out.add(nu, coef);
    }
    return out;
}

// Multiply an m-basis expansion by e_k. Coefficient of m_nu counts size-k
// position subsets S with sorted(nu - chi_S) = mu.
SymExpansion mult_by_e(const SymExpansion& f, int k) {
    std::set<Partition> candidates;
    for (const auto& [mu, c] : f.coeffs()) {
        int len = mu.size() + k;
        std::vector<int> padded(mu.parts());
        padded.resize(len, 0);
        // Every candidate nu = sorted(padded + chi_S), |S| = k.
        std::vector<int> idx(k);
        auto rec = [&](auto&& self, int start, int depth) -> void {
            if (depth == k) {
                std::vector<int> v = padded;
                for (int t : idx) v[t] += 1;
                std::erase(v, 0);
                candidates.insert(Partition(std::move(v)));
                return;
            }
            for (int i = start; i < len; ++i) {
                idx[depth] = i;
                self(self, i + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
    }
    SymExpansion out(Basis::M);
    for (const Partition& nu : candidates) {
        const auto& np = nu.parts();
        int len = nu.size();
        if (len < k) continue;
        Rational coef = 0;
        std::vector<int> idx(k);
        auto rec = [&](auto&& self, int start, int depth) -> void {
            if (depth == k) {
                std::vector<int> v;
                v.reserve(len);
                int pos = 0;
                bool ok = true;
                for (int j = 0; j < len; ++j) {
                    int sub = (pos < k && idx[pos] == j) ? (++pos, 1) : 0;
                    int x = np[j] - sub;
                    if (x < 0) { ok = false; break; }
                    if (x > 0) v.push_back(x);
                }
                if (ok) {
                    std::sort(v.begin(), v.end(), std::greater<int>());
                    coef += f.coeff(Partition::from_sorted(v));
                }
                return;
            }
            for (int i = start; i < len; ++i) {
                idx[depth] = i;
                self(self, i + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
        out.add(nu, coef);
    }
    return out;
}

SymExpansion m_one() {
    SymExpansion x(Basis::M);
    x.add(Partition(), 1);
    return x;
}

// Per-degree transition data: partitions of d and the e/p expansions in m.
struct DegreeTable {
    std::vector<Partition> parts;
    std::map<Partition, int> index;
    std::vector<SymExpansion> e_cols; // e_lambda in m basis
    std::vector<SymExpansion> p_cols; // p_lambda in m basis
};

const DegreeTable& degree_table(int d) {
    static std::mutex mu;
    static std::map<int, DegreeTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    DegreeTable t;
    t.parts = partitions_of(d);
    for (size_t i = 0; i < t.parts.size(); ++i) t.index[t.parts[i]] = static_cast<int>(i);
    for (const Partition& lam : t.parts) {
        t.e_cols.push_back(e_in_m(lam));
        t.p_cols.push_back(p_in_m(lam));
    }
    return cache.emplace(d, std::move(t)).first->second;
}

// Solve for coordinates of a homogeneous m-basis expansion in the e or p basis
// by exact Gaussian elimination against the cached transition columns.
std::vector<Rational> solve_degree(const SymExpansion& target_m, int d, Basis b) {
    const DegreeTable& t = degree_table(d);
    int n = static_cast<int>(t.parts.size());
    const auto& cols = (b == Basis::E) ? t.e_cols : t.p_cols;
    // Dense matrix: rows = m-partitions, columns = basis elements.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1, Rational(0)));
    for (int j = 0; j < n; ++j)
        for (const auto& [lam, c] : cols[j].coeffs())
            a[t.index.at(lam)][j] = c;
    for (const auto& [lam, c] : target_m.coeffs())
        a[t.index.at(lam)][n] = c;
    for (int col = 0, row = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int r = row; r < n; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[piv], a[row]);
        Rational inv = 1 / a[row][col];
        for (int j = col; j <= n; ++j) a[row][j] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rational factor = a[r][col];
            for (int j = col; j <= n; ++j) a[r][j] -= factor * a[row][j];
        }
        ++row;
    }
    // The transition matrices are invertible, so the system is determined.
    std::vector<Rational> x(n, Rational(0));
    for (int r = 0; r < n; ++r) {
        int lead = -1;
        for (int c = 0; c < n; ++c)
            if (a[r][c] != 0) { lead = c; break; }
        if (lead >= 0) x[lead] = a[r][n];
        else if (a[r][n] != 0)
            throw std::logic_error("inconsistent basis transition system");
    }
    return x;
}

SymExpansion to_m(const SymExpansion& x) {
    SymExpansion out(Basis::M);
    switch (x.basis()) {
        case Basis::M:
            for (const auto& [lam, c] : x.coeffs()) out.add(lam, c);
            return out;
        case Basis::MTilde:
            for (const auto& [lam, c] : x.coeffs()) out.add(lam, c * lam.aut_factor());
            return out;
        case Basis::P:
            for (const auto& [lam, c] : x.coeffs()) {
                SymExpansion pm = p_in_m(lam);
                for (const auto& [mu, d] : pm.coeffs()) out.add(mu, c * d);
            }
            return out;
        case Basis::E:
            for (const auto& [lam, c] : x.coeffs()) {
                SymExpansion em = e_in_m(lam);
                for (const auto& [mu, d] : em.coeffs()) out.add(mu, c * d);
            }
            return out;
    }
    throw std::logic_error("bad basis tag");
}

SymExpansion m_to_target(const SymExpansion& m, Basis target, int degree_bound) {
    if (target == Basis::M) return m;
    SymExpansion out(target);
    if (target == Basis::MTilde) {
        for (const auto& [lam, c] : m.coeffs()) out.add(lam, c / lam.aut_factor());
        return out;
    }
    // Split by homogeneous degree and solve each block.
    std::map<int, SymExpansion> by_deg;
    for (const auto& [lam, c] : m.coeffs()) {
        int w = lam.weight();
        if (w > degree_bound)
            throw std::invalid_argument("weight " + std::to_string(w) +
                                        " exceeds basis-conversion degree bound " +
                                        std::to_string(degree_bound));
        by_deg.try_emplace(w, Basis::M).first->second.add(lam, c);
    }
    for (const auto& [d, block] : by_deg) {
        if (d == 0) {
            out.add(Partition(), block.coeff(Partition()));
            continue;
        }
        const DegreeTable& t = degree_table(d);
        auto x = solve_degree(block, d, target);
        for (size_t i = 0; i < t.parts.size(); ++i)
            out.add(t.parts[i], x[i]);
    }
    return out;
}

} // namespace

SymExpansion p_in_m(const Partition& lam) {
    SymExpansion f = m_one();
    for (int k : lam.parts()) f = mult_by_p(f, k);
    return f;
}

SymExpansion e_in_m(const Partition& lam) {
    SymExpansion f = m_one();
    for (int k : lam.parts()) f = mult_by_e(f, k);
    return f;
}

SymExpansion convert(const SymExpansion& x, Basis target, int degree_bound) {
    if (x.basis() == target) return x;
    return m_to_target(to_m(x), target, degree_bound);
}

void ZPoly::add(int zdeg, const SymExpansion& x) {
    if (x.basis() != basis_) throw std::invalid_argument("basis mismatch in ZPoly::add");
    if (zdeg < 0) throw std::invalid_argument("negative z-degree");
    auto& slot = terms_.try_emplace(zdeg, basis_).first->second;
    slot = slot + x;
    if (slot.is_zero()) terms_.erase(zdeg);
}

void ZPoly::add(int zdeg, const Partition& lam, const Rational& c) {
    SymExpansion x(basis_);
    x.add(lam, c);
    add(zdeg, x);
}

SymExpansion ZPoly::coeff(int zdeg) const {
    auto it = terms_.find(zdeg);
    return it == terms_.end() ? SymExpansion(basis_) : it->second;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    if (basis_ != o.basis_) throw std::invalid_argument("basis mismatch in ZPoly +");
    ZPoly r = *this;
    for (const auto& [k, x] : o.terms_) r.add(k, x);
    return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
    return *this + o.scaled(-1);
}

ZPoly ZPoly::scaled(const Rational& c) const {
    ZPoly r(basis_);
    if (c == 0) return r;
    for (const auto& [k, x] : terms_) r.terms_.emplace(k, x.scaled(c));
    return r;
}

ZPoly ZPoly::converted(Basis target, int degree_bound) const {
    ZPoly r(target);
    for (const auto& [k, x] : terms_) r.add(k, convert(x, target, degree_bound));
    return r;
}

std::string ZPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, x] : terms_) {
        if (!first) os << " + ";
        os << "z^" << k << "*(" << x.str() << ")";
        first = false;
    }
    return os.str();
}

namespace {

// Expand an m-basis expansion into `count` concrete variables occupying slots
// first..first+count-1 of an nvars-slot MultiPoly.
MultiPoly expand_into(const SymExpansion& m, int nvars, int first, int count) {
    MultiPoly out(nvars);
    for (const auto& [lam, c] : m.coeffs()) {
        if (lam.size() > count) continue; // stability: m_lambda vanishes
        std::vector<int> exps(count, 0);
        for (int i = 0; i < lam.size(); ++i) exps[i] = lam.parts()[i];
        std::sort(exps.begin(), exps.end());
        do {
            MultiPoly::Exponents e(nvars, 0);
            for (int i = 0; i < count; ++i) e[first + i] = static_cast<uint8_t>(exps[i]);
            out.add_term(e, c);
        } while (std::next_permutation(exps.begin(), exps.end()));
    }
    return out;
}

} // namespace

MultiPoly expand_vars(const SymExpansion& x, int N) {
    if (N < 1) throw std::invalid_argument("need at least one variable");
    return expand_into(convert(x, Basis::M), N + 1, 1, N);
}

MultiPoly expand_vars_all(const SymExpansion& x, int N) {
    if (N < 0) throw std::invalid_argument("need at least one variable");
    return expand_into(convert(x, Basis::M), N + 1, 0, N + 1);
}

MultiPoly expand_vars(const ZPoly& x, int N, bool z_is_x0) {
    if (!z_is_x0) {
        // Without a slot for z there is nowhere to put positive z-degrees.
        if (x.terms().size() > 1 || (x.terms().size() == 1 && !x.terms().count(0)))
            throw std::invalid_argument("positive z-degree requires z_is_x0");
        return x.terms().empty() ? MultiPoly(N + 1) : expand_vars(x.coeff(0), N);
    }
    MultiPoly out(N + 1);
    for (const auto& [k, sym] : x.terms()) {
        MultiPoly part = expand_vars(sym, N);
        MultiPoly z = MultiPoly::var(N + 1, 0, k);
        out += part * z;
    }
    return out;
}

namespace {

void check_symmetric(const MultiPoly& p, int N) {
    // Full adjacent-transposition check over x_1..x_N.
    for (int i = 1; i < N; ++i) {
        for (const auto& [e, c] : p.terms()) {
            MultiPoly::Exponents e2 = e;
            std::swap(e2[i], e2[i + 1]);
            if (p.coeff(e2) != c)
                throw std::invalid_argument("polynomial is not symmetric in x_1..x_N");
        }
    }
}

} // namespace

SymExpansion collect_symmetric(const MultiPoly& p, int N) {
    if (p.nvars() != N + 1) throw std::invalid_argument("expected N+1 variable slots");
    for (const auto& [e, c] : p.terms())
        if (e[0] != 0)
            throw std::invalid_argument("x_0 present; use collect_symmetric_z");
    check_symmetric(p, N);
    SymExpansion out(Basis::M);
    for (const auto& [e, c] : p.terms()) {
        bool sorted = true;
        for (int i = 1; i < N; ++i)
            if (e[i] < e[i + 1]) { sorted = false; break; }
        if (!sorted) continue;
        std::vector<int> parts;
        for (int i = 1; i <= N; ++i)
            if (e[i] > 0) parts.push_back(e[i]);
        out.add(Partition::from_sorted(std::move(parts)), c);
    }
    return out;
}

ZPoly collect_symmetric_z(const MultiPoly& p, int N) {
    if (p.nvars() != N + 1) throw std::invalid_argument("expected N+1 variable slots");
    check_symmetric(p, N);
    ZPoly out(Basis::M);
    int max_z = 0;
    for (const auto& [e, c] : p.terms()) max_z = std::max(max_z, int(e[0]));
    for (int k = 0; k <= max_z; ++k) {
        SymExpansion s = collect_symmetric(p.coeff_of(0, k), N);
        if (!s.is_zero()) out.add(k, s);
    }
    return out;
}

bool is_e_positive(const ZPoly& x, int degree_bound) {
    for (const auto& [k, sym] : x.terms()) {
        SymExpansion e = convert(sym, Basis::E, degree_bound);
        for (const auto& [lam, c] : e.coeffs())
            if (c < 0) return false;
    }
    return true;
}

SymExpansion m_mul(const SymExpansion& a, const SymExpansion& b) {
    SymExpansion am = convert(a, Basis::M), bm = convert(b, Basis::M);
    if (am.is_zero() || bm.is_zero()) return SymExpansion(Basis::M);
    int N = am.max_weight() + bm.max_weight();
    if (N == 0) {
        SymExpansion r(Basis::M);
        r.add(Partition(), am.coeff(Partition()) * bm.coeff(Partition()));
        return r;
    }
    return collect_symmetric(expand_vars(am, N) * expand_vars(bm, N), N);
}

std::string zpoly_json(const ZPoly& x) {
    nlohmann::json j;
    j["basis"] = basis_name(x.basis());
    auto& arr = j["terms"] = nlohmann::json::array();
    for (const auto& [k, sym] : x.terms()) {
        for (const auto& [lam, c] : sym.coeffs()) {
            nlohmann::json t;
            t["z"] = k;
            t["partition"] = lam.parts();
            t["coeff"] = rational_str(c);
            arr.push_back(std::move(t));
        }
    }
    return j.dump();
}

ZPoly zpoly_from_json(const std::string& s) {
    nlohmann::json j = nlohmann::json::parse(s);
    ZPoly out(basis_from_name(j.at("basis").get<std::string>()));
    for (const auto& t : j.at("terms")) {
        Partition lam(t.at("partition").get<std::vector<int>>());
        out.add(t.at("z").get<int>(), lam, parse_rational(t.at("coeff").get<std::string>()));
    }
    return out;
}

} // namespace csf
