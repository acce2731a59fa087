#include "csf/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "vendor_json.hpp"

namespace csf {

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) {
    if (c == 0) return UniPoly();
    return UniPoly({c});
}

UniPoly UniPoly::monomial(const Rational& c, int deg) {
    if (c == 0) return UniPoly();
    std::vector<Rational> v(deg + 1, Rational(0));
    v[deg] = c;
    return UniPoly(std::move(v));
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
}

Rational UniPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

bool UniPoly::integer_coeffs() const {
    for (const auto& c : coeffs_)
        if (!is_integral(c)) return false;
    return true;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::scaled(const Rational& c) const {
    if (c == 0) return UniPoly();
    std::vector<Rational> v = coeffs_;
    for (auto& x : v) x *= c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::pow(int e) const {
    UniPoly r = UniPoly::constant(1);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << rational_str(coeffs_[i]);
        if (i > 0) os << "*" << var << "^" << i;
        first = false;
    }
    return os.str();
}

UniPoly rev_n(const UniPoly& f, int n) {
    if (f.degree() > n)
        throw std::invalid_argument("rev_n: degree exceeds bound");
    std::vector<Rational> v(n + 1, Rational(0));
    for (int i = 0; i <= n; ++i) v[n - i] = f.coeff(i);
    return UniPoly(std::move(v));
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::var(int nvars, int i, int exp) {
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e.at(i) = static_cast<uint8_t>(exp);
    p.add_term(e, 1);
    return p;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    MultiPoly r(nvars_);
    Exponents e(nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = static_cast<uint8_t>(e1[i] + e2[i]);
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, c0] : terms_) r.terms_.emplace(e, c0 * c);
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    MultiPoly r = MultiPoly::constant(nvars_, 1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (auto x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

MultiPoly MultiPoly::coeff_of(int i, int k) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == k) {
            Exponents e2 = e;
            e2[i] = 0;
            r.add_term(e2, c);
        }
    }
    return r;
}

MultiPoly MultiPoly::derivative(int i) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents e2 = e;
        e2[i] -= 1;
        r.add_term(e2, c * e[i]);
    }
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        os << rational_str(c);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << "*x" << i;
            if (e[i] > 1) os << "^" << int(e[i]);
        }
        first = false;
    }
    return os.str();
}

std::variant<UniPoly, MultiPoly> specialize(const MultiPoly& p,
                                            const std::vector<VarTarget>& assignment) {
    if (static_cast<int>(assignment.size()) != p.nvars())
        throw std::invalid_argument("assignment must cover all variables");
    bool any_keep = false;
    for (const auto& t : assignment)
        if (t.kind == VarTarget::Keep) any_keep = true;

    if (!any_keep) {
        // Pure univariate image in q.
        std::vector<Rational> acc;
        for (const auto& [e, c] : p.terms()) {
            int qdeg = 0;
            Rational coef = c;
            for (int i = 0; i < p.nvars(); ++i) {
                if (e[i] == 0) continue;
                const auto& t = assignment[i];
                if (t.kind == VarTarget::QPower) {
                    qdeg += t.qexp * e[i];
                } else {
                    Rational v = 1;
                    for (int j = 0; j < e[i]; ++j) v *= t.value;
                    coef *= v;
                }
            }
            if (static_cast<int>(acc.size()) <= qdeg) acc.resize(qdeg + 1, Rational(0));
            acc[qdeg] += coef;
        }
        return UniPoly(std::move(acc));
    }

    // Keep-variables retain their slots; q is not representable here, so
    // QPower targets are disallowed when some variable is kept.
    for (const auto& t : assignment)
        if (t.kind == VarTarget::QPower)
            throw std::invalid_argument("q-power targets require a full specialization");
    MultiPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        MultiPoly::Exponents e2(p.nvars(), 0);
        Rational coef = c;
        for (int i = 0; i < p.nvars(); ++i) {
            if (assignment[i].kind == VarTarget::Keep) {
                e2[i] = e[i];
            } else {
                for (int j = 0; j < e[i]; ++j) coef *= assignment[i].value;
            }
        }
        r.add_term(e2, coef);
    }
    return r;
}

UniPoly specialize_uni(const MultiPoly& p, const std::vector<VarTarget>& assignment) {
    auto v = specialize(p, assignment);
    if (!std::holds_alternative<UniPoly>(v))
        throw std::invalid_argument("specialization did not produce a univariate result");
    return std::get<UniPoly>(std::move(v));
}

std::string unipoly_json(const UniPoly& f, const std::string& var) {
    nlohmann::json j;
    j["var"] = var;
    auto& arr = j["coeffs"] = nlohmann::json::array();
    for (const auto& c : f.coeffs()) arr.push_back(rational_str(c));
    return j.dump();
}

std::string multipoly_json(const MultiPoly& p) {
    nlohmann::json j;
    j["nvars"] = p.nvars();
    auto& arr = j["terms"] = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json t;
        t["exps"] = std::vector<int>(e.begin(), e.end());
        t["coeff"] = rational_str(c);
        arr.push_back(std::move(t));
    }
    return j.dump();
}

} // namespace csf
