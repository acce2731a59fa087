#ifndef CSF_POLY_HPP
#define CSF_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "csf/rational.hpp"

namespace csf {

// Dense univariate polynomial over Q. Zero polynomial = empty coefficient list.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, int deg);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int i) const;
    Rational operator()(const Rational& x) const;

    bool integer_coeffs() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    UniPoly scaled(const Rational& c) const;
    UniPoly pow(int e) const;
    bool operator==(const UniPoly&) const = default;

    std::string str(const std::string& var = "q") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// rev_n(f) = q^n f(1/q): reverses the coefficient list (a_0..a_n).
UniPoly rev_n(const UniPoly& f, int n);

// Sparse multivariate polynomial over Q in variables x_0..x_{nvars-1}.
class MultiPoly {
public:
    using Exponents = std::vector<uint8_t>;

    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly var(int nvars, int i, int exp = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    void add_term(const Exponents& e, const Rational& c);
    Rational coeff(const Exponents& e) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(int e) const;
    bool operator==(const MultiPoly&) const = default;

    int total_degree() const;

    // Coefficient of x_i^k, as a polynomial in the remaining variables
    // (variable i keeps its slot with exponent 0).
    MultiPoly coeff_of(int i, int k) const;

    MultiPoly derivative(int i) const;

    std::string str() const;

private:
    int nvars_ = 0;
    std::map<Exponents, Rational> terms_;
};

// Per-variable assignment for MultiPoly::specialize.
struct VarTarget {
    enum Kind { Keep, QPower, Constant } kind = Keep;
    int qexp = 0;         // for QPower: x_i -> q^qexp
    Rational value = 0;   // for Constant
    static VarTarget keep() { return {Keep, 0, 0}; }
    static VarTarget q_power(int e) { return {QPower, e, 0}; }
    static VarTarget constant(Rational v) { return {Constant, 0, std::move(v)}; }
};

// Ring-homomorphism image. If no variable is kept, the result is univariate in q.
std::variant<UniPoly, MultiPoly> specialize(const MultiPoly& p,
                                            const std::vector<VarTarget>& assignment);

// Convenience: all targets q-powers/constants.
UniPoly specialize_uni(const MultiPoly& p, const std::vector<VarTarget>& assignment);

std::string unipoly_json(const UniPoly& f, const std::string& var = "q");
std::string multipoly_json(const MultiPoly& p);

} // namespace csf

#endif
