#ifndef CSF_SYM_HPP
#define CSF_SYM_HPP

#include <map>
#include <string>

#include "csf/partition.hpp"
#include "csf/poly.hpp"
#include "csf/rational.hpp"

namespace csf {

enum class Basis { M, MTilde, P, E };

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& s);

// Symmetric function as a basis-tagged partition -> coefficient map.
// Mixed weights are allowed; no zero coefficients are stored.
class SymExpansion {
public:
    explicit SymExpansion(Basis b = Basis::M) : basis_(b) {}

    Basis basis() const { return basis_; }
    const std::map<Partition, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int max_weight() const;

    void add(const Partition& lam, const Rational& c);
    Rational coeff(const Partition& lam) const;

    SymExpansion operator+(const SymExpansion& o) const;
    SymExpansion operator-(const SymExpansion& o) const;
    SymExpansion scaled(const Rational& c) const;
    bool operator==(const SymExpansion&) const = default;

    std::string str() const;

private:
    Basis basis_;
    std::map<Partition, Rational> coeffs_;
};

// Default supported degree bound for basis transition tables.
inline constexpr int kDefaultDegreeBound = 12;

SymExpansion convert(const SymExpansion& x, Basis target,
                     int degree_bound = kDefaultDegreeBound);

// Element of Lambda[z]: z-degree -> symmetric expansion.
class ZPoly {
public:
    explicit ZPoly(Basis b = Basis::M) : basis_(b) {}

    Basis basis() const { return basis_; }
    const std::map<int, SymExpansion>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(int zdeg, const SymExpansion& x);
    void add(int zdeg, const Partition& lam, const Rational& c);
    SymExpansion coeff(int zdeg) const;

    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly scaled(const Rational& c) const;
    ZPoly converted(Basis target, int degree_bound = kDefaultDegreeBound) const;
    bool operator==(const ZPoly&) const = default;

    std::string str() const;

private:
    Basis basis_;
    std::map<int, SymExpansion> terms_;
};

// Substitute concrete variables x_1..x_N (slots 1..N of an (N+1)-variable
// MultiPoly; slot 0 is reserved for z when expanding a ZPoly).
MultiPoly expand_vars(const SymExpansion& x, int N);
MultiPoly expand_vars(const ZPoly& x, int N, bool z_is_x0 = true);

// Substitute all of x_0..x_N (N+1 concrete variables, slot 0 included).
MultiPoly expand_vars_all(const SymExpansion& x, int N);

// Inverse of expand_vars on its image (m basis). The input must be symmetric
// in x_1..x_N; x_0, when distinguished, becomes the z grading.
SymExpansion collect_symmetric(const MultiPoly& p, int N);
ZPoly collect_symmetric_z(const MultiPoly& p, int N);

bool is_e_positive(const ZPoly& x, int degree_bound = kDefaultDegreeBound);

// Product of symmetric expansions in the m basis (used by transition tables
// and the powersum oracles).
SymExpansion m_mul(const SymExpansion& a, const SymExpansion& b);

// p_lambda and e_lambda expanded in the m basis.
SymExpansion p_in_m(const Partition& lam);
SymExpansion e_in_m(const Partition& lam);

std::string zpoly_json(const ZPoly& x);
ZPoly zpoly_from_json(const std::string& s);

} // namespace csf

#endif
