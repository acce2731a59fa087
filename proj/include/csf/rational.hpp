#ifndef CSF_RATIONAL_HPP
#define CSF_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace csf {

using Rational = mpq_class;
using Integer = mpz_class;

// Exact string form "num" or "num/den", den > 0.
inline std::string rational_str(const Rational& r) {
    return r.get_str();
}

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rational& r) {
    return r.get_den() == 1;
}

inline Integer to_integer(const Rational& r) {
    if (!is_integral(r))
        throw std::domain_error("expected integral value, got " + rational_str(r));
    return r.get_num();
}

} // namespace csf

#endif
