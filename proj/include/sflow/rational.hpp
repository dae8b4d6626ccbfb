#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sflow {

// Exact rational scalar; all bicomplex / expansion coefficients stay exact
// until the evaluation boundary.
using Rational = mpq_class;

inline Rational ratFactorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

inline Rational ratBinomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

inline double toDouble(const Rational& r) { return r.get_d(); }

inline std::string toString(const Rational& r) { return r.get_str(); }

} // namespace sflow
