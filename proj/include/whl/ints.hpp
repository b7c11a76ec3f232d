#ifndef WHL_INTS_HPP
#define WHL_INTS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "whl/errors.hpp"

namespace whl {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int pow_ui(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw InternalError("exact integer division left a remainder");
    return q;
}

// n(n-1)...(n-k+1); zero once the product crosses zero (k > n).
inline Int falling_factorial(unsigned long n, unsigned long k) {
    Int r = 1;
    for (unsigned long t = 0; t < k; ++t) {
        if (t > n) return 0;
        r *= static_cast<unsigned long>(n - t);
        if (r == 0) return 0;
    }
    return r;
}

inline bool is_prime(unsigned long n) {
    if (n < 2) return false;
    Int m(static_cast<unsigned long>(n));
    return mpz_probab_prime_p(m.get_mpz_t(), 40) > 0;
}

inline std::string to_decimal(const Int& v) { return v.get_str(); }
inline std::string to_decimal(const Rat& v) { return v.get_str(); }

} // namespace whl

#endif
