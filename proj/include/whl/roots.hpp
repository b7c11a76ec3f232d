#ifndef WHL_ROOTS_HPP
#define WHL_ROOTS_HPP

#include <vector>

#include "whl/ints.hpp"
#include "whl/partition.hpp"
#include "whl/poly.hpp"

namespace whl {

/// Sturm chain of f (signed remainder sequence, primitive scaling).
std::vector<IntPoly> sturm_chain(const IntPoly& f);

/// Distinct real roots of the square-free part in the half-open interval
/// (a, b], and over the whole line / half lines via the *_inf entry points.
long sturm_variations_at(const std::vector<IntPoly>& chain, const Rat& x);
long sturm_variations_neg_inf(const std::vector<IntPoly>& chain);
long sturm_variations_pos_inf(const std::vector<IntPoly>& chain);

/// (positive, negative) distinct real root counts of the square-free part of
/// R. Requires R nonzero with R(0) != 0.
std::pair<long, long> count_real_roots(const IntPoly& r);

struct RootCountReport {
    unsigned long zero_multiplicity = 0;
    long positive_real = 0;   // with multiplicity
    long negative_real = 0;
    long nonreal = 0;
    bool squarefree_nonzero = true;
};

/// Exact root census of He_lambda: x = 0 multiplicity, signed real counts via
/// Sturm on the square-free decomposition, nonreal by subtraction. Real-root
/// locations are double-checked against the modulus bound.
RootCountReport analyze(const Partition& lambda);

/// Predicted census for a semi-degenerate degree sequence.
RootCountReport gomez_counts(const Partition& lambda);

/// B^2 = 4(n-1)^2/(n+2) with n = |lambda|: every real or purely imaginary
/// root z of He_lambda has |z|^2 <= B^2.
Rat root_modulus_bound_sq(const Partition& lambda);

/// For an even polynomial R(x) = S(x^2) with R(0) != 0: true iff every real
/// and every purely imaginary root z satisfies |z|^2 < c (strict) or <= c.
bool roots_within_sq(const IntPoly& r, const Rat& c, bool strict);

struct SeriesCoefficients {
    enum class Kind { U1, U2 } kind = Kind::U1;
    unsigned long n = 0, k = 0;
    long offset = 0;                 // power of the leading term: k+1 or -k
    std::vector<Rat> coeffs;         // coeffs[j] multiplies z^(offset + j)
    bool terminates = false;
};

/// Frobenius solutions of u'' - 2 z u' + (2n - k(k+1)/z^2) u = 0 about 0.
SeriesCoefficients frobenius_series(unsigned long n, unsigned long k,
                                    SeriesCoefficients::Kind kind, unsigned terms);

/// Termwise ODE check of a computed series, through its stored coefficients.
bool frobenius_ode_check(const SeriesCoefficients& series);

/// For n-k odd: the terminating u1 polynomial is proportional to
/// He_lambda(sqrt(2) z) / z^binom(k+1,2) for lambda = (n,k,k-1,...,1),
/// compared exactly on the parity coefficient lattice.
bool frobenius_matches_wronskian(unsigned long n, unsigned long k);

/// gcd(R_lambda1, R_lambda2) nonconstant over the rationals.
bool shared_nonzero_root(const Partition& lambda1, const Partition& lambda2);

} // namespace whl

#endif
