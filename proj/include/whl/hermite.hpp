#ifndef WHL_HERMITE_HPP
#define WHL_HERMITE_HPP

#include "whl/partition.hpp"
#include "whl/poly.hpp"

namespace whl {

/// Probabilists' Hermite polynomial He_n (monic, integer coefficients).
IntPoly hermite_he(unsigned long n);

/// Physicists' Hermite polynomial H_n (leading coefficient 2^n).
IntPoly hermite_classical(unsigned long n);

/// He_lambda as the Wronskian determinant of He_{n_i} divided exactly by the
/// Vandermonde of the degree sequence. Quadratic-in-degree heavy; the test
/// oracle route.
IntPoly wronskian_he_oracle(const Partition& lambda);

/// He_lambda from the character coefficient formula with memoized characters.
/// The default construction route.
IntPoly hermite_lambda(const Partition& lambda);

struct RemainderSplit {
    unsigned long s = 0;   // |2-core of lambda|
    IntPoly remainder;     // R_lambda, nonzero at 0, even exponents only
};

RemainderSplit remainder_split(const Partition& lambda);

/// The remainder polynomial alone.
IntPoly remainder_poly(const Partition& lambda);

/// Coefficient of x^(n-2) in He_lambda: -(1/2) sum lambda_i (lambda_i - (2i-1)).
/// Requires |lambda| >= 2; asserted to match the constructed polynomial.
Int subleading_coefficient(const Partition& lambda);

/// He_{(n,n)}(0) closed form; odd n gives a perfect square, even n gives
/// (n+1) times a perfect square.
Int he_nn_at_zero(unsigned long n);

/// Verifies Wr[H_{n_1},...,H_{n_r}] = 2^((|lambda|+r(r-1))/2) Delta(n_lambda)
/// He_lambda(sqrt(2) x) exactly, comparing coefficients on the parity lattice.
bool classical_wronskian_relation_check(const Partition& lambda);

} // namespace whl

#endif
