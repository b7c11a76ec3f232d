#ifndef WHL_FACTOR_HPP
#define WHL_FACTOR_HPP

#include <cstdint>
#include <vector>

#include "whl/ints.hpp"
#include "whl/poly.hpp"

namespace whl {

/// True iff f mod p is squarefree and deg(f mod p) == deg(f).
bool squarefree_mod(const IntPoly& f, unsigned long p);

/// Distinct-degree census of f mod p: pairs (d, number of irreducible factors
/// of degree d), d ascending. Requires squarefree_mod(f, p) and odd prime p.
std::vector<std::pair<unsigned, unsigned>> ddf_degree_census(const IntPoly& f,
                                                             unsigned long p);

/// Attainable factor degrees 0..deg(f) as subset sums of the census.
std::vector<bool> attainable_degrees(const std::vector<std::pair<unsigned, unsigned>>& census,
                                     unsigned degree);

/// Dense polynomial over F_p (odd word prime), lowest coefficient first.
struct ZpPoly {
    unsigned long p = 0;
    std::vector<unsigned long> c;
    long degree() const { return static_cast<long>(c.size()) - 1; }
};

/// Complete deterministic factorization of f mod p into monic irreducibles,
/// sorted by (degree, coefficients). Requires squarefree_mod(f, p), odd p.
std::vector<ZpPoly> factor_mod_p(const IntPoly& f, unsigned long p);

/// Ascending odd primes p with p coprime to lc(f) and f squarefree mod p.
std::vector<unsigned long> usable_primes(const IntPoly& f, unsigned count);

/// Complete factorization over Z of a primitive squarefree polynomial with
/// deg >= 1 into primitive irreducible factors (Zassenhaus: best-prime modular
/// factorization, Hensel lifting, subset recombination). Deterministic.
std::vector<IntPoly> factor_squarefree_z(const IntPoly& f);

/// Full factorization over Z: content dropped, squarefree decomposition, then
/// factor_squarefree_z per multiplicity class. Pairs (irreducible, multiplicity).
std::vector<std::pair<IntPoly, unsigned>> factor_z(const IntPoly& f);

} // namespace whl

#endif
