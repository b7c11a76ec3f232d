#ifndef WHL_CONGRUENCE_HPP
#define WHL_CONGRUENCE_HPP

#include <vector>

#include "whl/ints.hpp"
#include "whl/partition.hpp"
#include "whl/poly.hpp"

namespace whl {

/// Carlitz: He_{n+m} = x^m He_n (mod m) for odd m >= 3, by exact reduction.
/// Throws EvenModulus for even m.
bool carlitz_check(unsigned long n, unsigned long m);

struct SchurReduction {
    Partition mu;             // degrees of lambda reduced mod m, re-sorted
    unsigned long shift = 0;  // |lambda| - |mu|
};

/// Theorem-level reduction: for odd m >= 3 coprime to Delta(n_lambda), the
/// residues of the degree sequence are pairwise distinct and define mu with
/// He_lambda = x^shift He_mu (mod m). Throws EvenModulus / ResonantModulus.
SchurReduction schur_reduce(const Partition& lambda, unsigned long m);

/// Coefficientwise verification of the congruence behind schur_reduce.
bool verify_schur(const Partition& lambda, unsigned long m);

/// Delta(n_lambda), the Vandermonde of the degree sequence.
Int degree_vandermonde(const Partition& lambda);

struct CongruenceCandidate {
    unsigned long prime = 0;
    Partition mu;
    unsigned long shift = 0;
    long ell = 0;          // low-degree divisibility margin (deg of Q)
    long k_predicted = 0;  // exclusion cap p - |core| - 1
    // True when the partition has at most two parts, where the slope theorem
    // certifies k_predicted without building the polygon.
    bool lemma_certified = false;
    long width() const { return k_predicted - ell; }
};

/// Candidate primes p <= prime_cap with p coprime to Delta(n_lambda), each
/// paired with the factor-degree exclusion interval [ell+1, k] it would
/// certify for partitions of at most two parts; ranked widest first. The
/// prediction is advisory; the engine re-certifies with filaseta_exclude.
std::vector<CongruenceCandidate> congruence_prime_menu(const Partition& lambda,
                                                       unsigned long prime_cap);

} // namespace whl

#endif
