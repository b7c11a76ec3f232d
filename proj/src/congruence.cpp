#include "whl/congruence.hpp"

#include <algorithm>
#include <set>

#include "whl/hermite.hpp"

namespace whl {

Int degree_vandermonde(const Partition& lambda) {
    const DegreeSequence d = degree_sequence(lambda);
    Int v = 1;
    for (std::size_t j = 1; j < d.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            v *= Int(d[j]) - Int(d[i]);
    return v;
}

bool carlitz_check(unsigned long n, unsigned long m) {
    if (m % 2 == 0) throw EvenModulus("Carlitz congruence needs an odd modulus");
    if (m < 3) throw DomainError("Carlitz congruence needs m >= 3");
    const Int mod(m);
    const IntPoly lhs = hermite_he(n + m);
    const IntPoly rhs = hermite_he(n).times_x_power(m);
    return mod_reduce(lhs, mod) == mod_reduce(rhs, mod);
}

SchurReduction schur_reduce(const Partition& lambda, unsigned long m) {
    if (m % 2 == 0) throw EvenModulus("Schur reduction needs an odd modulus");
    if (m < 3) throw DomainError("Schur reduction needs m >= 3");
    Int g;
    Int mod(m);
    Int delta = degree_vandermonde(lambda);
    mpz_gcd(g.get_mpz_t(), mod.get_mpz_t(), delta.get_mpz_t());
    if (g != 1)
        throw ResonantModulus("modulus shares a factor with Delta(n_lambda)");

    const DegreeSequence degrees = degree_sequence(lambda);
    DegreeSequence residues(degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i) residues[i] = degrees[i] % m;
    std::set<unsigned long> distinct(residues.begin(), residues.end());
    if (distinct.size() != residues.size())
        throw InternalError("residues collide despite coprime modulus");

    SchurReduction red;
    red.mu = partition_from_degrees(residues);
    red.shift = lambda.size() - red.mu.size();
    return red;
}

bool verify_schur(const Partition& lambda, unsigned long m) {
    const SchurReduction red = schur_reduce(lambda, m);
    const Int mod(m);
    const IntPoly lhs = mod_reduce(hermite_lambda(lambda), mod);
    const IntPoly rhs =
        mod_reduce(hermite_lambda(red.mu).times_x_power(red.shift), mod);
    return lhs == rhs;
}

std::vector<CongruenceCandidate> congruence_prime_menu(const Partition& lambda,
                                                       unsigned long prime_cap) {
    std::vector<CongruenceCandidate> menu;
    const unsigned long s = core_size(lambda);
    const bool scenario_applies = lambda.stripped().length() <= 2;
    for (unsigned long p = 3; p <= prime_cap; p += 2) {
        if (!is_prime(p)) continue;
        if (p <= std::max<unsigned long>(2, s)) continue;
        CongruenceCandidate cand;
        try {
            SchurReduction red = schur_reduce(lambda, p);
            cand.mu = std::move(red.mu);
            cand.shift = red.shift;
        } catch (const ResonantModulus&) {
            continue;
        }
        // He_mu mod p = x^u Q with Q(0) nonzero mod p; ell = deg Q.
        const IntPoly he_mu = mod_reduce(hermite_lambda(cand.mu), Int(p));
        if (he_mu.is_zero()) continue;  // cannot happen: He_mu is monic
        cand.prime = p;
        cand.ell = he_mu.degree() - static_cast<long>(he_mu.trailing_zero_exponent());
        cand.k_predicted = static_cast<long>(p) - static_cast<long>(s) - 1;
        cand.lemma_certified = scenario_applies;
        if (cand.k_predicted > cand.ell) menu.push_back(std::move(cand));
    }
    std::stable_sort(menu.begin(), menu.end(),
                     [](const CongruenceCandidate& a, const CongruenceCandidate& b) {
                         return a.width() > b.width();
                     });
    return menu;
}

} // namespace whl
