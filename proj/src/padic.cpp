#include "whl/padic.hpp"

#include <algorithm>

namespace whl {

long Val::value() const {
    if (!is_finite()) throw DomainError("infinite valuation has no finite value");
    return v_;
}

Val operator+(const Val& a, const Val& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) {
        if (a.is_pos_inf() || b.is_pos_inf())
            throw DomainError("adding opposite infinities");
        return Val::neg_inf();
    }
    if (a.is_pos_inf() || b.is_pos_inf()) return Val::pos_inf();
    return Val::finite(a.v_ + b.v_);
}

bool operator<(const Val& a, const Val& b) {
    auto rank = [](const Val& v) { return v.is_neg_inf() ? -1 : (v.is_pos_inf() ? 1 : 0); };
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    return a.is_finite() && a.v_ < b.v_;
}

Val nu_val(const Int& a, unsigned long p) {
    if (a == 0) return Val::pos_inf();
    return Val::finite(nu(a, p));
}

long nu(const Int& a, unsigned long p) {
    if (a == 0) throw DomainError("nu_p(0) is infinite");
    Int pp(p);
    Int rest;
    auto v = mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), pp.get_mpz_t());
    return static_cast<long>(v);
}

unsigned long digit_sum(unsigned long n, unsigned long p) {
    unsigned long s = 0;
    while (n) {
        s += n % p;
        n /= p;
    }
    return s;
}

long nu_factorial(unsigned long n, unsigned long p) {
    if (!is_prime(p)) throw NotPrime("nu_p(n!) requires a prime p");
    return static_cast<long>((n - digit_sum(n, p)) / (p - 1));
}

unsigned long p_weight(const Partition& lambda, unsigned long q) {
    if (q == 0) throw DomainError("q-weight requires q >= 1");
    if (q == 1) return lambda.size();
    const DegreeSequence d = degree_sequence(lambda);
    // Beads at the degree positions on q runners; the weight is the total
    // number of one-step upward slides needed to pack every runner.
    std::vector<std::vector<unsigned long>> depths(q);
    for (unsigned long pos : d) depths[pos % q].push_back(pos / q);
    unsigned long w = 0;
    for (auto& runner : depths) {
        std::sort(runner.begin(), runner.end());
        for (std::size_t i = 0; i < runner.size(); ++i) w += runner[i] - i;
    }
    return w;
}

std::vector<unsigned long> core_tower_alphas(const Partition& lambda, unsigned long p) {
    if (p < 2) throw DomainError("core tower requires p >= 2");
    const unsigned long n = lambda.size();
    std::vector<unsigned long> alphas;
    unsigned long qi = 1;
    while (true) {
        unsigned long wi = p_weight(lambda, qi);
        unsigned long wnext = (qi <= n / p) ? p_weight(lambda, qi * p) : 0;
        alphas.push_back(wi - p * wnext);
        if (wnext == 0) break;
        qi *= p;
    }
    unsigned long check = 0, power = 1;
    for (unsigned long a : alphas) {
        check += a * power;
        power *= p;
    }
    if (check != n) throw InternalError("core tower does not resum to |lambda|");
    return alphas;
}

long macdonald_nu_h(const Partition& lambda, unsigned long p) {
    if (!is_prime(p)) throw NotPrime("Macdonald's formula requires a prime p");
    const auto alphas = core_tower_alphas(lambda, p);
    unsigned long sum = 0;
    for (unsigned long a : alphas) sum += a;
    return static_cast<long>((lambda.size() - sum) / (p - 1));
}

long macdonald_nu_f(const Partition& lambda, unsigned long p) {
    return nu_factorial(lambda.size(), p) - macdonald_nu_h(lambda, p);
}

unsigned long big_n_k(unsigned m, unsigned long p, unsigned k) {
    const unsigned top = (m + 1) / 2;
    if (k > top + 1) throw DomainError("N_k defined only for k <= floor((m+1)/2)+1");
    if (k == top + 1) return static_cast<unsigned long>(k) * p;
    const long core = static_cast<long>(m) * (m + 1) / 2;
    const long v = static_cast<long>(k) * static_cast<long>(p) -
                   static_cast<long>(k) * (2 * (static_cast<long>(m) - k) + 1) + core;
    return static_cast<unsigned long>(v);
}

long ex_bruteforce(unsigned n, unsigned m, unsigned long p) {
    if (!is_prime(p)) throw NotPrime("ex(n,m,p) requires a prime p");
    const unsigned long target_core = static_cast<unsigned long>(m) * (m + 1) / 2;
    bool found = false;
    long best = 0;
    for (const Partition& lambda : partitions_of(n)) {
        if (core_size(lambda) != target_core) continue;
        long v = macdonald_nu_f(lambda, p);
        if (!found || v < best) best = v;
        found = true;
    }
    if (!found)
        throw NoSuchPartition("no partition of n has a 2-core of the requested size");
    return best;
}

long ex_lower_bound(unsigned n, unsigned m, unsigned long p, unsigned k) {
    if (m < 1) throw DomainError("ex lower bound requires m >= 1");
    if (!is_prime(p) || p + 1 < 2 * static_cast<unsigned long>(m))
        throw DomainError("ex lower bound requires a prime p >= 2m-1");
    if (k > (m + 1) / 2 + 1) throw DomainError("k out of range");
    if (n >= big_n_k(m, p, k)) throw DomainError("bound requires n < N_k");
    return nu_factorial(n, p) - (static_cast<long>(k) - 1);
}

} // namespace whl
