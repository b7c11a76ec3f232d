#ifndef WHL_PADIC_HPP
#define WHL_PADIC_HPP

#include <vector>

#include "whl/ints.hpp"
#include "whl/partition.hpp"

namespace whl {

/// Extended valuation value: finite, +infinity (nu_p(0)), or -infinity
/// (the nu_p(m!) convention for negative m used inside matrix bounds).
class Val {
public:
    static Val finite(long v) { return Val(Kind::Finite, v); }
    static Val pos_inf() { return Val(Kind::PosInf, 0); }
    static Val neg_inf() { return Val(Kind::NegInf, 0); }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    long value() const;

    friend Val operator+(const Val& a, const Val& b);
    friend Val min(const Val& a, const Val& b) { return a <= b ? a : b; }
    friend bool operator==(const Val&, const Val&) = default;
    friend bool operator<(const Val& a, const Val& b);
    friend bool operator<=(const Val& a, const Val& b) { return a < b || a == b; }

private:
    enum class Kind { NegInf, Finite, PosInf };
    Val(Kind k, long v) : kind_(k), v_(v) {}
    Kind kind_;
    long v_;
};

/// nu_p of a nonzero integer; Val::pos_inf() for zero.
Val nu_val(const Int& a, unsigned long p);
/// nu_p of a nonzero integer as a plain long; throws DomainError on zero.
long nu(const Int& a, unsigned long p);

/// Digit sum of n in base p.
unsigned long digit_sum(unsigned long n, unsigned long p);

/// Legendre: nu_p(n!) = (n - kappa_p(n)) / (p - 1). Throws NotPrime.
long nu_factorial(unsigned long n, unsigned long p);

/// q-weight w_q(lambda): maximum number of q-hooks recursively removable,
/// computed on the q-abacus. w_1 = |lambda|.
unsigned long p_weight(const Partition& lambda, unsigned long q);

/// alpha_i(lambda) = w_{p^i}(lambda) - p w_{p^(i+1)}(lambda), up to the last
/// nonzero level. Satisfies sum alpha_i p^i = |lambda|.
std::vector<unsigned long> core_tower_alphas(const Partition& lambda, unsigned long p);

/// Macdonald: nu_p(H(lambda)) = (n - sum alpha_i) / (p - 1).
long macdonald_nu_h(const Partition& lambda, unsigned long p);
/// nu_p(F_lambda) = nu_p(n!) - nu_p(H(lambda)).
long macdonald_nu_f(const Partition& lambda, unsigned long p);

/// N_k threshold for the extremal bound; k <= floor((m+1)/2) uses the closed
/// form, k = floor((m+1)/2)+1 the extension N = k p.
unsigned long big_n_k(unsigned m, unsigned long p, unsigned k);

/// min of nu_p(F_lambda) over lambda |- n with 2-core of size m(m+1)/2,
/// by exhaustive enumeration. Throws NoSuchPartition when no lambda qualifies.
long ex_bruteforce(unsigned n, unsigned m, unsigned long p);

/// Lower bound nu_p(n!) - (k-1), valid for m >= 1, prime p >= 2m-1,
/// 0 <= k <= floor((m+1)/2)+1 and n < N_k. Throws DomainError outside.
long ex_lower_bound(unsigned n, unsigned m, unsigned long p, unsigned k);

} // namespace whl

#endif
