#include "whl/roots.hpp"

#include <algorithm>

#include "whl/hermite.hpp"

namespace whl {

namespace {

// Divide by the (positive) content only; unlike primitive_part this keeps the
// sign, which Sturm chains depend on.
IntPoly scale_down(const IntPoly& f) {
    if (f.is_zero()) return f;
    Int g = f.content();
    std::vector<Int> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = exact_div(f.coeff(i), g);
    return IntPoly(std::move(c));
}

long count_variations(const std::vector<int>& signs) {
    long v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

IntPoly squarefree_part(const IntPoly& f) {
    IntPoly g = gcd_z(f, f.derivative());
    if (g.degree() < 1) return f;
    return exact_div(f, g);
}

// Even part: R(x) = S(x^2). Requires even exponents only.
IntPoly even_substitution(const IntPoly& r) {
    if (!r.even_exponents_only())
        throw DomainError("polynomial is not even in x");
    std::vector<Int> c(static_cast<std::size_t>(r.degree() / 2) + 1);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = r.coeff(2 * i);
    return IntPoly(std::move(c));
}

// Distinct real roots of the square-free input in (0, inf), (-inf, 0).
std::pair<long, long> signed_counts(const IntPoly& squarefree) {
    if (squarefree.degree() < 1) return {0, 0};
    const auto chain = sturm_chain(squarefree);
    const long at_zero = sturm_variations_at(chain, Rat(0));
    const long at_pos = sturm_variations_pos_inf(chain);
    const long at_neg = sturm_variations_neg_inf(chain);
    return {at_zero - at_pos, at_neg - at_zero};
}

} // namespace

std::vector<IntPoly> sturm_chain(const IntPoly& f) {
    std::vector<IntPoly> chain;
    if (f.is_zero()) return chain;
    chain.push_back(scale_down(f));
    if (f.degree() < 1) return chain;
    chain.push_back(scale_down(f.derivative()));
    while (!chain.back().is_zero() && chain.back().degree() >= 0) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        if (b.degree() < 1) break;
        IntPoly rem = pseudo_rem(a, b);
        if (rem.is_zero()) break;
        // prem scales by lc(b)^(deg a - deg b + 1); flip back when that is
        // negative so the chain stays a Sturm sequence, then negate.
        const long delta = a.degree() - b.degree() + 1;
        const bool negative_scale = sgn(b.leading()) < 0 && (delta % 2 != 0);
        IntPoly next = negative_scale ? rem : -rem;
        chain.push_back(scale_down(next));
    }
    return chain;
}

long sturm_variations_at(const std::vector<IntPoly>& chain, const Rat& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const IntPoly& f : chain) signs.push_back(f.sign_at(x));
    return count_variations(signs);
}

long sturm_variations_neg_inf(const std::vector<IntPoly>& chain) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const IntPoly& f : chain) signs.push_back(f.sign_at_neg_inf());
    return count_variations(signs);
}

long sturm_variations_pos_inf(const std::vector<IntPoly>& chain) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const IntPoly& f : chain) signs.push_back(f.sign_at_pos_inf());
    return count_variations(signs);
}

std::pair<long, long> count_real_roots(const IntPoly& r) {
    if (r.is_zero()) throw DomainError("count_real_roots needs a nonzero polynomial");
    if (r.coeff(0) == 0) throw DomainError("count_real_roots requires R(0) != 0");
    if (r.degree() < 1) return {0, 0};
    return signed_counts(squarefree_part(r));
}

RootCountReport analyze(const Partition& lambda) {
    const IntPoly he = hermite_lambda(lambda);
    const unsigned long n = lambda.size();
    const unsigned long s = he.trailing_zero_exponent();
    if (s != core_size(lambda))
        throw InternalError("zero multiplicity differs from |2-core|");
    const IntPoly r = he.shift_down(s);

    RootCountReport report;
    report.zero_multiplicity = s;
    if (r.degree() < 1) return report;

    const auto decomposition = squarefree_decomposition(r);
    report.squarefree_nonzero = true;
    for (const auto& [part, mult] : decomposition) {
        if (mult > 1) report.squarefree_nonzero = false;
        auto [pos, neg] = signed_counts(part);
        report.positive_real += mult * pos;
        report.negative_real += mult * neg;
    }
    report.nonreal = static_cast<long>(n - s) - report.positive_real - report.negative_real;

    // Double-entry bookkeeping: recount inside (-B, B) with B beyond the root
    // modulus bound; totals must agree with the half-line counts.
    const Rat bsq = root_modulus_bound_sq(lambda);
    Int num_over_den = bsq.get_num() / bsq.get_den();
    Int b_int;
    mpz_sqrt(b_int.get_mpz_t(), num_over_den.get_mpz_t());
    b_int += 1;
    long bounded = 0;
    for (const auto& [part, mult] : decomposition) {
        if (part.degree() < 1) continue;
        const auto chain = sturm_chain(part);
        bounded += mult * (sturm_variations_at(chain, Rat(-b_int)) -
                           sturm_variations_at(chain, Rat(b_int)));
    }
    if (bounded != report.positive_real + report.negative_real)
        throw InternalError("bounded-interval root recount disagrees with half-line counts");
    return report;
}

RootCountReport gomez_counts(const Partition& lambda) {
    const long d = d_lambda(lambda);
    const std::size_t r = lambda.length();
    long alternating = 0;
    for (std::size_t i = 0; i < r; ++i) {
        long term = static_cast<long>(lambda.part(i));
        alternating += (i % 2 == 0) ? term : -term;
    }
    const long parity = static_cast<long>(r % 2);
    const long abs_term = std::abs(d + parity);
    if (abs_term % 2 != 0)
        throw InternalError("root-count prediction is not integral");
    const long inner = alternating - abs_term / 2;
    if (inner % 2 != 0)
        throw InternalError("root-count prediction is not integral");

    RootCountReport report;
    report.zero_multiplicity = static_cast<unsigned long>(d * (d + 1) / 2);
    report.positive_real = inner / 2;
    report.negative_real = report.positive_real;
    report.nonreal = static_cast<long>(lambda.size()) -
                     static_cast<long>(report.zero_multiplicity) - 2 * report.positive_real;
    return report;
}

Rat root_modulus_bound_sq(const Partition& lambda) {
    const unsigned long n = lambda.size();
    Rat b(Int(4) * Int(n - 1) * Int(n - 1), Int(n + 2));
    if (n == 0) b = 0;
    b.canonicalize();
    return b;
}

bool roots_within_sq(const IntPoly& r, const Rat& c, bool strict) {
    if (r.is_zero() || r.coeff(0) == 0)
        throw DomainError("roots_within_sq requires R(0) != 0");
    if (r.degree() < 1) return true;
    const IntPoly s = squarefree_part(even_substitution(r));
    if (s.degree() < 1) return true;
    const auto chain = sturm_chain(s);
    const long total = sturm_variations_neg_inf(chain) - sturm_variations_pos_inf(chain);
    const long inside = sturm_variations_at(chain, -c) - sturm_variations_at(chain, c);
    const bool at_minus_c = s.sign_at(-c) == 0;
    const bool at_c = s.sign_at(c) == 0;
    const long within_closed = inside + (at_minus_c ? 1 : 0);
    if (total - within_closed > 0) return false;
    if (strict && (at_c || at_minus_c)) return false;
    return true;
}

SeriesCoefficients frobenius_series(unsigned long n, unsigned long k,
                                    SeriesCoefficients::Kind kind, unsigned terms) {
    if (k < 1 || n < k) throw DomainError("frobenius series requires n >= k >= 1");
    if (terms < 1) throw DomainError("at least one term required");
    SeriesCoefficients series;
    series.kind = kind;
    series.n = n;
    series.k = k;
    series.coeffs.assign(terms, Rat(0));
    series.coeffs[0] = 1;
    const long nn = static_cast<long>(n), kk = static_cast<long>(k);
    if (kind == SeriesCoefficients::Kind::U1) {
        series.offset = kk + 1;
        series.terminates = (n - k) % 2 == 1;
        for (unsigned j = 2; j < terms; j += 2) {
            const long jj = static_cast<long>(j);
            Rat ratio(Int(-2 * (nn - kk - jj + 1)), Int(jj * (2 * kk + 1 + jj)));
            ratio.canonicalize();
            series.coeffs[j] = series.coeffs[j - 2] * ratio;
        }
    } else {
        series.offset = -kk;
        series.terminates = (n - k) % 2 == 0;
        for (unsigned j = 2; j < terms; j += 2) {
            const long jj = static_cast<long>(j);
            if (jj == 2 * kk + 1) continue;  // never: odd index
            Rat ratio(Int(-2 * (nn + kk - jj + 2)), Int(jj * (jj - 2 * kk - 1)));
            ratio.canonicalize();
            series.coeffs[j] = series.coeffs[j - 2] * ratio;
        }
    }
    return series;
}

bool frobenius_ode_check(const SeriesCoefficients& series) {
    const long alpha = series.offset;
    const long n = static_cast<long>(series.n);
    const long k = static_cast<long>(series.k);
    for (std::size_t j = 0; j < series.coeffs.size(); ++j) {
        const long jj = static_cast<long>(j);
        const Rat& cj = series.coeffs[j];
        const Rat prev = j >= 2 ? series.coeffs[j - 2] : Rat(0);
        Rat lhs = cj * Rat(Int((alpha + jj) * (alpha + jj - 1) - k * (k + 1)));
        Rat rhs = prev * Rat(Int(2 * (alpha + jj - 2) - 2 * n));
        if (lhs != rhs) return false;
    }
    return true;
}

bool frobenius_matches_wronskian(unsigned long n, unsigned long k) {
    if (k < 1 || n < k || (n - k) % 2 != 1)
        throw DomainError("termination needs n - k odd with n >= k >= 1");
    std::vector<unsigned> parts;
    parts.push_back(static_cast<unsigned>(n));
    for (unsigned v = static_cast<unsigned>(k); v >= 1; --v) parts.push_back(v);
    const Partition lambda(parts);

    const unsigned terms = static_cast<unsigned>(n - k) + 1;
    const auto series = frobenius_series(n, k, SeriesCoefficients::Kind::U1, terms);
    const IntPoly he = hermite_lambda(lambda);
    const unsigned long s0 = k * (k + 1) / 2;

    // Both sides live on one parity lattice; compare cross-ratios with the
    // sqrt(2)-powers reduced to exact powers of 2 relative to the first
    // nonzero exponent.
    long first = -1;
    for (long e = 0; e + static_cast<long>(s0) <= he.degree(); ++e) {
        const Int& c = he.coeff(static_cast<std::size_t>(e + static_cast<long>(s0)));
        Rat u(0);
        if (e >= series.offset &&
            static_cast<std::size_t>(e - series.offset) < series.coeffs.size())
            u = series.coeffs[static_cast<std::size_t>(e - series.offset)];
        if (c == 0 && u == 0) continue;
        if (c == 0 || u == 0) return false;
        if (first < 0) {
            first = e;
            continue;
        }
        if ((e - first) % 2 != 0) return false;
        // u_e / u_first must equal c_e 2^((e-first)/2) / c_first
        const Rat lhs = series.coeffs[static_cast<std::size_t>(e - series.offset)] /
                        series.coeffs[static_cast<std::size_t>(first - series.offset)];
        Rat rhs(he.coeff(static_cast<std::size_t>(e + static_cast<long>(s0))) *
                    pow_ui(Int(2), static_cast<unsigned long>((e - first) / 2)),
                he.coeff(static_cast<std::size_t>(first + static_cast<long>(s0))));
        rhs.canonicalize();
        if (lhs != rhs) return false;
    }
    return first >= 0;
}

bool shared_nonzero_root(const Partition& lambda1, const Partition& lambda2) {
    const IntPoly r1 = remainder_poly(lambda1);
    const IntPoly r2 = remainder_poly(lambda2);
    if (r1.degree() < 1 || r2.degree() < 1) return false;
    return gcd_z(r1, r2).degree() >= 1;
}

} // namespace whl
