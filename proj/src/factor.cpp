#include "whl/factor.hpp"

#include <algorithm>

namespace whl {

namespace {

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
    return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % p);
}

unsigned long powmod_ul(unsigned long a, unsigned long e, unsigned long p) {
    unsigned long r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

unsigned long invmod(unsigned long a, unsigned long p) { return powmod_ul(a, p - 2, p); }

void zp_trim(ZpPoly& f) {
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

ZpPoly zp_reduce(const IntPoly& f, unsigned long p) {
    ZpPoly out;
    out.p = p;
    out.c.resize(f.coeffs().size());
    for (std::size_t i = 0; i < out.c.size(); ++i)
        out.c[i] = mpz_fdiv_ui(f.coeff(i).get_mpz_t(), p);
    zp_trim(out);
    return out;
}

ZpPoly zp_x(unsigned long p) { return ZpPoly{p, {0, 1}}; }

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b) {
    const unsigned long p = a.p;
    if (a.c.empty() || b.c.empty()) return ZpPoly{p, {}};
    ZpPoly out{p, std::vector<unsigned long>(a.c.size() + b.c.size() - 1, 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            unsigned long v = out.c[i + j] + mulmod(a.c[i], b.c[j], p);
            out.c[i + j] = v >= p ? v - p : v;
        }
    }
    zp_trim(out);
    return out;
}

ZpPoly zp_sub(const ZpPoly& a, const ZpPoly& b) {
    const unsigned long p = a.p;
    ZpPoly out{p, std::vector<unsigned long>(std::max(a.c.size(), b.c.size()), 0)};
    for (std::size_t i = 0; i < out.c.size(); ++i) {
        unsigned long x = i < a.c.size() ? a.c[i] : 0;
        unsigned long y = i < b.c.size() ? b.c[i] : 0;
        out.c[i] = (x + p - y) % p;
    }
    zp_trim(out);
    return out;
}

ZpPoly zp_rem(ZpPoly a, const ZpPoly& b) {
    const unsigned long p = a.p;
    const unsigned long inv = invmod(b.c.back(), p);
    while (a.c.size() >= b.c.size() && !a.c.empty()) {
        unsigned long t = mulmod(a.c.back(), inv, p);
        std::size_t off = a.c.size() - b.c.size();
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            unsigned long sub = mulmod(t, b.c[j], p);
            a.c[off + j] = (a.c[off + j] + p - sub) % p;
        }
        zp_trim(a);
    }
    return a;
}

std::pair<ZpPoly, ZpPoly> zp_divmod(ZpPoly a, const ZpPoly& b) {
    const unsigned long p = a.p;
    if (a.c.size() < b.c.size()) return {ZpPoly{p, {}}, std::move(a)};
    const unsigned long inv = invmod(b.c.back(), p);
    ZpPoly q{p, std::vector<unsigned long>(a.c.size() - b.c.size() + 1, 0)};
    while (a.c.size() >= b.c.size() && !a.c.empty()) {
        unsigned long t = mulmod(a.c.back(), inv, p);
        std::size_t off = a.c.size() - b.c.size();
        q.c[off] = t;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            unsigned long sub = mulmod(t, b.c[j], p);
            a.c[off + j] = (a.c[off + j] + p - sub) % p;
        }
        zp_trim(a);
    }
    zp_trim(q);
    return {std::move(q), std::move(a)};
}

void zp_make_monic(ZpPoly& f) {
    if (f.c.empty()) return;
    unsigned long inv = invmod(f.c.back(), f.p);
    for (auto& x : f.c) x = mulmod(x, inv, f.p);
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b) {
    while (!b.c.empty()) {
        ZpPoly r = zp_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    zp_make_monic(a);
    return a;
}

ZpPoly zp_derivative(const ZpPoly& f) {
    ZpPoly out{f.p, {}};
    if (f.c.size() <= 1) return out;
    out.c.resize(f.c.size() - 1);
    for (std::size_t i = 1; i < f.c.size(); ++i)
        out.c[i - 1] = mulmod(f.c[i], i % f.p, f.p);
    zp_trim(out);
    return out;
}

ZpPoly zp_powmod(const ZpPoly& base, const Int& e, const ZpPoly& mod) {
    ZpPoly result{base.p, {1}};
    ZpPoly b = zp_rem(base, mod);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = zp_rem(zp_mul(result, result), mod);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = zp_rem(zp_mul(result, b), mod);
    }
    return result;
}

bool zp_is_one(const ZpPoly& f) { return f.c.size() == 1 && f.c[0] == 1; }

// x^(p^d) mod f, iterating the Frobenius d times starting from `from`.
ZpPoly zp_frobenius_iterate(ZpPoly from, unsigned steps, const ZpPoly& mod) {
    const Int p(mod.p);
    for (unsigned i = 0; i < steps; ++i) from = zp_powmod(from, p, mod);
    return from;
}

// Distinct-degree split: list of (product of all degree-d irreducibles, d).
std::vector<std::pair<ZpPoly, unsigned>> zp_ddf(ZpPoly f) {
    std::vector<std::pair<ZpPoly, unsigned>> out;
    ZpPoly h = zp_rem(zp_x(f.p), f);
    unsigned d = 0;
    while (f.degree() > 2 * static_cast<long>(d)) {
        ++d;
        h = zp_frobenius_iterate(std::move(h), 1, f);
        ZpPoly g = zp_gcd(zp_sub(h, zp_x(f.p)), f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = zp_divmod(std::move(f), g).first;
            h = zp_rem(std::move(h), f);
        }
    }
    if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
    return out;
}

// Deterministic trial polynomials: every polynomial of degree < max_deg over
// F_p, enumerated by counting. Constants are useless splitters, skip them.
ZpPoly edf_trial(unsigned long p, unsigned max_deg, unsigned long long index) {
    std::vector<unsigned long> digits;
    unsigned long long v = index;
    while (v) {
        digits.push_back(static_cast<unsigned long>(v % p));
        v /= p;
    }
    if (digits.size() > max_deg) digits.resize(max_deg);
    ZpPoly out{p, digits};
    zp_trim(out);
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus, odd p, deterministic scan).
void zp_edf(const ZpPoly& f, unsigned d, std::vector<ZpPoly>& out) {
    if (f.degree() == static_cast<long>(d)) {
        out.push_back(f);
        return;
    }
    const Int e = (pow_ui(Int(f.p), d) - 1) / 2;
    const unsigned max_deg = static_cast<unsigned>(f.degree());
    for (unsigned long long idx = f.p;; ++idx) {  // start at x (index p)
        ZpPoly a = edf_trial(f.p, max_deg, idx);
        if (a.degree() < 1) continue;
        ZpPoly b = zp_powmod(a, e, f);
        if (b.c.empty()) continue;
        b.c[0] = (b.c[0] + f.p - 1) % f.p;
        zp_trim(b);
        ZpPoly g = zp_gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            zp_edf(g, d, out);
            zp_edf(zp_divmod(f, g).first, d, out);
            return;
        }
    }
}

bool zp_less(const ZpPoly& a, const ZpPoly& b) {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
    for (std::size_t i = a.c.size(); i-- > 0;)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
}

} // namespace

bool squarefree_mod(const IntPoly& f, unsigned long p) {
    ZpPoly fp = zp_reduce(f, p);
    if (fp.degree() != f.degree()) return false;
    if (fp.degree() < 1) return false;
    ZpPoly g = zp_gcd(fp, zp_derivative(fp));
    return zp_is_one(g);
}

std::vector<std::pair<unsigned, unsigned>> ddf_degree_census(const IntPoly& f,
                                                             unsigned long p) {
    ZpPoly fp = zp_reduce(f, p);
    zp_make_monic(fp);
    std::vector<std::pair<unsigned, unsigned>> census;
    for (const auto& [g, d] : zp_ddf(std::move(fp)))
        census.emplace_back(d, static_cast<unsigned>(g.degree()) / d);
    std::sort(census.begin(), census.end());
    return census;
}

std::vector<bool> attainable_degrees(const std::vector<std::pair<unsigned, unsigned>>& census,
                                     unsigned degree) {
    std::vector<bool> dp(degree + 1, false);
    dp[0] = true;
    for (const auto& [d, count] : census)
        for (unsigned rep = 0; rep < count; ++rep)
            for (unsigned i = degree; i >= d; --i)
                if (dp[i - d]) dp[i] = true;
    return dp;
}

std::vector<ZpPoly> factor_mod_p(const IntPoly& f, unsigned long p) {
    ZpPoly fp = zp_reduce(f, p);
    zp_make_monic(fp);
    std::vector<ZpPoly> factors;
    for (const auto& [g, d] : zp_ddf(std::move(fp))) zp_edf(g, d, factors);
    std::sort(factors.begin(), factors.end(), zp_less);
    return factors;
}

std::vector<unsigned long> usable_primes(const IntPoly& f, unsigned count) {
    std::vector<unsigned long> out;
    for (unsigned long p = 3; out.size() < count; p += 2) {
        if (!is_prime(p)) continue;
        if (mpz_fdiv_ui(f.leading().get_mpz_t(), p) == 0) continue;
        if (squarefree_mod(f, p)) out.push_back(p);
    }
    return out;
}

namespace {

// ---- Hensel lifting over Z/p^a ----------------------------------------

IntPoly pm_reduce(const IntPoly& f, const Int& m) { return mod_reduce(f, m); }

IntPoly pm_mul(const IntPoly& a, const IntPoly& b, const Int& m) {
    return mod_reduce(a * b, m);
}

// Division with remainder by a monic divisor, coefficients mod m.
std::pair<IntPoly, IntPoly> pm_divmod(const IntPoly& a, const IntPoly& b, const Int& m) {
    std::vector<Int> rem = a.coeffs();
    const long db = b.degree();
    if (static_cast<long>(rem.size()) - 1 < db) return {IntPoly(), a};
    std::vector<Int> q(rem.size() - static_cast<std::size_t>(db), Int(0));
    for (long i = static_cast<long>(rem.size()) - 1; i >= db; --i) {
        Int t = rem[static_cast<std::size_t>(i)];
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
        if (t == 0) continue;
        q[static_cast<std::size_t>(i - db)] = t;
        for (long j = 0; j <= db; ++j) {
            Int& target = rem[static_cast<std::size_t>(i - db + j)];
            target -= t * b.coeff(static_cast<std::size_t>(j));
        }
    }
    IntPoly qq = pm_reduce(IntPoly(std::move(q)), m);
    IntPoly rr = pm_reduce(IntPoly(std::move(rem)), m);
    return {std::move(qq), std::move(rr)};
}

// Extended Euclid mod p for coprime g, h: s g + t h = 1.
void zp_bezout(const ZpPoly& g, const ZpPoly& h, ZpPoly& s, ZpPoly& t) {
    const unsigned long p = g.p;
    ZpPoly r0 = g, r1 = h;
    ZpPoly s0{p, {1}}, s1{p, {}};
    ZpPoly t0{p, {}}, t1{p, {1}};
    while (!r1.c.empty()) {
        auto [q, r] = zp_divmod(r0, r1);
        ZpPoly s2 = zp_sub(s0, zp_mul(q, s1));
        ZpPoly t2 = zp_sub(t0, zp_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 = gcd = nonzero constant; normalize to 1
    unsigned long inv = invmod(r0.c.back(), p);
    for (auto& x : s0.c) x = mulmod(x, inv, p);
    for (auto& x : t0.c) x = mulmod(x, inv, p);
    s = std::move(s0);
    t = std::move(t0);
}

IntPoly from_zp(const ZpPoly& f) {
    std::vector<Int> c(f.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Int(f.c[i]);
    return IntPoly(std::move(c));
}

// One quadratic Hensel step: from modulus m to m^2 (von zur Gathen 15.10).
// Requires f = g h (mod m), s g + t h = 1 (mod m), h monic.
void hensel_step(const IntPoly& f, IntPoly& g, IntPoly& h, IntPoly& s, IntPoly& t,
                 const Int& m) {
    const Int m2 = m * m;
    IntPoly e = pm_reduce(f - g * h, m2);
    auto [q, r] = pm_divmod(pm_mul(s, e, m2), h, m2);
    IntPoly g1 = pm_reduce(g + t * e + q * g, m2);
    IntPoly h1 = pm_reduce(h + r, m2);
    IntPoly b = pm_reduce(s * g1 + t * h1 - IntPoly::constant(1), m2);
    auto [c, d] = pm_divmod(pm_mul(s, b, m2), h1, m2);
    IntPoly s1 = pm_reduce(s - d, m2);
    IntPoly t1 = pm_reduce(t - t * b - c * g1, m2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
}

// Lift the factorization f = lc(f) prod(monic factors) from mod p to mod
// target (a power of p). Returns the lifted monic factors.
void hensel_tree(const IntPoly& f, const std::vector<ZpPoly>& factors, std::size_t lo,
                 std::size_t hi, unsigned long p, const Int& target,
                 std::vector<IntPoly>& out) {
    if (hi - lo == 1) {
        // monic image of f mod target
        Int lc = f.leading();
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t()) == 0)
            throw InternalError("leading coefficient not invertible mod p^a");
        out.push_back(pm_reduce(f * inv, target));
        return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    ZpPoly gp{p, {mpz_fdiv_ui(f.leading().get_mpz_t(), p)}};
    for (std::size_t i = lo; i < mid; ++i) gp = zp_mul(gp, factors[i]);
    ZpPoly hp{p, {1}};
    for (std::size_t i = mid; i < hi; ++i) hp = zp_mul(hp, factors[i]);
    ZpPoly sp, tp;
    zp_bezout(gp, hp, sp, tp);

    IntPoly g = from_zp(gp), h = from_zp(hp), s = from_zp(sp), t = from_zp(tp);
    Int m(p);
    while (m < target) {
        hensel_step(f, g, h, s, t, m);
        m *= m;
    }
    g = pm_reduce(g, target);
    h = pm_reduce(h, target);
    hensel_tree(g, factors, lo, mid, p, target, out);
    hensel_tree(h, factors, mid, hi, p, target, out);
}

Int symmetric(const Int& v, const Int& m) {
    Int x;
    mpz_fdiv_r(x.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (x * 2 > m) x -= m;
    return x;
}

IntPoly symmetric_poly(const IntPoly& f, const Int& m) {
    std::vector<Int> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = symmetric(f.coeff(i), m);
    return IntPoly(std::move(c));
}

Int two_norm_ceil(const IntPoly& f) {
    Int s = 0;
    for (const Int& c : f.coeffs()) s += c * c;
    Int r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    return r + 1;
}

} // namespace

namespace {

bool poly_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (long i = a.degree(); i >= 0; --i) {
        const Int& x = a.coeff(static_cast<std::size_t>(i));
        const Int& y = b.coeff(static_cast<std::size_t>(i));
        if (x != y) return x < y;
    }
    return false;
}

bool next_combination(std::vector<std::size_t>& combo, std::size_t n) {
    const std::size_t k = combo.size();
    for (std::size_t i = k; i-- > 0;) {
        if (combo[i] < n - k + i) {
            ++combo[i];
            for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

std::vector<IntPoly> factor_squarefree_z(const IntPoly& f_in) {
    if (f_in.degree() < 1) throw DomainError("factor_squarefree_z needs degree >= 1");
    IntPoly f = f_in.primitive_part();
    std::vector<IntPoly> result;
    if (f.trailing_zero_exponent() > 0) {
        // squarefree input carries x at most once
        result.push_back(IntPoly::monomial(1));
        f = f.shift_down(f.trailing_zero_exponent());
        if (f.degree() < 1) return result;
    }
    const long n = f.degree();
    if (n == 1) {
        result.push_back(f);
        std::sort(result.begin(), result.end(), poly_less);
        return result;
    }

    // Best prime among the first few usable ones: fewest modular factors.
    const auto primes = usable_primes(f, 8);
    unsigned long best_p = primes[0];
    std::vector<ZpPoly> best_factors;
    for (unsigned long p : primes) {
        auto factors = factor_mod_p(f, p);
        if (best_factors.empty() || factors.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(factors);
        }
        if (best_factors.size() == 1) break;
    }
    if (best_factors.size() == 1) {
        result.push_back(f);
        return result;
    }

    // Landau-Mignotte style bound: coefficients of lc * (any monic factor
    // product) stay below lc * binom(n, n/2) * ||f||_2.
    const Int lc = f.leading();
    const Int bound = abs(lc) * binomial(static_cast<unsigned long>(n),
                                         static_cast<unsigned long>(n) / 2) *
                      two_norm_ceil(f);
    Int target(best_p);
    while (target <= 2 * bound) target *= target;

    std::vector<IntPoly> lifted;
    hensel_tree(f, best_factors, 0, best_factors.size(), best_p, target, lifted);

    // Zassenhaus recombination over subsets of the lifted factors.
    std::vector<std::size_t> live(lifted.size());
    for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
    IntPoly rest = f;

    bool found;
    do {
        found = false;
        const std::size_t t = live.size();
        for (std::size_t card = 1; !found && card <= t / 2; ++card) {
            std::vector<std::size_t> combo(card);
            for (std::size_t i = 0; i < card; ++i) combo[i] = i;
            do {
                // Any split of `rest` puts <= t/2 modular factors on one side,
                // so subsets up to that cardinality cover every factorization
                // regardless of the degree they carry.
                std::vector<std::size_t> subset(card);
                long subset_deg = 0;
                for (std::size_t i = 0; i < card; ++i) {
                    subset[i] = live[combo[i]];
                    subset_deg += lifted[subset[i]].degree();
                }
                if (subset_deg < 1 || subset_deg >= rest.degree()) continue;
                // quick trailing-coefficient test before the full product
                Int tail = symmetric(rest.leading(), target);
                for (std::size_t i : subset)
                    tail = symmetric(tail * lifted[i].coeff(0), target);
                Int prod_tail = rest.leading() * rest.coeff(0);
                if (tail == 0 || !mpz_divisible_p(prod_tail.get_mpz_t(), tail.get_mpz_t()))
                    continue;
                IntPoly cand = IntPoly::constant(rest.leading());
                for (std::size_t i : subset) cand = pm_mul(cand, lifted[i], target);
                cand = symmetric_poly(cand, target).primitive_part();
                if (cand.degree() >= 1 && divides(cand, rest)) {
                    result.push_back(cand);
                    rest = exact_div(rest, cand);
                    std::vector<std::size_t> next_live;
                    for (std::size_t v : live)
                        if (std::find(subset.begin(), subset.end(), v) == subset.end())
                            next_live.push_back(v);
                    live = std::move(next_live);
                    found = true;
                    break;
                }
            } while (next_combination(combo, t));
        }
    } while (found && !live.empty());

    if (rest.degree() >= 1) result.push_back(rest.primitive_part());
    std::sort(result.begin(), result.end(), poly_less);
    return result;
}

std::vector<std::pair<IntPoly, unsigned>> factor_z(const IntPoly& f) {
    std::vector<std::pair<IntPoly, unsigned>> out;
    for (const auto& [part, mult] : squarefree_decomposition(f))
        for (const IntPoly& irr : factor_squarefree_z(part))
            out.emplace_back(irr, mult);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return poly_less(a.first, b.first);
        return a.second < b.second;
    });
    return out;
}

} // namespace whl
