#include "whl/poly.hpp"

#include <algorithm>

namespace whl {

namespace {
const Int kZero = 0;
}

IntPoly IntPoly::constant(Int v) {
    std::vector<Int> c;
    if (v != 0) c.push_back(std::move(v));
    return IntPoly(std::move(c));
}

IntPoly IntPoly::monomial(std::size_t e, Int coeff) {
    std::vector<Int> c(e + 1, Int(0));
    c[e] = std::move(coeff);
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const Int& IntPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return IntPoly(std::move(c));
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const Int& s) {
    if (s == 0) return IntPoly();
    std::vector<Int> c(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i] * s;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        c[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::times_x_power(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Int> c(c_.size() + k, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::negate_variable() const {
    std::vector<Int> c = c_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::shift_down(std::size_t k) const {
    if (k == 0) return *this;
    if (c_.size() < k) throw InternalError("shift_down past degree");
    for (std::size_t i = 0; i < k; ++i)
        if (c_[i] != 0) throw InternalError("shift_down would drop nonzero terms");
    return IntPoly(std::vector<Int>(c_.begin() + static_cast<long>(k), c_.end()));
}

std::size_t IntPoly::trailing_zero_exponent() const {
    std::size_t i = 0;
    while (i < c_.size() && c_[i] == 0) ++i;
    return i;
}

bool IntPoly::even_exponents_only() const {
    for (std::size_t i = 1; i < c_.size(); i += 2)
        if (c_[i] != 0) return false;
    return true;
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
    return acc;
}

int IntPoly::sign_at(const Rat& x) const { return sgn(eval(x)); }

int IntPoly::sign_at_pos_inf() const { return sgn(leading()); }

int IntPoly::sign_at_neg_inf() const {
    int s = sgn(leading());
    return (degree() % 2 != 0) ? -s : s;
}

Int IntPoly::content() const {
    Int g = 0;
    for (const Int& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return *this;
    Int g = content();
    if (sgn(leading()) < 0) g = -g;
    std::vector<Int> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = whl::exact_div(c_[i], g);
    return IntPoly(std::move(c));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += (sgn(c_[i]) > 0 ? " + " : " - ");
        else if (sgn(c_[i]) < 0) s += "-";
        Int a = abs(c_[i]);
        if (a != 1 || i == 0) s += a.get_str();
        if (i >= 1) {
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

std::pair<IntPoly, IntPoly> divmod(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    if (a.degree() < b.degree()) return {IntPoly(), a};
    std::vector<Int> rem = a.coeffs();
    const long db = b.degree();
    const Int& lb = b.leading();
    std::vector<Int> q(static_cast<std::size_t>(a.degree() - db) + 1, Int(0));
    for (long i = a.degree(); i >= db; --i) {
        Int& top = rem[static_cast<std::size_t>(i)];
        if (top == 0) continue;
        Int t, r;
        mpz_tdiv_qr(t.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        if (r != 0) throw InternalError("divmod: leading coefficient does not divide");
        q[static_cast<std::size_t>(i - db)] = t;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= t * b.coeff(static_cast<std::size_t>(j));
    }
    return {IntPoly(std::move(q)), IntPoly(std::move(rem))};
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InternalError("exact polynomial division left a remainder");
    return q;
}

bool divides(const IntPoly& divisor, const IntPoly& dividend) {
    if (divisor.is_zero()) return dividend.is_zero();
    if (dividend.is_zero()) return true;
    if (dividend.degree() < divisor.degree()) return false;
    try {
        auto [q, r] = divmod(dividend, divisor);
        (void)q;
        return r.is_zero();
    } catch (const InternalError&) {
        return false;
    }
}

IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DomainError("pseudo_rem by zero");
    long da = a.degree(), db = b.degree();
    if (da < db) return a;
    Int lb = b.leading();
    IntPoly scaled = a * pow_ui(lb, static_cast<unsigned long>(da - db + 1));
    std::vector<Int> rem = scaled.coeffs();
    for (long i = scaled.degree(); i >= db; --i) {
        Int& top = rem[static_cast<std::size_t>(i)];
        if (top == 0) continue;
        Int t = whl::exact_div(top, lb);
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= t * b.coeff(static_cast<std::size_t>(j));
    }
    return IntPoly(std::move(rem));
}

namespace {

// gcd image modulo a word prime, degree only; empty on bad prime (lc vanishes).
// Also used to produce the full monic image for reconstruction.
struct ZpImage {
    unsigned long p;
    std::vector<unsigned long> g;  // monic gcd mod p, lowest degree first
};

unsigned long mod_ul(const Int& v, unsigned long p) {
    return mpz_fdiv_ui(v.get_mpz_t(), p);
}

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
    return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % p);
}

unsigned long powmod_ul(unsigned long a, unsigned long e, unsigned long p) {
    unsigned long r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

unsigned long invmod(unsigned long a, unsigned long p) { return powmod_ul(a, p - 2, p); }

std::vector<unsigned long> zp_reduce(const IntPoly& f, unsigned long p) {
    std::vector<unsigned long> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_ul(f.coeff(i), p);
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

void zp_make_monic(std::vector<unsigned long>& f, unsigned long p) {
    if (f.empty()) return;
    unsigned long inv = invmod(f.back(), p);
    for (auto& x : f) x = mulmod(x, inv, p);
}

std::vector<unsigned long> zp_rem(std::vector<unsigned long> a,
                                  const std::vector<unsigned long>& b, unsigned long p) {
    unsigned long inv = invmod(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        unsigned long t = mulmod(a.back(), inv, p);
        std::size_t off = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
            unsigned long sub = mulmod(t, b[j], p);
            a[off + j] = (a[off + j] + p - sub) % p;
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

std::vector<unsigned long> zp_gcd(std::vector<unsigned long> a,
                                  std::vector<unsigned long> b, unsigned long p) {
    while (!b.empty()) {
        auto r = zp_rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    zp_make_monic(a, p);
    return a;
}

const std::vector<unsigned long>& gcd_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<unsigned long> ps;
        for (unsigned long c = 1000000007ul; ps.size() < 24; c += 2)
            if (is_prime(c)) ps.push_back(c);
        return ps;
    }();
    return primes;
}

} // namespace

IntPoly gcd_z(const IntPoly& a_in, const IntPoly& b_in) {
    if (a_in.is_zero()) return b_in.primitive_part();
    if (b_in.is_zero()) return a_in.primitive_part();
    IntPoly a = a_in.primitive_part();
    IntPoly b = b_in.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    if (b.degree() == 0) return IntPoly::constant(1);

    Int lc_gcd;
    mpz_gcd(lc_gcd.get_mpz_t(), a.leading().get_mpz_t(), b.leading().get_mpz_t());

    // CRT accumulation of lc_gcd * monic_gcd images at the minimal degree seen.
    Int modulus = 1;
    std::vector<Int> acc;  // symmetric-range lifted coefficients
    long best_deg = -1;
    for (unsigned long p : gcd_primes()) {
        if (mod_ul(a.leading(), p) == 0 || mod_ul(b.leading(), p) == 0) continue;
        auto ga = zp_reduce(a, p);
        auto gb = zp_reduce(b, p);
        auto g = zp_gcd(std::move(ga), std::move(gb), p);
        long dg = static_cast<long>(g.size()) - 1;
        if (dg == 0) return IntPoly::constant(1);
        if (best_deg == -1 || dg < best_deg) {
            best_deg = dg;
            modulus = 1;
            acc.assign(static_cast<std::size_t>(dg) + 1, Int(0));
        } else if (dg > best_deg) {
            continue;  // unlucky prime
        }
        // scale to lc_gcd and CRT-combine coefficientwise
        unsigned long scale = mod_ul(lc_gcd, p);
        Int new_modulus = modulus * static_cast<unsigned long>(p);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            unsigned long target = mulmod(g[i], scale, p);
            // find x = acc[i] (mod modulus), x = target (mod p)
            unsigned long cur = mod_ul(acc[i], p);
            unsigned long diff = (target + p - cur) % p;
            unsigned long minv = invmod(mod_ul(modulus, p), p);
            Int x = acc[i] + modulus * Int(mulmod(diff, minv, p));
            mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), new_modulus.get_mpz_t());
            if (x * 2 > new_modulus) x -= new_modulus;
            acc[i] = x;
        }
        modulus = new_modulus;
        IntPoly cand = IntPoly(acc).primitive_part();
        if (!cand.is_zero() && divides(cand, a) && divides(cand, b)) return cand;
    }
    throw InternalError("gcd_z: modular reconstruction did not stabilize");
}

std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f_in) {
    std::vector<std::pair<IntPoly, unsigned>> out;
    if (f_in.degree() <= 0) return out;
    IntPoly f = f_in.primitive_part();
    // Yun's algorithm.
    IntPoly fp = f.derivative();
    IntPoly a = gcd_z(f, fp);
    IntPoly b = exact_div(f, a);
    IntPoly c = exact_div(fp, a);
    IntPoly d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        IntPoly g = gcd_z(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

IntPoly mod_reduce(const IntPoly& f, const Int& m) {
    if (m < 2) throw DomainError("modulus must be >= 2");
    std::vector<Int> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        mpz_fdiv_r(c[i].get_mpz_t(), f.coeff(i).get_mpz_t(), m.get_mpz_t());
    }
    return IntPoly(std::move(c));
}

} // namespace whl
