#ifndef WHL_POLY_HPP
#define WHL_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "whl/ints.hpp"

namespace whl {

/// Dense exact-integer polynomial in one indeterminate; index = exponent.
/// Normalized: no stored trailing zero coefficients; the zero polynomial has
/// an empty coefficient vector and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Int v);
    static IntPoly monomial(std::size_t e, Int coeff = 1);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Int& coeff(std::size_t i) const;
    const Int& leading() const;
    const std::vector<Int>& coeffs() const { return c_; }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const Int& s);
    friend IntPoly operator*(const Int& s, const IntPoly& a) { return a * s; }
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    IntPoly derivative() const;
    IntPoly times_x_power(std::size_t k) const;
    /// f(-x)
    IntPoly negate_variable() const;
    /// Quotient by x^k; requires the k lowest coefficients to vanish.
    IntPoly shift_down(std::size_t k) const;

    std::size_t trailing_zero_exponent() const;  // multiplicity of the root 0
    bool even_exponents_only() const;

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const;
    int sign_at_pos_inf() const;
    int sign_at_neg_inf() const;

    Int content() const;               // gcd of coefficients, >= 0
    IntPoly primitive_part() const;    // content removed, leading coeff > 0

    std::string to_string() const;     // human-readable, for diagnostics

private:
    void trim();
    std::vector<Int> c_;
};

/// Euclidean division by a monic-or-invertible-leading divisor is not assumed:
/// returns (q, r) with a = q*b + r over the rationals scaled to integers only
/// when exact; use pseudo_divmod for the general case.
/// divmod requires lc(b) | every intermediate leading coefficient (true for the
/// monic divisors used here); throws InternalError otherwise.
std::pair<IntPoly, IntPoly> divmod(const IntPoly& a, const IntPoly& b);

/// Exact quotient; throws InternalError when b does not divide a.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

/// True division test without throwing.
bool divides(const IntPoly& divisor, const IntPoly& dividend);

/// Pseudo-remainder: prem(a, b) = rem(lc(b)^(deg a - deg b + 1) * a, b).
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);

/// Primitive positive-leading gcd over Z (modular algorithm with exact
/// divisibility verification).
IntPoly gcd_z(const IntPoly& a, const IntPoly& b);

/// Yun's square-free decomposition of a primitive polynomial:
/// f = +/- prod_i factor_i^multiplicity_i with square-free pairwise-coprime parts.
std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f);

/// Coefficients reduced into [0, m).
IntPoly mod_reduce(const IntPoly& f, const Int& m);

} // namespace whl

#endif
