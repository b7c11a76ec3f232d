#include "whl/hermite.hpp"

#include "whl/characters.hpp"

namespace whl {

IntPoly hermite_he(unsigned long n) {
    IntPoly prev = IntPoly::constant(1);
    if (n == 0) return prev;
    IntPoly cur = IntPoly::monomial(1);
    const IntPoly x = IntPoly::monomial(1);
    for (unsigned long m = 1; m < n; ++m) {
        IntPoly next = x * cur - prev * Int(m);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly hermite_classical(unsigned long n) {
    IntPoly prev = IntPoly::constant(1);
    if (n == 0) return prev;
    IntPoly cur = IntPoly::monomial(1, 2);
    const IntPoly two_x = IntPoly::monomial(1, 2);
    for (unsigned long m = 1; m < n; ++m) {
        IntPoly next = two_x * cur - prev * Int(2 * m);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

Int vandermonde(const DegreeSequence& d) {
    Int v = 1;
    for (std::size_t j = 1; j < d.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            v *= Int(d[j]) - Int(d[i]);
    return v;
}

// Bareiss fraction-free determinant over Z[x]; destructive.
IntPoly poly_bareiss_det(std::vector<std::vector<IntPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return IntPoly::constant(1);
    IntPoly prev = IntPoly::constant(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return IntPoly();
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

IntPoly wronskian_det(const std::vector<IntPoly>& fs) {
    const std::size_t r = fs.size();
    std::vector<std::vector<IntPoly>> m(r, std::vector<IntPoly>(r));
    for (std::size_t i = 0; i < r; ++i) {
        m[i][0] = fs[i];
        for (std::size_t j = 1; j < r; ++j) m[i][j] = m[i][j - 1].derivative();
    }
    return poly_bareiss_det(m);
}

IntPoly divide_by_constant(const IntPoly& f, const Int& c) {
    std::vector<Int> out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = exact_div(f.coeff(i), c);
    return IntPoly(std::move(out));
}

} // namespace

IntPoly wronskian_he_oracle(const Partition& lambda) {
    const DegreeSequence d = degree_sequence(lambda);
    std::vector<IntPoly> fs;
    fs.reserve(d.size());
    for (unsigned long n : d) fs.push_back(hermite_he(n));
    return divide_by_constant(wronskian_det(fs), vandermonde(d));
}

IntPoly hermite_lambda(const Partition& lambda) {
    const unsigned long n = lambda.size();
    const Int h = h_product(lambda);
    std::vector<Int> coeffs(n + 1, Int(0));
    const unsigned long w = two_decompose(lambda).weight;
    for (unsigned long k = 0; 2 * k <= n && k <= w; ++k) {
        Int chi = chi_two_class(lambda, k);
        if (chi == 0) continue;
        Int den = pow_ui(Int(2), k) * factorial(n - 2 * k) * factorial(k);
        Int c = exact_div(h * chi, den);
        coeffs[n - 2 * k] = (k % 2 == 0) ? c : -c;
    }
    return IntPoly(std::move(coeffs));
}

RemainderSplit remainder_split(const Partition& lambda) {
    IntPoly he = hermite_lambda(lambda);
    const unsigned long s = core_size(lambda);
    if (he.trailing_zero_exponent() != s)
        throw InternalError("x-power of He_lambda differs from |2-core|");
    RemainderSplit split;
    split.s = s;
    split.remainder = he.shift_down(s);
    return split;
}

IntPoly remainder_poly(const Partition& lambda) { return remainder_split(lambda).remainder; }

Int subleading_coefficient(const Partition& lambda) {
    if (lambda.size() < 2) throw DomainError("subleading coefficient needs |lambda| >= 2");
    Int sum = 0;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        Int li(lambda.part(i));
        sum += li * (li - Int(2 * (i + 1) - 1));
    }
    return exact_div(-sum, Int(2));
}

Int he_nn_at_zero(unsigned long n) {
    if (n == 0) return 1;
    Int nf = factorial(n);
    if (n % 2 == 1) {
        Int half = factorial((n - 1) / 2);
        return exact_div(nf * nf, pow_ui(Int(2), n - 1) * half * half);
    }
    Int half = factorial(n / 2);
    return exact_div(Int(n + 1) * nf * nf, pow_ui(Int(2), n) * half * half);
}

bool classical_wronskian_relation_check(const Partition& lambda) {
    const DegreeSequence d = degree_sequence(lambda);
    std::vector<IntPoly> fs;
    fs.reserve(d.size());
    for (unsigned long n : d) fs.push_back(hermite_classical(n));
    const IntPoly lhs = wronskian_det(fs);

    const IntPoly he = hermite_lambda(lambda);
    const unsigned long n = lambda.size();
    const unsigned long r = lambda.length();
    const Int delta = vandermonde(d);
    // RHS coefficient of x^j: Delta * c_j * 2^((n + r(r-1) + j)/2); the exponent
    // is integral because only j = n (mod 2) occurs.
    if (static_cast<unsigned long>(lhs.degree() < 0 ? 0 : lhs.degree()) != n &&
        !(lhs.is_zero() && he.is_zero()))
        return false;
    for (unsigned long j = 0; j <= n; ++j) {
        const Int& c = he.coeff(j);
        if (c == 0) {
            if (lhs.coeff(j) != 0) return false;
            continue;
        }
        if ((n + r * (r - 1) + j) % 2 != 0) return false;
        Int rhs = delta * c * pow_ui(Int(2), (n + r * (r - 1) + j) / 2);
        if (lhs.coeff(j) != rhs) return false;
    }
    return true;
}

} // namespace whl
