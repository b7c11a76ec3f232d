#include <doctest.h>

#include "whl/hermite.hpp"
#include "whl/roots.hpp"

using namespace whl;

namespace {

IntPoly from_ints(std::vector<long> c) {
    std::vector<Int> v(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) v[i] = Int(c[i]);
    return IntPoly(std::move(v));
}

Partition staircase_with_top(unsigned n, unsigned k) {
    std::vector<unsigned> parts{n};
    for (unsigned v = k; v >= 1; --v) parts.push_back(v);
    return Partition(parts);
}

} // namespace

TEST_CASE("count_real_roots basics") {
    CHECK(count_real_roots(from_ints({-9, 0, 1})) == std::pair<long, long>{1, 1});
    CHECK(count_real_roots(from_ints({1, 0, 1})) == std::pair<long, long>{0, 0});
    CHECK(count_real_roots(from_ints({15, 0, -10, 0, 1})) == std::pair<long, long>{2, 2});
    CHECK(count_real_roots(from_ints({-6, 1})) == std::pair<long, long>{1, 0});
    CHECK(count_real_roots(from_ints({6, 1})) == std::pair<long, long>{0, 1});
    CHECK_THROWS_AS(count_real_roots(IntPoly()), DomainError);
    CHECK_THROWS_AS(count_real_roots(IntPoly::monomial(1)), DomainError);
}

TEST_CASE("analyze totals and symmetry") {
    for (unsigned n = 1; n <= 14; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            const RootCountReport rep = analyze(lambda);
            CAPTURE(lambda.to_string());
            CHECK(rep.zero_multiplicity + rep.positive_real + rep.negative_real +
                      rep.nonreal ==
                  static_cast<long>(n));
            CHECK(rep.positive_real == rep.negative_real);
            CHECK(rep.zero_multiplicity == core_size(lambda));
        }
}

TEST_CASE("desk-scale Veselov check: R squarefree for all n <= 14") {
    for (unsigned n = 1; n <= 14; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            const RootCountReport rep = analyze(lambda);
            CAPTURE(lambda.to_string());
            CHECK(rep.squarefree_nonzero);
        }
}

TEST_CASE("analyze on the smallest reducible staircase") {
    const RootCountReport rep = analyze(Partition({6, 3, 2, 1}));
    CHECK(rep.zero_multiplicity == 10);
    CHECK(rep.positive_real == 1);
    CHECK(rep.negative_real == 1);
    CHECK(rep.nonreal == 0);
}

TEST_CASE("gomez prediction matches analyze on proven families") {
    SUBCASE("length 2 up to |lambda| = 20") {
        for (unsigned a = 1; a <= 19; ++a)
            for (unsigned b = 1; b <= a && a + b <= 20; ++b) {
                const Partition lambda({a, b});
                const RootCountReport actual = analyze(lambda);
                const RootCountReport predicted = gomez_counts(lambda);
                CAPTURE(lambda.to_string());
                CHECK(actual.zero_multiplicity == predicted.zero_multiplicity);
                CHECK(actual.positive_real == predicted.positive_real);
                CHECK(actual.negative_real == predicted.negative_real);
                CHECK(actual.nonreal == predicted.nonreal);
            }
    }
    SUBCASE("three parts with 1 <= lambda_3 <= 2, |lambda| <= 20") {
        for (unsigned a = 1; a <= 18; ++a)
            for (unsigned b = 1; b <= a; ++b)
                for (unsigned c = 1; c <= 2 && c <= b; ++c) {
                    if (a + b + c > 20) continue;
                    const Partition lambda({a, b, c});
                    const RootCountReport actual = analyze(lambda);
                    const RootCountReport predicted = gomez_counts(lambda);
                    CAPTURE(lambda.to_string());
                    CHECK(actual.zero_multiplicity == predicted.zero_multiplicity);
                    CHECK(actual.positive_real == predicted.positive_real);
                    CHECK(actual.nonreal == predicted.nonreal);
                    // three-part closed form for the nonzero real count
                    const long d = d_lambda(lambda);
                    const long expect = static_cast<long>(a) - b + c - std::abs(d + 1) / 2;
                    CHECK(actual.positive_real + actual.negative_real == expect);
                }
    }
    SUBCASE("staircases (n,k,...,1), n <= 12, k <= 3") {
        for (unsigned k = 1; k <= 3; ++k)
            for (unsigned n = k; n <= 12; ++n) {
                const Partition lambda = staircase_with_top(n, k);
                const RootCountReport actual = analyze(lambda);
                const RootCountReport predicted = gomez_counts(lambda);
                CAPTURE(lambda.to_string());
                CHECK(actual.zero_multiplicity == predicted.zero_multiplicity);
                CHECK(actual.positive_real == predicted.positive_real);
                CHECK(actual.nonreal == predicted.nonreal);
                // real/nonreal split by the parity of n-k
                if ((n - k) % 2 == 1) {
                    CHECK(actual.positive_real + actual.negative_real ==
                          static_cast<long>(n - k) - 1);
                    CHECK(actual.nonreal == 0);
                } else {
                    CHECK(actual.positive_real + actual.negative_real ==
                          static_cast<long>(n - k));
                    CHECK(actual.nonreal == 2 * static_cast<long>(k));
                }
            }
    }
}

TEST_CASE("2-core staircases collapse to x^|lambda|") {
    for (unsigned m = 1; m <= 7; ++m) {
        std::vector<unsigned> parts;
        for (unsigned v = m; v >= 1; --v) parts.push_back(v);
        const Partition core(parts);
        CHECK(hermite_lambda(core) == IntPoly::monomial(core.size()));
    }
}

TEST_CASE("real and imaginary roots sit inside the modulus bounds") {
    for (unsigned n = 1; n <= 12; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            const IntPoly r = remainder_poly(lambda);
            if (r.degree() < 1) continue;
            CAPTURE(lambda.to_string());
            CHECK(roots_within_sq(r, root_modulus_bound_sq(lambda), false));
        }
    // sharper (n,2) bound: |z|^2 < 4n - 1
    for (unsigned n = 2; n <= 24; ++n) {
        const Partition lambda({n, 2});
        Rat cap{Int(4 * static_cast<long>(n) - 1), Int(1)};
        CHECK(roots_within_sq(remainder_poly(lambda), cap, true));
    }
}

TEST_CASE("roots_within_sq detects violations") {
    // x^2 - 9 has u-root 9
    CHECK(roots_within_sq(from_ints({-9, 0, 1}), Rat(10), true));
    CHECK(roots_within_sq(from_ints({-9, 0, 1}), Rat(9), false));
    CHECK(!roots_within_sq(from_ints({-9, 0, 1}), Rat(9), true));
    CHECK(!roots_within_sq(from_ints({-9, 0, 1}), Rat(8), false));
    // x^2 + 9: imaginary roots, u = -9
    CHECK(!roots_within_sq(from_ints({9, 0, 1}), Rat(8), false));
    CHECK(roots_within_sq(from_ints({9, 0, 1}), Rat(9), false));
}

TEST_CASE("frobenius series recurrences and termination") {
    // terminating case: n - k odd
    const auto u1 = frobenius_series(4, 1, SeriesCoefficients::Kind::U1, 8);
    CHECK(u1.terminates);
    CHECK(u1.offset == 2);
    CHECK(u1.coeffs[0] == 1);
    CHECK(frobenius_ode_check(u1));
    // a_2 = -2(n-k-1)/(2(2k+3)) = -2*2/(2*5) = -2/5
    CHECK(u1.coeffs[2] == Rat(-2, 5));
    CHECK(u1.coeffs[4] == 0);  // terminated

    const auto u1b = frobenius_series(5, 1, SeriesCoefficients::Kind::U1, 10);
    CHECK(!u1b.terminates);
    CHECK(frobenius_ode_check(u1b));

    const auto u2 = frobenius_series(5, 2, SeriesCoefficients::Kind::U2, 12);
    CHECK(u2.offset == -2);
    CHECK(frobenius_ode_check(u2));

    for (unsigned long k = 1; k <= 3; ++k)
        for (unsigned long n = k; n <= 10; ++n) {
            const auto s1 = frobenius_series(n, k, SeriesCoefficients::Kind::U1, 14);
            const auto s2 = frobenius_series(n, k, SeriesCoefficients::Kind::U2, 14);
            CHECK(frobenius_ode_check(s1));
            CHECK(frobenius_ode_check(s2));
            CHECK(s1.terminates == ((n - k) % 2 == 1));
            CHECK(s2.terminates == ((n - k) % 2 == 0));
        }
}

TEST_CASE("terminating u1 matches the Wronskian quotient") {
    CHECK(frobenius_matches_wronskian(4, 1));
    for (unsigned long k = 1; k <= 3; ++k)
        for (unsigned long n = k + 1; n <= 12; n += 2) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(frobenius_matches_wronskian(n, k));
        }
    CHECK_THROWS_AS(frobenius_matches_wronskian(5, 1), DomainError);
}

TEST_CASE("shared nonzero roots via exact gcd") {
    CHECK(shared_nonzero_root(Partition({5}), Partition({5})));
    CHECK(!shared_nonzero_root(Partition({1, 1}), Partition({2, 2})));
    // adjacent length-2 pairs share no nonzero root: mu1 degrees (c, b+1), mu2 degrees (c, a+2)
    for (unsigned a = 2; a <= 8; ++a)
        for (unsigned b = 1; b < a; ++b)
            for (unsigned c = 1; c <= 2 && c <= b; ++c) {
                const Partition mu1 = partition_from_degrees({c, b + 1});
                const Partition mu2 = partition_from_degrees({c, a + 2});
                if (mu1 == mu2) continue;
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(c);
                CHECK(!shared_nonzero_root(mu1, mu2));
            }
}
