// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance here is exact equality of integers, rationals, or
// finite sets.

#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "whl/characters.hpp"
#include "whl/congruence.hpp"
#include "whl/hermite.hpp"
#include "whl/irreducibility.hpp"
#include "whl/newton.hpp"
#include "whl/padic.hpp"
#include "whl/roots.hpp"

using namespace whl;

namespace {

int failures = 0;

void report(int criterion, const std::string& label, bool pass,
            const std::string& detail = "") {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": "
              << label;
    if (!pass && !detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!pass) ++failures;
}

std::set<std::vector<unsigned>> reducible_partitions(std::size_t length, unsigned n_max) {
    SearchOptions options;
    options.length = length;
    options.n_max = n_max;
    std::set<std::vector<unsigned>> out;
    for (const SearchRecord& rec : run_search(options))
        if (rec.status == Status::Reducible) out.insert(rec.partition.parts());
    return out;
}

std::string show(const std::set<std::vector<unsigned>>& set) {
    std::ostringstream os;
    for (const auto& parts : set) {
        os << "(";
        for (std::size_t i = 0; i < parts.size(); ++i)
            os << (i ? "," : "") << parts[i];
        os << ") ";
    }
    return os.str();
}

Rat ratio(long num, long den) {
    Rat r{Int(num), Int(den)};
    r.canonicalize();
    return r;
}

void criterion_1() {
    const std::set<std::vector<unsigned>> expect3{{7, 3, 1}};
    const std::set<std::vector<unsigned>> expect4{
        {6, 1, 1, 1}, {6, 3, 2, 1}, {6, 5, 3, 3}};
    const std::set<std::vector<unsigned>> expect5{
        {5, 1, 1, 1, 1}, {5, 3, 2, 1, 1}, {5, 3, 3, 1, 1}, {5, 4, 4, 3, 1}};

    const auto r2 = reducible_partitions(2, 30);
    const auto r3 = reducible_partitions(3, 30);
    const auto r4 = reducible_partitions(4, 30);
    const auto r5 = reducible_partitions(5, 30);

    // the n = 9 trio across every length
    std::set<std::vector<unsigned>> at9;
    for (std::size_t len = 1; len <= 9; ++len) {
        SearchOptions options;
        options.length = len;
        options.n_max = 9;
        for (const SearchRecord& rec : run_search(options))
            if (rec.status == Status::Reducible && rec.n == 9)
                at9.insert(rec.partition.parts());
    }
    const std::set<std::vector<unsigned>> expect9{
        {6, 1, 1, 1}, {5, 1, 1, 1, 1}, {4, 1, 1, 1, 1, 1}};

    const bool pass = r2.empty() && r3 == expect3 && r4 == expect4 && r5 == expect5 &&
                      at9 == expect9;
    report(1, "reducible sets for lengths 2-5 with n <= 30, plus the n = 9 trio", pass,
           "got L2={" + show(r2) + "} L3={" + show(r3) + "} L4={" + show(r4) + "} L5={" +
               show(r5) + "} n9={" + show(at9) + "}");
}

void criterion_2() {
    unsigned long reducible = 0, visited = 0;
    std::string witness;
    for (unsigned m = 1; m <= 2; ++m)
        for (unsigned n = m; n + m <= 202 && n <= 200; ++n) {
            const Partition lambda({n, m});
            const IntPoly r = remainder_poly(lambda);
            ++visited;
            if (r.degree() < 1) continue;
            const Verdict v = is_irreducible(r, {}, &lambda);
            if (v.status == Status::Reducible) {
                ++reducible;
                witness = lambda.to_string();
            }
        }
    report(2, "length-2 sweep (n,m), m <= 2, n <= 200 has no reducible remainder",
           reducible == 0 && visited == 399,
           reducible ? "reducible at (" + witness + ")" : "visited mismatch");
}

void criterion_3() {
    const IntPoly r = remainder_poly(Partition({6, 3, 2, 1}));
    const IntPoly expect({Int(-9), Int(0), Int(1)});
    report(3, "R_(6,3,2,1) = x^2 - 9 bit-exact", r == expect, r.to_string());
}

void criterion_4() {
    bool pass = true;
    std::string detail;
    for (unsigned n = 0; n <= 14 && pass; ++n)
        for (const Partition& lambda : partitions_of(n))
            if (hermite_lambda(lambda) != wronskian_he_oracle(lambda)) {
                pass = false;
                detail = lambda.to_string();
                break;
            }
    std::mt19937_64 rng(20260810);
    std::uniform_int_distribution<unsigned> pick_n(1, 22);
    for (int trial = 0; trial < 200 && pass; ++trial) {
        const unsigned n = pick_n(rng);
        const auto all = partitions_of(n);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        const Partition& lambda = all[pick(rng)];
        if (hermite_lambda(lambda) != wronskian_he_oracle(lambda)) {
            pass = false;
            detail = lambda.to_string();
        }
    }
    report(4, "character construction equals the Wronskian oracle (n <= 14 full, 200 random to n = 22)",
           pass, detail);
}

void criterion_5() {
    bool pass = true;
    std::string detail;
    for (unsigned n = 1; n <= 22 && pass; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            const IntPoly r = remainder_poly(lambda);
            if (r.degree() < 1) continue;
            for (unsigned long p = 3; p <= 31; p += 2) {
                if (!is_prime(p)) continue;
                const auto bound = slope_bound(lambda, p);
                if (!bound) continue;
                const NewtonPolygon polygon = build_polygon(r, p);
                if (polygon.edges.empty()) continue;
                const Rat slope = rightmost_slope(polygon);
                const bool sound =
                    (bound->strict ? slope < bound->bound : slope <= bound->bound) &&
                    (!bound->refined || slope <= *bound->refined);
                if (!sound) {
                    pass = false;
                    detail = lambda.to_string() + " at p=" + std::to_string(p);
                    break;
                }
            }
            if (!pass) break;
        }

    // Case A tightness: m in {1,2,3}, smallest admissible p, smallest n with p | n+m
    const struct { unsigned m; unsigned long p; unsigned n; } cases[] = {
        {1, 3, 2}, {2, 5, 3}, {3, 7, 4}};
    for (const auto& c : cases) {
        std::vector<unsigned> parts{c.m + 2 * c.n};
        for (unsigned v = c.m - 1; v >= 1; --v) parts.push_back(v);
        const Partition lambda(parts);
        const Rat expect = ratio(1, static_cast<long>(c.p) - (2 * static_cast<long>(c.m) - 1));
        const Rat slope = rightmost_slope(build_polygon(remainder_poly(lambda), c.p));
        if (slope != expect) {
            pass = false;
            detail = "Case A m=" + std::to_string(c.m);
        }
    }

    // Case B: p = 3, n = 9 gives slope >= 1/3
    const Rat case_b = rightmost_slope(build_polygon(remainder_poly(Partition({20, 2, 2})), 3));
    if (!(case_b >= ratio(1, 3))) {
        pass = false;
        detail = "Case B";
    }
    report(5, "slope bound sound for n <= 22, p <= 31; Case A exact; Case B >= 1/3", pass,
           detail);
}

void criterion_6() {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<unsigned> pick_n(1, 40);
    std::uniform_int_distribution<unsigned long> pick_half(1, 12);
    int done = 0;
    bool pass = true;
    std::string detail;
    while (done < 300 && pass) {
        const unsigned n = pick_n(rng);
        const auto all = partitions_of(n);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        const Partition& lambda = all[pick(rng)];
        const unsigned long m = 2 * pick_half(rng) + 1;
        Int g, mm(m), delta = degree_vandermonde(lambda);
        mpz_gcd(g.get_mpz_t(), mm.get_mpz_t(), delta.get_mpz_t());
        if (g != 1) continue;
        if (!verify_schur(lambda, m)) {
            pass = false;
            detail = lambda.to_string() + " mod " + std::to_string(m);
        }
        ++done;
    }
    report(6, "Schur congruence exact on 300 random admissible (lambda, odd m <= 25)",
           pass, detail);
}

void criterion_7() {
    bool pass = true;
    std::string detail;
    for (unsigned n = 1; n <= 12 && pass; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (unsigned long p : {2ul, 3ul, 5ul, 7ul})
                if (macdonald_nu_h(lambda, p) != nu(h_product(lambda), p) ||
                    macdonald_nu_f(lambda, p) != nu(dimension(lambda), p)) {
                    pass = false;
                    detail = lambda.to_string() + " p=" + std::to_string(p);
                }
    report(7, "Macdonald formula equals direct valuations (n <= 12, p in {2,3,5,7})",
           pass, detail);
}

void criterion_8() {
    bool pass = true;
    std::string detail;
    for (unsigned n = 1; n <= 24 && pass; ++n)
        for (unsigned m = 1; m <= 3; ++m)
            for (unsigned long p : {5ul, 7ul, 11ul, 13ul}) {
                if (p + 1 < 2 * static_cast<unsigned long>(m)) continue;
                for (unsigned k = 0; k <= (m + 1) / 2 + 1; ++k) {
                    if (n >= big_n_k(m, p, k)) continue;
                    const long bound = ex_lower_bound(n, m, p, k);
                    try {
                        if (ex_bruteforce(n, m, p) < bound) {
                            pass = false;
                            detail = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                     " p=" + std::to_string(p) + " k=" + std::to_string(k);
                        }
                    } catch (const NoSuchPartition&) {
                    }
                }
            }
    // tightness families
    for (unsigned m = 1; m <= 3 && pass; ++m)
        for (unsigned long p : {5ul, 7ul, 11ul, 13ul}) {
            if (p + 1 < 2 * static_cast<unsigned long>(m)) continue;
            for (unsigned k = 1; k <= (m + 1) / 2; ++k) {
                std::vector<unsigned> parts;
                for (unsigned v = m; v >= 1; --v) parts.push_back(v);
                for (unsigned i = 0; i < k; ++i)
                    parts[i] += static_cast<unsigned>(p) - 2 * (m - k) - 1;
                const Partition lambda(parts);
                if (macdonald_nu_f(lambda, p) !=
                    nu_factorial(big_n_k(m, p, k), p) - static_cast<long>(k)) {
                    pass = false;
                    detail = "tightness m=" + std::to_string(m) + " p=" + std::to_string(p);
                }
            }
        }
    report(8, "extremal bound holds on its domain; tightness value nu_p(N_k!) - k", pass,
           detail);
}

void criterion_9() {
    bool pass = true;
    std::string detail;
    for (unsigned n = 1; n <= 50; ++n) {
        const Int closed = he_nn_at_zero(n);
        if (closed != hermite_lambda(Partition({n, n})).coeff(0)) {
            pass = false;
            detail = "constant term mismatch at n=" + std::to_string(n);
            break;
        }
        if (n % 2 == 1) {
            if (mpz_perfect_square_p(closed.get_mpz_t()) == 0) {
                pass = false;
                detail = "odd n=" + std::to_string(n) + " not a square";
                break;
            }
        } else {
            const Int reduced = exact_div(closed, Int(n + 1));
            if (mpz_perfect_square_p(reduced.get_mpz_t()) == 0) {
                pass = false;
                detail = "even n=" + std::to_string(n) + " not (n+1)*square";
                break;
            }
        }
    }
    report(9, "He_(n,n)(0) closed form, square structure, n <= 50", pass, detail);
}

void criterion_10() {
    bool pass = true;
    std::string detail;
    auto compare = [&](const Partition& lambda) {
        const RootCountReport actual = analyze(lambda);
        const RootCountReport predicted = gomez_counts(lambda);
        if (actual.zero_multiplicity != predicted.zero_multiplicity ||
            actual.positive_real != predicted.positive_real ||
            actual.negative_real != predicted.negative_real ||
            actual.nonreal != predicted.nonreal) {
            pass = false;
            detail = "census mismatch at " + lambda.to_string();
        }
    };
    for (unsigned a = 1; a <= 19; ++a)
        for (unsigned b = 1; b <= a && a + b <= 20; ++b) compare(Partition({a, b}));
    for (unsigned a = 1; a <= 18; ++a)
        for (unsigned b = 1; b <= a; ++b)
            for (unsigned c = 1; c <= 2 && c <= b; ++c)
                if (a + b + c <= 20) compare(Partition({a, b, c}));
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned n = k; n <= 12; ++n) {
            std::vector<unsigned> parts{n};
            for (unsigned v = k; v >= 1; --v) parts.push_back(v);
            compare(Partition(parts));
        }

    for (unsigned n = 1; n <= 14 && pass; ++n)
        for (const Partition& lambda : partitions_of(n))
            if (!analyze(lambda).squarefree_nonzero) {
                pass = false;
                detail = "non-squarefree remainder at " + lambda.to_string();
            }

    for (unsigned n = 1; n <= 12 && pass; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            const IntPoly r = remainder_poly(lambda);
            if (r.degree() < 1) continue;
            if (!roots_within_sq(r, root_modulus_bound_sq(lambda), false)) {
                pass = false;
                detail = "modulus bound violated at " + lambda.to_string();
            }
        }
    for (unsigned n = 2; n <= 24 && pass; ++n) {
        const Partition lambda({n, 2});
        if (!roots_within_sq(remainder_poly(lambda),
                             Rat(Int(4 * static_cast<long>(n) - 1)), true)) {
            pass = false;
            detail = "sharp (n,2) bound violated at n=" + std::to_string(n);
        }
    }
    report(10, "root censuses match predictions; remainders squarefree; roots inside bounds",
           pass, detail);
}

void criterion_11() {
    bool pass = true;
    std::string detail;
    for (unsigned long n = 3; n <= 99; n += 2) {
        const Rat slope = rightmost_slope(build_polygon(remainder_poly(Partition(
            {static_cast<unsigned>(n), 2})), 3));
        const bool divides = (n + 1) % 3 == 0;
        const bool ok = divides ? slope < ratio(1, 2) : slope == ratio(1, 2);
        if (!ok) {
            pass = false;
            detail = "n=" + std::to_string(n);
            break;
        }
    }
    report(11, "p=3 slope dichotomy for R_(n,2), odd n in [3,99]", pass, detail);
}

} // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    const auto stop = std::chrono::steady_clock::now();
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: FAILURES PRESENT")
              << " ("
              << std::chrono::duration_cast<std::chrono::seconds>(stop - start).count()
              << "s)" << std::endl;
    return failures == 0 ? 0 : 1;
}
