// Command-line front door: exact Wronskian Hermite computations, the
// reducibility search, Newton polygons, congruences, and root censuses.

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "whl/characters.hpp"
#include "whl/congruence.hpp"
#include "whl/hermite.hpp"
#include "whl/irreducibility.hpp"
#include "whl/newton.hpp"
#include "whl/padic.hpp"
#include "whl/roots.hpp"

using namespace whl;
using nlohmann::json;

namespace {

json poly_to_json(const IntPoly& f) {
    std::vector<std::string> coeffs;
    for (const Int& c : f.coeffs()) coeffs.push_back(c.get_str());
    return json{{"coeffs", coeffs}, {"var", "x"}};
}

json rat_to_json(const Rat& r) { return r.get_str(); }

struct GlobalConfig {
    unsigned long prime_cap = 200;
    unsigned jobs = 0;
    std::string cache_path;
    std::string cache_out;
    std::string format = "json";
    unsigned long seed = 0;
};

void load_cache(const GlobalConfig& config) {
    // WHL_CACHE overrides --cache when both are set.
    std::string path = config.cache_path;
    if (const char* env = std::getenv("WHL_CACHE")) path = env;
    if (!path.empty() && std::filesystem::exists(path))
        CharCache::global().load_jsonl(path);
}

void maybe_save_cache(const GlobalConfig& config) {
    if (!config.cache_out.empty()) CharCache::global().save_jsonl(config.cache_out);
}

int cmd_compute(const GlobalConfig& config, const std::string& text) {
    const Partition lambda = Partition::parse(text);
    const TwoDecomposition d = two_decompose(lambda);
    const IntPoly he = hermite_lambda(lambda);
    const RemainderSplit split = remainder_split(lambda);
    json out;
    out["partition"] = lambda.parts();
    out["n"] = lambda.size();
    out["he"] = poly_to_json(he);
    out["core"] = d.core.parts();
    out["quotient0"] = d.quotient0.parts();
    out["quotient1"] = d.quotient1.parts();
    out["weight"] = d.weight;
    out["sign"] = d.sign;
    out["s"] = split.s;
    out["remainder"] = poly_to_json(split.remainder);
    if (lambda.size() >= 2) {
        const Int sub = subleading_coefficient(lambda);
        out["subleading"] = sub.get_str();
        out["subleading_matches"] = (sub == he.coeff(lambda.size() - 2));
    }
    std::cout << out.dump() << "\n";
    maybe_save_cache(config);
    return 0;
}

int cmd_search(const GlobalConfig& config, std::size_t length, unsigned n_max,
               const std::string& out_path, bool resume, const std::string& csv_path) {
    SearchOptions options;
    options.length = length;
    options.n_max = n_max;
    options.out = out_path;
    options.resume = resume;
    options.workers = config.jobs;
    options.engine.menu_prime_cap = config.prime_cap;

    std::ofstream csv_file;
    std::ostream* csv = nullptr;
    if (csv_path == "-") {
        csv = &std::cout;
    } else if (!csv_path.empty()) {
        csv_file.open(csv_path, std::ios::trunc);
        if (!csv_file) throw IoError("cannot write CSV to " + csv_path);
        csv = &csv_file;
    } else if (config.format == "csv") {
        csv = &std::cout;
    }

    if (csv) *csv << kSearchCsvHeader << "\n";
    unsigned long reducible = 0, units = 0, total = 0;
    run_search(options, [&](const SearchRecord& rec) {
        ++total;
        if (rec.status == Status::Reducible) ++reducible;
        if (rec.status == Status::Unit) ++units;
        if (csv) *csv << record_to_csv(rec) << "\n";
        else if (config.format == "json" && out_path.empty())
            std::cout << record_to_json(rec) << "\n";
    });
    std::cerr << "searched " << total << " partitions (length " << length << ", n <= "
              << n_max << "): " << reducible << " reducible, " << units << " units\n";
    maybe_save_cache(config);
    return 0;
}

int cmd_newton(const GlobalConfig& config, const std::string& text, unsigned long p) {
    const Partition lambda = Partition::parse(text);
    const IntPoly r = remainder_poly(lambda);
    json out;
    out["partition"] = lambda.parts();
    out["prime"] = p;
    out["remainder"] = poly_to_json(r);
    if (r.degree() >= 1) {
        const NewtonPolygon polygon = build_polygon(r, p);
        json vertices = json::array();
        for (const PolygonPoint& v : polygon.vertices) vertices.push_back({v.x, v.y});
        json edges = json::array();
        for (const PolygonEdge& e : polygon.edges)
            edges.push_back({{"dx", e.dx}, {"dy", e.dy}, {"slope", rat_to_json(e.slope)}});
        out["vertices"] = vertices;
        out["edges"] = edges;
        out["rightmost_slope"] =
            polygon.edges.empty() ? json(nullptr) : json(rat_to_json(rightmost_slope(polygon)));
    } else {
        out["vertices"] = json::array();
        out["edges"] = json::array();
        out["rightmost_slope"] = nullptr;
    }
    const auto bound = slope_bound(lambda, p);
    out["bound_applicable"] = bound.has_value();
    if (bound) {
        out["bound"] = rat_to_json(bound->bound);
        out["bound_strict"] = bound->strict;
        if (bound->refined) out["bound_refined"] = rat_to_json(*bound->refined);
    } else {
        out["bound"] = nullptr;
    }
    std::cout << out.dump() << "\n";
    maybe_save_cache(config);
    return 0;
}

int cmd_congruence(const GlobalConfig& config, const std::string& text, unsigned long m) {
    const Partition lambda = Partition::parse(text);
    const SchurReduction red = schur_reduce(lambda, m);
    const bool ok = verify_schur(lambda, m);
    json out;
    out["partition"] = lambda.parts();
    out["modulus"] = m;
    out["mu"] = red.mu.parts();
    out["shift"] = red.shift;
    out["verified"] = ok;
    std::cout << out.dump() << "\n";
    maybe_save_cache(config);
    return ok ? 0 : 1;
}

int cmd_roots(const GlobalConfig& config, const std::string& text) {
    const Partition lambda = Partition::parse(text);
    const RootCountReport actual = analyze(lambda);
    const RootCountReport predicted = gomez_counts(lambda);
    auto report_json = [](const RootCountReport& rep) {
        return json{{"zero_multiplicity", rep.zero_multiplicity},
                    {"positive_real", rep.positive_real},
                    {"negative_real", rep.negative_real},
                    {"nonreal", rep.nonreal},
                    {"squarefree_nonzero", rep.squarefree_nonzero}};
    };
    json out;
    out["partition"] = lambda.parts();
    out["analyzed"] = report_json(actual);
    out["predicted"] = report_json(predicted);
    out["match"] = actual.zero_multiplicity == predicted.zero_multiplicity &&
                   actual.positive_real == predicted.positive_real &&
                   actual.negative_real == predicted.negative_real &&
                   actual.nonreal == predicted.nonreal;
    std::cout << out.dump() << "\n";
    maybe_save_cache(config);
    return 0;
}

// ---- verify suites ------------------------------------------------------

int suite_dual(unsigned long seed) {
    for (unsigned n = 0; n <= 14; ++n)
        for (const Partition& lambda : partitions_of(n))
            if (hermite_lambda(lambda) != wronskian_he_oracle(lambda)) {
                std::cout << "dual FAIL at " << lambda.to_string() << "\n";
                return 1;
            }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> pick_n(1, 22);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned n = pick_n(rng);
        const auto all = partitions_of(n);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        const Partition& lambda = all[pick(rng)];
        if (hermite_lambda(lambda) != wronskian_he_oracle(lambda)) {
            std::cout << "dual FAIL at " << lambda.to_string() << "\n";
            return 1;
        }
    }
    std::cout << "dual-construction identity: ok\n";
    return 0;
}

int suite_slope(unsigned long) {
    for (unsigned n = 1; n <= 22; ++n)
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
                const bool ok = bound->strict ? slope < bound->bound : slope <= bound->bound;
                const bool refined_ok = !bound->refined || slope <= *bound->refined;
                if (!ok || !refined_ok) {
                    std::cout << "slope FAIL at " << lambda.to_string() << " p=" << p << "\n";
                    return 1;
                }
            }
        }
    std::cout << "slope bound soundness (n <= 22, p <= 31): ok\n";
    return 0;
}

int suite_schur(unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> pick_n(1, 40);
    std::uniform_int_distribution<unsigned long> pick_half(1, 12);
    int done = 0;
    while (done < 300) {
        const unsigned n = pick_n(rng);
        const auto all = partitions_of(n);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        const Partition& lambda = all[pick(rng)];
        const unsigned long m = 2 * pick_half(rng) + 1;
        Int g, mm(m), delta = degree_vandermonde(lambda);
        mpz_gcd(g.get_mpz_t(), mm.get_mpz_t(), delta.get_mpz_t());
        if (g != 1) continue;
        if (!verify_schur(lambda, m)) {
            std::cout << "schur FAIL at " << lambda.to_string() << " mod " << m << "\n";
            return 1;
        }
        ++done;
    }
    std::cout << "Schur congruence on 300 random admissible pairs: ok\n";
    return 0;
}

int suite_macdonald(unsigned long) {
    for (unsigned n = 1; n <= 12; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (unsigned long p : {2ul, 3ul, 5ul, 7ul})
                if (macdonald_nu_h(lambda, p) != nu(h_product(lambda), p)) {
                    std::cout << "macdonald FAIL at " << lambda.to_string() << " p=" << p
                              << "\n";
                    return 1;
                }
    std::cout << "Macdonald valuation formula (n <= 12, p in {2,3,5,7}): ok\n";
    return 0;
}

int suite_extremal(unsigned long) {
    for (unsigned n = 1; n <= 24; ++n)
        for (unsigned m = 1; m <= 3; ++m)
            for (unsigned long p : {5ul, 7ul, 11ul, 13ul}) {
                if (p + 1 < 2 * static_cast<unsigned long>(m)) continue;
                for (unsigned k = 0; k <= (m + 1) / 2 + 1; ++k) {
                    if (n >= big_n_k(m, p, k)) continue;
                    long bound = ex_lower_bound(n, m, p, k);
                    try {
                        if (ex_bruteforce(n, m, p) < bound) {
                            std::cout << "extremal FAIL at n=" << n << " m=" << m
                                      << " p=" << p << " k=" << k << "\n";
                            return 1;
                        }
                    } catch (const NoSuchPartition&) {
                    }
                }
            }
    std::cout << "extremal lower bound (n <= 24, m <= 3, p in {5,7,11,13}): ok\n";
    return 0;
}

int suite_roots(unsigned long) {
    for (unsigned n = 1; n <= 14; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            const RootCountReport rep = analyze(lambda);
            if (!rep.squarefree_nonzero) {
                std::cout << "roots FAIL (non-squarefree remainder!) at "
                          << lambda.to_string() << "\n";
                return 1;
            }
            if (rep.positive_real != rep.negative_real) {
                std::cout << "roots FAIL (asymmetry) at " << lambda.to_string() << "\n";
                return 1;
            }
        }
    std::cout << "square-free remainders and symmetric counts (n <= 14): ok\n";
    return 0;
}

int suite_dumas(unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> deg(1, 7);
    std::uniform_int_distribution<long> coeff(-50, 50);
    const unsigned long primes[] = {2, 3, 5, 7, 11};
    int done = 0;
    while (done < 500) {
        std::vector<Int> fc(static_cast<std::size_t>(deg(rng)) + 1);
        std::vector<Int> gc(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& v : fc) v = Int(coeff(rng));
        for (auto& v : gc) v = Int(coeff(rng));
        const IntPoly f(std::move(fc)), g(std::move(gc));
        if (f.is_zero() || g.is_zero() || f.coeff(0) == 0 || g.coeff(0) == 0) continue;
        const unsigned long p = primes[static_cast<std::size_t>(done) % 5];
        if (!dumas_decomposition_check(f, g, p)) {
            std::cout << "dumas FAIL\n";
            return 1;
        }
        ++done;
    }
    std::cout << "Dumas decomposition on 500 random products: ok\n";
    return 0;
}

int suite_carlitz(unsigned long) {
    for (unsigned long n = 0; n <= 30; ++n)
        for (unsigned long m : {3ul, 5ul, 7ul, 9ul, 11ul, 15ul, 21ul, 25ul})
            if (!carlitz_check(n, m)) {
                std::cout << "carlitz FAIL at n=" << n << " m=" << m << "\n";
                return 1;
            }
    std::cout << "Carlitz congruence (n <= 30, odd m <= 25): ok\n";
    return 0;
}

int cmd_verify(const GlobalConfig& config, const std::string& suite) {
    const unsigned long seed = config.seed;
    if (suite == "dual") return suite_dual(seed);
    if (suite == "slope") return suite_slope(seed);
    if (suite == "schur") return suite_schur(seed);
    if (suite == "macdonald") return suite_macdonald(seed);
    if (suite == "extremal") return suite_extremal(seed);
    if (suite == "roots") return suite_roots(seed);
    if (suite == "dumas") return suite_dumas(seed);
    if (suite == "carlitz") return suite_carlitz(seed);
    if (suite == "all") {
        int rc = 0;
        for (const char* s : {"dual", "slope", "schur", "macdonald", "extremal", "roots",
                              "dumas", "carlitz"})
            rc |= cmd_verify(config, s);
        return rc;
    }
    std::cerr << "unknown suite '" << suite
              << "' (dual, slope, schur, macdonald, extremal, roots, dumas, carlitz, all)\n";
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wronskian Hermite polynomials: exact construction, irreducibility "
                 "search, Newton polygons, congruences, and root censuses"};
    app.require_subcommand(1);
    app.fallthrough();  // global options remain valid after a subcommand name

    GlobalConfig config;
    app.add_option("--prime-cap", config.prime_cap, "congruence prime menu cap")
        ->capture_default_str();
    app.add_option("-j,--jobs,--parallelism", config.jobs, "worker count (0 = hardware)");
    app.add_option("--cache", config.cache_path, "character cache to load (JSON lines)");
    app.add_option("--cache-out", config.cache_out, "write the character cache on exit");
    app.add_option("--format", config.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", config.seed, "seed for randomized verify suites")
        ->capture_default_str();

    std::string partition_text;
    auto* compute = app.add_subcommand("compute", "He_lambda, 2-structure, and R_lambda");
    compute->add_option("partition", partition_text, "comma-separated parts, e.g. 6,3,2,1")
        ->required();

    std::size_t length = 2;
    unsigned n_max = 30;
    std::string out_path, csv_path;
    bool resume = false;
    auto* search = app.add_subcommand("search", "reducibility sweep at fixed length");
    search->add_option("--length", length, "number of nonzero parts")->required();
    search->add_option("--max-n", n_max, "largest |lambda| to visit")->required();
    search->add_option("--out", out_path, "JSON-lines checkpoint file");
    search->add_option("--csv", csv_path, "summary CSV file ('-' for stdout)");
    search->add_flag("--resume", resume, "skip partitions already in --out");

    std::string newton_partition;
    unsigned long newton_prime = 3;
    auto* newton = app.add_subcommand("newton", "Newton polygon of R_lambda");
    newton->add_option("--partition", newton_partition)->required();
    newton->add_option("--prime", newton_prime)->required();

    std::string congr_partition;
    unsigned long congr_modulus = 3;
    auto* congruence = app.add_subcommand("congruence", "Schur-type reduction mod m");
    congruence->add_option("--partition", congr_partition)->required();
    congruence->add_option("--modulus", congr_modulus)->required();

    std::string roots_partition;
    auto* roots = app.add_subcommand("roots", "exact root census and prediction");
    roots->add_option("--partition", roots_partition)->required();

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "property suites");
    verify->add_option("--suite", suite,
                       "dual|slope|schur|macdonald|extremal|roots|dumas|carlitz|all");

    // ad-hoc p-adic queries
    auto* padic = app.add_subcommand("padic", "p-adic valuation queries");
    unsigned long pd_n = 0, pd_p = 2, pd_q = 2;
    unsigned pd_m = 0;
    std::string pd_partition;
    auto* pd_fact = padic->add_subcommand("factorial", "nu_p(n!)");
    pd_fact->add_option("n", pd_n)->required();
    pd_fact->add_option("p", pd_p)->required();
    auto* pd_weight = padic->add_subcommand("weight", "q-weight of a partition");
    pd_weight->add_option("--partition", pd_partition)->required();
    pd_weight->add_option("--q", pd_q)->required();
    auto* pd_mac = padic->add_subcommand("macdonald", "nu_p(H) and nu_p(F)");
    pd_mac->add_option("--partition", pd_partition)->required();
    pd_mac->add_option("--p", pd_p)->required();
    auto* pd_ex = padic->add_subcommand("ex", "extremal function ex(n,m,p)");
    pd_ex->add_option("n", pd_n)->required();
    pd_ex->add_option("m", pd_m)->required();
    pd_ex->add_option("p", pd_p)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        load_cache(config);
        if (compute->parsed()) return cmd_compute(config, partition_text);
        if (search->parsed())
            return cmd_search(config, length, n_max, out_path, resume, csv_path);
        if (newton->parsed()) return cmd_newton(config, newton_partition, newton_prime);
        if (congruence->parsed())
            return cmd_congruence(config, congr_partition, congr_modulus);
        if (roots->parsed()) return cmd_roots(config, roots_partition);
        if (verify->parsed()) return cmd_verify(config, suite);
        if (padic->parsed()) {
            json out;
            if (pd_fact->parsed()) {
                out["nu_factorial"] = nu_factorial(pd_n, pd_p);
            } else if (pd_weight->parsed()) {
                out["weight"] = p_weight(Partition::parse(pd_partition), pd_q);
            } else if (pd_mac->parsed()) {
                const Partition lambda = Partition::parse(pd_partition);
                out["nu_h"] = macdonald_nu_h(lambda, pd_p);
                out["nu_f"] = macdonald_nu_f(lambda, pd_p);
            } else if (pd_ex->parsed()) {
                out["ex"] = ex_bruteforce(pd_n, pd_m, pd_p);
            } else {
                std::cerr << "padic needs a subcommand\n";
                return 2;
            }
            std::cout << out.dump() << "\n";
            return 0;
        }
    } catch (const InvalidPartition& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
