#include "whl/irreducibility.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "whl/congruence.hpp"
#include "whl/factor.hpp"
#include "whl/hermite.hpp"
#include "whl/padic.hpp"

namespace whl {

const char* status_name(Status s) {
    switch (s) {
        case Status::Irreducible: return "irreducible";
        case Status::Reducible: return "reducible";
        case Status::Unit: return "unit";
    }
    return "?";
}

namespace {

Status status_from_name(const std::string& name) {
    if (name == "irreducible") return Status::Irreducible;
    if (name == "reducible") return Status::Reducible;
    if (name == "unit") return Status::Unit;
    throw IoError("unknown status '" + name + "' in search record");
}

Verdict reducible_with(IntPoly witness, const IntPoly& r, std::string path,
                       std::vector<Certificate> certs = {}) {
    if (!divides(witness, r))
        throw InternalError("reducibility witness fails exact division");
    if (witness.degree() < 1 || witness.degree() >= r.degree())
        throw InternalError("reducibility witness has trivial degree");
    Verdict v;
    v.status = Status::Reducible;
    v.witness = std::move(witness);
    v.certificates = std::move(certs);
    v.engine_path = std::move(path);
    return v;
}

// Largest k with slope < 1/k, for a positive rational slope.
long filaseta_cap(const Rat& slope) {
    // slope = a/b with a, b > 0; k < b/a, so k_max = ceil(b/a) - 1.
    Int a = slope.get_num(), b = slope.get_den();
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
    long k = static_cast<long>(q.get_si());
    if (r == 0) k -= 1;
    return k;
}

} // namespace

Verdict is_irreducible(const IntPoly& r, const EngineConfig& config,
                       const Partition* lambda) {
    if (r.degree() < 1) throw DomainError("is_irreducible needs deg >= 1");
    if (r.coeff(0) == 0) throw DomainError("is_irreducible needs a nonzero constant term");
    if (r.content() != 1) throw DomainError("is_irreducible needs a primitive polynomial");
    const long n = r.degree();

    if (n == 1) {
        Verdict v;
        v.engine_path = "certified";
        return v;
    }

    // (1) square-free precheck: a repeated factor is an immediate witness.
    {
        IntPoly g = gcd_z(r, r.derivative());
        if (g.degree() >= 1)
            return reducible_with(std::move(g), r, "certified",
                                  {{"gcd-derivative", 0, 0, 0}});
    }

    // (2a) cheap integer-root scan (witness-only; completeness comes later).
    for (long t = 1; t <= config.integer_root_scan; ++t) {
        for (long sign : {1L, -1L}) {
            Int x(sign * t);
            if (r.eval(x) == 0)
                return reducible_with(IntPoly({-x, Int(1)}), r, "certified",
                                      {{"integer-root", 0, 0, 0}});
        }
    }

    std::vector<Certificate> certs;

    // (2b) Eisenstein on primes dividing every non-leading coefficient.
    {
        Int g = 0;
        for (long i = 0; i < n; ++i)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.coeff(static_cast<std::size_t>(i)).get_mpz_t());
        if (g > 1) {
            for (unsigned long p = 2; p <= config.menu_prime_cap; p = (p == 2 ? 3 : p + 2)) {
                if (!is_prime(p) || mpz_fdiv_ui(g.get_mpz_t(), p) != 0) continue;
                if (mpz_fdiv_ui(r.leading().get_mpz_t(), p) != 0 &&
                    nu(r.coeff(0), p) == 1) {
                    Verdict v;
                    v.certificates.push_back({"eisenstein", p, 1, n - 1});
                    v.engine_path = "certified";
                    return v;
                }
            }
        }
    }

    // (2c) Filaseta exclusions fed by the congruence prime menu.
    std::vector<bool> excluded(static_cast<std::size_t>(n / 2) + 1, false);
    if (lambda != nullptr) {
        for (const CongruenceCandidate& cand :
             congruence_prime_menu(*lambda, config.menu_prime_cap)) {
            const NewtonPolygon polygon = build_polygon(r, cand.prime);
            if (polygon.edges.empty()) continue;
            const Rat slope = rightmost_slope(polygon);
            if (!(slope > 0)) continue;
            long k = filaseta_cap(slope);
            if (k <= cand.ell) continue;
            auto cert = filaseta_exclude(r, cand.prime, cand.ell, k);
            if (!cert) continue;
            certs.push_back({"filaseta", cert->prime, cert->ell + 1, cert->k});
            for (long d = cert->ell + 1; d <= std::min<long>(cert->k, n / 2); ++d)
                excluded[static_cast<std::size_t>(d)] = true;
        }
        bool all = true;
        for (long d = 1; d <= n / 2; ++d)
            if (!excluded[static_cast<std::size_t>(d)]) { all = false; break; }
        if (all) {
            Verdict v;
            v.certificates = std::move(certs);
            v.engine_path = "certified";
            return v;
        }
    }

    // (3) factor-degree sieve across a fixed prime ladder.
    const auto primes = usable_primes(r, config.sieve_primes);
    std::vector<bool> possible(static_cast<std::size_t>(n) + 1, true);
    for (unsigned long p : primes) {
        const auto census = ddf_degree_census(r, p);
        const auto attain = attainable_degrees(census, static_cast<unsigned>(n));
        for (long d = 0; d <= n; ++d)
            if (!attain[static_cast<std::size_t>(d)]) possible[static_cast<std::size_t>(d)] = false;
    }
    bool any_open = false;
    for (long d = 1; d <= n / 2; ++d)
        if (possible[static_cast<std::size_t>(d)] && !excluded[static_cast<std::size_t>(d)])
            any_open = true;
    if (!any_open) {
        Verdict v;
        v.certificates = std::move(certs);
        v.certificates.push_back({"degree-sieve", 0, 1, n / 2});
        v.engine_path = "sieve";
        return v;
    }

    // (4) complete fallback: Zassenhaus factorization.
    const auto factors = factor_squarefree_z(r);
    if (factors.size() <= 1) {
        Verdict v;
        v.certificates = std::move(certs);
        v.certificates.push_back({"factorization", 0, 0, 0});
        v.engine_path = "full-factorization";
        return v;
    }
    certs.push_back({"factorization", 0, 0, 0});
    return reducible_with(factors.front(), r, "full-factorization", std::move(certs));
}

std::string record_to_json(const SearchRecord& record) {
    nlohmann::json j;
    j["partition"] = record.partition.parts();
    j["n"] = record.n;
    j["status"] = status_name(record.status);
    j["witness_degree"] = record.witness_degree;
    if (record.witness) {
        std::vector<std::string> coeffs;
        for (const Int& c : record.witness->coeffs()) coeffs.push_back(c.get_str());
        j["witness"] = {{"coeffs", coeffs}, {"var", "x"}};
    }
    j["elapsed_ms"] = record.elapsed_ms;
    j["engine_path"] = record.engine_path;
    return j.dump();
}

SearchRecord record_from_json(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line);
    SearchRecord rec;
    rec.partition = Partition(j.at("partition").get<std::vector<unsigned>>());
    rec.n = j.at("n").get<unsigned long>();
    rec.status = status_from_name(j.at("status").get<std::string>());
    rec.witness_degree = j.at("witness_degree").get<long>();
    if (j.contains("witness")) {
        std::vector<Int> coeffs;
        for (const auto& s : j.at("witness").at("coeffs"))
            coeffs.emplace_back(s.get<std::string>());
        rec.witness = IntPoly(std::move(coeffs));
    }
    rec.elapsed_ms = j.at("elapsed_ms").get<unsigned long>();
    rec.engine_path = j.at("engine_path").get<std::string>();
    return rec;
}

const char* const kSearchCsvHeader = "partition,n,length,status,witness_degree,elapsed_ms";

std::string record_to_csv(const SearchRecord& record) {
    std::string s = "\"" + record.partition.to_string() + "\",";
    s += std::to_string(record.n) + ",";
    s += std::to_string(record.partition.length()) + ",";
    s += status_name(record.status);
    s += ",";
    s += std::to_string(record.witness_degree) + ",";
    s += std::to_string(record.elapsed_ms);
    return s;
}

namespace {

SearchRecord evaluate_partition(const Partition& lambda, const EngineConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    SearchRecord rec;
    rec.partition = lambda;
    rec.n = lambda.size();
    const IntPoly r = remainder_poly(lambda);
    if (r.degree() < 1) {
        rec.status = Status::Unit;
        rec.engine_path = "certified";
    } else {
        Verdict v = is_irreducible(r, config, &lambda);
        rec.status = v.status;
        rec.engine_path = v.engine_path;
        if (v.witness) {
            rec.witness = v.witness;
            rec.witness_degree = v.witness->degree();
        }
    }
    const auto stop = std::chrono::steady_clock::now();
    rec.elapsed_ms = static_cast<unsigned long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count());
    return rec;
}

} // namespace

std::vector<SearchRecord> run_search(const SearchOptions& options,
                                     const std::function<void(const SearchRecord&)>& on_record) {
    if (options.length < 1) throw DomainError("search length must be >= 1");

    std::vector<Partition> tasks;
    for (unsigned n = static_cast<unsigned>(options.length); n <= options.n_max; ++n)
        for (Partition& lambda : partitions_of_length(n, options.length))
            tasks.push_back(std::move(lambda));

    // Resume: skip partitions already present in the checkpoint.
    std::map<std::vector<unsigned>, SearchRecord> done;
    if (options.resume && !options.out.empty() &&
        std::filesystem::exists(options.out)) {
        std::ifstream in(options.out);
        if (!in) throw IoError("cannot read checkpoint " + options.out.string());
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            SearchRecord rec = record_from_json(line);
            done.emplace(rec.partition.parts(), std::move(rec));
        }
    }

    std::ofstream out;
    if (!options.out.empty()) {
        out.open(options.out, options.resume ? std::ios::app : std::ios::trunc);
        if (!out) throw IoError("cannot write checkpoint " + options.out.string());
    }

    const unsigned workers = options.workers
                                 ? options.workers
                                 : std::max(1u, std::thread::hardware_concurrency());

    std::vector<SearchRecord> results(tasks.size());
    std::vector<char> fresh(tasks.size(), 0);

    std::atomic<std::size_t> next{0};
    std::mutex sink_mutex;
    std::condition_variable sink_cv;
    std::vector<char> ready(tasks.size(), 0);
    std::size_t emitted = 0;
    std::exception_ptr failure;

    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                auto it = done.find(tasks[i].parts());
                if (it != done.end()) {
                    results[i] = it->second;
                } else {
                    results[i] = evaluate_partition(tasks[i], options.engine);
                    fresh[i] = 1;
                }
            } catch (...) {
                std::lock_guard lock(sink_mutex);
                if (!failure) failure = std::current_exception();
            }
            {
                std::lock_guard lock(sink_mutex);
                ready[i] = 1;
            }
            sink_cv.notify_one();
        }
    };

    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);

    // Single ordered writer: emit record i once every j < i has been emitted.
    {
        std::unique_lock lock(sink_mutex);
        while (emitted < tasks.size()) {
            sink_cv.wait(lock, [&] { return ready[emitted] || failure; });
            if (failure) break;
            const SearchRecord& rec = results[emitted];
            if (out.is_open() && fresh[emitted]) {
                out << record_to_json(rec) << '\n';
                out.flush();
            }
            if (on_record) on_record(rec);
            ++emitted;
        }
    }

    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

FamilyReport verify_theorem_family(TheoremFamily family, unsigned n_max,
                                   const EngineConfig& config) {
    FamilyReport report;
    report.family = family;
    std::vector<Partition> members;
    switch (family) {
        case TheoremFamily::NnSquare:
            for (unsigned n = 1; n <= n_max; ++n) {
                unsigned long root = static_cast<unsigned long>(std::lround(std::sqrt(double(n + 1))));
                if (root * root == n + 1) members.push_back(Partition({n, n}));
            }
            break;
        case TheoremFamily::N1:
            for (unsigned n = 1; n <= n_max; ++n) members.push_back(Partition({n, 1}));
            break;
        case TheoremFamily::N2:
            for (unsigned n = 2; n <= n_max; ++n) members.push_back(Partition({n, 2}));
            break;
    }
    for (const Partition& lambda : members) {
        SearchRecord rec = evaluate_partition(lambda, config);
        ++report.checked;
        if (rec.status == Status::Reducible) {
            report.all_irreducible = false;
            report.counterexample = std::move(rec);
            break;
        }
    }
    return report;
}

unsigned long largest_prime_in_run(unsigned long start, unsigned count) {
    if (start < 2 || count < 1) throw DomainError("run must start at >= 2 with count >= 1");
    unsigned long best = 1;
    for (unsigned long v = start; v < start + count; ++v) {
        unsigned long m = v;
        for (unsigned long d = 2; d * d <= m; ++d) {
            while (m % d == 0) {
                best = std::max(best, d);
                m /= d;
            }
        }
        if (m > 1) best = std::max(best, m);
    }
    return best;
}

} // namespace whl
