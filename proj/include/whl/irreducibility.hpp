#ifndef WHL_IRREDUCIBILITY_HPP
#define WHL_IRREDUCIBILITY_HPP

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "whl/newton.hpp"
#include "whl/partition.hpp"
#include "whl/poly.hpp"

namespace whl {

enum class Status { Irreducible, Reducible, Unit };

const char* status_name(Status s);

struct Certificate {
    std::string kind;        // "eisenstein", "integer-root", "gcd-derivative",
                             // "filaseta", "degree-sieve", "factorization"
    unsigned long prime = 0;
    long lo = 0, hi = 0;     // excluded factor-degree interval, when applicable
};

struct Verdict {
    Status status = Status::Irreducible;
    std::optional<IntPoly> witness;  // verified exact divisor when Reducible
    std::vector<Certificate> certificates;
    std::string engine_path;  // "sieve" | "certified" | "full-factorization"
};

struct EngineConfig {
    unsigned sieve_primes = 8;
    unsigned long menu_prime_cap = 200;
    long integer_root_scan = 512;  // cheap witness scan radius
};

/// Sound and complete irreducibility decision over Z for a primitive
/// polynomial with deg >= 1 and nonzero constant term. When `lambda` is
/// supplied the congruence prime menu contributes exclusion certificates.
Verdict is_irreducible(const IntPoly& r, const EngineConfig& config = {},
                       const Partition* lambda = nullptr);

struct SearchRecord {
    Partition partition;
    unsigned long n = 0;
    Status status = Status::Irreducible;
    long witness_degree = -1;           // -1 when no witness
    std::optional<IntPoly> witness;
    unsigned long elapsed_ms = 0;
    std::string engine_path;
};

std::string record_to_json(const SearchRecord& record);
SearchRecord record_from_json(const std::string& line);
std::string record_to_csv(const SearchRecord& record);
extern const char* const kSearchCsvHeader;

struct SearchOptions {
    std::size_t length = 2;
    unsigned n_max = 30;
    std::filesystem::path out;          // JSON-lines checkpoint; empty = none
    bool resume = false;
    unsigned workers = 0;               // 0 = hardware concurrency
    EngineConfig engine;
};

/// Visits every lambda |- n <= n_max with exactly `length` nonzero parts,
/// ascending n then lexicographically descending; parallel across partitions,
/// records emitted in enumeration order. Resumable via the JSONL checkpoint.
std::vector<SearchRecord> run_search(
    const SearchOptions& options,
    const std::function<void(const SearchRecord&)>& on_record = {});

enum class TheoremFamily { NnSquare, N1, N2 };

struct FamilyReport {
    TheoremFamily family;
    unsigned long checked = 0;
    bool all_irreducible = true;
    std::optional<SearchRecord> counterexample;
};

/// Verdicts for the (n,n) with n+1 square / (n,1) / (n,2) families with
/// |lambda| <= 2*n_max; any reducible member is reported as a counterexample.
FamilyReport verify_theorem_family(TheoremFamily family, unsigned n_max,
                                   const EngineConfig& config = {});

/// Largest prime factor over start..start+count-1, by direct factorization.
unsigned long largest_prime_in_run(unsigned long start, unsigned count);

} // namespace whl

#endif
