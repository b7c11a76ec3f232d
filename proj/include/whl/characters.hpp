#ifndef WHL_CHARACTERS_HPP
#define WHL_CHARACTERS_HPP

#include <filesystem>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "whl/ints.hpp"
#include "whl/partition.hpp"

namespace whl {

/// H(lambda) = (prod n_i!) / Delta(n_lambda); a positive integer.
Int h_product(const Partition& lambda);

/// F_lambda = |lambda|! / H(lambda), the irreducible character degree.
Int dimension(const Partition& lambda);

/// Standard fillings of the skew shape pi/rho (Aitken determinant).
/// Requires length(pi) == length(rho) and rho <= pi componentwise.
Int skew_standard_count(const Partition& pi, const Partition& rho);

/// Ordered 2-hook removal sequences lambda -> mu.
/// Requires mu reachable by removing (|lambda|-|mu|)/2 2-hooks.
Int f2_count(const Partition& lambda, const Partition& mu);

/// chi^lambda(2^k 1^(n-2k)) by the mu-sum over k-fold 2-hook removals,
/// valid for every k with 2k <= n. Bypasses the cache; the dispatching
/// chi_two_class is the normal entry point.
Int chi_two_class_musum(const Partition& lambda, unsigned long k);

/// chi^lambda(2^w 1^(n-2w)) at the full 2-weight w, via the quotient product
/// formula. Requires k == w_2(lambda).
Int chi_top_class(const Partition& lambda);

/// chi^lambda(2^k 1^(n-2k)); 0 when k exceeds the 2-weight; memoized.
/// Throws InvalidClass when 2k > |lambda|.
Int chi_two_class(const Partition& lambda, unsigned long k);

/// Memo for character values keyed by (zero-stripped partition, k).
/// Concurrent readers never block each other; writers are serialized and
/// insertion is idempotent.
class CharCache {
public:
    bool lookup(const std::vector<unsigned>& stripped, unsigned long k, Int& out) const;
    void insert(const std::vector<unsigned>& stripped, unsigned long k, Int value);
    std::size_t entries() const;

    /// JSON lines: {"lambda":[...],"k":int,"value":"decimal string"}.
    void load_jsonl(const std::filesystem::path& path);
    void save_jsonl(const std::filesystem::path& path) const;

    static CharCache& global();

private:
    struct Key {
        std::vector<unsigned> parts;
        unsigned long k;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& key) const;
    };
    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, Int, KeyHash> map_;
};

} // namespace whl

#endif
