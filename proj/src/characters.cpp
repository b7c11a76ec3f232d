#include "whl/characters.hpp"

#include <fstream>
#include <map>
#include <mutex>

#include <json.hpp>

namespace whl {

namespace {

Int vandermonde(const DegreeSequence& d) {
    Int v = 1;
    for (std::size_t j = 1; j < d.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            v *= Int(d[j]) - Int(d[i]);
    return v;
}

// Shared memo for dimensions, keyed by stripped parts.
class DimCache {
public:
    Int get(const Partition& stripped_lambda) {
        {
            std::shared_lock lock(mutex_);
            auto it = map_.find(stripped_lambda.parts());
            if (it != map_.end()) return it->second;
        }
        Int v = compute(stripped_lambda);
        std::unique_lock lock(mutex_);
        map_.emplace(stripped_lambda.parts(), v);
        return v;
    }

private:
    static Int compute(const Partition& lambda) {
        const DegreeSequence d = degree_sequence(lambda);
        Int num = factorial(lambda.size()) * vandermonde(d);
        Int den = 1;
        for (unsigned long x : d) den *= factorial(x);
        return exact_div(num, den);
    }
    struct VecHash {
        std::size_t operator()(const std::vector<unsigned>& v) const {
            std::size_t h = 1469598103934665603ull;
            for (unsigned x : v) h = (h ^ x) * 1099511628211ull;
            return h;
        }
    };
    std::shared_mutex mutex_;
    std::unordered_map<std::vector<unsigned>, Int, VecHash> map_;
};

DimCache& dim_cache() {
    static DimCache c;
    return c;
}

// Bareiss fraction-free determinant of an integer matrix (destructive).
Int bareiss_det(std::vector<std::vector<Int>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
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

Int skew_count_raw(const Partition& pi, const Partition& rho) {
    const DegreeSequence dp = degree_sequence(pi);
    const DegreeSequence dr = degree_sequence(rho);
    const std::size_t r = dp.size();
    // Row i scaled by n_{pi,i}!: entries become falling factorials, and
    // F = (|pi|-|rho|)! det(M) / prod n_{pi,i}!.
    std::vector<std::vector<Int>> m(r, std::vector<Int>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            m[i][j] = falling_factorial(dp[i], dr[j]);
    Int det = bareiss_det(m);
    if (det == 0) return 0;
    Int den = 1;
    for (unsigned long x : dp) den *= factorial(x);
    return exact_div(factorial(pi.size() - rho.size()) * det, den);
}

// Memo for skew counts; key = (pi stripped, rho padded to pi's length).
class SkewCache {
public:
    Int get(const Partition& pi, const Partition& rho) {
        Partition ps = pi.stripped();
        Partition rs = rho.stripped().padded(ps.length());
        Key key{ps.parts(), rs.parts()};
        {
            std::shared_lock lock(mutex_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        Int v = skew_count_raw(ps, rs);
        std::unique_lock lock(mutex_);
        map_.emplace(std::move(key), v);
        return v;
    }

private:
    using Key = std::pair<std::vector<unsigned>, std::vector<unsigned>>;
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::size_t h = 1469598103934665603ull;
            for (unsigned x : k.first) h = (h ^ x) * 1099511628211ull;
            h = (h ^ 0xabcdu) * 1099511628211ull;
            for (unsigned x : k.second) h = (h ^ x) * 1099511628211ull;
            return h;
        }
    };
    std::shared_mutex mutex_;
    std::unordered_map<Key, Int, KeyHash> map_;
};

SkewCache& skew_cache() {
    static SkewCache c;
    return c;
}

void check_contains(const Partition& pi, const Partition& rho) {
    if (pi.length() != rho.length())
        throw ShapeError("skew shape requires equal lengths (pad with zeros)");
    for (std::size_t i = 0; i < pi.length(); ++i)
        if (rho.part(i) > pi.part(i))
            throw ShapeError("rho is not contained in pi");
}

} // namespace

Int h_product(const Partition& lambda) {
    const DegreeSequence d = degree_sequence(lambda);
    Int num = 1;
    for (unsigned long x : d) num *= factorial(x);
    return exact_div(num, vandermonde(d));
}

Int dimension(const Partition& lambda) {
    return dim_cache().get(lambda.stripped());
}

Int skew_standard_count(const Partition& pi, const Partition& rho) {
    check_contains(pi, rho);
    return skew_cache().get(pi, rho);
}

Int f2_count(const Partition& lambda, const Partition& mu) {
    if (lambda.length() != mu.length())
        throw ShapeError("f2_count requires equal lengths");
    if (mu.size() > lambda.size() || (lambda.size() - mu.size()) % 2 != 0)
        throw ShapeError("mu is not reachable by 2-hook removals");
    const unsigned long k = (lambda.size() - mu.size()) / 2;
    const TwoDecomposition dl = two_decompose(lambda);
    const TwoDecomposition dm = two_decompose(mu);
    if (dl.quotient0.length() != dm.quotient0.length() ||
        dl.quotient1.length() != dm.quotient1.length())
        throw ShapeError("mu is not reachable by 2-hook removals");
    for (std::size_t i = 0; i < dl.quotient0.length(); ++i)
        if (dm.quotient0.part(i) > dl.quotient0.part(i))
            throw ShapeError("mu is not reachable by 2-hook removals");
    for (std::size_t i = 0; i < dl.quotient1.length(); ++i)
        if (dm.quotient1.part(i) > dl.quotient1.part(i))
            throw ShapeError("mu is not reachable by 2-hook removals");
    const unsigned long a = dl.quotient0.size() - dm.quotient0.size();
    return binomial(k, a) * skew_cache().get(dl.quotient0, dm.quotient0) *
           skew_cache().get(dl.quotient1, dm.quotient1);
}

Int chi_two_class_musum(const Partition& lambda, unsigned long k) {
    if (2 * k > lambda.size())
        throw InvalidClass("class 2^k 1^(n-2k) needs 2k <= n");
    Int total = 0;
    for (const Partition& mu : mu_leq_k(lambda, k))
        total += Int(delta2(lambda, mu)) * f2_count(lambda, mu) * dimension(mu);
    return total;
}

Int chi_top_class(const Partition& lambda) {
    const TwoDecomposition d = two_decompose(lambda);
    return Int(d.sign) * binomial(d.weight, d.quotient0.size()) *
           dimension(d.quotient0) * dimension(d.quotient1) * dimension(d.core);
}

Int chi_two_class(const Partition& lambda, unsigned long k) {
    if (2 * k > lambda.size())
        throw InvalidClass("class 2^k 1^(n-2k) needs 2k <= n");
    const Partition stripped = lambda.stripped();
    Int value;
    if (CharCache::global().lookup(stripped.parts(), k, value)) return value;
    const TwoDecomposition d = two_decompose(stripped);
    if (k > d.weight)
        value = 0;
    else if (k == d.weight)
        value = chi_top_class(stripped);
    else
        value = chi_two_class_musum(stripped, k);
    CharCache::global().insert(stripped.parts(), k, value);
    return value;
}

std::size_t CharCache::KeyHash::operator()(const Key& key) const {
    std::size_t h = 1469598103934665603ull;
    for (unsigned x : key.parts) h = (h ^ x) * 1099511628211ull;
    h = (h ^ key.k) * 1099511628211ull;
    return h;
}

bool CharCache::lookup(const std::vector<unsigned>& stripped, unsigned long k,
                       Int& out) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(Key{stripped, k});
    if (it == map_.end()) return false;
    out = it->second;
    return true;
}

void CharCache::insert(const std::vector<unsigned>& stripped, unsigned long k,
                       Int value) {
    std::unique_lock lock(mutex_);
    map_.emplace(Key{stripped, k}, std::move(value));
}

std::size_t CharCache::entries() const {
    std::shared_lock lock(mutex_);
    return map_.size();
}

void CharCache::load_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open cache file " + path.string());
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        std::vector<unsigned> parts = j.at("lambda").get<std::vector<unsigned>>();
        unsigned long k = j.at("k").get<unsigned long>();
        Int value(j.at("value").get<std::string>());
        insert(parts, k, std::move(value));
    }
}

void CharCache::save_jsonl(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write cache file " + path.string());
    // deterministic order
    std::map<std::pair<std::vector<unsigned>, unsigned long>, Int> sorted;
    {
        std::shared_lock lock(mutex_);
        for (const auto& [key, value] : map_)
            sorted.emplace(std::make_pair(key.parts, key.k), value);
    }
    for (const auto& [key, value] : sorted) {
        nlohmann::json j;
        j["lambda"] = key.first;
        j["k"] = key.second;
        j["value"] = value.get_str();
        out << j.dump() << '\n';
    }
}

CharCache& CharCache::global() {
    static CharCache c;
    return c;
}

} // namespace whl
