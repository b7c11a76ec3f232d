#include "whl/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace whl {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] < parts_[i + 1])
            throw InvalidPartition("parts must be weakly decreasing: " + to_string());
}

Partition Partition::parse(std::string_view text) {
    std::vector<unsigned> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        unsigned v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size())
            throw InvalidPartition("cannot parse partition part '" + std::string(tok) + "'");
        parts.push_back(v);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

unsigned long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0ul);
}

Partition Partition::stripped() const {
    std::vector<unsigned> p = parts_;
    while (!p.empty() && p.back() == 0) p.pop_back();
    return Partition(std::move(p));
}

Partition Partition::padded(std::size_t len) const {
    if (len < parts_.size())
        throw InvalidPartition("padded() cannot shorten a partition");
    std::vector<unsigned> p = parts_;
    p.resize(len, 0);
    return Partition(std::move(p));
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

DegreeSequence degree_sequence(const Partition& lambda) {
    const auto& p = lambda.parts();
    const std::size_t r = p.size();
    DegreeSequence d(r);
    for (std::size_t i = 0; i < r; ++i)
        d[i] = static_cast<unsigned long>(p[r - 1 - i]) + i;
    return d;
}

Partition partition_from_degrees(DegreeSequence degrees) {
    std::sort(degrees.begin(), degrees.end());
    for (std::size_t i = 0; i + 1 < degrees.size(); ++i)
        if (degrees[i] == degrees[i + 1])
            throw DuplicateDegree("degree sequence entries must be distinct");
    const std::size_t r = degrees.size();
    std::vector<unsigned> parts(r);
    for (std::size_t i = 0; i < r; ++i)
        parts[r - 1 - i] = static_cast<unsigned>(degrees[i] - i);
    return Partition(std::move(parts));
}

namespace {

// Bead identity on the 2-abacus: (runner, index from the top of that runner).
struct Bead {
    int runner;
    std::size_t index;
    friend bool operator==(const Bead&, const Bead&) = default;
};

// Beads of a degree set tagged with per-runner indices, sorted by position.
std::vector<Bead> bead_order(const DegreeSequence& degrees) {
    DegreeSequence sorted = degrees;
    std::sort(sorted.begin(), sorted.end());
    std::size_t count[2] = {0, 0};
    std::vector<Bead> order;
    order.reserve(sorted.size());
    for (unsigned long pos : sorted) {
        int t = static_cast<int>(pos & 1);
        order.push_back({t, count[t]++});
    }
    return order;
}

int permutation_sign_between(const std::vector<Bead>& a, const std::vector<Bead>& b) {
    const std::size_t r = a.size();
    std::vector<std::size_t> perm(r);
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t j = 0;
        while (j < r && !(b[j] == a[i])) ++j;
        perm[i] = j;
    }
    int sign = 1;
    std::vector<bool> seen(r, false);
    for (std::size_t i = 0; i < r; ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

// Runner-t sub-abacus depths, increasing: the quotient's degree sequence.
DegreeSequence runner_depths(const DegreeSequence& degrees, int t) {
    DegreeSequence depths;
    for (unsigned long pos : degrees)
        if (static_cast<int>(pos & 1) == t) depths.push_back(pos >> 1);
    std::sort(depths.begin(), depths.end());
    return depths;
}

DegreeSequence degrees_from_runners(const DegreeSequence& depths0,
                                    const DegreeSequence& depths1) {
    DegreeSequence degrees;
    degrees.reserve(depths0.size() + depths1.size());
    for (unsigned long d : depths0) degrees.push_back(2 * d);
    for (unsigned long d : depths1) degrees.push_back(2 * d + 1);
    return degrees;
}

} // namespace

TwoDecomposition two_decompose(const Partition& lambda) {
    const DegreeSequence degrees = degree_sequence(lambda);
    const DegreeSequence depths0 = runner_depths(degrees, 0);
    const DegreeSequence depths1 = runner_depths(degrees, 1);

    TwoDecomposition d;
    d.quotient0 = partition_from_degrees(depths0);
    d.quotient1 = partition_from_degrees(depths1);

    // Core: all beads slid to the top of their runners.
    DegreeSequence core0(depths0.size()), core1(depths1.size());
    std::iota(core0.begin(), core0.end(), 0ul);
    std::iota(core1.begin(), core1.end(), 0ul);
    const DegreeSequence core_degrees = degrees_from_runners(core0, core1);
    d.core = partition_from_degrees(core_degrees);

    d.weight = (lambda.size() - d.core.size()) / 2;
    d.sign = permutation_sign_between(bead_order(degrees), bead_order(core_degrees));
    return d;
}

Partition partition_from_two_quotient(const Partition& q0, const Partition& q1) {
    return partition_from_degrees(
        degrees_from_runners(degree_sequence(q0), degree_sequence(q1)));
}

int delta2(const Partition& lambda, const Partition& mu) {
    if (lambda.length() != mu.length())
        throw ShapeError("delta2 requires equal lengths");
    const DegreeSequence dl = degree_sequence(lambda);
    const DegreeSequence dm = degree_sequence(mu);
    if (runner_depths(dl, 0).size() != runner_depths(dm, 0).size())
        throw ShapeError("delta2: mu is not reachable from lambda by bead slides");
    return permutation_sign_between(bead_order(dl), bead_order(dm));
}

std::vector<Partition> mu_leq_k(const Partition& lambda, unsigned long k) {
    const TwoDecomposition d = two_decompose(lambda);
    std::vector<Partition> out;
    if (k > d.weight) return out;
    const unsigned long target = d.weight - k;
    const unsigned long s0 = d.quotient0.size();
    const unsigned long s1 = d.quotient1.size();
    for (unsigned long a = (target > s1 ? target - s1 : 0); a <= std::min(s0, target); ++a) {
        for (const Partition& rho0 : subpartitions_of_size(d.quotient0, a))
            for (const Partition& rho1 : subpartitions_of_size(d.quotient1, target - a))
                out.push_back(partition_from_two_quotient(rho0, rho1));
    }
    std::sort(out.begin(), out.end());
    return out;
}

long d_lambda(const Partition& lambda) {
    long odd = 0, even = 0;
    for (unsigned long d : degree_sequence(lambda))
        (d & 1 ? odd : even)++;
    return odd - even;
}

unsigned long core_size(const Partition& lambda) {
    const long d = d_lambda(lambda);
    return static_cast<unsigned long>(d * (d + 1) / 2);
}

namespace {

void gen_partitions(unsigned n, unsigned max_part, std::vector<unsigned>& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (unsigned first = std::min(n, max_part); first >= 1; --first) {
        cur.push_back(first);
        gen_partitions(n - first, first, cur, out);
        cur.pop_back();
    }
}

void gen_partitions_len(unsigned n, std::size_t len, unsigned max_part,
                        std::vector<unsigned>& cur, std::vector<Partition>& out) {
    if (len == 0) {
        if (n == 0) out.emplace_back(cur);
        return;
    }
    if (n < len) return;  // every remaining part needs >= 1
    unsigned hi = std::min<unsigned>(max_part, n - static_cast<unsigned>(len) + 1);
    for (unsigned first = hi; first >= 1; --first) {
        // Remaining len-1 parts are each <= first, so need n-first <= first*(len-1).
        if (static_cast<unsigned long>(first) * (len - 1) < n - first) continue;
        cur.push_back(first);
        gen_partitions_len(n - first, len - 1, first, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    gen_partitions(n, n == 0 ? 1 : n, cur, out);
    return out;
}

std::vector<Partition> partitions_of_length(unsigned n, std::size_t len) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    gen_partitions_len(n, len, n, cur, out);
    return out;
}

namespace {

void gen_subpartitions(const std::vector<unsigned>& bound, std::size_t row,
                       unsigned prev, unsigned long remaining,
                       std::vector<unsigned>& cur, std::vector<Partition>& out) {
    if (row == bound.size()) {
        if (remaining == 0) out.emplace_back(cur);
        return;
    }
    unsigned hi = std::min<unsigned>(std::min(bound[row], prev),
                                     remaining > 0xffffffffUL
                                         ? 0xffffffffU
                                         : static_cast<unsigned>(remaining));
    for (unsigned v = hi;; --v) {
        cur.push_back(v);
        gen_subpartitions(bound, row + 1, v, remaining - v, cur, out);
        cur.pop_back();
        if (v == 0) break;
    }
}

} // namespace

std::vector<Partition> subpartitions_of_size(const Partition& pi, unsigned long size) {
    std::vector<Partition> out;
    if (size > pi.size()) return out;
    std::vector<unsigned> cur;
    cur.reserve(pi.length());
    unsigned first_cap = pi.length() ? pi.part(0) : 0;
    gen_subpartitions(pi.parts(), 0, first_cap, size, cur, out);
    return out;
}

} // namespace whl
