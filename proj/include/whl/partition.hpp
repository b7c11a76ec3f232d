#ifndef WHL_PARTITION_HPP
#define WHL_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "whl/errors.hpp"

namespace whl {

/// A partition: weakly decreasing non-negative parts. Zero parts are allowed
/// and significant: (3,3,2) and (3,3,2,0) are distinct values, because the
/// 2-quotient bijection is length-sensitive.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);

    /// Parses "6,3,2,1" (zero parts written explicitly, e.g. "3,3,2,0").
    /// An empty string is the empty partition.
    static Partition parse(std::string_view text);

    std::size_t length() const { return parts_.size(); }
    unsigned long size() const;
    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned part(std::size_t i) const { return parts_[i]; }

    /// Copy with trailing zeros removed.
    Partition stripped() const;
    /// Copy zero-padded to `len` (>= current length).
    Partition padded(std::size_t len) const;

    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<unsigned> parts_;
};

/// Strictly increasing degrees (lambda_r, lambda_{r-1}+1, ..., lambda_1+r-1).
using DegreeSequence = std::vector<unsigned long>;

DegreeSequence degree_sequence(const Partition& lambda);

/// Inverse of degree_sequence; input may be unsorted, duplicates rejected.
Partition partition_from_degrees(DegreeSequence degrees);

struct TwoDecomposition {
    Partition core;       // staircase (m, m-1, ..., 1), zero-padded to length r
    Partition quotient0;  // runner-0 partition, length = bead count on runner 0
    Partition quotient1;
    unsigned long weight = 0;  // w_2(lambda)
    int sign = 1;              // delta_2(lambda)
};

TwoDecomposition two_decompose(const Partition& lambda);

/// Rebuilds the unique partition whose 2-abacus has `beads0`/`beads1` beads per
/// runner with quotient partitions q0/q1 (each padded to its runner's count).
Partition partition_from_two_quotient(const Partition& q0, const Partition& q1);

/// Sign of the permutation between the natural numberings of the beads of
/// lambda and of mu (mu reachable from lambda by sliding beads up).
int delta2(const Partition& lambda, const Partition& mu);

/// All mu (same length) obtainable from lambda by removing k 2-hooks;
/// empty when k exceeds the 2-weight. Deterministic order.
std::vector<Partition> mu_leq_k(const Partition& lambda, unsigned long k);

/// p - q, where p/q count odd/even entries of the degree sequence.
long d_lambda(const Partition& lambda);

/// |2-core|, via d_lambda(d_lambda+1)/2 (cross-checked against two_decompose).
unsigned long core_size(const Partition& lambda);

/// Partitions of n with nonzero parts, lexicographically descending.
std::vector<Partition> partitions_of(unsigned n);

/// Partitions of n with exactly `len` nonzero parts, lexicographically descending.
std::vector<Partition> partitions_of_length(unsigned n, std::size_t len);

/// Subpartitions mu <= pi (componentwise, diagram containment) with |mu| = size,
/// zero-padded to length(pi). Deterministic order.
std::vector<Partition> subpartitions_of_size(const Partition& pi, unsigned long size);

} // namespace whl

#endif
