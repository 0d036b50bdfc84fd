#pragma once

#include <cstdint>
#include <vector>

#include "rfubini/natural.hpp"
#include "rfubini/periodicity_types.hpp"

namespace rfubini::oracles {

/// Counts weak orderings of n+r labeled elements in which elements
/// 1..r occupy pairwise distinct ranks, by explicit enumeration of
/// unordered set partitions weighted by the orderings of their blocks.
/// Deliberately slow and obviously correct; hard cap n + r <= 9
/// (std::invalid_argument above it).
Natural enumerate_weak_orders(std::uint64_t n, std::uint64_t r);

/// Counts unordered partitions of {1..n} into exactly m nonempty
/// blocks with elements 1..r in distinct blocks, by explicit
/// enumeration. Hard cap n <= 12; requires r <= m <= n.
Natural enumerate_partitions(std::uint64_t n, std::uint64_t m, std::uint64_t r);

/// Exhaustive minimal-eventual-period scan, independent of
/// periodicity::detect_period. Candidate periods d = 1..len/2 in
/// increasing order; for each, the minimal preperiod on the whole
/// examined tail. A candidate is admitted only when the tail shows at
/// least two full periods (preperiod + 2d <= len) and covers at least
/// half the window (preperiod <= len/2). Requires len >= 2.
PeriodObservation naive_min_period(const std::vector<std::uint64_t>& seq);

} // namespace rfubini::oracles
