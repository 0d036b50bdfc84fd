#include "rfubini/oracles.hpp"

#include <stdexcept>

#include "rfubini/combinatorics.hpp"

namespace rfubini::oracles {

namespace {

// Recursive element-by-element block assignment over partitions of
// {1..total}. Elements <= r may not share a block. At each complete
// partition `leaf` is called with the number of blocks.
template <typename Leaf>
void for_each_partition(std::uint64_t total, std::uint64_t r, Leaf&& leaf) {
    // blocks[b] counts elements in block b; block_has_low[b] marks a
    // block containing one of 1..r.
    std::vector<std::uint64_t> block_sizes;
    std::vector<bool> block_has_low;
    auto rec = [&](auto&& self, std::uint64_t next) -> void {
        if (next > total) {
            leaf(block_sizes.size());
            return;
        }
        bool low = next <= r;
        for (std::size_t b = 0; b < block_sizes.size(); ++b) {
            if (low && block_has_low[b]) continue;
            ++block_sizes[b];
            bool prev = block_has_low[b];
            if (low) block_has_low[b] = true;
            self(self, next + 1);
            block_has_low[b] = prev;
            --block_sizes[b];
        }
        block_sizes.push_back(1);
        block_has_low.push_back(low);
        rec(rec, next + 1);
        block_sizes.pop_back();
        block_has_low.pop_back();
    };
    rec(rec, 1);
}

} // namespace

Natural enumerate_weak_orders(std::uint64_t n, std::uint64_t r) {
    if (r == 0) throw std::invalid_argument("enumerate_weak_orders: r must be >= 1");
    if (n + r > 9) throw std::invalid_argument("enumerate_weak_orders: cap n + r <= 9 exceeded");
    Natural total = 0;
    for_each_partition(n + r, r, [&](std::size_t nblocks) {
        // each unordered partition into t blocks yields t! weak orders
        total += factorial(nblocks);
    });
    return total;
}

Natural enumerate_partitions(std::uint64_t n, std::uint64_t m, std::uint64_t r) {
    if (r == 0) throw std::invalid_argument("enumerate_partitions: r must be >= 1");
    if (n > 12) throw std::invalid_argument("enumerate_partitions: cap n <= 12 exceeded");
    if (!(r <= m && m <= n)) throw std::invalid_argument("enumerate_partitions: requires r <= m <= n");
    Natural count = 0;
    for_each_partition(n, r, [&](std::size_t nblocks) {
        if (nblocks == m) ++count;
    });
    return count;
}

PeriodObservation naive_min_period(const std::vector<std::uint64_t>& seq) {
    const std::uint64_t len = seq.size();
    if (len < 2) throw std::invalid_argument("naive_min_period: need at least 2 terms");
    PeriodObservation obs;
    obs.window = len;
    for (std::uint64_t d = 1; d <= len / 2; ++d) {
        // minimal preperiod: one past the last index violating d-periodicity
        std::uint64_t pre = 0;
        for (std::uint64_t i = len - d; i-- > 0;) {
            if (seq[i + d] != seq[i]) {
                pre = i + 1;
                break;
            }
        }
        if (pre + 2 * d <= len && pre <= len / 2) {
            obs.preperiod = pre;
            obs.period = d;
            obs.conclusive = true;
            return obs;
        }
    }
    return obs;
}

} // namespace rfubini::oracles
