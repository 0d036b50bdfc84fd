#pragma once

#include <cstdint>

#include "rfubini/natural.hpp"

namespace rfubini {

/// Parameters of an r-Stirling evaluation. The query is inside the
/// classical triangle when n >= m >= r; outside it (m > n or m < r)
/// the count is zero by convention ("no valid partition").
struct StirlingQuery {
    std::uint64_t n = 0; ///< upper parameter
    std::uint64_t m = 0; ///< lower parameter (number of blocks)
    std::uint64_t r = 1; ///< distinctness parameter, r >= 1
};

/// n!
Natural factorial(std::uint64_t n);

/// C(n, k); 0 when k < 0 or k > n.
Natural binomial(std::uint64_t n, std::int64_t k);

/// (j-1)(j-2)...(j-r+1), the product of r-1 consecutive factors,
/// i.e. (j-1)!/(j-r)!. Empty product 1 when r = 1.
/// Throws std::invalid_argument when r = 0 or j < r.
Natural falling_product(std::uint64_t j, std::uint64_t r);

/// Stirling number of the second kind via the inclusion-exclusion sum
/// (1/m!) sum_{j=1}^{m} (-1)^{m-j} C(m,j) j^n.
/// 0 when m > n, 1 when n = m (including n = m = 0).
Natural stirling2(std::uint64_t n, std::uint64_t m);

/// r-Stirling number of the second kind by the explicit formula
/// (1/m!) sum_{j=r}^{m} (-1)^{m-j} C(m,j) j^{n-(r-1)} (j-1)!/(j-r)!.
/// The signed sum is computed exactly, its divisibility by m! is
/// asserted (std::logic_error on failure -- an implementation bug,
/// not an input error), then divided exactly. Returns 0 outside the
/// triangle. Throws std::invalid_argument when r = 0.
Natural r_stirling_explicit(const StirlingQuery& q);

/// Same value computed independently by descending r to the classical
/// base case via {n,m}_r = {n,m}_{r-1} - (r-1){n-1,m}_{r-1}.
Natural r_stirling_recurrence(const StirlingQuery& q);

inline Natural r_stirling_explicit(std::uint64_t n, std::uint64_t m, std::uint64_t r) {
    return r_stirling_explicit(StirlingQuery{n, m, r});
}
inline Natural r_stirling_recurrence(std::uint64_t n, std::uint64_t m, std::uint64_t r) {
    return r_stirling_recurrence(StirlingQuery{n, m, r});
}

/// Fubini (ordered Bell) number F_n = sum_{k=0}^{n} k! {n,k}.
Natural fubini(std::uint64_t n);

/// r-Fubini number F_{n,r} = sum_{k=0}^{n} (k+r)! {n+r,k+r}_r.
/// Throws std::invalid_argument when r = 0.
Natural r_fubini(std::uint64_t n, std::uint64_t r);

} // namespace rfubini
