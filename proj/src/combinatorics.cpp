#include "rfubini/combinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace rfubini {

Natural natural_pow(const Natural& base, std::uint64_t exp) {
    Natural result = 1;
    Natural b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        exp >>= 1;
        if (exp > 0) b *= b;
    }
    return result;
}

Natural factorial(std::uint64_t n) {
    Natural result = 1;
    for (std::uint64_t i = 2; i <= n; ++i) result *= i;
    return result;
}

Natural binomial(std::uint64_t n, std::int64_t k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
    std::uint64_t kk = static_cast<std::uint64_t>(k);
    if (kk > n - kk) kk = n - kk;
    Natural result = 1;
    for (std::uint64_t i = 0; i < kk; ++i) {
        result *= (n - i);
        result /= (i + 1); // exact: prefix products of C(n,.) are integers
    }
    return result;
}

Natural falling_product(std::uint64_t j, std::uint64_t r) {
    if (r == 0) throw std::invalid_argument("falling_product: r must be >= 1");
    if (j < r) throw std::invalid_argument("falling_product: requires j >= r");
    Natural result = 1;
    for (std::uint64_t t = 1; t < r; ++t) result *= (j - t);
    return result;
}

Natural stirling2(std::uint64_t n, std::uint64_t m) {
    if (m > n) return 0;
    if (m == 0) return n == 0 ? 1 : 0;
    Natural sum = 0;
    for (std::uint64_t j = 1; j <= m; ++j) {
        Natural term = binomial(m, static_cast<std::int64_t>(j)) * natural_pow(Natural(j), n);
        if ((m - j) % 2 == 0) sum += term; else sum -= term;
    }
    Natural mf = factorial(m);
    if (sum % mf != 0) throw std::logic_error("stirling2: signed sum not divisible by m!");
    return sum / mf;
}

Natural r_stirling_explicit(const StirlingQuery& q) {
    if (q.r == 0) throw std::invalid_argument("r_stirling_explicit: r must be >= 1");
    if (q.m > q.n || q.m < q.r) return 0;
    Natural sum = 0;
    for (std::uint64_t j = q.r; j <= q.m; ++j) {
        Natural term = binomial(q.m, static_cast<std::int64_t>(j))
                     * natural_pow(Natural(j), q.n - (q.r - 1))
                     * falling_product(j, q.r);
        if ((q.m - j) % 2 == 0) sum += term; else sum -= term;
    }
    Natural mf = factorial(q.m);
    if (sum % mf != 0) throw std::logic_error("r_stirling_explicit: signed sum not divisible by m!");
    return sum / mf;
}

Natural r_stirling_recurrence(const StirlingQuery& q) {
    if (q.r == 0) throw std::invalid_argument("r_stirling_recurrence: r must be >= 1");
    if (q.m > q.n || q.m < q.r) return 0;
    // Level t holds {n - i, m}_t for offsets i = 0 .. r - t; level 1 is
    // classical Stirling, each level above is one application of the
    // descent identity.
    std::vector<Natural> level(q.r);
    for (std::uint64_t i = 0; i < q.r; ++i) {
        std::uint64_t np = q.n - i; // n >= m >= r > i, so no underflow
        level[i] = (q.m > np) ? Natural(0) : stirling2(np, q.m);
    }
    for (std::uint64_t t = 2; t <= q.r; ++t) {
        std::vector<Natural> next(q.r - t + 1);
        for (std::uint64_t i = 0; i + t <= q.r; ++i)
            next[i] = level[i] - (t - 1) * level[i + 1];
        level = std::move(next);
    }
    return level[0];
}

Natural fubini(std::uint64_t n) {
    Natural sum = 0;
    for (std::uint64_t k = 0; k <= n; ++k)
        sum += factorial(k) * stirling2(n, k);
    return sum;
}

Natural r_fubini(std::uint64_t n, std::uint64_t r) {
    if (r == 0) throw std::invalid_argument("r_fubini: r must be >= 1");
    Natural sum = 0;
    for (std::uint64_t k = 0; k <= n; ++k)
        sum += factorial(k + r) * r_stirling_explicit(n + r, k + r, r);
    return sum;
}

} // namespace rfubini
