#include "rfubini/modular.hpp"

#include <stdexcept>

namespace rfubini {

namespace {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t s) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % s);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t s) {
    std::uint64_t t = a + b; // a, b < s <= 2^63 in practice; guard anyway
    if (t >= s || t < a) t -= s;
    return t;
}

} // namespace

PrimePowerFactorization factorize(std::uint64_t s) {
    if (s == 0) throw std::invalid_argument("factorize: modulus must be >= 1");
    PrimePowerFactorization f;
    f.s = s;
    std::uint64_t rest = s;
    for (std::uint64_t d = 2; d * d <= rest; d += (d == 2 ? 1 : 2)) {
        if (rest % d != 0) continue;
        std::uint32_t e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        f.factors.push_back({d, e});
    }
    if (rest > 1) f.factors.push_back({rest, 1});
    return f;
}

std::uint64_t totient(std::uint64_t s) {
    std::uint64_t phi = 1;
    for (const auto& [p, m] : factorize(s).factors) {
        std::uint64_t pp = 1;
        for (std::uint32_t i = 1; i < m; ++i) pp *= p;
        phi *= pp * (p - 1);
    }
    return phi;
}

std::uint64_t mod_pow(std::int64_t base, std::uint64_t exp, std::uint64_t s) {
    if (s == 0) throw std::invalid_argument("mod_pow: modulus must be >= 1");
    std::uint64_t b = base >= 0
        ? static_cast<std::uint64_t>(base) % s
        : (s - static_cast<std::uint64_t>(-(base + 1)) % s - 1) % s;
    std::uint64_t result = 1 % s;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, b, s);
        b = mul_mod(b, b, s);
        exp >>= 1;
    }
    return result;
}

std::uint64_t weighted_r_stirling_mod(std::uint64_t n, std::uint64_t m,
                                      std::uint64_t r, std::uint64_t s) {
    if (s == 0) throw std::invalid_argument("weighted_r_stirling_mod: modulus must be >= 1");
    if (r == 0) throw std::invalid_argument("weighted_r_stirling_mod: r must be >= 1");
    if (m < r) throw std::invalid_argument("weighted_r_stirling_mod: requires m >= r");
    if (m > n) return 0;

    // binomial row C(m, .) mod s via Pascal
    std::vector<std::uint64_t> row(m + 1, 0);
    row[0] = 1 % s;
    for (std::uint64_t t = 1; t <= m; ++t)
        for (std::uint64_t j = t; j-- > 0;)
            row[j + 1] = add_mod(row[j + 1], row[j], s);

    std::uint64_t sum = 0;
    for (std::uint64_t j = r; j <= m; ++j) {
        std::uint64_t fall = 1 % s;
        for (std::uint64_t t = 1; t < r; ++t) fall = mul_mod(fall, (j - t) % s, s);
        std::uint64_t term = mul_mod(row[j], mod_pow(static_cast<std::int64_t>(j), n - (r - 1), s), s);
        term = mul_mod(term, fall, s);
        if ((m - j) % 2 != 0) term = (s - term) % s;
        sum = add_mod(sum, term, s);
    }
    return sum;
}

std::uint64_t r_fubini_mod(std::uint64_t n, std::uint64_t r, std::uint64_t s) {
    if (s == 0) throw std::invalid_argument("r_fubini_mod: modulus must be >= 1");
    if (r == 0) throw std::invalid_argument("r_fubini_mod: r must be >= 1");
    std::uint64_t fact = 1 % s;
    for (std::uint64_t t = 2; t <= r; ++t) fact = mul_mod(fact, t % s, s);
    std::uint64_t sum = 0;
    for (std::uint64_t k = 0; k <= n; ++k) {
        if (k > 0) fact = mul_mod(fact, (k + r) % s, s);
        if (fact == 0) break; // truncation: (k+r)! == 0 mod s
        sum = add_mod(sum, weighted_r_stirling_mod(n + r, k + r, r, s), s);
    }
    return sum;
}

std::uint64_t r_fubini_mod_untruncated(std::uint64_t n, std::uint64_t r, std::uint64_t s) {
    if (s == 0) throw std::invalid_argument("r_fubini_mod_untruncated: modulus must be >= 1");
    if (r == 0) throw std::invalid_argument("r_fubini_mod_untruncated: r must be >= 1");
    std::uint64_t sum = 0;
    for (std::uint64_t k = 0; k <= n; ++k)
        sum = add_mod(sum, weighted_r_stirling_mod(n + r, k + r, r, s), s);
    return sum;
}

ResidueStream::ResidueStream(std::uint64_t r, std::uint64_t s) : r_(r), s_(s) {
    if (s == 0) throw std::invalid_argument("ResidueStream: modulus must be >= 1");
    if (r == 0) throw std::invalid_argument("ResidueStream: r must be >= 1");
    fact_res_ = 1 % s;
    for (std::uint64_t t = 2; t <= r; ++t) fact_res_ = mul_mod(fact_res_, t % s, s);
    binrow_.assign(1, 1 % s); // C(0, .) row; grown to order k+r as layers are added
}

std::uint64_t ResidueStream::next() {
    const std::uint64_t n = cursor_;
    const std::uint64_t s = s_;
    if (!trunc_.has_value()) {
        if (n > 0) fact_res_ = mul_mod(fact_res_, (n + r_) % s, s);
        if (fact_res_ == 0) {
            trunc_ = n;
            binrow_.clear();
            binrow_.shrink_to_fit();
        } else {
            // extend binomial row to order n + r
            const std::uint64_t target = n + r_;
            while (binrow_.size() < target + 1) {
                binrow_.push_back(0);
                for (std::size_t j = binrow_.size() - 1; j-- > 1;)
                    binrow_[j] = add_mod(binrow_[j], binrow_[j - 1], s);
                if (binrow_.size() >= 2)
                    binrow_[binrow_.size() - 1] = 1 % s;
            }
            // fold layer k = n into the per-j coefficients:
            // c_{n,j} = (-1)^{n+r-j} C(n+r, j) (j-1)...(j-r+1)
            for (std::uint64_t j = r_; j <= n + r_; ++j) {
                const std::size_t idx = j - r_;
                if (idx >= coeff_.size()) {
                    std::uint64_t fall = 1 % s;
                    for (std::uint64_t t = 1; t < r_; ++t)
                        fall = mul_mod(fall, (j - t) % s, s);
                    coeff_.push_back(0);
                    power_.push_back(mod_pow(static_cast<std::int64_t>(j), n + 1, s));
                    fall_cache_push(fall);
                }
                std::uint64_t c = mul_mod(binrow_[j], fall_at(idx), s);
                if ((n + r_ - j) % 2 != 0) c = (s - c) % s;
                coeff_[idx] = add_mod(coeff_[idx], c, s);
            }
        }
    }
    std::uint64_t out = 0;
    for (std::size_t idx = 0; idx < coeff_.size(); ++idx)
        out = add_mod(out, mul_mod(coeff_[idx], power_[idx], s), s);
    for (std::size_t idx = 0; idx < power_.size(); ++idx)
        power_[idx] = mul_mod(power_[idx], (idx + r_) % s, s);
    ++cursor_;
    return out;
}

std::vector<std::uint64_t> ResidueStream::take(std::uint64_t count) {
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(next());
    return out;
}

} // namespace rfubini
