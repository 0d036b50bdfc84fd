#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rfubini/natural.hpp"

namespace rfubini {

/// One prime-power factor p^m of a modulus.
struct PrimePower {
    std::uint64_t p = 0;
    std::uint32_t m = 0;
};

/// Canonical factorization of a modulus: primes strictly increasing,
/// product of p^m equal to s, empty exactly for s = 1.
struct PrimePowerFactorization {
    std::uint64_t s = 1;
    std::vector<PrimePower> factors;
};

/// Trial-division factorization. Throws std::invalid_argument for s = 0.
PrimePowerFactorization factorize(std::uint64_t s);

/// Euler totient from the factorization: prod p^{m-1}(p-1). phi(1) = 1.
std::uint64_t totient(std::uint64_t s);

/// base^exp mod s with 0^0 = 1 convention (so result is 1 % s).
/// Negative bases are normalized into [0, s) first. Requires s >= 1.
std::uint64_t mod_pow(std::int64_t base, std::uint64_t exp, std::uint64_t s);

/// (m! * {n,m}_r) mod s evaluated division-free as the signed sum
/// sum_{j=r}^{m} (-1)^{m-j} C(m,j) j^{n-(r-1)} (j-1)!/(j-r)! mod s.
/// Returns 0 when m > n. Throws std::invalid_argument when m < r,
/// r = 0 or s = 0.
std::uint64_t weighted_r_stirling_mod(std::uint64_t n, std::uint64_t m,
                                      std::uint64_t r, std::uint64_t s);

/// F_{n,r} mod s as the sum of weighted r-Stirling residues,
/// truncated at the first k with (k+r)! == 0 (mod s) -- every later
/// term carries that factorial as an integer factor and vanishes.
std::uint64_t r_fubini_mod(std::uint64_t n, std::uint64_t r, std::uint64_t s);

/// Same residue by the full untruncated definition sum; exists so the
/// truncation can be cross-checked term for term.
std::uint64_t r_fubini_mod_untruncated(std::uint64_t n, std::uint64_t r, std::uint64_t s);

/// Incremental generator of the residue sequence of the r-Fubini
/// numbers modulo s: the n-th value of next() equals
/// r_fubini_mod(n, r, s). Maintains a binomial row, per-j power and
/// coefficient accumulators so that producing N terms costs
/// O(N * (truncation bound + r)) modular operations total, never
/// recomputing a term from scratch. Single consumer; distinct streams
/// are independent.
class ResidueStream {
public:
    ResidueStream(std::uint64_t r, std::uint64_t s);

    /// Residue of F_{cursor,r} mod s; advances the cursor.
    std::uint64_t next();

    /// Convenience: the next `count` residues.
    std::vector<std::uint64_t> take(std::uint64_t count);

    std::uint64_t r() const { return r_; }
    std::uint64_t modulus() const { return s_; }
    /// Index of the next term next() will produce.
    std::uint64_t cursor() const { return cursor_; }
    /// Smallest k with (k+r)! == 0 (mod s), once reached.
    std::optional<std::uint64_t> truncation_bound() const { return trunc_; }

private:
    std::uint64_t r_;
    std::uint64_t s_;
    std::uint64_t cursor_ = 0;
    std::optional<std::uint64_t> trunc_;
    std::uint64_t fact_res_;             // (cursor-1+r)! mod s while not truncated
    std::vector<std::uint64_t> binrow_;  // C(cursor-1+r, .) mod s while not truncated
    std::vector<std::uint64_t> coeff_;   // per j-r: accumulated signed coefficient
    std::vector<std::uint64_t> power_;   // per j-r: j^{cursor+1} mod s
};

} // namespace rfubini
