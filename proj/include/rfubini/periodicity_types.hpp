#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rfubini {

/// Which prediction rule a prime-power factor falls under.
enum class PrimePowerCase {
    trivial_leq_r,   ///< odd p with p^m <= r: every residue is 0
    odd_prime_power, ///< odd p with p^m > r: period phi(p^m)
    two_m_leq_2,     ///< p = 2 with m <= 2 or 2^m <= r: period 1
    two_m_3_to_6,    ///< p = 2, 3 <= m <= 6, 2^m > r: period 2
    two_m_geq_7,     ///< p = 2, m >= 7, 2^m > r: period 2^{m-6}
};

std::string to_string(PrimePowerCase c);

/// Per-prime-power contribution to a period prediction.
struct FactorPrediction {
    std::uint64_t p = 0;
    std::uint32_t m = 0;
    PrimePowerCase case_label = PrimePowerCase::trivial_leq_r;
    std::uint64_t omega_factor = 1;
    std::uint64_t preperiod_factor = 0;
};

/// Predicted eventual period omega and preperiod a for the residue
/// sequence of the r-Fubini numbers modulo s, with the per-factor
/// breakdown. omega is the LCM of the factor periods; a the max of the
/// factor preperiods (0 when there are none). b is the LCM of the
/// totients contributed by odd prime powers exceeding r.
struct PeriodPrediction {
    std::uint64_t r = 1;
    std::uint64_t s = 1;
    std::uint64_t a = 0;
    std::uint64_t omega = 1;
    std::uint64_t b = 1;
    std::vector<FactorPrediction> factors;
};

/// Empirically detected minimal eventual period over a finite window.
/// When conclusive is false no admissible candidate fit the window and
/// period/preperiod are 0.
struct PeriodObservation {
    std::uint64_t preperiod = 0;
    std::uint64_t period = 0;
    std::uint64_t window = 0;
    bool conclusive = false;
};

/// Outcome of checking a prediction against a streamed window.
struct VerificationReport {
    std::uint64_t r = 1;
    std::uint64_t s = 1;
    PeriodPrediction prediction;
    PeriodObservation observation;
    bool prediction_valid = false;       ///< seq[n+omega] == seq[n] for all a <= n < window-omega
    bool minimal_divides = false;        ///< observed period divides predicted omega
    bool observed_preperiod_leq_a = false;

    bool passed() const {
        return prediction_valid && minimal_divides && observed_preperiod_leq_a;
    }
};

} // namespace rfubini
