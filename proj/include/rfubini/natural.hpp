#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace rfubini {

/// Arbitrary-precision integer. Every exact count in the library
/// (factorials, Stirling numbers, Fubini numbers) is a nonnegative
/// Natural; signed intermediates appear only inside inclusion-exclusion
/// sums and never escape.
using Natural = boost::multiprecision::cpp_int;

/// base^exp as an exact integer, with 0^0 = 1.
Natural natural_pow(const Natural& base, std::uint64_t exp);

} // namespace rfubini
