#pragma once

// Bit-index arithmetic on degrees and weights.
//
// A degree or weight is read through its binary representation; all tests
// are done on the native 64-bit word, which is wide enough for every operand
// the library accepts (degrees are capped at kMaxDegree).

#include <bit>
#include <cstdint>

namespace bsphere {

using Degree = std::uint64_t;

/// Largest threshold t accepted by the phi/rho builders.
inline constexpr Degree kMaxThreshold = Degree{1} << 32;

/// Largest degree any operation will produce or accept (or() of two capped values fits).
inline constexpr Degree kMaxDegree = (Degree{1} << 33) - 1;

/// b(a) is contained in b(b).
constexpr bool is_subset(Degree a, Degree b) noexcept { return (a & b) == a; }

constexpr Degree bit_or(Degree a, Degree b) noexcept { return a | b; }

/// Parity of the binomial coefficient C(w, i) by Lucas' theorem.
constexpr bool binom_parity(Degree w, Degree i) noexcept { return is_subset(i, w); }

/// sigma_i * sigma_j = sigma_h in the square-free quotient, with b(h) = b(i) | b(j).
constexpr Degree sigma_mul(Degree i, Degree j) noexcept { return bit_or(i, j); }

constexpr bool is_power_of_two(Degree x) noexcept { return std::has_single_bit(x); }

/// Smallest power of two >= t (t >= 1); this is 2^s with 2^(s-1) < t <= 2^s.
constexpr Degree ceil_pow2(Degree t) noexcept { return std::bit_ceil(t); }

constexpr unsigned popcount(std::uint64_t x) noexcept { return static_cast<unsigned>(std::popcount(x)); }

}  // namespace bsphere
