#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace psd::algebra {

/// Exact convolution of nonnegative integer vectors via number-theoretic
/// transforms over up to three 32-bit primes, recombined by CRT. Output has
/// length |u|+|v|-1 (empty if either input is empty). Throws InternalError
/// when the coefficient bound does not fit in 64 bits or the transform
/// length exceeds 2^26.
std::vector<std::uint64_t> exact_convolve(std::span<const std::uint64_t> u, std::span<const std::uint64_t> v);

/// Quadratic reference used for short inputs.
std::vector<std::uint64_t> schoolbook_convolve(std::span<const std::uint64_t> u, std::span<const std::uint64_t> v);

}  // namespace psd::algebra
