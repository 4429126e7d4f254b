#pragma once

#include <cstdint>
#include <vector>

namespace rslab {

// Smallest prime factor for 0..n (spf[0]=spf[1]=0).
std::vector<std::uint32_t> spf_sieve(std::uint32_t n);

// Moebius function for 0..n.
std::vector<std::int8_t> moebius_sieve(std::uint32_t n);

// Divisor-count function for 0..n.
std::vector<std::uint32_t> divisor_count_sieve(std::uint32_t n);

std::uint64_t euler_phi(std::uint64_t n);
std::int64_t moebius(std::uint64_t n);

// greatest common divisor convenience for possibly-negative arguments
std::uint64_t gcd_u(std::int64_t a, std::int64_t b);

}  // namespace rslab
