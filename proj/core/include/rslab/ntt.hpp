#pragma once

// Number-theoretic transforms modulo three ~61/62-bit primes with CRT
// reconstruction into signed 128-bit integers.  Used for the power-series
// squarings of the eta product; capacity is 184 bits, comfortably above the
// 130-bit requirement for |tau(n)| <= d(n) n^{11/2} at n = 1e6.

#include <cstdint>
#include <vector>

namespace rslab::ntt {

struct Prime {
    std::uint64_t p;
    std::uint64_t g;   // primitive root
};

// The configured modulus set: 27*2^56+1, 29*2^57+1, 69*2^55+1.
const std::vector<Prime>& default_primes();

// log2 of the product of the modulus set (CRT capacity in bits).
double modulus_capacity_bits(const std::vector<Prime>& primes);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

// In-place iterative radix-2 NTT, size a power of two dividing the p-1
// two-adic part.  inverse=true applies the inverse transform including the
// 1/n normalization.
void transform(std::vector<std::uint64_t>& a, const Prime& pr, bool inverse);

// Cyclic self-convolution of the first n coefficients, truncated back to
// out_len coefficients, all modulo pr.p.
std::vector<std::uint64_t> square_mod(const std::vector<std::uint64_t>& a,
                                      std::size_t out_len, const Prime& pr);

// Garner reconstruction of a centered value from residues modulo the three
// default primes.  Throws std::overflow_error if the value cannot be
// certified to fit a signed 128-bit integer (capacity error).
__int128 crt_signed(std::uint64_t r1, std::uint64_t r2, std::uint64_t r3);

}  // namespace rslab::ntt
