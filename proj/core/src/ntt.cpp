#include "rslab/ntt.hpp"

#include <cmath>
#include <stdexcept>

namespace rslab::ntt {

const std::vector<Prime>& default_primes() {
    static const std::vector<Prime> primes = {
        {1945555039024054273ULL, 5},   // 27*2^56+1
        {4179340454199820289ULL, 3},   // 29*2^57+1
        {2485986994308513793ULL, 5},   // 69*2^55+1
    };
    return primes;
}

double modulus_capacity_bits(const std::vector<Prime>& primes) {
    double bits = 0;
    for (const auto& pr : primes) bits += std::log2(static_cast<double>(pr.p));
    return bits;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((__uint128_t)a * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

void transform(std::vector<std::uint64_t>& a, const Prime& pr, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("ntt size must be a power of two");
    if ((pr.p - 1) % n != 0) throw std::invalid_argument("ntt size exceeds two-adic capacity of prime");

    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        std::uint64_t wlen = powmod(pr.g, (pr.p - 1) / len, pr.p);
        if (inverse) wlen = invmod(wlen, pr.p);
        for (std::size_t i = 0; i < n; i += len) {
            std::uint64_t w = 1;
            for (std::size_t j = 0; j < len / 2; ++j) {
                std::uint64_t u = a[i + j];
                std::uint64_t v = mulmod(a[i + j + len / 2], w, pr.p);
                a[i + j] = u + v < pr.p ? u + v : u + v - pr.p;
                a[i + j + len / 2] = u >= v ? u - v : u + pr.p - v;
                w = mulmod(w, wlen, pr.p);
            }
        }
    }

    if (inverse) {
        std::uint64_t ninv = invmod(n % pr.p, pr.p);
        for (auto& x : a) x = mulmod(x, ninv, pr.p);
    }
}

std::vector<std::uint64_t> square_mod(const std::vector<std::uint64_t>& a,
                                      std::size_t out_len, const Prime& pr) {
    std::size_t need = std::min(out_len, 2 * a.size() - 1);
    std::size_t n = 1;
    while (n < a.size() + a.size() - 1) n <<= 1;
    std::vector<std::uint64_t> f(a);
    f.resize(n, 0);
    transform(f, pr, false);
    for (auto& x : f) x = mulmod(x, x, pr.p);
    transform(f, pr, true);
    f.resize(need);
    f.resize(out_len, 0);
    return f;
}

__int128 crt_signed(std::uint64_t r1, std::uint64_t r2, std::uint64_t r3) {
    const auto& ps = default_primes();
    const std::uint64_t p1 = ps[0].p, p2 = ps[1].p, p3 = ps[2].p;
    // Garner mixed radix: v = d1 + p1*d2 + p1*p2*d3, 0 <= di < pi
    static const std::uint64_t inv_p1_mod_p2 = invmod(p1 % p2, p2);
    static const std::uint64_t inv_p1p2_mod_p3 = invmod(mulmod(p1 % p3, p2 % p3, p3), p3);

    const std::uint64_t d1 = r1;                           // d1 < p1 < p2, p3
    const std::uint64_t t2 = r2 >= d1 ? r2 - d1 : r2 + p2 - d1;
    const std::uint64_t d2 = mulmod(t2, inv_p1_mod_p2, p2);
    const std::uint64_t low3 = (d1 % p3 + mulmod(p1 % p3, d2 % p3, p3)) % p3;
    const std::uint64_t t3 = r3 >= low3 ? r3 - low3 : r3 + p3 - low3;
    const std::uint64_t d3 = mulmod(t3, inv_p1p2_mod_p3, p3);

    // Centered value: if d3 is in the upper half, v - p1*p2*p3 is meant.
    // A value representable in i128 forces the top digit within
    // 2^127/(p1*p2) < 21 of 0 or p3; the band is capped at 20 so the
    // p1p2*d3c product itself cannot overflow.
    const __int128 p1p2 = (__int128)p1 * (__int128)p2;     // ~2^122.6
    const std::uint64_t digit_band = 20;
    __int128 d3c;
    if (d3 <= digit_band) {
        d3c = (__int128)d3;
    } else if (d3 >= p3 - digit_band) {
        d3c = (__int128)d3 - (__int128)p3;
    } else {
        throw std::overflow_error("crt reconstruction exceeds 128-bit capacity");
    }
    return (__int128)d1 + (__int128)p1 * (__int128)d2 + p1p2 * d3c;
}

}  // namespace rslab::ntt
