#include "rslab/sieves.hpp"

#include <numeric>

namespace rslab {

std::vector<std::uint32_t> spf_sieve(std::uint32_t n) {
    std::vector<std::uint32_t> spf(n + 1, 0);
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (spf[i] == 0)
            for (std::uint64_t j = i; j <= n; j += i)
                if (spf[j] == 0) spf[j] = i;
    }
    return spf;
}

std::vector<std::int8_t> moebius_sieve(std::uint32_t n) {
    auto spf = spf_sieve(n);
    std::vector<std::int8_t> mu(n + 1, 0);
    if (n >= 1) mu[1] = 1;
    for (std::uint32_t i = 2; i <= n; ++i) {
        std::uint32_t p = spf[i], m = i / p;
        mu[i] = (m % p == 0) ? 0 : -mu[m];
    }
    return mu;
}

std::vector<std::uint32_t> divisor_count_sieve(std::uint32_t n) {
    auto spf = spf_sieve(n);
    std::vector<std::uint32_t> d(n + 1, 0), pk_exp(n + 1, 0);
    if (n >= 1) d[1] = 1;
    for (std::uint32_t i = 2; i <= n; ++i) {
        std::uint32_t p = spf[i], m = i / p;
        if (m % p == 0) {
            pk_exp[i] = pk_exp[m] + 1;
            d[i] = d[m] / (pk_exp[m] + 1) * (pk_exp[i] + 1);
        } else {
            pk_exp[i] = 1;
            d[i] = d[m] * 2;
        }
    }
    return d;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::int64_t moebius(std::uint64_t n) {
    if (n == 1) return 1;
    std::int64_t mu = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

std::uint64_t gcd_u(std::int64_t a, std::int64_t b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

}  // namespace rslab
