#include "rslab/arith.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <future>
#include <numbers>
#include <numeric>

#include "rslab/ntt.hpp"
#include "rslab/sieves.hpp"

namespace rslab {

double int128_to_double(int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    double d = std::ldexp(static_cast<double>(static_cast<std::uint64_t>(u >> 64)), 64) +
               static_cast<double>(static_cast<std::uint64_t>(u));
    return neg ? -d : d;
}

std::string int128_to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string s;
    while (u) {
        s.push_back(char('0' + (int)(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

namespace {

// eta^3 via Jacobi: prod (1-q^k)^3 = sum_j (-1)^j (2j+1) q^{j(j+1)/2}
std::vector<std::uint64_t> eta3_mod(std::uint64_t len, std::uint64_t p) {
    std::vector<std::uint64_t> a(len, 0);
    for (std::uint64_t j = 0;; ++j) {
        std::uint64_t e = j * (j + 1) / 2;
        if (e >= len) break;
        std::uint64_t c = (2 * j + 1) % p;
        a[e] = (j % 2 == 0) ? c : p - c;
    }
    return a;
}

}  // namespace

CoefficientTable CoefficientTable::build(std::uint64_t n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");

    const auto& primes = ntt::default_primes();

    // Capacity: the residue system must represent |tau(n)| <= d(n) n^{11/2}.
    auto dcount = divisor_count_sieve(static_cast<std::uint32_t>(n_max));
    std::uint32_t d_max = 1;
    for (std::uint64_t n = 1; n <= n_max; ++n) d_max = std::max(d_max, dcount[n]);
    double need_bits = 1.0 + std::log2(static_cast<double>(d_max)) +
                       5.5 * std::log2(static_cast<double>(n_max));
    if (ntt::modulus_capacity_bits(primes) < need_bits + 1)
        throw CapacityError("modulus set too small for |tau| bound at n_max=" +
                            std::to_string(n_max));

    // eta^3 -> eta^6 -> eta^12 -> eta^24 per prime, in parallel.
    auto run_prime = [n_max](const ntt::Prime& pr) {
        auto a = eta3_mod(n_max, pr.p);
        for (int s = 0; s < 3; ++s) a = ntt::square_mod(a, n_max, pr);
        return a;
    };
    std::vector<std::future<std::vector<std::uint64_t>>> futs;
    for (const auto& pr : primes)
        futs.push_back(std::async(std::launch::async, run_prime, pr));
    std::vector<std::vector<std::uint64_t>> res;
    for (auto& f : futs) res.push_back(f.get());

    CoefficientTable t;
    t.n_max_ = n_max;
    t.tau_.resize(n_max + 1);
    t.tau_[0] = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        t.tau_[n] = ntt::crt_signed(res[0][n - 1], res[1][n - 1], res[2][n - 1]);
        // Deligne bound doubles as an end-to-end check of the residue pipeline.
        double bound = dcount[n] * std::pow(static_cast<double>(n), 5.5);
        if (std::abs(int128_to_double(t.tau_[n])) > bound * (1.0 + 1e-12))
            throw CapacityError("reconstructed tau(" + std::to_string(n) +
                                ") violates the Deligne bound");
    }

    t.lambda_.resize(n_max + 1);
    t.lambda_[0] = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n)
        t.lambda_[n] = int128_to_double(t.tau_[n]) * std::pow(static_cast<double>(n), -5.5);

    t.rs_ = rankin_selberg_coeffs(t.lambda_);
    t.sym2_ = sym2_coeffs(t.lambda_, t.rs_);
    return t;
}

std::vector<double> rankin_selberg_coeffs(const std::vector<double>& lambda) {
    const std::uint64_t n_max = lambda.size() - 1;
    std::vector<double> rs(n_max + 1, 0.0);
    for (std::uint64_t l = 1; l * l <= n_max; ++l)
        for (std::uint64_t m = 1; l * l * m <= n_max; ++m)
            rs[l * l * m] += lambda[m] * lambda[m];
    return rs;
}

std::vector<double> sym2_coeffs_moebius_route(const std::vector<double>& rs) {
    const std::uint64_t n_max = rs.size() - 1;
    auto mu = moebius_sieve(static_cast<std::uint32_t>(n_max));
    std::vector<double> out(n_max + 1, 0.0);
    for (std::uint64_t d = 1; d <= n_max; ++d) {
        if (mu[d] == 0) continue;
        double sgn = mu[d];
        for (std::uint64_t n = d, m = 1; n <= n_max; n += d, ++m) out[n] += sgn * rs[m];
    }
    return out;
}

std::vector<double> sym2_coeffs(const std::vector<double>& lambda,
                                const std::vector<double>& rs) {
    const std::uint64_t n_max = lambda.size() - 1;
    auto spf = spf_sieve(static_cast<std::uint32_t>(n_max));
    std::vector<double> s(n_max + 1, 0.0);
    if (n_max >= 1) s[1] = 1.0;

    // Per prime: Satake triple {e^{2i theta}, 1, e^{-2i theta}} with
    // lambda(p) = 2 cos theta.  Elementary symmetric e1 = e2 = lambda(p)^2 - 1,
    // e3 = 1, so the complete homogeneous values obey
    //   h_k = (lambda(p)^2 - 1)(h_{k-1} - h_{k-2}) + h_{k-3}.
    for (std::uint64_t p = 2; p <= n_max; ++p) {
        if (spf[p] != p) continue;   // composite
        if (std::abs(lambda[p]) > 2.0)
            throw DataError("Deligne violated at p=" + std::to_string(p) +
                            " (|lambda(p)| > 2); corrupt coefficient data");
        double a1 = lambda[p] * lambda[p] - 1.0;
        double h0 = 1.0, h1 = a1, h2 = a1 * a1 - a1;
        std::uint64_t pk = p;
        int k = 1;
        while (pk <= n_max) {
            double hk = (k == 1) ? h1 : (k == 2) ? h2 : 0.0;
            if (k >= 3) {
                hk = a1 * (h2 - h1) + h0;
                h0 = h1; h1 = h2; h2 = hk;
            }
            s[pk] = hk;
            if (pk > n_max / p) break;
            pk *= p;
            ++k;
        }
    }
    // multiplicative extension along smallest prime factors
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        std::uint64_t p = spf[n], pk = 1, m = n;
        while (m % p == 0) { m /= p; pk *= p; }
        if (m > 1) s[n] = s[pk] * s[m];
    }

    // Dirichlet-series route as an independent check of the whole pipeline.
    auto check = sym2_coeffs_moebius_route(rs);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        if (std::abs(s[n] - check[n]) > 1e-9)
            throw DataError("sym2 route disagreement at n=" + std::to_string(n) + ": " +
                            std::to_string(s[n]) + " vs " + std::to_string(check[n]));
    }
    return s;
}

double gl3_coeff(const CoefficientTable& table, std::uint64_t m, std::uint64_t n) {
    if (m < 1 || n < 1 || m > table.n_max() || n > table.n_max())
        throw std::out_of_range("gl3_coeff outside table derivation range");
    std::uint64_t g = std::gcd(m, n);
    double out = 0.0;
    auto add = [&](std::uint64_t d) {
        std::int64_t mu = moebius(d);
        if (mu) out += mu * table.sym2(m / d) * table.sym2(n / d);
    };
    for (std::uint64_t d = 1; d * d <= g; ++d) {
        if (g % d != 0) continue;
        add(d);
        if (d != g / d) add(g / d);
    }
    return out;
}

double kloosterman(std::int64_t a, std::int64_t b, std::uint64_t c) {
    if (c < 1) throw std::invalid_argument("kloosterman modulus must be >= 1");
    if (c == 1) return 1.0;
    const double two_pi = 2.0 * std::numbers::pi;
    double re = 0.0, im = 0.0;
    std::int64_t cc = static_cast<std::int64_t>(c);
    std::int64_t am = ((a % cc) + cc) % cc, bm = ((b % cc) + cc) % cc;
    for (std::int64_t d = 1; d < cc; ++d) {
        if (std::gcd(d, cc) != 1) continue;
        // inverse of d mod c by extended Euclid
        std::int64_t r0 = cc, r1 = d, s0 = 0, s1 = 1;
        while (r1) {
            std::int64_t q = r0 / r1;
            r0 -= q * r1; std::swap(r0, r1);
            s0 -= q * s1; std::swap(s0, s1);
        }
        std::int64_t dinv = ((s0 % cc) + cc) % cc;
        std::int64_t k = (am * d + bm * dinv) % cc;
        double ang = two_pi * static_cast<double>(k) / static_cast<double>(cc);
        re += std::cos(ang);
        im += std::sin(ang);
    }
    assert(std::abs(im) <= 1e-12 * static_cast<double>(c) + 1e-12);
    return re;
}

std::complex<double> character_sum_C(std::int64_t n, std::int64_t m, std::int64_t mp,
                                     std::uint64_t qh, std::uint64_t qhp, int sign) {
    if (qh < 1 || qhp < 1) throw std::invalid_argument("moduli must be >= 1");
    if (gcd_u(m, static_cast<std::int64_t>(qh)) != 1 ||
        gcd_u(mp, static_cast<std::int64_t>(qhp)) != 1)
        throw std::invalid_argument("character_sum_C needs (m,qh) = (mp,qhp) = 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");

    auto inv_mod = [](std::int64_t x, std::int64_t mod) {
        if (mod == 1) return std::int64_t{0};
        std::int64_t r0 = mod, r1 = ((x % mod) + mod) % mod, s0 = 0, s1 = 1;
        while (r1) {
            std::int64_t q = r0 / r1;
            r0 -= q * r1; std::swap(r0, r1);
            s0 -= q * s1; std::swap(s0, s1);
        }
        return ((s0 % mod) + mod) % mod;
    };

    const std::int64_t Q = static_cast<std::int64_t>(qh * qhp);
    const std::int64_t mbar = inv_mod(m, static_cast<std::int64_t>(qh));
    const std::int64_t mpbar = inv_mod(mp, static_cast<std::int64_t>(qhp));

    std::vector<double> s1(qh), s2(qhp);
    for (std::uint64_t x = 0; x < qh; ++x) s1[x] = kloosterman(-mbar, static_cast<std::int64_t>(x), qh);
    for (std::uint64_t y = 0; y < qhp; ++y) s2[y] = kloosterman(mpbar, static_cast<std::int64_t>(y), qhp);

    const double two_pi = 2.0 * std::numbers::pi;
    std::complex<double> out = 0.0;
    for (std::int64_t b = 0; b < Q; ++b) {
        std::int64_t x = ((sign * b) % static_cast<std::int64_t>(qh) + qh) % qh;
        std::int64_t y = ((-sign * b) % static_cast<std::int64_t>(qhp) + qhp) % qhp;
        std::int64_t k = ((n % Q) * b % Q + Q) % Q;
        double ang = two_pi * static_cast<double>(k) / static_cast<double>(Q);
        out += s1[x] * s2[y] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return out;
}

void CoefficientTable::save(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f.write("RSLB", 4);
    std::uint32_t version = 1;
    std::uint64_t nm = n_max_;
    f.write(reinterpret_cast<const char*>(&version), 4);
    f.write(reinterpret_cast<const char*>(&nm), 8);
    for (std::uint64_t n = 1; n <= n_max_; ++n) {
        unsigned __int128 u = static_cast<unsigned __int128>(tau_[n]);
        std::uint64_t lo = static_cast<std::uint64_t>(u);
        std::uint64_t hi = static_cast<std::uint64_t>(u >> 64);
        f.write(reinterpret_cast<const char*>(&lo), 8);
        f.write(reinterpret_cast<const char*>(&hi), 8);
    }
    if (!f) throw std::runtime_error("short write to " + path);
}

CoefficientTable CoefficientTable::load(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    char magic[4];
    f.read(magic, 4);
    if (!f || std::memcmp(magic, "RSLB", 4) != 0)
        throw DataError(path + ": bad magic (not a coefficient cache)");
    std::uint32_t version = 0;
    std::uint64_t nm = 0;
    f.read(reinterpret_cast<char*>(&version), 4);
    f.read(reinterpret_cast<char*>(&nm), 8);
    if (!f || version != 1) throw DataError(path + ": unsupported cache version");
    if (nm < 1 || nm > (1ULL << 32)) throw DataError(path + ": implausible n_max");

    CoefficientTable t;
    t.n_max_ = nm;
    t.tau_.resize(nm + 1);
    t.tau_[0] = 0;
    for (std::uint64_t n = 1; n <= nm; ++n) {
        std::uint64_t lo = 0, hi = 0;
        f.read(reinterpret_cast<char*>(&lo), 8);
        f.read(reinterpret_cast<char*>(&hi), 8);
        t.tau_[n] = static_cast<int128>((static_cast<unsigned __int128>(hi) << 64) | lo);
    }
    if (!f) throw DataError(path + ": truncated cache");

    t.lambda_.resize(nm + 1);
    t.lambda_[0] = 0;
    for (std::uint64_t n = 1; n <= nm; ++n)
        t.lambda_[n] = int128_to_double(t.tau_[n]) * std::pow(static_cast<double>(n), -5.5);
    t.rs_ = rankin_selberg_coeffs(t.lambda_);
    t.sym2_ = sym2_coeffs(t.lambda_, t.rs_);
    return t;
}

}  // namespace rslab
