#pragma once

// Exact Ramanujan tau, normalized Hecke eigenvalues lambda(n) = tau(n)/n^{11/2},
// Rankin-Selberg coefficients rs(n) = sum_{l^2 m = n} lambda(m)^2, symmetric-square
// coefficients A(1,n), GL(3) Hecke expansion A(m,n), Kloosterman sums, and the
// section-5.5 character sum.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rslab {

using int128 = __int128;

double int128_to_double(int128 v);
std::string int128_to_string(int128 v);

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable after construction; safe for concurrent reads.
class CoefficientTable {
public:
    // Exact tau(n) for all n <= n_max by power-series arithmetic on the
    // weight-12 eta product, NTT squarings mod three ~61-bit primes, CRT
    // reconstruction.  Throws CapacityError if the modulus set cannot
    // represent |tau(n)| <= d(n) n^{11/2}.
    static CoefficientTable build(std::uint64_t n_max);

    std::uint64_t n_max() const { return n_max_; }
    int128 tau(std::uint64_t n) const { return tau_.at(n); }
    double lambda(std::uint64_t n) const { return lambda_.at(n); }
    double rs(std::uint64_t n) const { return rs_.at(n); }
    double sym2(std::uint64_t n) const { return sym2_.at(n); }

    const std::vector<int128>& tau_array() const { return tau_; }
    const std::vector<double>& lambda_array() const { return lambda_; }
    const std::vector<double>& rs_array() const { return rs_; }
    const std::vector<double>& sym2_array() const { return sym2_; }

    // Coefficient cache file: magic "RSLB", u32 version, u64 n_max, then
    // n_max signed 128-bit little-endian tau values.
    void save(const std::string& path) const;
    static CoefficientTable load(const std::string& path);

private:
    CoefficientTable() = default;
    std::uint64_t n_max_ = 0;
    std::vector<int128> tau_;      // 1-indexed, tau_[0] unused
    std::vector<double> lambda_, rs_, sym2_;
};

// rs(n) = sum_{l^2 m = n} lambda(m)^2 for n <= n_max of the table.
std::vector<double> rankin_selberg_coeffs(const std::vector<double>& lambda);

// A(1,n) for Sym^2 via Satake parameters per prime power, extended
// multiplicatively; cross-checked entrywise (1e-9) against the Moebius
// inversion of rs (the Dirichlet-series route).  Throws DataError on
// |lambda(p)| > 2 or on cross-check failure.
std::vector<double> sym2_coeffs(const std::vector<double>& lambda,
                                const std::vector<double>& rs);

// Independent route: sym2 = moebius * rs (Dirichlet convolution); exposed for
// tests and diagnostics.
std::vector<double> sym2_coeffs_moebius_route(const std::vector<double>& rs);

// GL(3) Hecke expansion A(m,n) = sum_{d | (m,n)} mu(d) A(m/d,1) A(1,n/d),
// with A(x,1) = A(1,x) (self-dual real form).
double gl3_coeff(const CoefficientTable& table, std::uint64_t m, std::uint64_t n);

// Classical Kloosterman sum S(a,b;c); the imaginary part (<= 1e-12 * c) is
// asserted and discarded.
double kloosterman(std::int64_t a, std::int64_t b, std::uint64_t c);

// Character sum of section 5.5:
//   C = sum_{b mod qh*qhp} S(-mbar, sign*b; qh) S(mpbar, -sign*b; qhp) e(n b / (qh*qhp)).
// Requires (m, qh) = (mp, qhp) = 1.
std::complex<double> character_sum_C(std::int64_t n, std::int64_t m, std::int64_t mp,
                                     std::uint64_t qh, std::uint64_t qhp, int sign);

}  // namespace rslab
