#pragma once

// Oscillatory integrals: adaptive Gauss-Kronrod quadrature with panel density
// tied to the local frequency, first-order stationary phase, derivative-test
// decay diagnostics, and the perturbative stationary point of
// h7(y) = T y^beta - A y + 3 B y^{1/3}.

#include <complex>
#include <functional>
#include <stdexcept>

namespace rslab {

using cdouble = std::complex<double>;
using RealFn = std::function<double(double)>;

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct StationaryPointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Smooth phase on [support_lo, support_hi] with analytic derivatives up to
// order 5 and the scales of Lemma-2.7 bookkeeping: h^(j) ~ Y/Z^j, weight
// inertness X.
struct PhaseSpec {
    RealFn h;
    RealFn d1, d2, d3, d4, d5;
    double support_lo = 0, support_hi = 0;
    double Y = 1;   // phase scale
    double Z = 1;   // length scale
    double X = 1;   // inertness of the companion weight

    // Chain-validates each supplied derivative against central finite
    // differences of the previous one (relative 1e-6 at 64 sample points).
    // FD straight from h loses too many digits by order 5; differencing the
    // analytic previous order keeps every check second-order clean.
    void validate() const;

    // Same phase multiplied by s (scales Y with it).
    PhaseSpec scaled(double s) const;
};

struct InertWeight {
    RealFn w;
    double support_lo = 0, support_hi = 0;
    double X = 1;

    void validate() const;   // |xi^j w^(j)| <= C X^j for j <= 4 at samples
};

// Generic adaptive complex quadrature (Gauss-Kronrod 7-15).  freq is a bound
// for |d(phase)/dxi| used to size initial panels (>= 8 nodes per period).
// Throws QuadratureError after 2^20 panels.
cdouble integrate_adaptive(const std::function<cdouble(double)>& f, double a, double b,
                           double abs_tol, double freq = 0.0);

// integral of w(xi) e^{i h(xi)} dxi; absolute error target 1e-10 * measure.
cdouble quad_oscillatory(const InertWeight& w, const PhaseSpec& p);

// Leading-order stationary phase:
//   sqrt(2pi) e^{i h(xi0) + i (pi/4) sgn(h''(xi0))} w(xi0) / sqrt(|h''(xi0)|).
// Requires exactly one simple zero of h' inside the support and Y/X^2 >= 10.
cdouble stationary_phase_eval(const InertWeight& w, const PhaseSpec& p);

// Location of the single stationary point (bisection bracket from sign
// changes of h' at 1024 samples, Newton polish to 1e-14).
double locate_stationary_point(const PhaseSpec& p);

// log-log slope of |I| across `doublings` doublings of the phase scale.
double decay_diagnostic(const InertWeight& w, const PhaseSpec& p, int doublings);

struct PerturbativeRoot {
    double y_series;     // y0 + y1 + y2 + y3
    double y_newton;     // Newton-iterated root of h7'
    double phase_series; // four-term expansion of h7 at the root
    double y0;
};

// Section-5.5 expansion of the root of h7'(y) = T beta y^{beta-1} - A + B y^{-2/3}.
// Preconditions: 0 < beta < 1, A ~ T (within a factor 100), |B/A| <= 0.05.
PerturbativeRoot perturbative_root_h7(double A, double B, double T, double beta);

}  // namespace rslab
