#pragma once

// C-infinity bumps, smoothstep transitions, and the section-3.1 sandwich
// windows W1/W2 with derivative bounds (X/Y)^k.

#include <functional>

namespace rslab {

// exp(-1/(x(1-x))) on (0,1), zero outside; normalized so the peak is 1 at x=1/2.
double bump01(double x);

// Integral of bump01 normalized to rise smoothly 0 -> 1 across [0,1].
double smoothstep01(double x);

// Plateau bump: 0 outside [a,d], rises on [a,b], 1 on [b,c], falls on [c,d].
double plateau(double x, double a, double b, double c, double d);

enum class WindowKind { W1, W2 };

// W1(u)=1 on [1/2,1], supported in [1/2-Y/X, 1+Y/X];
// W2(u)=1 on [1/2+Y/X, 1-Y/X], supported in [1/2,1].
// Derivatives obey W^(k) << (X/Y)^k.
struct SmoothWindow {
    WindowKind kind;
    double X;
    double Y;   // must be <= X/5

    SmoothWindow(WindowKind k, double X_, double Y_);
    double operator()(double u) const;
};

}  // namespace rslab
