#include "rslab/smooth.hpp"

#include <cmath>
#include <stdexcept>

namespace rslab {

double bump01(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return std::exp(4.0 - 1.0 / (x * (1.0 - x)));
}

double smoothstep01(double x) {
    // s = sigma(x)/(sigma(x)+sigma(1-x)) with sigma(t) = exp(-1/t): C-infinity,
    // and s'(x) is proportional to exp(-1/(x(1-x))), i.e. the integrated-bump
    // profile in closed form (1/x + 1/(1-x) = 1/(x(1-x))).
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double a = std::exp(-1.0 / x);
    double b = std::exp(-1.0 / (1.0 - x));
    return a / (a + b);
}

double plateau(double x, double a, double b, double c, double d) {
    if (x <= a || x >= d) return 0.0;
    if (x < b) return smoothstep01((x - a) / (b - a));
    if (x <= c) return 1.0;
    return smoothstep01((d - x) / (d - c));
}

SmoothWindow::SmoothWindow(WindowKind k, double X_, double Y_) : kind(k), X(X_), Y(Y_) {
    if (!(X > 0.0) || !(Y > 0.0) || Y > X / 5.0)
        throw std::invalid_argument("SmoothWindow needs 0 < Y <= X/5");
}

double SmoothWindow::operator()(double u) const {
    const double w = Y / X;
    if (kind == WindowKind::W1)
        return plateau(u, 0.5 - w, 0.5, 1.0, 1.0 + w);
    return plateau(u, 0.5, 0.5 + w, 1.0 - w, 1.0);
}

}  // namespace rslab
