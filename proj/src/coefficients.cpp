#include "seqspace/coefficients.hpp"

#include "seqspace/errors.hpp"

#include <cmath>
#include <string>

namespace seqspace {

namespace {

bool near_pole(double x, double margin) {
    if (x > margin) return false;
    return std::fabs(x - std::round(x)) <= margin;
}

// Sign of Gamma(x) for x not a pole.
double gamma_sign(double x) {
    if (x > 0.0) return 1.0;
    return (static_cast<long long>(std::ceil(-x)) % 2 == 0) ? 1.0 : -1.0;
}

} // namespace

double gamma_ln(double m) {
    if (m <= 0.0 && m == std::floor(m)) {
        throw PoleError("Gamma has a pole at " + std::to_string(m));
    }
    return std::lgamma(m);
}

double gen_binomial_gamma(double alpha, std::size_t i, double pole_margin) {
    const double a = alpha + 1.0;
    const double b = alpha - static_cast<double>(i) + 1.0;
    if (near_pole(a, pole_margin) || near_pole(b, pole_margin)) {
        throw PoleError("Gamma argument near a pole for alpha=" + std::to_string(alpha) +
                        ", i=" + std::to_string(i));
    }
    const double log_mag = gamma_ln(a) - gamma_ln(static_cast<double>(i) + 1.0) - gamma_ln(b);
    return gamma_sign(a) * gamma_sign(b) * std::exp(log_mag);
}

} // namespace seqspace
