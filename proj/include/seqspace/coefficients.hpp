#pragma once

#include "seqspace/scalar.hpp"

#include <cstddef>
#include <vector>

namespace seqspace {

/// Order of the fractional difference operator. Any real value is accepted.
template <Scalar T>
struct FractionalOrder {
    T value;

    FractionalOrder operator-() const { return FractionalOrder{T(-value)}; }
};

template <Scalar T>
FractionalOrder<T> order(const T& value) {
    return FractionalOrder<T>{value};
}

/// Generalized binomial coefficient C(alpha, i), computed as the product
/// prod_{j=1..i} (alpha - j + 1) / j. Exact for rational alpha; no poles.
template <Scalar T>
T gen_binomial(const FractionalOrder<T>& alpha, std::size_t i) {
    T result(1);
    for (std::size_t j = 1; j <= i; ++j) {
        result *= alpha.value - T(j) + T(1);
        result /= T(j);
    }
    return result;
}

/// C(alpha, 0), ..., C(alpha, count - 1) by the same recurrence, one step per entry.
template <Scalar T>
std::vector<T> gen_binomial_row(const FractionalOrder<T>& alpha, std::size_t count) {
    std::vector<T> row;
    row.reserve(count);
    T c(1);
    for (std::size_t i = 0; i < count; ++i) {
        if (i > 0) {
            c *= alpha.value - T(i) + T(1);
            c /= T(i);
        }
        row.push_back(c);
    }
    return row;
}

/// (-1)^j C(alpha, j): the j-th coefficient of the fractional difference.
template <Scalar T>
T signed_delta_coeff(const FractionalOrder<T>& alpha, std::size_t j) {
    return alternating_sign<T>(j) * gen_binomial(alpha, j);
}

/// ln|Gamma(m)|. Throws PoleError for m in {0, -1, -2, ...}.
double gamma_ln(double m);

/// C(alpha, i) evaluated through Gamma: sign * exp(lnG(a+1) - lnG(i+1) - lnG(a-i+1)).
/// Float cross-check only. Throws PoleError when alpha + 1 or alpha - i + 1 is
/// within `pole_margin` of a non-positive integer.
double gen_binomial_gamma(double alpha, std::size_t i, double pole_margin = 1e-6);

} // namespace seqspace
