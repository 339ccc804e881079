#pragma once

// Inverse-identity suites: for each named pair (T, T^{-1}) check
// T*T^{-1} = T^{-1}*T = I and truncate(T^{-1}) = invert_trunc(T) at order N.

#include "seqspace/discrepancy.hpp"
#include "seqspace/operators.hpp"
#include "seqspace/triangle.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace seqspace {

template <Scalar T>
struct InverseSuiteResult {
    std::string name;
    T forward_residual{0};  // max |T T^{-1} - I|
    T reverse_residual{0};  // max |T^{-1} T - I|
    T oracle_residual{0};   // max |truncate(T^{-1}) - invert_trunc(T)|
    bool pass = false;
};

template <Scalar T>
struct VerifyReport {
    std::size_t order = 0;
    std::vector<InverseSuiteResult<T>> suites;
    std::optional<DiscrepancyReport<T>> variant;
    bool pass = false;
};

namespace detail {

// Largest entry of |A| |B|: the scale the float residuals are measured against.
template <Scalar T>
T product_scale(const TruncatedMatrix<T>& a, const TruncatedMatrix<T>& b) {
    T best(1);
    for (std::size_t n = 0; n < a.order(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            T sum(0);
            for (std::size_t i = k; i <= n; ++i) sum += abs_value(a(n, i)) * abs_value(b(i, k));
            if (sum > best) best = sum;
        }
    }
    return best;
}

template <Scalar T>
T entry_scale(const TruncatedMatrix<T>& a) {
    T best(1);
    for (std::size_t n = 0; n < a.order(); ++n)
        for (std::size_t k = 0; k <= n; ++k) best = std::max<T>(best, abs_value(a(n, k)));
    return best;
}

// Exact: residual must vanish. Float: relative to `scale` with the absolute floor.
template <Scalar T>
bool within_policy(const T& residual, const T& scale) {
    if constexpr (ScalarTraits<T>::exact) {
        return is_zero(residual);
    } else {
        const auto& tol = ScalarTraits<T>::tolerance;
        return residual <= std::max(tol.absolute, tol.relative * scale);
    }
}

} // namespace detail

template <Scalar T>
InverseSuiteResult<T> check_inverse_pair(const std::string& name, const Triangle<T>& forward,
                                         const Triangle<T>& inverse, std::size_t order) {
    const auto f = forward.truncate(order);
    const auto g = inverse.truncate(order);
    InverseSuiteResult<T> result{name};
    result.forward_residual = identity_residual(multiply_lower(f, g));
    result.reverse_residual = identity_residual(multiply_lower(g, f));
    result.oracle_residual = max_abs_deviation(g, invert_lower(f));
    result.pass = detail::within_policy(result.forward_residual, detail::product_scale(f, g)) &&
                  detail::within_policy(result.reverse_residual, detail::product_scale(g, f)) &&
                  detail::within_policy(result.oracle_residual, detail::entry_scale(g));
    return result;
}

/// Runs the four inverse suites (delta, binomial, lambda, composed) and,
/// when requested, one printed-variant discrepancy report. Passes iff every
/// suite passes and the variant (if any) agrees with its reference.
template <Scalar T>
VerifyReport<T> verify_inverses(const OperatorSpec<T>& spec, std::size_t order,
                                std::optional<PrintedVariant> variant = std::nullopt) {
    VerifyReport<T> report;
    report.order = order;
    report.suites.push_back(
        check_inverse_pair("delta", delta_triangle(spec.alpha), delta_inv_triangle(spec.alpha), order));
    report.suites.push_back(check_inverse_pair("binomial", binomial_triangle(spec.params),
                                               binomial_inv_triangle(spec.params), order));
    report.suites.push_back(
        check_inverse_pair("lambda", lambda_triangle(spec.lambda), lambda_inv_triangle(spec.lambda), order));
    report.suites.push_back(
        check_inverse_pair("composed", composed_triangle(spec), composed_inv_triangle(spec), order));
    report.pass = std::all_of(report.suites.begin(), report.suites.end(), [](const auto& s) { return s.pass; });
    if (variant) {
        report.variant = discrepancy_report(*variant, spec, order);
        report.pass = report.pass && report.variant->agrees();
    }
    return report;
}

} // namespace seqspace
