#pragma once

// Printed-formula variants and their comparison against the oracle.
//
// Each variant is built exactly as printed and compared entrywise with a
// reference: the forward-substitution inverse for inverse formulas, the
// canonical composed triangle for the product formula. Mismatches are data.

#include "seqspace/coefficients.hpp"
#include "seqspace/operators.hpp"
#include "seqspace/triangle.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace seqspace {

enum class PrintedVariant {
    lemma3_as_printed,   // lambda inverse as a full lower triangle
    theorem4_as_printed, // composed inverse with lambda_n / step_k placement
    eq21_as_printed,     // composed matrix weighted by step_i, no alternating sign
    theta_as_printed,    // basis columns with the step_k / lambda_k factor
};

inline const char* variant_name(PrintedVariant v) {
    switch (v) {
    case PrintedVariant::lemma3_as_printed: return "lemma3_as_printed";
    case PrintedVariant::theorem4_as_printed: return "theorem4_as_printed";
    case PrintedVariant::eq21_as_printed: return "eq21_as_printed";
    case PrintedVariant::theta_as_printed: return "theta_as_printed";
    }
    return "unknown";
}

/// Throws DomainError for an unknown name. Accepts the short CLI names too.
PrintedVariant parse_variant(const std::string& name);

template <Scalar T>
struct EntryMismatch {
    std::size_t n;
    std::size_t k;
    T printed;
    T reference;
};

template <Scalar T>
struct DiscrepancyReport {
    PrintedVariant variant;
    std::string reference; // what the printed form was compared against
    std::size_t order;
    T max_abs_deviation{0};
    std::vector<EntryMismatch<T>> mismatches; // row-major
    std::vector<std::pair<std::string, T>> observations;

    bool agrees() const { return mismatches.empty(); }

    /// First mismatch in row-major order.
    std::optional<EntryMismatch<T>> first_mismatch() const {
        if (mismatches.empty()) return std::nullopt;
        return mismatches.front();
    }

    /// First entry where exactly one of printed/reference is zero, i.e. where
    /// the sparsity patterns differ.
    std::optional<EntryMismatch<T>> first_structural_mismatch() const {
        for (const auto& m : mismatches)
            if (is_zero(m.printed) != is_zero(m.reference)) return m;
        return std::nullopt;
    }
};

/// (-1)^{n-k} lambda_n / (lambda_k - lambda_{k-1}) on the full lower triangle.
template <Scalar T>
Triangle<T> printed_lambda_inverse(const LambdaSeq<T>& lambda) {
    return Triangle<T>("lemma3-as-printed", [lambda](std::size_t n, std::size_t k) {
        return T(alternating_sign<T>(n - k) * lambda[n] / lambda.step(k));
    });
}

namespace detail {

// (s+r)^k (-1)^{n-k} sum_{i=k..n} C(i,k) C(-alpha, n-i) r^{-i} s^{i-k}, the
// inner sum shared by the printed inverse and basis formulas. The printed
// Gamma token "(-(-alpha)+1)" is read as the inverse-difference coefficient C(-alpha, .).
template <Scalar T>
T printed_inverse_core(const OperatorSpec<T>& spec, std::size_t n, std::size_t k) {
    const T& r = spec.params.r();
    const T& s = spec.params.s();
    const std::vector<T> neg_alpha = gen_binomial_row(-spec.alpha, n - k + 1);
    T sum(0);
    for (std::size_t i = k; i <= n; ++i) {
        T term = choose<T>(i, k) * neg_alpha[n - i] * int_pow(s, i - k);
        sum += term / int_pow(r, i);
    }
    return alternating_sign<T>(n - k) * int_pow(spec.params.sum(), k) * sum;
}

} // namespace detail

/// Composed inverse with the lambda factor lambda_n / (lambda_k - lambda_{k-1}).
template <Scalar T>
Triangle<T> printed_composed_inverse(const OperatorSpec<T>& spec) {
    spec.params.require_invertible();
    return Triangle<T>("theorem4-as-printed", [spec](std::size_t n, std::size_t k) {
        return T(detail::printed_inverse_core(spec, n, k) * spec.lambda[n] / spec.lambda.step(k));
    });
}

/// Basis columns with the factor (lambda_k - lambda_{k-1}) / lambda_k.
template <Scalar T>
Triangle<T> printed_theta_columns(const OperatorSpec<T>& spec) {
    spec.params.require_invertible();
    return Triangle<T>("theta-as-printed", [spec](std::size_t n, std::size_t k) {
        return T(detail::printed_inverse_core(spec, n, k) * spec.lambda.step(k) / spec.lambda[k]);
    });
}

/// sum_{i=k..n} (step_i / lambda_n) C(n, n-i) C(alpha, i-k) r^i s^{n-i} / (s+r)^n
template <Scalar T>
Triangle<T> printed_composed(const OperatorSpec<T>& spec) {
    return Triangle<T>("eq21-as-printed", [spec](std::size_t n, std::size_t k) {
        const T& r = spec.params.r();
        const T& s = spec.params.s();
        const std::vector<T> alpha_row = gen_binomial_row(spec.alpha, n - k + 1);
        T sum(0);
        for (std::size_t i = k; i <= n; ++i) {
            sum += spec.lambda.step(i) * choose<T>(n, n - i) * alpha_row[i - k] * int_pow(r, i) *
                   int_pow(s, n - i);
        }
        return T(sum / (spec.lambda[n] * int_pow(spec.params.sum(), n)));
    });
}

template <Scalar T>
DiscrepancyReport<T> compare_truncations(PrintedVariant variant, std::string reference,
                                         const TruncatedMatrix<T>& printed,
                                         const TruncatedMatrix<T>& expected) {
    DiscrepancyReport<T> report{variant, std::move(reference), printed.order()};
    report.max_abs_deviation = max_abs_deviation(printed, expected);
    for (std::size_t n = 0; n < printed.order(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            if (!nearly_equal(printed(n, k), expected(n, k))) {
                report.mismatches.push_back({n, k, printed(n, k), expected(n, k)});
            }
        }
    }
    return report;
}

inline constexpr std::size_t kMaxDiscrepancyOrder = 64;

/// Builds the printed variant and compares it with its reference at order N.
template <Scalar T>
DiscrepancyReport<T> discrepancy_report(PrintedVariant variant, const OperatorSpec<T>& spec,
                                        std::size_t order) {
    if (order == 0 || order > kMaxDiscrepancyOrder) {
        throw SizeError("discrepancy report needs 1 <= N <= 64");
    }
    switch (variant) {
    case PrintedVariant::lemma3_as_printed:
        return compare_truncations(variant, "invert_trunc(lambda)",
                                   printed_lambda_inverse(spec.lambda).truncate(order),
                                   invert_trunc(lambda_triangle(spec.lambda), order));
    case PrintedVariant::theorem4_as_printed:
        return compare_truncations(variant, "invert_trunc(composed)",
                                   printed_composed_inverse(spec).truncate(order),
                                   invert_trunc(composed_triangle(spec), order));
    case PrintedVariant::theta_as_printed:
        return compare_truncations(variant, "invert_trunc(composed)",
                                   printed_theta_columns(spec).truncate(order),
                                   invert_trunc(composed_triangle(spec), order));
    case PrintedVariant::eq21_as_printed: {
        const auto canonical = composed_triangle(spec).truncate(order);
        const auto printed = printed_composed(spec).truncate(order);
        auto report = compare_truncations(variant, "composed", printed, canonical);
        // Neither form is asserted to equal the literal product Lambda * B * Delta;
        // the deviations are recorded as observations.
        const auto literal = multiply_lower(
            multiply_lower(lambda_triangle(spec.lambda).truncate(order),
                           binomial_triangle(spec.params).truncate(order)),
            delta_triangle(spec.alpha).truncate(order));
        report.observations.emplace_back("canonical_vs_literal_product",
                                         max_abs_deviation(canonical, literal));
        report.observations.emplace_back("printed_vs_literal_product",
                                         max_abs_deviation(printed, literal));
        return report;
    }
    }
    throw DomainError("unknown variant");
}

} // namespace seqspace
