#pragma once

// Multiplier matrices for the alpha-, beta- and gamma-duals and the five
// matrix-class conditions evaluated on finite truncations.
//
//   4.1  sup_K sum_n |sum_{k in K} a_nk|      (c0 : l1) = (c : l1) = (linf : l1)
//   4.2  sup_n sum_k |a_nk|                   (. : linf)
//   4.3  lim_n a_nk exists for each k
//   4.4  lim_n sum_k a_nk exists
//   4.5  lim_n sum_k |a_nk| = sum_k |lim_n a_nk|
//
// Limits cannot be decided from a window; every verdict is "so far".

#include "seqspace/errors.hpp"
#include "seqspace/operators.hpp"
#include "seqspace/scalar.hpp"
#include "seqspace/transforms.hpp"
#include "seqspace/triangle.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace seqspace {

enum class Condition { c4_1, c4_2, c4_3, c4_4, c4_5 };
enum class ConditionVerdict { bounded_so_far, growing, converged_so_far };
enum class DualKind { alpha, beta, gamma };

inline const char* condition_name(Condition c) {
    switch (c) {
    case Condition::c4_1: return "4.1";
    case Condition::c4_2: return "4.2";
    case Condition::c4_3: return "4.3";
    case Condition::c4_4: return "4.4";
    case Condition::c4_5: return "4.5";
    }
    return "unknown";
}

inline const char* verdict_name(ConditionVerdict v) {
    switch (v) {
    case ConditionVerdict::bounded_so_far: return "bounded-so-far";
    case ConditionVerdict::growing: return "growing";
    case ConditionVerdict::converged_so_far: return "converged-so-far";
    }
    return "unknown";
}

inline const char* dual_name(DualKind d) {
    switch (d) {
    case DualKind::alpha: return "alpha";
    case DualKind::beta: return "beta";
    case DualKind::gamma: return "gamma";
    }
    return "unknown";
}

Condition parse_condition(const std::string& name);
DualKind parse_dual(const std::string& name);

inline constexpr std::size_t kMaxSubsetOrder = 15;
inline constexpr std::size_t kMaxConditionOrder = 64;

template <Scalar T>
struct ConditionReport {
    Condition condition;
    T value{0};              // value at the full truncation N
    std::vector<T> trend;    // trend[n-1] = value at truncation n, n = 1..N
    std::vector<T> detail;   // 4.3: column deltas at N; 4.4: row sums; otherwise empty
    ConditionVerdict verdict = ConditionVerdict::bounded_so_far;
};

template <Scalar T>
struct DualReport {
    DualKind dual;
    SequenceSpace source;
    std::vector<ConditionReport<T>> conditions;
    ConditionVerdict aggregate = ConditionVerdict::bounded_so_far;
};

namespace detail {

// Truncation of the composed inverse at the window length, shared by the
// multiplier matrices built from it.
template <Scalar T>
std::shared_ptr<const TruncatedMatrix<T>> inverse_block(const OperatorSpec<T>& spec, std::size_t order) {
    return std::make_shared<const TruncatedMatrix<T>>(composed_inv_triangle(spec).truncate(order));
}

inline void require_in_window(std::size_t n, std::size_t size) {
    if (n >= size) {
        throw SizeError("multiplier window has " + std::to_string(size) + " entries; row " +
                        std::to_string(n) + " requested");
    }
}

} // namespace detail

/// D with d_{nk} = (A^{-1})_{nk} d_n. Rows past the window of d throw SizeError.
template <Scalar T>
Triangle<T> alpha_dual_matrix(const SequenceWindow<T>& d, const OperatorSpec<T>& spec) {
    auto inv = detail::inverse_block(spec, d.size());
    return Triangle<T>("alpha-dual", [inv, d](std::size_t n, std::size_t k) {
        detail::require_in_window(n, d.size());
        return T((*inv)(n, k) * d[n]);
    });
}

/// T with t_{nk} = sum_{i=k..n} (A^{-1})_{ik} d_i.
template <Scalar T>
Triangle<T> beta_dual_matrix(const SequenceWindow<T>& d, const OperatorSpec<T>& spec) {
    const std::size_t size = d.size();
    auto inv = detail::inverse_block(spec, size);
    // column partial sums, computed once for the whole window
    auto partial = std::make_shared<TruncatedMatrix<T>>(size);
    for (std::size_t k = 0; k < size; ++k) {
        T running(0);
        for (std::size_t n = k; n < size; ++n) {
            running += (*inv)(n, k) * d[n];
            (*partial)(n, k) = running;
        }
    }
    std::shared_ptr<const TruncatedMatrix<T>> sums = std::move(partial);
    return Triangle<T>("beta-dual", [sums, size](std::size_t n, std::size_t k) {
        detail::require_in_window(n, size);
        return (*sums)(n, k);
    });
}

namespace detail {

// max over nonempty column subsets K of sum_{row<n} |sum_{k in K} a(row,k)|,
// enumerated in Gray-code order so each step adds or removes one column.
template <Scalar T>
T subset_sup(const TruncatedMatrix<T>& a, std::size_t n) {
    std::vector<T> row_sums(n, T(0));
    T best(0);
    const std::uint64_t count = std::uint64_t{1} << n;
    std::uint64_t prev_gray = 0;
    for (std::uint64_t step = 1; step < count; ++step) {
        const std::uint64_t gray = step ^ (step >> 1);
        const std::uint64_t flipped = gray ^ prev_gray;
        const std::size_t col = static_cast<std::size_t>(__builtin_ctzll(flipped));
        const bool added = (gray & flipped) != 0;
        for (std::size_t row = col; row < n; ++row) {
            if (added) row_sums[row] += a(row, col);
            else row_sums[row] -= a(row, col);
        }
        prev_gray = gray;
        T total(0);
        for (const T& s : row_sums) total += abs_value(s);
        if (total > best) best = total;
    }
    return best;
}

template <Scalar T>
T max_row_abs_sum(const TruncatedMatrix<T>& a, std::size_t n) {
    T best(0);
    for (std::size_t row = 0; row < n; ++row) {
        T sum(0);
        for (std::size_t k = 0; k <= row; ++k) sum += abs_value(a(row, k));
        if (sum > best) best = sum;
    }
    return best;
}

template <Scalar T>
T row_sum(const TruncatedMatrix<T>& a, std::size_t row) {
    T sum(0);
    for (std::size_t k = 0; k <= row; ++k) sum += a(row, k);
    return sum;
}

// Largest |a(n-1,k) - a(n-2,k)| over the settled columns: k < n/2 and past
// the diagonal in both rows. Columns entered a row ago always jump.
template <Scalar T>
T max_column_delta(const TruncatedMatrix<T>& a, std::size_t n) {
    T best(0);
    for (std::size_t k = 0; k < n / 2 && k + 3 <= n; ++k) {
        T d = abs_value(T(a(n - 1, k) - a(n - 2, k)));
        if (d > best) best = d;
    }
    return best;
}

// Column limits are estimated by the last row on the columns that already
// appear in the row before it; the gap is the mass outside those columns.
template <Scalar T>
T norm_limit_gap(const TruncatedMatrix<T>& a, std::size_t n) {
    if (n == 0) return T(0);
    T row_abs(0);
    T limit_abs(0);
    for (std::size_t k = 0; k < n; ++k) {
        row_abs += abs_value(a(n - 1, k));
        if (k + 2 <= n) limit_abs += abs_value(a(n - 1, k));
    }
    return abs_value(T(row_abs - limit_abs));
}

template <Scalar T>
T condition_value(Condition which, const TruncatedMatrix<T>& a, std::size_t n) {
    switch (which) {
    case Condition::c4_1: return subset_sup(a, n);
    case Condition::c4_2: return max_row_abs_sum(a, n);
    case Condition::c4_3: return max_column_delta(a, n);
    case Condition::c4_4:
        if (n < 2) return T(0);
        return abs_value(T(row_sum(a, n - 1) - row_sum(a, n - 2)));
    case Condition::c4_5: return norm_limit_gap(a, n);
    }
    return T(0);
}

template <Scalar T>
ConditionVerdict classify_trend(Condition which, const std::vector<T>& trend) {
    const std::size_t m = trend.size();
    const bool sup_type = which == Condition::c4_1 || which == Condition::c4_2;
    if (sup_type) {
        if (m < 3) return ConditionVerdict::bounded_so_far;
        const T& a = trend[m - 3];
        const T& b = trend[m - 2];
        const T& c = trend[m - 1];
        const bool increasing = a < b && b < c;
        const bool not_slowing = !(T(c - b) < T(b - a));
        return increasing && not_slowing ? ConditionVerdict::growing : ConditionVerdict::bounded_so_far;
    }
    if (m == 0 || is_zero(trend.back())) return ConditionVerdict::converged_so_far;
    if (m < 3) return ConditionVerdict::bounded_so_far;
    const T& a = trend[m - 3];
    const T& b = trend[m - 2];
    const T& c = trend[m - 1];
    if (a > b && b > c) return ConditionVerdict::converged_so_far;
    if (a < b && b < c) return ConditionVerdict::growing;
    return ConditionVerdict::bounded_so_far;
}

} // namespace detail

/// Evaluates one condition on the order-N truncation of `a`, with its trend
/// over truncations 1..N. N <= 15 for 4.1 (full subset enumeration), else N <= 64.
template <Scalar T>
ConditionReport<T> check_condition(const Triangle<T>& a, Condition which, std::size_t order) {
    if (order == 0) throw SizeError("condition check needs N >= 1");
    if (which == Condition::c4_1 && order > kMaxSubsetOrder) {
        throw SizeError("condition 4.1 enumerates all column subsets; N must be <= 15");
    }
    if (order > kMaxConditionOrder) throw SizeError("condition checks need N <= 64");

    const auto m = a.truncate(order);
    ConditionReport<T> report{which};
    report.trend.reserve(order);
    for (std::size_t n = 1; n <= order; ++n) report.trend.push_back(detail::condition_value(which, m, n));
    report.value = report.trend.back();

    if (which == Condition::c4_3 && order >= 2) {
        for (std::size_t k = 0; k + 2 <= order; ++k)
            report.detail.push_back(abs_value(T(m(order - 1, k) - m(order - 2, k))));
    } else if (which == Condition::c4_4) {
        for (std::size_t n = 0; n < order; ++n) report.detail.push_back(detail::row_sum(m, n));
    }
    report.verdict = detail::classify_trend(which, report.trend);
    return report;
}

/// Conditions required for the (source -> target) matrix class of each dual.
inline std::vector<Condition> required_conditions(DualKind dual, SequenceSpace source) {
    switch (dual) {
    case DualKind::alpha: return {Condition::c4_1};
    case DualKind::gamma: return {Condition::c4_2};
    case DualKind::beta:
        switch (source) {
        case SequenceSpace::c0: return {Condition::c4_2, Condition::c4_3};
        case SequenceSpace::c: return {Condition::c4_2, Condition::c4_3, Condition::c4_4};
        case SequenceSpace::l_inf: return {Condition::c4_3, Condition::c4_5};
        case SequenceSpace::l_p: break;
        }
        break;
    }
    throw DomainError("dual source space must be c0, c or linf");
}

/// Builds D (alpha) or T (beta, gamma) from d and evaluates the required
/// conditions. Aggregate: growing if any condition is growing, otherwise
/// bounded-so-far.
template <Scalar T>
DualReport<T> dual_report(const SequenceWindow<T>& d, DualKind dual, SequenceSpace source,
                          const OperatorSpec<T>& spec, std::size_t order) {
    if (source == SequenceSpace::l_p) throw DomainError("dual source space must be c0, c or linf");
    if (d.size() < order) {
        throw SizeError("multiplier window has " + std::to_string(d.size()) + " entries; N=" +
                        std::to_string(order) + " requested");
    }
    const auto conditions = required_conditions(dual, source);
    const SequenceWindow<T> window(std::vector<T>(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(order)));
    const Triangle<T> matrix = dual == DualKind::alpha ? alpha_dual_matrix(window, spec)
                                                       : beta_dual_matrix(window, spec);

    DualReport<T> report{dual, source};
    for (Condition c : conditions) report.conditions.push_back(check_condition(matrix, c, order));
    for (const auto& c : report.conditions)
        if (c.verdict == ConditionVerdict::growing) report.aggregate = ConditionVerdict::growing;
    return report;
}

} // namespace seqspace
