#pragma once

// Windowed sequence transforms. Every triangle is lower-triangular, so y_n
// depends only on x_0..x_n and each windowed transform is exact on its window.

#include "seqspace/errors.hpp"
#include "seqspace/operators.hpp"
#include "seqspace/scalar.hpp"
#include "seqspace/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace seqspace {

/// Finite prefix x_0..x_{N-1} of a sequence. Nothing is assumed past N-1.
template <Scalar T>
class SequenceWindow {
public:
    SequenceWindow() = default;
    explicit SequenceWindow(std::vector<T> values) : values_(std::move(values)) {}

    static SequenceWindow zeros(std::size_t n) { return SequenceWindow(std::vector<T>(n, T(0))); }
    static SequenceWindow ones(std::size_t n) { return SequenceWindow(std::vector<T>(n, T(1))); }

    /// e^{(k)} on a window of length n.
    static SequenceWindow unit(std::size_t k, std::size_t n) {
        auto w = zeros(n);
        if (k < n) w.values_[k] = T(1);
        return w;
    }

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    const T& operator[](std::size_t i) const { return values_[i]; }
    T& operator[](std::size_t i) { return values_[i]; }
    const std::vector<T>& values() const noexcept { return values_; }
    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    friend bool operator==(const SequenceWindow& a, const SequenceWindow& b) { return a.values_ == b.values_; }

private:
    std::vector<T> values_;
};

/// Entrywise equality under the backend's comparison.
template <Scalar T>
bool approx_equal(const SequenceWindow<T>& a, const SequenceWindow<T>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!nearly_equal(a[i], b[i])) return false;
    return true;
}

/// y_n = sum_{k<=n} a_{nk} x_k for n < N.
template <Scalar T>
SequenceWindow<T> apply(const Triangle<T>& a, const SequenceWindow<T>& x) {
    std::vector<T> y(x.size(), T(0));
    for (std::size_t n = 0; n < x.size(); ++n) {
        T sum(0);
        for (std::size_t k = 0; k <= n; ++k) sum += a(n, k) * x[k];
        y[n] = sum;
    }
    return SequenceWindow<T>(std::move(y));
}

/// x with A x = y on the window, via the closed-form composed inverse.
template <Scalar T>
SequenceWindow<T> inverse_apply(const OperatorSpec<T>& spec, const SequenceWindow<T>& y) {
    return apply(composed_inv_triangle(spec), y);
}

/// sigma = A x: the coordinates of x in the theta basis.
template <Scalar T>
SequenceWindow<T> sigma_coeffs(const OperatorSpec<T>& spec, const SequenceWindow<T>& x) {
    return apply(composed_triangle(spec), x);
}

/// theta^{(k)}: column k of the composed inverse, zero above row k.
template <Scalar T>
SequenceWindow<T> theta_basis(const OperatorSpec<T>& spec, std::size_t k, std::size_t n) {
    if (k >= n) throw DomainError("basis index k=" + std::to_string(k) + " must be < N=" + std::to_string(n));
    const auto inv = composed_inv_triangle(spec);
    std::vector<T> column(n, T(0));
    for (std::size_t i = k; i < n; ++i) column[i] = inv(i, k);
    return SequenceWindow<T>(std::move(column));
}

/// eta = A^{-1} 1, characterised by A eta = (1, 1, ...).
template <Scalar T>
SequenceWindow<T> eta_sequence(const OperatorSpec<T>& spec, std::size_t n) {
    return inverse_apply(spec, SequenceWindow<T>::ones(n));
}

/// sup_{k<N} |y_k| for a window y.
template <Scalar T>
T sup_norm(const SequenceWindow<T>& y) {
    T best(0);
    for (const T& v : y) {
        T a = abs_value(v);
        if (a > best) best = a;
    }
    return best;
}

/// sup_{k<N} |(A x)_k|: a lower bound for the norm, exact when the
/// transform is known to vanish past the window.
template <Scalar T>
T bk_norm(const SequenceWindow<T>& x, const OperatorSpec<T>& spec) {
    return sup_norm(sigma_coeffs(spec, x));
}

/// Residuals for every cutoff n < N from one transform: entry n is
/// sup_{n < m < N} |sigma_m|.
template <Scalar T>
std::vector<T> reconstruction_residuals(const SequenceWindow<T>& x, const OperatorSpec<T>& spec) {
    const auto sigma = sigma_coeffs(spec, x);
    std::vector<T> out(sigma.size(), T(0));
    for (std::size_t n = sigma.size(); n-- > 1;) {
        T a = abs_value(sigma[n]);
        out[n - 1] = a > out[n] ? a : out[n];
    }
    return out;
}

/// sup_{cutoff < m < N} |sigma_m|: the norm of x - sum_{k<=cutoff} sigma_k theta^{(k)}.
template <Scalar T>
T reconstruction_residual(const SequenceWindow<T>& x, std::size_t cutoff, const OperatorSpec<T>& spec) {
    if (cutoff >= x.size()) throw DomainError("residual cutoff must be < window length");
    return reconstruction_residuals(x, spec)[cutoff];
}

enum class SequenceSpace { c0, c, l_inf, l_p };
enum class MembershipVerdict { consistent, inconsistent, inconclusive };

inline const char* space_name(SequenceSpace s) {
    switch (s) {
    case SequenceSpace::c0: return "c0";
    case SequenceSpace::c: return "c";
    case SequenceSpace::l_inf: return "linf";
    case SequenceSpace::l_p: return "lp";
    }
    return "unknown";
}

inline const char* verdict_name(MembershipVerdict v) {
    switch (v) {
    case MembershipVerdict::consistent: return "consistent";
    case MembershipVerdict::inconsistent: return "inconsistent";
    case MembershipVerdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

/// Throws DomainError on an unknown name.
SequenceSpace parse_space(const std::string& name);

template <Scalar T>
struct MembershipReport {
    SequenceSpace space;
    std::optional<double> p;
    T tail_sup{0};    // sup_{k >= N/2} |y_k|
    T last_delta{0};  // |y_{N-1} - y_{N-2}|, 0 when N < 2
    std::optional<T> partial_p_sum;
    MembershipVerdict verdict = MembershipVerdict::inconclusive;
};

namespace detail {

enum class Trend { non_decreasing, non_increasing_with_decay, mixed };

// Monotonicity of a short list of magnitudes.
template <Scalar T>
Trend classify(const std::vector<T>& v) {
    if (v.size() < 2) return Trend::mixed;
    bool up = true;
    bool down = true;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] < v[i - 1]) up = false;
        if (v[i] > v[i - 1]) down = false;
    }
    if (down && v.back() < v.front()) return Trend::non_increasing_with_decay;
    if (up) return Trend::non_decreasing;
    return Trend::mixed;
}

template <Scalar T>
T power_abs(const T& v, double p) {
    const T a = abs_value(v);
    if (p == std::floor(p)) return int_pow(a, static_cast<std::size_t>(p));
    return T(std::pow(ScalarTraits<T>::to_double(a), p));
}

} // namespace detail

/// Finitary membership diagnostics for the matrix domains of c0, c, l_inf, l_p.
///
/// y = A x, tail = indices k >= N/2, and the trend window is the tail plus the
/// entry just before it. Verdicts:
///   c0    consistent if the tail vanishes or |y| decays through the trend
///         window; inconsistent if |y| is nonzero and never decreases there.
///   c     consistent if the tail is constant or the successive differences
///         decay; inconsistent if they are nonzero and never decrease.
///   linf  consistent if the tail does not exceed the head; never inconsistent.
///   lp    with a bound: inconsistent iff the partial p-sum exceeds it.
///         Without one: as c0 (terms of an l_p sequence must tend to 0).
/// Everything else is inconclusive.
template <Scalar T>
MembershipReport<T> membership_report(const SequenceWindow<T>& x, SequenceSpace space,
                                      const OperatorSpec<T>& spec, std::optional<double> p = std::nullopt,
                                      std::optional<T> bound = std::nullopt) {
    if (space == SequenceSpace::l_p && (!p || *p < 1.0)) throw DomainError("l_p membership needs p >= 1");
    if (x.empty()) throw DomainError("membership needs a non-empty window");

    const auto y = sigma_coeffs(spec, x);
    const std::size_t n = y.size();
    const std::size_t half = n / 2;

    MembershipReport<T> report{space, space == SequenceSpace::l_p ? p : std::nullopt};
    for (std::size_t k = half; k < n; ++k) {
        T a = abs_value(y[k]);
        if (a > report.tail_sup) report.tail_sup = a;
    }
    if (n >= 2) report.last_delta = abs_value(T(y[n - 1] - y[n - 2]));

    const std::size_t from = half == 0 ? 0 : half - 1;
    std::vector<T> magnitudes;
    std::vector<T> differences;
    for (std::size_t k = from; k < n; ++k) {
        magnitudes.push_back(abs_value(y[k]));
        if (k + 1 < n) differences.push_back(abs_value(T(y[k + 1] - y[k])));
    }

    auto c0_verdict = [&] {
        if (is_zero(report.tail_sup)) return MembershipVerdict::consistent;
        switch (detail::classify(magnitudes)) {
        case detail::Trend::non_increasing_with_decay: return MembershipVerdict::consistent;
        case detail::Trend::non_decreasing: return MembershipVerdict::inconsistent;
        case detail::Trend::mixed: break;
        }
        return MembershipVerdict::inconclusive;
    };

    switch (space) {
    case SequenceSpace::c0:
        report.verdict = c0_verdict();
        break;
    case SequenceSpace::c: {
        const bool flat = std::all_of(differences.begin(), differences.end(),
                                      [](const T& d) { return is_zero(d); });
        if (flat) {
            report.verdict = MembershipVerdict::consistent;
            break;
        }
        switch (detail::classify(differences)) {
        case detail::Trend::non_increasing_with_decay: report.verdict = MembershipVerdict::consistent; break;
        case detail::Trend::non_decreasing:
            report.verdict = is_zero(report.last_delta) ? MembershipVerdict::inconclusive
                                                        : MembershipVerdict::inconsistent;
            break;
        case detail::Trend::mixed: report.verdict = MembershipVerdict::inconclusive; break;
        }
        break;
    }
    case SequenceSpace::l_inf: {
        T head_sup(0);
        for (std::size_t k = 0; k < half; ++k) {
            T a = abs_value(y[k]);
            if (a > head_sup) head_sup = a;
        }
        report.verdict = (n < 2 || report.tail_sup <= head_sup) ? MembershipVerdict::consistent
                                                                : MembershipVerdict::inconclusive;
        break;
    }
    case SequenceSpace::l_p: {
        T sum(0);
        for (const T& v : y) sum += detail::power_abs(v, *p);
        report.partial_p_sum = sum;
        if (bound) {
            report.verdict = sum > *bound ? MembershipVerdict::inconsistent : MembershipVerdict::consistent;
        } else {
            report.verdict = c0_verdict();
        }
        break;
    }
    }
    return report;
}

} // namespace seqspace
