#pragma once

// Scalar backends. Every operator, transform and report is templated on a
// scalar type T for which ScalarTraits<T> is specialised:
//
//   Rational  exact arithmetic in lowest terms (GMP mpq), the default for
//             every verification suite;
//   double    binary64 with a relative/absolute tolerance policy, used for
//             performance comparisons and large-N smoke runs.

#include <gmpxx.h>

#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>

namespace seqspace {

using Rational = mpq_class;

enum class Backend { exact, floating };

/// Relative tolerance and absolute floor for the floating backend.
struct TolerancePolicy {
    double relative = 1e-9;
    double absolute = 1e-12;
};

template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr Backend backend = Backend::exact;

    /// Accepts "p/q" or an integer, optional sign. Decimals are rejected.
    static Rational parse(std::string_view text);
    /// "p/q" in lowest terms, or "p" when the denominator is 1.
    static std::string format(const Rational& x);

    static Rational from_rational(const Rational& x) { return x; }
    static Rational from_int(long v) { return Rational(v); }
    static double to_double(const Rational& x) { return x.get_d(); }
    static Rational abs(const Rational& x) { return ::abs(x); }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static bool equal(const Rational& a, const Rational& b) { return a == b; }
};

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static constexpr Backend backend = Backend::floating;
    static constexpr TolerancePolicy tolerance{};

    /// Accepts decimals, "p/q" and integers.
    static double parse(std::string_view text);
    /// Shortest form that round-trips, at most 17 significant digits.
    static std::string format(double x);

    static double from_rational(const Rational& x) { return x.get_d(); }
    static double from_int(long v) { return static_cast<double>(v); }
    static double to_double(double x) { return x; }
    static double abs(double x);
    static bool is_zero(double x) { return abs(x) <= tolerance.absolute; }
    static bool equal(double a, double b);
};

template <typename T>
concept Scalar = requires(const T& a, const T& b) {
    { ScalarTraits<T>::exact } -> std::convertible_to<bool>;
    { ScalarTraits<T>::format(a) } -> std::convertible_to<std::string>;
    { ScalarTraits<T>::abs(a) };
    { ScalarTraits<T>::is_zero(a) } -> std::convertible_to<bool>;
    { ScalarTraits<T>::equal(a, b) } -> std::convertible_to<bool>;
};

template <Scalar T>
T parse_scalar(std::string_view text) {
    return ScalarTraits<T>::parse(text);
}

template <Scalar T>
std::string to_string(const T& x) {
    return ScalarTraits<T>::format(x);
}

template <Scalar T>
T abs_value(const T& x) {
    return ScalarTraits<T>::abs(x);
}

template <Scalar T>
bool is_zero(const T& x) {
    return ScalarTraits<T>::is_zero(x);
}

template <Scalar T>
bool nearly_equal(const T& a, const T& b) {
    return ScalarTraits<T>::equal(a, b);
}

/// base^e with 0^0 = 1.
template <Scalar T>
T int_pow(const T& base, std::size_t e) {
    T result(1);
    T b = base;
    while (e != 0) {
        if (e & 1u) result *= b;
        e >>= 1u;
        if (e != 0) b *= b;
    }
    return result;
}

/// Ordinary binomial coefficient C(n, k) for 0 <= k <= n, 0 otherwise.
template <Scalar T>
T choose(std::size_t n, std::size_t k) {
    if (k > n) return T(0);
    if constexpr (ScalarTraits<T>::exact) {
        mpz_class z;
        mpz_bin_uiui(z.get_mpz_t(), n, k);
        return T(z);
    } else {
        if (k > n - k) k = n - k;
        T result(1);
        for (std::size_t j = 1; j <= k; ++j) {
            result = result * static_cast<T>(n - k + j) / static_cast<T>(j);
        }
        return result;
    }
}

/// (-1)^e
template <Scalar T>
T alternating_sign(std::size_t e) {
    return (e % 2 == 0) ? T(1) : T(-1);
}

} // namespace seqspace
