#pragma once

// The named triangles and their closed-form inverses.
//
//   delta(alpha)         (-1)^{n-k} C(alpha, n-k)
//   binomial(r, s)       C(n,k) s^{n-k} r^k / (s+r)^n
//   lambda               (lambda_k - lambda_{k-1}) / lambda_n
//   composed A           D_{1/lambda} * (B^{r,s} Delta^alpha) * D_{lambda step}
//
// Every inverse here is checked against forward substitution (invert_trunc).
// The composed inverse is D_{1/step} * (Delta^{-alpha} (B^{r,s})^{-1}) * D_{lambda}.

#include "seqspace/coefficients.hpp"
#include "seqspace/errors.hpp"
#include "seqspace/lambda.hpp"
#include "seqspace/scalar.hpp"
#include "seqspace/triangle.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace seqspace {

/// Parameters (r, s) of the binomial matrix; r + s != 0 enforced here.
template <Scalar T>
class BinomialParams {
public:
    BinomialParams(T r, T s) : r_(std::move(r)), s_(std::move(s)) {
        if (is_zero(T(r_ + s_))) throw DomainError("binomial parameters require r + s != 0");
    }

    const T& r() const noexcept { return r_; }
    const T& s() const noexcept { return s_; }
    T sum() const { return r_ + s_; }

    /// Inverse-dependent operations need r != 0 (r appears as r^{-j}).
    void require_invertible() const {
        if (is_zero(r_)) throw DomainError("inverse binomial operators require r != 0");
    }

private:
    T r_;
    T s_;
};

/// Everything needed to build the composed operator and its inverse.
template <Scalar T>
struct OperatorSpec {
    BinomialParams<T> params;
    FractionalOrder<T> alpha;
    LambdaSeq<T> lambda;
};

namespace detail {

template <Scalar T>
std::vector<T> powers(const T& base, std::size_t count) {
    std::vector<T> p;
    p.reserve(count);
    T v(1);
    for (std::size_t i = 0; i < count; ++i) {
        p.push_back(v);
        v *= base;
    }
    return p;
}

} // namespace detail

template <Scalar T>
Triangle<T> delta_triangle(const FractionalOrder<T>& alpha) {
    return Triangle<T>("delta", [alpha](std::size_t n, std::size_t k) {
        return signed_delta_coeff(alpha, n - k);
    });
}

template <Scalar T>
Triangle<T> delta_inv_triangle(const FractionalOrder<T>& alpha) {
    return Triangle<T>("delta-inv", [neg = -alpha](std::size_t n, std::size_t k) {
        return signed_delta_coeff(neg, n - k);
    });
}

template <Scalar T>
Triangle<T> binomial_triangle(const BinomialParams<T>& params) {
    return Triangle<T>("binomial", [params](std::size_t n, std::size_t k) {
        T v = choose<T>(n, k) * int_pow(params.s(), n - k) * int_pow(params.r(), k);
        return T(v / int_pow(params.sum(), n));
    });
}

template <Scalar T>
Triangle<T> binomial_inv_triangle(const BinomialParams<T>& params) {
    params.require_invertible();
    return Triangle<T>("binomial-inv", [params](std::size_t n, std::size_t k) {
        T v = alternating_sign<T>(n - k) * int_pow(params.sum(), k) * choose<T>(n, k) *
              int_pow(params.s(), n - k);
        return T(v / int_pow(params.r(), n));
    });
}

template <Scalar T>
Triangle<T> lambda_triangle(const LambdaSeq<T>& lambda) {
    if (lambda.length()) lambda.check_prefix(*lambda.length());
    else lambda.check_prefix(1);
    return Triangle<T>("lambda", [lambda](std::size_t n, std::size_t k) {
        return T(lambda.step(k) / lambda[n]);
    });
}

/// Bidiagonal: diagonal lambda_n / step_n, subdiagonal -lambda_{n-1} / step_n.
template <Scalar T>
Triangle<T> lambda_inv_triangle(const LambdaSeq<T>& lambda) {
    if (lambda.length()) lambda.check_prefix(*lambda.length());
    else lambda.check_prefix(1);
    return Triangle<T>("lambda-inv", [lambda](std::size_t n, std::size_t k) {
        if (k == n) return T(lambda[n] / lambda.step(n));
        if (k + 1 == n) return T(-lambda.previous(n) / lambda.step(n));
        return T(0);
    });
}

/// (step_k / lambda_n) * sum_{i=k..n} (-1)^{i-k} C(n,i) C(alpha,i-k) r^i s^{n-i} / (s+r)^n
template <Scalar T>
Triangle<T> composed_triangle(const OperatorSpec<T>& spec) {
    if (spec.lambda.length()) spec.lambda.check_prefix(*spec.lambda.length());
    else spec.lambda.check_prefix(1);
    return Triangle<T>("composed", [spec](std::size_t n, std::size_t k) {
        const T& r = spec.params.r();
        const T& s = spec.params.s();
        const std::vector<T> r_pow = detail::powers(r, n + 1);
        const std::vector<T> s_pow = detail::powers(s, n + 1);
        T binom_n = choose<T>(n, k); // C(n, i), advanced with i
        T binom_alpha(1);            // C(alpha, i - k)
        T sum(0);
        for (std::size_t i = k; i <= n; ++i) {
            if (i > k) {
                const std::size_t m = i - k;
                binom_alpha *= spec.alpha.value - T(m) + T(1);
                binom_alpha /= T(m);
                binom_n *= T(n - i + 1);
                binom_n /= T(i);
            }
            T term = binom_n * binom_alpha * r_pow[i] * s_pow[n - i];
            if ((i - k) % 2 == 0) sum += term;
            else sum -= term;
        }
        sum /= int_pow(spec.params.sum(), n);
        return T(sum * spec.lambda.step(k) / spec.lambda[n]);
    });
}

/// (lambda_k / step_n) (s+r)^k (-1)^{n-k} sum_{j=k..n} C(-alpha, n-j) C(j,k) s^{j-k} r^{-j}
template <Scalar T>
Triangle<T> composed_inv_triangle(const OperatorSpec<T>& spec) {
    spec.params.require_invertible();
    if (spec.lambda.length()) spec.lambda.check_prefix(*spec.lambda.length());
    else spec.lambda.check_prefix(1);
    return Triangle<T>("composed-inv", [spec](std::size_t n, std::size_t k) {
        const T& r = spec.params.r();
        const T& s = spec.params.s();
        const std::vector<T> neg_alpha = gen_binomial_row(-spec.alpha, n - k + 1);
        const T r_inv = T(1) / r;
        T r_inv_pow = int_pow(r_inv, k); // r^{-j}
        T s_pow(1);                      // s^{j-k}
        T binom_jk(1);                   // C(j, k)
        T sum(0);
        for (std::size_t j = k; j <= n; ++j) {
            if (j > k) {
                r_inv_pow *= r_inv;
                s_pow *= s;
                binom_jk *= T(j);
                binom_jk /= T(j - k);
            }
            sum += neg_alpha[n - j] * binom_jk * s_pow * r_inv_pow;
        }
        sum *= alternating_sign<T>(n - k) * int_pow(spec.params.sum(), k);
        return T(sum * spec.lambda[k] / spec.lambda.step(n));
    });
}

/// Names accepted by the CLI's `entry` command.
inline const std::vector<std::string>& operator_names() {
    static const std::vector<std::string> names{"delta",  "delta-inv",  "binomial", "binomial-inv",
                                                "lambda", "lambda-inv", "composed", "composed-inv"};
    return names;
}

/// Looks up a named triangle. Throws DomainError on an unknown name.
template <Scalar T>
Triangle<T> named_triangle(const std::string& name, const OperatorSpec<T>& spec) {
    if (name == "delta") return delta_triangle(spec.alpha);
    if (name == "delta-inv") return delta_inv_triangle(spec.alpha);
    if (name == "binomial") return binomial_triangle(spec.params);
    if (name == "binomial-inv") return binomial_inv_triangle(spec.params);
    if (name == "lambda") return lambda_triangle(spec.lambda);
    if (name == "lambda-inv") return lambda_inv_triangle(spec.lambda);
    if (name == "composed") return composed_triangle(spec);
    if (name == "composed-inv") return composed_inv_triangle(spec);
    throw DomainError("unknown matrix name '" + name + "'");
}

} // namespace seqspace
