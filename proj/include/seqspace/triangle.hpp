#pragma once

#include "seqspace/errors.hpp"
#include "seqspace/scalar.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace seqspace {

/// Dense N x N grid, row-major. Finite-truncation workbench for triangles.
template <Scalar T>
class TruncatedMatrix {
public:
    explicit TruncatedMatrix(std::size_t order) : order_(order), data_(order * order, T(0)) {}

    static TruncatedMatrix identity(std::size_t order) {
        TruncatedMatrix m(order);
        for (std::size_t i = 0; i < order; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t order() const noexcept { return order_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * order_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * order_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * order_));
    }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> c;
        c.reserve(order_);
        for (std::size_t i = 0; i < order_; ++i) c.push_back((*this)(i, j));
        return c;
    }

    bool is_lower_triangular() const {
        for (std::size_t i = 0; i < order_; ++i)
            for (std::size_t j = i + 1; j < order_; ++j)
                if (!is_zero((*this)(i, j))) return false;
        return true;
    }

    /// Entrywise comparison under the backend's equality (exact or tolerance).
    bool approx_equal(const TruncatedMatrix& other) const {
        if (order_ != other.order_) return false;
        for (std::size_t i = 0; i < data_.size(); ++i)
            if (!nearly_equal(data_[i], other.data_[i])) return false;
        return true;
    }

    friend bool operator==(const TruncatedMatrix& a, const TruncatedMatrix& b) {
        return a.order_ == b.order_ && a.data_ == b.data_;
    }

private:
    std::size_t order_;
    std::vector<T> data_;
};

/// max_{i,j} |a_ij - b_ij|. Orders must agree.
template <Scalar T>
T max_abs_deviation(const TruncatedMatrix<T>& a, const TruncatedMatrix<T>& b) {
    if (a.order() != b.order()) throw SizeError("matrix orders differ");
    T worst(0);
    for (std::size_t i = 0; i < a.order(); ++i) {
        for (std::size_t j = 0; j < a.order(); ++j) {
            T d = abs_value(T(a(i, j) - b(i, j)));
            if (d > worst) worst = d;
        }
    }
    return worst;
}

/// Lazy lower-triangular infinite matrix given by an entry rule on k <= n.
/// Entries above the diagonal are zero and never reach the rule.
template <Scalar T>
class Triangle {
public:
    using Rule = std::function<T(std::size_t, std::size_t)>;

    Triangle(std::string name, Rule rule) : name_(std::move(name)), rule_(std::move(rule)) {}

    T operator()(std::size_t n, std::size_t k) const { return k > n ? T(0) : rule_(n, k); }
    T entry(std::size_t n, std::size_t k) const { return (*this)(n, k); }

    const std::string& name() const noexcept { return name_; }

    TruncatedMatrix<T> truncate(std::size_t order) const {
        TruncatedMatrix<T> m(order);
        for (std::size_t n = 0; n < order; ++n)
            for (std::size_t k = 0; k <= n; ++k) m(n, k) = rule_(n, k);
        return m;
    }

private:
    std::string name_;
    Rule rule_;
};

template <Scalar T>
Triangle<T> identity_triangle() {
    return Triangle<T>("identity", [](std::size_t n, std::size_t k) { return n == k ? T(1) : T(0); });
}

template <Scalar T>
Triangle<T> zero_triangle() {
    return Triangle<T>("zero", [](std::size_t, std::size_t) { return T(0); });
}

/// Lower-triangular product of two lower-triangular truncations.
template <Scalar T>
TruncatedMatrix<T> multiply_lower(const TruncatedMatrix<T>& a, const TruncatedMatrix<T>& b) {
    if (a.order() != b.order()) throw SizeError("matrix orders differ");
    const std::size_t order = a.order();
    TruncatedMatrix<T> c(order);
    for (std::size_t n = 0; n < order; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            T sum(0);
            for (std::size_t i = k; i <= n; ++i) sum += a(n, i) * b(i, k);
            c(n, k) = sum;
        }
    }
    return c;
}

/// Product of the two order-N truncations.
template <Scalar T>
TruncatedMatrix<T> compose_trunc(const Triangle<T>& a, const Triangle<T>& b, std::size_t order) {
    if (order == 0) throw SizeError("truncation order must be at least 1");
    return multiply_lower(a.truncate(order), b.truncate(order));
}

/// Inverse of a lower-triangular truncation by forward substitution.
/// Throws SingularError naming the first zero diagonal entry.
template <Scalar T>
TruncatedMatrix<T> invert_lower(const TruncatedMatrix<T>& a) {
    const std::size_t order = a.order();
    for (std::size_t n = 0; n < order; ++n)
        if (is_zero(a(n, n))) throw SingularError(n);

    TruncatedMatrix<T> inv(order);
    // column k of the inverse solves a * x = e_k; rows below k only
    for (std::size_t k = 0; k < order; ++k) {
        inv(k, k) = T(1) / a(k, k);
        for (std::size_t n = k + 1; n < order; ++n) {
            T sum(0);
            for (std::size_t i = k; i < n; ++i) sum += a(n, i) * inv(i, k);
            inv(n, k) = -sum / a(n, n);
        }
    }
    return inv;
}

/// Exact inverse of the order-N truncation: the ground truth for every
/// closed-form inverse, since truncation commutes with inversion for triangles.
template <Scalar T>
TruncatedMatrix<T> invert_trunc(const Triangle<T>& a, std::size_t order) {
    if (order == 0) throw SizeError("truncation order must be at least 1");
    return invert_lower(a.truncate(order));
}

/// max |(product) - I|; zero under the exact backend iff the product is the identity.
template <Scalar T>
T identity_residual(const TruncatedMatrix<T>& product) {
    return max_abs_deviation(product, TruncatedMatrix<T>::identity(product.order()));
}

} // namespace seqspace
