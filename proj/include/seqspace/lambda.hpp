#pragma once

#include "seqspace/errors.hpp"
#include "seqspace/scalar.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace seqspace {

enum class LambdaPreset { cesaro, squares, powers2 };

/// Strictly increasing positive sequence lambda_0 < lambda_1 < ... with the
/// convention lambda_{-1} = 0. Strict increase is checked on every index that
/// is evaluated; file-backed sequences are checked in full at construction.
template <Scalar T>
class LambdaSeq {
public:
    using Generator = std::function<T(std::size_t)>;

    LambdaSeq(std::string name, Generator generator)
        : name_(std::move(name)), generator_(std::move(generator)) {}

    static LambdaSeq preset(LambdaPreset p) {
        switch (p) {
        case LambdaPreset::cesaro:
            return LambdaSeq("cesaro", [](std::size_t k) { return T(k + 1); });
        case LambdaPreset::squares:
            return LambdaSeq("squares", [](std::size_t k) { return int_pow(T(k + 1), 2); });
        case LambdaPreset::powers2:
            return LambdaSeq("powers2", [](std::size_t k) { return int_pow(T(2), k + 1); });
        }
        throw DomainError("unknown lambda preset");
    }

    /// Finite list lambda_0..lambda_{m-1}; evaluating past the end throws.
    static LambdaSeq from_values(std::vector<T> values, std::string name = "file") {
        for (std::size_t k = 0; k < values.size(); ++k) check_step(values, k);
        auto shared = std::make_shared<const std::vector<T>>(std::move(values));
        LambdaSeq seq(std::move(name), [shared](std::size_t k) {
            if (k >= shared->size()) {
                throw SizeError("lambda sequence has only " + std::to_string(shared->size()) +
                                " values; index " + std::to_string(k) + " requested");
            }
            return (*shared)[k];
        });
        seq.length_ = shared->size();
        return seq;
    }

    const std::string& name() const noexcept { return name_; }
    std::optional<std::size_t> length() const noexcept { return length_; }

    /// lambda_k, validated against lambda_{k-1}.
    T operator[](std::size_t k) const {
        T current = generator_(k);
        T prev = k == 0 ? T(0) : generator_(k - 1);
        if (!(current > prev)) {
            throw LambdaError(k, "lambda must be strictly increasing and positive; violated at index " +
                                     std::to_string(k));
        }
        return current;
    }

    /// lambda_{k-1}, with lambda_{-1} = 0.
    T previous(std::size_t k) const { return k == 0 ? T(0) : (*this)[k - 1]; }

    /// lambda_k - lambda_{k-1}
    T step(std::size_t k) const { return T((*this)[k] - previous(k)); }

    /// Validates indices 0..count-1; throws LambdaError on the first offender.
    void check_prefix(std::size_t count) const {
        for (std::size_t k = 0; k < count; ++k) (void)(*this)[k];
    }

private:
    static void check_step(const std::vector<T>& values, std::size_t k) {
        const T prev = k == 0 ? T(0) : values[k - 1];
        if (!(values[k] > prev)) {
            throw LambdaError(k, "lambda must be strictly increasing and positive; violated at index " +
                                     std::to_string(k));
        }
    }

    std::string name_;
    Generator generator_;
    std::optional<std::size_t> length_;
};

} // namespace seqspace
