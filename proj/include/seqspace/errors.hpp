#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqspace {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed literal, config value, or input line.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A parameter outside the operator's domain (r + s = 0, r = 0 for inverses, p < 1, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Gamma evaluated at a non-positive integer.
class PoleError : public Error {
public:
    using Error::Error;
};

/// The lambda sequence is not strictly increasing and positive at `index`.
class LambdaError : public Error {
public:
    LambdaError(std::size_t index, const std::string& what) : Error(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Forward substitution hit a zero diagonal entry.
class SingularError : public Error {
public:
    explicit SingularError(std::size_t index)
        : Error("zero diagonal entry at index " + std::to_string(index)), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Truncation order exceeds what an operation supports.
class SizeError : public Error {
public:
    using Error::Error;
};

} // namespace seqspace
