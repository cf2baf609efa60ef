#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace fuzzynn {

// Base for every error raised by the library.
class FuzzyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Lower endpoint decreases or upper endpoint increases in lambda.
class MonotonicityViolation : public FuzzyError {
public:
    using FuzzyError::FuzzyError;
};

// lo(1) > hi(1): the core interval is empty.
class CrossingViolation : public FuzzyError {
public:
    using FuzzyError::FuzzyError;
};

class DomainError : public FuzzyError {
public:
    explicit DomainError(const std::string& what, std::optional<std::size_t> index = std::nullopt)
        : FuzzyError(what), index_(index) {}

    /// Offending position when raised from a vectorised call.
    std::optional<std::size_t> index() const { return index_; }

private:
    std::optional<std::size_t> index_;
};

class NonPositiveM : public FuzzyError {
public:
    using FuzzyError::FuzzyError;
};

class NegativeCoefficient : public FuzzyError {
public:
    using FuzzyError::FuzzyError;
};

class NonPositiveSpacing : public FuzzyError {
public:
    using FuzzyError::FuzzyError;
};

class NonPositiveWidth : public FuzzyError {
public:
    using FuzzyError::FuzzyError;
};

class MissingAnalyticModulus : public FuzzyError {
public:
    using FuzzyError::FuzzyError;
};

class UnknownFunction : public FuzzyError {
public:
    using FuzzyError::FuzzyError;
};

class UnknownSigma : public FuzzyError {
public:
    using FuzzyError::FuzzyError;
};

}  // namespace fuzzynn
