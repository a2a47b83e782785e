#pragma once

#include <stdexcept>
#include <string>

namespace gscope {

// Input/precondition violations. Mapped to CLI exit 1.
struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

struct ReducibleCurveError : std::invalid_argument {
    explicit ReducibleCurveError(const std::string& what) : std::invalid_argument(what) {}
};

struct UnsupportedClassError : std::domain_error {
    explicit UnsupportedClassError(const std::string& what) : std::domain_error(what) {}
};

struct StrangeCurveError : std::domain_error {
    explicit StrangeCurveError(const std::string& what) : std::domain_error(what) {}
};

struct InseparableProjectionError : std::domain_error {
    explicit InseparableProjectionError(const std::string& what) : std::domain_error(what) {}
};

struct InseparableCoverError : std::domain_error {
    explicit InseparableCoverError(const std::string& what) : std::domain_error(what) {}
};

struct LineContainsImageError : std::domain_error {
    explicit LineContainsImageError(const std::string& what) : std::domain_error(what) {}
};

struct SamplingExhaustedError : std::runtime_error {
    explicit SamplingExhaustedError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical identity the engines rely on failed. Mapped to CLI exit 2.
struct InternalConsistencyError : std::logic_error {
    explicit InternalConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gscope
