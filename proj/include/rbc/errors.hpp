#pragma once

#include <stdexcept>
#include <string>

namespace rbc {

// Bad user-supplied configuration (CLI exit code 1).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Rational-fit denominator vanished at the evaluation point.
class SingularityError : public std::runtime_error {
public:
    SingularityError(const std::string& what, double x)
        : std::runtime_error(what), x_(x) {}
    double at() const { return x_; }

private:
    double x_;
};

// Broken internal invariant (misaligned buffers, non-prefix service).
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace rbc
