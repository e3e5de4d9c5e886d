#pragma once

#include <stdexcept>
#include <string>

namespace radcount {

// Enumeration would exceed the element budget. The message always names the
// required element count q^D so callers can report it; the CLI maps this to
// exit code 3.
class BudgetError : public std::runtime_error {
public:
    BudgetError(std::string required, const std::string& message)
        : std::runtime_error(message), required_(std::move(required)) {}
    // Decimal rendering of the q^D that was asked for.
    const std::string& required_elements() const { return required_; }

private:
    std::string required_;
};

// Too few sample points for the requested interpolation; CLI exit code 4.
class InsufficientSamplesError : public std::runtime_error {
public:
    InsufficientSamplesError(int required, int given, const std::string& message)
        : std::runtime_error(message), required_(required), given_(given) {}
    int required() const { return required_; }
    int given() const { return given_; }

private:
    int required_, given_;
};

} // namespace radcount
