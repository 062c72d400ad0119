#pragma once

#include <stdexcept>
#include <string>

namespace hlv {

/// Division of a rational function by zero.
class DivisionByZero : public std::domain_error {
public:
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation of a rational function at a root of its denominator.
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// A quantity that must be a polynomial (or integral) was not. Always a bug
/// in arithmetic or normalization, never a user error.
class IntegrityError : public std::logic_error {
public:
    explicit IntegrityError(const std::string& what) : std::logic_error(what) {}
};

} // namespace hlv
