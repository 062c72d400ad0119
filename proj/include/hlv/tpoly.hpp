#pragma once

#include "hlv/bigrational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hlv {

/// Univariate polynomial in t over Q, stored sparsely as (exponent, coefficient)
/// pairs in ascending exponent order. No zero coefficient is ever stored.
class TPoly {
public:
    struct Term {
        std::uint32_t exp;
        BigRational coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    TPoly() = default;
    TPoly(long value);
    TPoly(const BigRational& value);

    static TPoly monomial(const BigRational& coeff, std::uint32_t exp);
    static TPoly t() { return monomial(1, 1); }
    /// Coefficients indexed by exponent; zeros are dropped.
    static TPoly from_dense(const std::vector<BigRational>& coeffs);
    /// 1 - t^k.
    static TPoly one_minus_t_pow(std::uint32_t k);

    const std::vector<Term>& terms() const { return terms_; }
    std::vector<BigRational> dense() const;

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0); }
    /// -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.back().exp); }
    /// Smallest exponent with a nonzero coefficient (0 for the zero polynomial).
    std::uint32_t low_degree() const { return terms_.empty() ? 0 : terms_.front().exp; }
    BigRational coeff(std::uint32_t exp) const;
    const BigRational& leading_coeff() const;
    bool has_integer_coefficients() const;

    TPoly operator-() const;
    TPoly& operator+=(const TPoly& other);
    TPoly& operator-=(const TPoly& other);
    TPoly& operator*=(const TPoly& other);
    TPoly& operator*=(const BigRational& scalar);

    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    friend TPoly operator*(TPoly a, const BigRational& s) { return a *= s; }
    friend TPoly operator*(const BigRational& s, TPoly a) { return a *= s; }
    friend bool operator==(const TPoly&, const TPoly&) = default;

    /// Quotient and remainder of Euclidean division; throws DivisionByZero.
    static std::pair<TPoly, TPoly> divmod(const TPoly& a, const TPoly& b);
    /// Monic gcd; gcd(0, 0) = 0.
    static TPoly gcd(const TPoly& a, const TPoly& b);

    /// Multiply by t^shift.
    TPoly shifted(std::uint32_t shift) const;
    /// t^deg * p(1/t); requires deg >= degree().
    TPoly reversed(std::uint32_t deg) const;
    TPoly monic() const;
    /// Scalar c such that c * p has coprime integer coefficients and a
    /// positive leading coefficient.
    BigRational primitive_factor() const;

    BigRational eval(const BigRational& t0) const;

    /// Descending-power text form, e.g. "t^3-t^2-t+1", "1/2*t-3".
    std::string to_string(const std::string& var = "t") const;
    /// LaTeX form, e.g. t^{2}-2\,t+1.
    std::string to_latex() const;

private:
    explicit TPoly(std::vector<Term> terms) : terms_(std::move(terms)) {}
    std::vector<Term> terms_;
};

} // namespace hlv
