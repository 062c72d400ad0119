#pragma once

#include "hlv/tpoly.hpp"

#include <string>

namespace hlv {

/// Element of Q(t), kept in canonical form: gcd(num, den) = 1 and den has
/// coprime integer coefficients with a positive leading coefficient. Two
/// values are equal iff their stored num/den are equal.
class TRational {
public:
    TRational() : den_(1) {}
    TRational(long value) : num_(value), den_(1) {}
    TRational(const BigRational& value) : num_(value), den_(1) {}
    TRational(TPoly num) : num_(std::move(num)), den_(1) {}
    /// Reduces to canonical form; throws DivisionByZero if den is zero.
    TRational(TPoly num, TPoly den);

    static TRational t() { return TRational(TPoly::t()); }

    const TPoly& num() const { return num_; }
    const TPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    /// Throws IntegrityError unless the value is a polynomial.
    const TPoly& as_polynomial(const char* context = "value") const;

    TRational operator-() const;
    TRational& operator+=(const TRational& other);
    TRational& operator-=(const TRational& other);
    TRational& operator*=(const TRational& other);
    TRational& operator/=(const TRational& other);

    friend TRational operator+(TRational a, const TRational& b) { return a += b; }
    friend TRational operator-(TRational a, const TRational& b) { return a -= b; }
    friend TRational operator*(TRational a, const TRational& b) { return a *= b; }
    friend TRational operator/(TRational a, const TRational& b) { return a /= b; }
    friend bool operator==(const TRational&, const TRational&) = default;

    TRational pow(unsigned exponent) const;

    /// Exact value at t = t0; throws PoleError if den(t0) = 0.
    BigRational eval_at(const BigRational& t0) const;

    /// t^e * f(1/t).
    TRational hall_twist(int e) const;

    /// "t+1", or "(num)/(den)" when not a polynomial.
    std::string to_string() const;

private:
    void canonicalize();

    TPoly num_;
    TPoly den_;
};

} // namespace hlv
