#include "hlv/trational.hpp"

#include "hlv/errors.hpp"

namespace hlv {

TRational::TRational(TPoly num, TPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw DivisionByZero("rational function with zero denominator");
    canonicalize();
}

void TRational::canonicalize()
{
    if (num_.is_zero()) {
        den_ = TPoly(1);
        return;
    }
    if (!den_.is_constant()) {
        TPoly g = TPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = TPoly::divmod(num_, g).first;
            den_ = TPoly::divmod(den_, g).first;
        }
    }
    if (den_.is_one())
        return;
    BigRational factor = den_.primitive_factor();
    den_ *= factor;
    num_ *= factor;
}

const TPoly& TRational::as_polynomial(const char* context) const
{
    if (!den_.is_one())
        throw IntegrityError(std::string(context) + " is not a polynomial in t: " + to_string());
    return num_;
}

TRational TRational::operator-() const
{
    TRational out = *this;
    out.num_ = -out.num_;
    return out;
}

TRational& TRational::operator+=(const TRational& other)
{
    if (other.num_.is_zero())
        return *this;
    if (num_.is_zero())
        return *this = other;
    if (den_ == other.den_) {
        num_ += other.num_;
        if (!den_.is_one())
            canonicalize();
        return *this;
    }
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
    canonicalize();
    return *this;
}

TRational& TRational::operator-=(const TRational& other)
{
    return *this += -other;
}

TRational& TRational::operator*=(const TRational& other)
{
    if (num_.is_zero())
        return *this;
    if (other.num_.is_zero())
        return *this = TRational();
    num_ *= other.num_;
    if (den_.is_one() && other.den_.is_one())
        return *this;
    den_ *= other.den_;
    canonicalize();
    return *this;
}

TRational& TRational::operator/=(const TRational& other)
{
    if (other.num_.is_zero())
        throw DivisionByZero("division of rational functions by zero");
    if (num_.is_zero())
        return *this;
    if (other.is_polynomial() && other.num_.is_constant()) {
        num_ *= BigRational(1 / other.num_.leading_coeff());
        return *this;
    }
    num_ *= other.den_;
    den_ *= other.num_;
    canonicalize();
    return *this;
}

TRational TRational::pow(unsigned exponent) const
{
    TRational result(1);
    TRational base = *this;
    while (exponent > 0) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1;
        if (exponent)
            base *= base;
    }
    return result;
}

BigRational TRational::eval_at(const BigRational& t0) const
{
    BigRational d = den_.eval(t0);
    if (hlv::is_zero(d))
        throw PoleError("pole at t = " + to_short_string(t0) + " of " + to_string());
    return num_.eval(t0) / d;
}

TRational TRational::hall_twist(int e) const
{
    // f(1/t) = t^(deg den - deg num) * rev(num) / rev(den).
    if (num_.is_zero())
        return {};
    const int dn = num_.degree();
    const int dd = den_.degree();
    TPoly num = num_.reversed(static_cast<std::uint32_t>(dn));
    TPoly den = den_.reversed(static_cast<std::uint32_t>(dd));
    const int shift = e + dd - dn;
    if (shift >= 0)
        num = num.shifted(static_cast<std::uint32_t>(shift));
    else
        den = den.shifted(static_cast<std::uint32_t>(-shift));
    return TRational(std::move(num), std::move(den));
}

std::string TRational::to_string() const
{
    if (den_.is_one())
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace hlv
