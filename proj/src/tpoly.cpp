#include "hlv/tpoly.hpp"

#include "hlv/errors.hpp"

#include <algorithm>
#include <cassert>

namespace hlv {

TPoly::TPoly(long value)
{
    if (value != 0)
        terms_.push_back({0, BigRational(value)});
}

TPoly::TPoly(const BigRational& value)
{
    if (!hlv::is_zero(value))
        terms_.push_back({0, value});
}

TPoly TPoly::monomial(const BigRational& coeff, std::uint32_t exp)
{
    if (hlv::is_zero(coeff))
        return {};
    return TPoly(std::vector<Term>{{exp, coeff}});
}

TPoly TPoly::from_dense(const std::vector<BigRational>& coeffs)
{
    std::vector<Term> terms;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!hlv::is_zero(coeffs[i]))
            terms.push_back({static_cast<std::uint32_t>(i), coeffs[i]});
    return TPoly(std::move(terms));
}

TPoly TPoly::one_minus_t_pow(std::uint32_t k)
{
    if (k == 0)
        return {};
    return TPoly(std::vector<Term>{{0, BigRational(1)}, {k, BigRational(-1)}});
}

std::vector<BigRational> TPoly::dense() const
{
    std::vector<BigRational> out(terms_.empty() ? 0 : terms_.back().exp + 1);
    for (const auto& term : terms_)
        out[term.exp] = term.coeff;
    return out;
}

bool TPoly::is_one() const
{
    return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff == 1;
}

BigRational TPoly::coeff(std::uint32_t exp) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& term, std::uint32_t e) { return term.exp < e; });
    if (it != terms_.end() && it->exp == exp)
        return it->coeff;
    return 0;
}

const BigRational& TPoly::leading_coeff() const
{
    static const BigRational zero(0);
    return terms_.empty() ? zero : terms_.back().coeff;
}

bool TPoly::has_integer_coefficients() const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& term) { return term.coeff.get_den() == 1; });
}

TPoly TPoly::operator-() const
{
    TPoly out = *this;
    for (auto& term : out.terms_)
        term.coeff = -term.coeff;
    return out;
}

namespace {

template <bool Subtract>
std::vector<TPoly::Term> merge_terms(const std::vector<TPoly::Term>& a, const std::vector<TPoly::Term>& b)
{
    std::vector<TPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].exp < a[i].exp) {
            out.push_back(b[j]);
            if constexpr (Subtract)
                out.back().coeff = -out.back().coeff;
            ++j;
        } else {
            BigRational c = Subtract ? BigRational(a[i].coeff - b[j].coeff) : BigRational(a[i].coeff + b[j].coeff);
            if (!is_zero(c))
                out.push_back({a[i].exp, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

TPoly& TPoly::operator+=(const TPoly& other)
{
    if (other.terms_.empty())
        return *this;
    if (terms_.empty())
        return *this = other;
    terms_ = merge_terms<false>(terms_, other.terms_);
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& other)
{
    if (other.terms_.empty())
        return *this;
    terms_ = merge_terms<true>(terms_, other.terms_);
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b)
{
    if (a.terms_.empty() || b.terms_.empty())
        return {};
    if (b.terms_.size() == 1 && b.terms_[0].exp == 0)
        return a * b.terms_[0].coeff;
    if (a.terms_.size() == 1 && a.terms_[0].exp == 0)
        return b * a.terms_[0].coeff;

    const std::uint32_t deg = a.terms_.back().exp + b.terms_.back().exp;
    std::vector<BigRational> acc(deg + 1);
    std::vector<bool> touched(deg + 1, false);
    BigRational product;
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            mpq_mul(product.get_mpq_t(), x.coeff.get_mpq_t(), y.coeff.get_mpq_t());
            auto& slot = acc[x.exp + y.exp];
            mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), product.get_mpq_t());
            touched[x.exp + y.exp] = true;
        }
    }
    std::vector<TPoly::Term> terms;
    for (std::uint32_t e = 0; e <= deg; ++e)
        if (touched[e] && !is_zero(acc[e]))
            terms.push_back({e, std::move(acc[e])});
    return TPoly(std::move(terms));
}

TPoly& TPoly::operator*=(const TPoly& other)
{
    return *this = *this * other;
}

TPoly& TPoly::operator*=(const BigRational& scalar)
{
    if (hlv::is_zero(scalar)) {
        terms_.clear();
        return *this;
    }
    if (scalar == 1)
        return *this;
    for (auto& term : terms_)
        term.coeff *= scalar;
    return *this;
}

std::pair<TPoly, TPoly> TPoly::divmod(const TPoly& a, const TPoly& b)
{
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree())
        return {TPoly{}, a};

    std::vector<BigRational> rem = a.dense();
    const std::vector<BigRational> div = b.dense();
    const int db = b.degree();
    const BigRational inv_lead = 1 / b.leading_coeff();
    std::vector<BigRational> quot(a.degree() - db + 1);

    BigRational tmp;
    for (int k = a.degree() - db; k >= 0; --k) {
        auto& top = rem[k + db];
        if (hlv::is_zero(top))
            continue;
        quot[k] = top * inv_lead;
        for (int i = 0; i <= db; ++i) {
            if (hlv::is_zero(div[i]))
                continue;
            mpq_mul(tmp.get_mpq_t(), quot[k].get_mpq_t(), div[i].get_mpq_t());
            mpq_sub(rem[k + i].get_mpq_t(), rem[k + i].get_mpq_t(), tmp.get_mpq_t());
        }
        assert(hlv::is_zero(rem[k + db]));
    }
    rem.resize(db);
    return {from_dense(quot), from_dense(rem)};
}

TPoly TPoly::monic() const
{
    if (terms_.empty())
        return {};
    return *this * BigRational(1 / leading_coeff());
}

TPoly TPoly::gcd(const TPoly& a, const TPoly& b)
{
    TPoly x = a.monic();
    TPoly y = b.monic();
    while (!y.is_zero()) {
        TPoly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x;
}

TPoly TPoly::shifted(std::uint32_t shift) const
{
    TPoly out = *this;
    for (auto& term : out.terms_)
        term.exp += shift;
    return out;
}

TPoly TPoly::reversed(std::uint32_t deg) const
{
    assert(static_cast<int>(deg) >= degree());
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        terms.push_back({deg - it->exp, it->coeff});
    return TPoly(std::move(terms));
}

BigRational TPoly::primitive_factor() const
{
    if (terms_.empty())
        return 1;
    BigInt den_lcm = 1;
    for (const auto& term : terms_)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), term.coeff.get_den_mpz_t());
    BigInt num_gcd = 0;
    for (const auto& term : terms_) {
        BigInt scaled = term.coeff.get_num() * (den_lcm / term.coeff.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    BigRational factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (sgn(terms_.back().coeff) < 0)
        factor = -factor;
    return factor;
}

BigRational TPoly::eval(const BigRational& t0) const
{
    // Horner over the sparse terms, highest exponent first.
    BigRational acc = 0;
    std::uint32_t current = terms_.empty() ? 0 : terms_.back().exp;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        for (; current > it->exp; --current)
            acc *= t0;
        acc += it->coeff;
    }
    for (; current > 0; --current)
        acc *= t0;
    return acc;
}

std::string TPoly::to_string(const std::string& var) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const bool negative = sgn(it->coeff) < 0;
        BigRational mag = abs(it->coeff);
        if (out.empty()) {
            if (negative)
                out += "-";
        } else {
            out += negative ? "-" : "+";
        }
        if (it->exp == 0) {
            out += to_short_string(mag);
            continue;
        }
        if (mag != 1)
            out += to_short_string(mag) + "*";
        out += var;
        if (it->exp > 1)
            out += "^" + std::to_string(it->exp);
    }
    return out;
}

std::string TPoly::to_latex() const
{
    if (terms_.empty())
        return "0";
    auto scalar = [](const BigRational& v) {
        if (v.get_den() == 1)
            return v.get_num().get_str();
        return "\\frac{" + v.get_num().get_str() + "}{" + v.get_den().get_str() + "}";
    };
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const bool negative = sgn(it->coeff) < 0;
        BigRational mag = abs(it->coeff);
        if (negative)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (it->exp == 0) {
            out += scalar(mag);
            continue;
        }
        if (mag != 1)
            out += scalar(mag) + "\\,";
        out += "t";
        if (it->exp > 1)
            out += "^{" + std::to_string(it->exp) + "}";
    }
    return out;
}

} // namespace hlv
