#pragma once

#include "hlv/partition.hpp"
#include "hlv/trational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hlv {

/// Which bilinear form adjoints and inner products refer to.
///   Deformed: <p_a, p_b> = delta_ab z_a prod_i 1/(1 - t^{a_i})
///   Hall:     <p_a, p_b> = delta_ab z_a            (the t = 0 form)
enum class InnerProduct { Deformed, Hall };

/// Element of Lambda(t) in the power-sum basis: p_lambda -> coefficient.
/// The empty map is 0; {() -> 1} is 1.
class SymFunc {
public:
    using Terms = std::map<Partition, TRational>;

    SymFunc() = default;
    SymFunc(const TRational& constant);
    SymFunc(long constant) : SymFunc(TRational(constant)) {}

    static SymFunc p(const Partition& index, const TRational& coeff = TRational(1));
    /// p_n, with p_0 = 1.
    static SymFunc p(int n);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Largest weight of a stored term; -1 for zero.
    int degree() const;
    /// Smallest weight of a stored term; -1 for zero.
    int low_degree() const;
    bool is_homogeneous() const { return low_degree() == degree(); }
    TRational coeff(const Partition& index) const;

    /// Adds coeff * p_index, dropping the entry if it cancels.
    void add_term(const Partition& index, const TRational& coeff);

    SymFunc homogeneous_component(int n) const;
    /// Drops every term of weight > max_degree.
    SymFunc truncated(int max_degree) const;
    /// Coefficientwise t -> t0.
    SymFunc eval_t(const BigRational& t0) const;
    /// True when every coefficient is a polynomial in t.
    bool has_polynomial_coefficients() const;

    SymFunc operator-() const;
    SymFunc& operator+=(const SymFunc& other);
    SymFunc& operator-=(const SymFunc& other);
    SymFunc& operator*=(const TRational& scalar);
    SymFunc& operator*=(const SymFunc& other);

    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const TRational& s) { return a *= s; }
    friend SymFunc operator*(const TRational& s, SymFunc a) { return a *= s; }
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
    friend bool operator==(const SymFunc&, const SymFunc&) = default;

    std::string to_string() const;

private:
    Terms terms_;
};

/// Product truncated to total degree max_degree.
SymFunc multiply(const SymFunc& a, const SymFunc& b, int max_degree);

/// omega: p_n -> (-1)^{n-1} p_n.
SymFunc omega(const SymFunc& f);

/// F[-X]: p_n -> -p_n.
SymFunc negate_alphabet(const SymFunc& f);

/// <p_index, p_index> under the chosen form.
TRational power_sum_norm(const Partition& index, InnerProduct form = InnerProduct::Deformed);

TRational inner(const SymFunc& f, const SymFunc& g, InnerProduct form = InnerProduct::Deformed);

/// F^perp G: p_n^perp acts as n/(1-t^n) d/dp_n (Deformed) or n d/dp_n (Hall).
SymFunc adjoint_apply(const SymFunc& f, const SymFunc& g, InnerProduct form = InnerProduct::Deformed);

/// Finitely supported Laurent series in z with SymFunc coefficients.
class LaurentZ {
public:
    using Coeffs = std::map<int, SymFunc>;

    LaurentZ() = default;
    static LaurentZ constant(const SymFunc& f) { return monomial(0, f); }
    static LaurentZ monomial(int exponent, const SymFunc& f);

    const Coeffs& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of z^exponent (zero when absent).
    SymFunc coeff(int exponent) const;
    std::optional<int> min_exponent() const;
    std::optional<int> max_exponent() const;

    void add_term(int exponent, const SymFunc& f);
    LaurentZ& operator+=(const LaurentZ& other);
    LaurentZ& operator*=(const TRational& scalar);
    friend LaurentZ operator+(LaurentZ a, const LaurentZ& b) { return a += b; }
    friend LaurentZ operator*(const LaurentZ& a, const LaurentZ& b);
    friend bool operator==(const LaurentZ&, const LaurentZ&) = default;

    /// z -> -z.
    LaurentZ negate_z() const;

private:
    Coeffs coeffs_;
};

/// One summand of an alphabet: sign * (v z^exponent) with v = -1 when
/// negate_variable, else v = 1. Under plethysm p_n -> sign * v^n z^{exponent n}.
struct AlphabetTerm {
    int sign = 1;
    int exponent = 1;
    bool negate_variable = false;
};

/// include_x selects whether X itself belongs to the alphabet.
struct AlphabetExpr {
    bool include_x = true;
    std::vector<AlphabetTerm> terms;
};

/// F[alphabet], expanded exactly as a Laurent polynomial in z. t is inert.
LaurentZ plethysm_alphabet(const SymFunc& f, const AlphabetExpr& alphabet);

/// Exact polynomial in x_1..x_k with Q(t) coefficients, keyed by exponent vector.
class MultiPoly {
public:
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, TRational>;

    explicit MultiPoly(int num_vars = 1) : num_vars_(num_vars) {}
    static MultiPoly constant(int num_vars, const TRational& c);
    /// x_1^n + ... + x_k^n.
    static MultiPoly power_sum(int num_vars, int n);

    int num_vars() const { return num_vars_; }
    const Terms& terms() const { return terms_; }
    TRational coeff(const Exponents& exponents) const;
    void add_term(const Exponents& exponents, const TRational& c);

    MultiPoly& operator+=(const MultiPoly& other);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    std::string to_string() const;
    /// LaTeX form with monomials in descending lex order, e.g.
    /// \left(-t+1\right)x_{1}^{2}+x_{1}x_{2}. Requires polynomial coefficients.
    std::string to_latex() const;

private:
    int num_vars_;
    Terms terms_;
};

/// Substitutes p_n -> x_1^n + ... + x_k^n and expands; k >= 1.
MultiPoly specialize_vars(const SymFunc& f, int num_vars);

/// Number of ways to distribute the parts of rho over the |lambda| slots so
/// that slot j receives total lambda_j: the coefficient of m_lambda in p_rho.
BigInt power_sum_to_monomial(const Partition& rho, const Partition& lambda);

/// Coefficients of m_lambda, lambda |- n, in the degree-n component of f.
/// Zero coefficients are omitted.
std::map<Partition, TRational> monomial_expansion(const SymFunc& f, int n);

/// The monomial symmetric function m_lambda in the power-sum basis.
SymFunc m_in_p(const Partition& lambda);

/// Forgotten symmetric function f_lambda = omega(m_lambda).
SymFunc forgotten(const Partition& lambda);

} // namespace hlv
