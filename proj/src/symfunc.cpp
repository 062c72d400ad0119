#include "hlv/symfunc.hpp"

#include "hlv/errors.hpp"
#include "hlv/linalg.hpp"
#include "hlv/memo.hpp"

#include <algorithm>
#include <functional>

namespace hlv {

// ---- SymFunc ---------------------------------------------------------------

SymFunc::SymFunc(const TRational& constant)
{
    if (!constant.is_zero())
        terms_.emplace(Partition{}, constant);
}

SymFunc SymFunc::p(const Partition& index, const TRational& coeff)
{
    SymFunc out;
    out.add_term(index, coeff);
    return out;
}

SymFunc SymFunc::p(int n)
{
    if (n < 0)
        return {};
    if (n == 0)
        return SymFunc(1);
    return p(Partition{n});
}

int SymFunc::degree() const
{
    int d = -1;
    for (const auto& [index, coeff] : terms_)
        d = std::max(d, index.weight());
    return d;
}

int SymFunc::low_degree() const
{
    if (terms_.empty())
        return -1;
    int d = terms_.begin()->first.weight();
    for (const auto& [index, coeff] : terms_)
        d = std::min(d, index.weight());
    return d;
}

TRational SymFunc::coeff(const Partition& index) const
{
    auto it = terms_.find(index);
    return it == terms_.end() ? TRational() : it->second;
}

void SymFunc::add_term(const Partition& index, const TRational& coeff)
{
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(index, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

SymFunc SymFunc::homogeneous_component(int n) const
{
    SymFunc out;
    for (const auto& [index, coeff] : terms_)
        if (index.weight() == n)
            out.terms_.emplace_hint(out.terms_.end(), index, coeff);
    return out;
}

SymFunc SymFunc::truncated(int max_degree) const
{
    SymFunc out;
    for (const auto& [index, coeff] : terms_)
        if (index.weight() <= max_degree)
            out.terms_.emplace_hint(out.terms_.end(), index, coeff);
    return out;
}

SymFunc SymFunc::eval_t(const BigRational& t0) const
{
    SymFunc out;
    for (const auto& [index, coeff] : terms_)
        out.add_term(index, TRational(coeff.eval_at(t0)));
    return out;
}

bool SymFunc::has_polynomial_coefficients() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_polynomial(); });
}

SymFunc SymFunc::operator-() const
{
    SymFunc out = *this;
    for (auto& [index, coeff] : out.terms_)
        coeff = -coeff;
    return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& other)
{
    for (const auto& [index, coeff] : other.terms_)
        add_term(index, coeff);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other)
{
    for (const auto& [index, coeff] : other.terms_)
        add_term(index, -coeff);
    return *this;
}

SymFunc& SymFunc::operator*=(const TRational& scalar)
{
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (scalar.is_one())
        return *this;
    for (auto& [index, coeff] : terms_)
        coeff *= scalar;
    return *this;
}

SymFunc& SymFunc::operator*=(const SymFunc& other)
{
    return *this = *this * other;
}

SymFunc multiply(const SymFunc& a, const SymFunc& b, int max_degree)
{
    SymFunc out;
    for (const auto& [ia, ca] : a.terms()) {
        for (const auto& [ib, cb] : b.terms()) {
            if (ia.weight() + ib.weight() > max_degree)
                continue;
            out.add_term(merge(ia, ib), ca * cb);
        }
    }
    return out;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b)
{
    if (a.terms_.size() == 1 && a.terms_.begin()->first.empty())
        return b * a.terms_.begin()->second;
    if (b.terms_.size() == 1 && b.terms_.begin()->first.empty())
        return a * b.terms_.begin()->second;
    SymFunc out;
    for (const auto& [ia, ca] : a.terms_)
        for (const auto& [ib, cb] : b.terms_)
            out.add_term(merge(ia, ib), ca * cb);
    return out;
}

namespace {

/// "c*" prefix for a term, or the bare coefficient for the constant term.
std::string coefficient_prefix(const TRational& coeff, bool constant)
{
    std::string c = coeff.to_string();
    if (c.find_first_of("+-/", 1) != std::string::npos)
        c = "(" + c + ")";
    if (constant)
        return c;
    if (c == "1")
        return "";
    if (c == "-1")
        return "-";
    return c + "*";
}

} // namespace

std::string SymFunc::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [index, coeff] : terms_) {
        if (!out.empty())
            out += " + ";
        out += coefficient_prefix(coeff, index.empty());
        if (!index.empty())
            out += "p" + index.to_string();
    }
    return out;
}

// ---- involution, inner product, adjoints -----------------------------------

SymFunc omega(const SymFunc& f)
{
    SymFunc out = f;
    for (const auto& [index, coeff] : f.terms())
        if ((index.weight() - static_cast<int>(index.length())) % 2 != 0)
            out.add_term(index, TRational(-2) * coeff);
    return out;
}

SymFunc negate_alphabet(const SymFunc& f)
{
    SymFunc out = f;
    for (const auto& [index, coeff] : f.terms())
        if (index.length() % 2 != 0)
            out.add_term(index, TRational(-2) * coeff);
    return out;
}

namespace {

TPoly power_sum_t_factor(const Partition& index)
{
    TPoly out(1);
    for (int part : index.parts())
        out *= TPoly::one_minus_t_pow(static_cast<std::uint32_t>(part));
    return out;
}

/// (t;t)_n = prod_{k=1}^n (1 - t^k), a common multiple of every
/// prod_i (1 - t^{rho_i}) with rho |- n.
const TPoly& weight_denominator(int n)
{
    static Memo<int, TPoly> memo;
    return memo.get(n, [n] {
        TPoly out(1);
        for (int k = 1; k <= n; ++k)
            out *= TPoly::one_minus_t_pow(static_cast<std::uint32_t>(k));
        return out;
    });
}

/// z_rho * (t;t)_n / prod_i (1 - t^{rho_i}).
const TPoly& scaled_norm_numerator(const Partition& rho)
{
    static Memo<Partition, TPoly> memo;
    return memo.get(rho, [&rho] {
        auto [q, r] = TPoly::divmod(weight_denominator(rho.weight()), power_sum_t_factor(rho));
        if (!r.is_zero())
            throw IntegrityError("power-sum norm denominator does not divide (t;t)_n");
        return q * BigRational(z_factor(rho));
    });
}

} // namespace

TRational power_sum_norm(const Partition& index, InnerProduct form)
{
    TRational z{BigRational(z_factor(index))};
    if (form == InnerProduct::Hall)
        return z;
    return z / TRational(power_sum_t_factor(index));
}

TRational inner(const SymFunc& f, const SymFunc& g, InnerProduct form)
{
    const SymFunc& small = f.size() <= g.size() ? f : g;
    const SymFunc& large = f.size() <= g.size() ? g : f;

    if (form == InnerProduct::Hall) {
        TRational total;
        for (const auto& [index, coeff] : small.terms()) {
            auto it = large.terms().find(index);
            if (it != large.terms().end())
                total += coeff * it->second * TRational(BigRational(z_factor(index)));
        }
        return total;
    }

    // Sum weight by weight over the common denominator (t;t)_n, so that
    // polynomial inputs need a single gcd per weight.
    std::map<int, TRational> by_weight;
    for (const auto& [index, coeff] : small.terms()) {
        auto it = large.terms().find(index);
        if (it == large.terms().end())
            continue;
        by_weight[index.weight()] += coeff * it->second * TRational(scaled_norm_numerator(index));
    }
    TRational total;
    for (const auto& [n, numerator] : by_weight)
        total += numerator / TRational(weight_denominator(n));
    return total;
}

SymFunc adjoint_apply(const SymFunc& f, const SymFunc& g, InnerProduct form)
{
    SymFunc out;
    for (const auto& [rho, c_rho] : f.terms()) {
        // c_rho * prod_k rho_k / (1 - t^{rho_k})
        TRational factor = c_rho;
        for (int part : rho.parts())
            factor *= TRational(part);
        if (form == InnerProduct::Deformed)
            factor /= TRational(power_sum_t_factor(rho));

        const auto rho_mult = rho.multiplicities();
        for (const auto& [mu, c_mu] : g.terms()) {
            if (mu.weight() < rho.weight())
                continue;
            bool contained = false;
            Partition rest = remove_parts(mu, rho, contained);
            if (!contained)
                continue;
            // Derivatives of prod_i p_i^{m_i}: falling factorials m_i^(r_i).
            const auto mu_mult = mu.multiplicities();
            BigInt falling = 1;
            for (std::size_t i = 1; i < rho_mult.size(); ++i)
                for (int k = 0; k < rho_mult[i]; ++k)
                    falling *= mu_mult[i] - k;
            out.add_term(rest, c_mu * factor * TRational(BigRational(falling)));
        }
    }
    return out;
}

// ---- LaurentZ --------------------------------------------------------------

LaurentZ LaurentZ::monomial(int exponent, const SymFunc& f)
{
    LaurentZ out;
    out.add_term(exponent, f);
    return out;
}

SymFunc LaurentZ::coeff(int exponent) const
{
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? SymFunc() : it->second;
}

std::optional<int> LaurentZ::min_exponent() const
{
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.begin()->first;
}

std::optional<int> LaurentZ::max_exponent() const
{
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.rbegin()->first;
}

void LaurentZ::add_term(int exponent, const SymFunc& f)
{
    if (f.is_zero())
        return;
    auto [it, inserted] = coeffs_.try_emplace(exponent, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero())
            coeffs_.erase(it);
    }
}

LaurentZ& LaurentZ::operator+=(const LaurentZ& other)
{
    for (const auto& [e, f] : other.coeffs_)
        add_term(e, f);
    return *this;
}

LaurentZ& LaurentZ::operator*=(const TRational& scalar)
{
    if (scalar.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [e, f] : coeffs_)
        f *= scalar;
    return *this;
}

LaurentZ operator*(const LaurentZ& a, const LaurentZ& b)
{
    LaurentZ out;
    for (const auto& [ea, fa] : a.coeffs_)
        for (const auto& [eb, fb] : b.coeffs_)
            out.add_term(ea + eb, fa * fb);
    return out;
}

LaurentZ LaurentZ::negate_z() const
{
    LaurentZ out = *this;
    for (auto& [e, f] : out.coeffs_)
        if (e % 2 != 0)
            f = -f;
    return out;
}

LaurentZ plethysm_alphabet(const SymFunc& f, const AlphabetExpr& alphabet)
{
    std::map<int, LaurentZ> images;
    auto image_of = [&](int n) -> const LaurentZ& {
        auto it = images.find(n);
        if (it != images.end())
            return it->second;
        LaurentZ image;
        if (alphabet.include_x)
            image.add_term(0, SymFunc::p(n));
        for (const auto& term : alphabet.terms) {
            long sign = term.sign;
            if (term.negate_variable && n % 2 != 0)
                sign = -sign;
            image.add_term(term.exponent * n, SymFunc(sign));
        }
        return images.emplace(n, std::move(image)).first->second;
    };

    LaurentZ out;
    for (const auto& [index, coeff] : f.terms()) {
        LaurentZ product = LaurentZ::constant(SymFunc(coeff));
        for (int part : index.parts())
            product = product * image_of(part);
        out += product;
    }
    return out;
}

// ---- MultiPoly -------------------------------------------------------------

MultiPoly MultiPoly::constant(int num_vars, const TRational& c)
{
    MultiPoly out(num_vars);
    out.add_term(Exponents(static_cast<std::size_t>(num_vars), 0), c);
    return out;
}

MultiPoly MultiPoly::power_sum(int num_vars, int n)
{
    MultiPoly out(num_vars);
    for (int i = 0; i < num_vars; ++i) {
        Exponents e(static_cast<std::size_t>(num_vars), 0);
        e[static_cast<std::size_t>(i)] = n;
        out.add_term(e, TRational(1));
    }
    return out;
}

TRational MultiPoly::coeff(const Exponents& exponents) const
{
    auto it = terms_.find(exponents);
    return it == terms_.end() ? TRational() : it->second;
}

void MultiPoly::add_term(const Exponents& exponents, const TRational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other)
{
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    MultiPoly out(a.num_vars_);
    MultiPoly::Exponents e(static_cast<std::size_t>(a.num_vars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string monomial;
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            if (it->first[i] == 0)
                continue;
            if (!monomial.empty())
                monomial += "*";
            monomial += "x" + std::to_string(i + 1);
            if (it->first[i] > 1)
                monomial += "^" + std::to_string(it->first[i]);
        }
        if (!out.empty())
            out += " + ";
        out += coefficient_prefix(it->second, monomial.empty()) + monomial;
    }
    return out;
}

std::string MultiPoly::to_latex() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const TPoly& c = it->second.as_polynomial("MultiPoly::to_latex coefficient");
        std::string monomial;
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            if (it->first[i] == 0)
                continue;
            monomial += "x_{" + std::to_string(i + 1) + "}";
            if (it->first[i] > 1)
                monomial += "^{" + std::to_string(it->first[i]) + "}";
        }
        std::string coeff;
        if (c.terms().size() > 1)
            coeff = "\\left(" + c.to_latex() + "\\right)";
        else if (monomial.empty() || !(c.is_one() || (-c).is_one()))
            coeff = c.to_latex();
        else
            coeff = c.is_one() ? "" : "-";
        if (!out.empty() && coeff.rfind('-', 0) != 0)
            out += "+";
        out += coeff + monomial;
    }
    return out;
}

MultiPoly specialize_vars(const SymFunc& f, int num_vars)
{
    if (num_vars < 1)
        throw std::invalid_argument("specialize_vars needs at least one variable");
    std::map<int, MultiPoly> power_sums;
    MultiPoly out(num_vars);
    for (const auto& [index, coeff] : f.terms()) {
        MultiPoly product = MultiPoly::constant(num_vars, coeff);
        for (int part : index.parts()) {
            auto it = power_sums.find(part);
            if (it == power_sums.end())
                it = power_sums.emplace(part, MultiPoly::power_sum(num_vars, part)).first;
            product = product * it->second;
        }
        out += product;
    }
    return out;
}

// ---- monomial transition ---------------------------------------------------

BigInt power_sum_to_monomial(const Partition& rho, const Partition& lambda)
{
    if (rho.weight() != lambda.weight())
        return 0;
    // The count depends only on the multiset of remaining slot capacities,
    // so states are memoized on the sorted capacity vector.
    std::map<std::pair<std::size_t, std::vector<int>>, BigInt> memo;
    std::function<BigInt(std::size_t, std::vector<int>)> count = [&](std::size_t k, std::vector<int> remaining) {
        if (k == rho.length())
            return BigInt(1);
        std::sort(remaining.begin(), remaining.end());
        auto key = std::make_pair(k, remaining);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        BigInt total = 0;
        for (std::size_t j = 0; j < remaining.size(); ++j) {
            if (remaining[j] < rho[k])
                continue;
            remaining[j] -= rho[k];
            total += count(k + 1, remaining);
            remaining[j] += rho[k];
        }
        memo.emplace(std::move(key), total);
        return total;
    };
    return count(0, lambda.parts());
}

namespace {

struct TransitionTable {
    std::vector<Partition> partitions;
    std::map<Partition, std::size_t> position;
    // counts[r][l] = coefficient of m_{partitions[l]} in p_{partitions[r]}
    std::vector<std::vector<BigInt>> counts;
};

const TransitionTable& transition_table(int n)
{
    static Memo<int, TransitionTable> memo;
    return memo.get(n, [n] {
        TransitionTable table;
        table.partitions = enumerate_partitions(n);
        const std::size_t size = table.partitions.size();
        table.counts.assign(size, std::vector<BigInt>(size));
        for (std::size_t r = 0; r < size; ++r) {
            table.position.emplace(table.partitions[r], r);
            for (std::size_t l = 0; l < size; ++l)
                table.counts[r][l] = power_sum_to_monomial(table.partitions[r], table.partitions[l]);
        }
        return table;
    });
}

const RationalMatrix& monomial_to_power_sum(int n)
{
    static Memo<int, RationalMatrix> memo;
    return memo.get(n, [n] {
        const auto& table = transition_table(n);
        const std::size_t size = table.partitions.size();
        RationalMatrix m(size, std::vector<TRational>(size));
        for (std::size_t r = 0; r < size; ++r)
            for (std::size_t l = 0; l < size; ++l)
                m[r][l] = TRational(BigRational(table.counts[r][l]));
        // p = L m  =>  m = L^{-1} p; row mu of L^{-1} expresses m_mu.
        return invert(std::move(m));
    });
}

} // namespace

std::map<Partition, TRational> monomial_expansion(const SymFunc& f, int n)
{
    std::map<Partition, TRational> out;
    if (n < 0)
        return out;
    const auto& table = transition_table(n);
    std::vector<TRational> acc(table.partitions.size());
    for (const auto& [rho, coeff] : f.terms()) {
        if (rho.weight() != n)
            continue;
        const auto& row = table.counts[table.position.at(rho)];
        for (std::size_t l = 0; l < row.size(); ++l)
            if (row[l] != 0)
                acc[l] += coeff * TRational(BigRational(row[l]));
    }
    for (std::size_t l = 0; l < acc.size(); ++l)
        if (!acc[l].is_zero())
            out.emplace(table.partitions[l], std::move(acc[l]));
    return out;
}

SymFunc m_in_p(const Partition& lambda)
{
    const int n = lambda.weight();
    const auto& table = transition_table(n);
    const auto& inverse = monomial_to_power_sum(n);
    const auto& row = inverse[table.position.at(lambda)];
    SymFunc out;
    for (std::size_t r = 0; r < row.size(); ++r)
        out.add_term(table.partitions[r], row[r]);
    return out;
}

SymFunc forgotten(const Partition& lambda)
{
    return omega(m_in_p(lambda));
}

} // namespace hlv
