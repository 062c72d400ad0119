#include "hlv/vertex.hpp"

#include "hlv/bases.hpp"

#include <stdexcept>

namespace hlv {

namespace {

Family family_of(SeriesKind kind)
{
    return kind == SeriesKind::Alpha ? Family::Q : Family::B;
}

/// sum_{i=0}^{deg F} (-1)^i mult_{n+i} (adj_i)^perp F.
SymFunc creation_sum(Family mult, Family adj, InnerProduct form, int n, const SymFunc& f)
{
    SymFunc out;
    const int top = f.degree();
    for (int i = 0; i <= top; ++i) {
        if (n + i < 0)
            continue;
        SymFunc lowered = i == 0 ? f : adjoint_apply(generator(adj, i), f, form);
        if (lowered.is_zero())
            continue;
        SymFunc term = generator(mult, n + i) * lowered;
        if (i % 2 != 0)
            out -= term;
        else
            out += term;
    }
    return out;
}

} // namespace

SymFunc generic_vertex(VertexSpec spec, int n, const SymFunc& f)
{
    return creation_sum(family_of(spec.mult), family_of(spec.adj), InnerProduct::Deformed, n, f);
}

SymFunc iterate(VertexSpec spec, const Composition& lambda)
{
    SymFunc out(1);
    for (auto it = lambda.parts().rbegin(); it != lambda.parts().rend(); ++it)
        out = generic_vertex(spec, *it, out);
    return out;
}

SymFunc jing_H(int n, const SymFunc& f)
{
    return generic_vertex(kJing, n, f);
}

SymFunc jing_Hbar(int n, const SymFunc& f)
{
    return generic_vertex(kJingDual, n, f);
}

SymFunc bernstein(int n, const SymFunc& f)
{
    return creation_sum(Family::H, Family::E, InnerProduct::Hall, n, f);
}

SymFunc bernstein_col(int n, const SymFunc& f)
{
    return creation_sum(Family::E, Family::H, InnerProduct::Hall, n, f);
}

SymFunc VertexSeries::component(int n) const
{
    if (n < lo_ || n > hi_)
        throw std::out_of_range("component z^" + std::to_string(n) + " outside the computed window [" +
                                std::to_string(lo_) + ", " + std::to_string(hi_) + "]");
    return series_.coeff(n);
}

namespace {

/// (sum_k coeff(k) z^k) * translated, restricted to [lo, hi]. translated
/// only has exponents in [-deg F, 0].
VertexSeries multiply_windowed(const std::function<const SymFunc&(int)>& coeff, const LaurentZ& translated,
                               int lo, int hi)
{
    LaurentZ out;
    for (const auto& [e, g] : translated.coeffs()) {
        for (int k = std::max(0, lo - e); k <= hi - e; ++k)
            out.add_term(k + e, coeff(k) * g);
    }
    return VertexSeries(lo, hi, std::move(out));
}

} // namespace

VertexSeries vertex_series(VertexSpec spec, const SymFunc& f, int lo, int hi)
{
    if (lo > hi)
        throw std::invalid_argument("vertex_series: empty window");
    AlphabetExpr alphabet;
    alphabet.include_x = true;
    if (spec.adj == SeriesKind::Beta)
        alphabet.terms.push_back({-1, -1, false}); // beta_{-1/z}^perp F = F[X - 1/z]
    else
        alphabet.terms.push_back({1, -1, true}); // alpha_{-1/z}^perp F = F[X + (-1/z)]
    const LaurentZ translated = plethysm_alphabet(f, alphabet);
    const Family mult = family_of(spec.mult);
    return multiply_windowed([mult](int k) -> const SymFunc& { return generator(mult, k); }, translated, lo, hi);
}

VertexSeries dual_jing_series(const SymFunc& f, int lo, int hi)
{
    if (lo > hi)
        throw std::invalid_argument("dual_jing_series: empty window");
    // exp(sum (1-t^n)/n p_n^perp z^{-n}) translates p_n -> p_n + z^{-n}.
    AlphabetExpr alphabet{true, {{1, -1, false}}};
    const LaurentZ translated = plethysm_alphabet(f, alphabet);

    std::map<int, SymFunc> mult;
    auto coeff = [&mult](int k) -> const SymFunc& {
        auto it = mult.find(k);
        if (it == mult.end()) {
            auto weight = [](int j) { return -TRational(TPoly::one_minus_t_pow(static_cast<std::uint32_t>(j))); };
            it = mult.emplace(k, exp_series_coefficient(weight, k)).first;
        }
        return it->second;
    };
    return multiply_windowed(coeff, translated, lo, hi);
}

} // namespace hlv
