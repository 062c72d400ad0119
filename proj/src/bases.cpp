#include "hlv/bases.hpp"

#include "hlv/memo.hpp"
#include "hlv/vertex.hpp"

#include <array>
#include <cstdint>
#include <unordered_map>

namespace hlv {

SymFunc exp_series_coefficient(const std::function<TRational(int)>& weight, int n)
{
    if (n < 0)
        return {};
    std::vector<SymFunc> a(static_cast<std::size_t>(n) + 1);
    a[0] = SymFunc(1);
    for (int m = 1; m <= n; ++m) {
        SymFunc acc;
        for (int k = 1; k <= m; ++k) {
            TRational w = weight(k);
            if (w.is_zero())
                continue;
            acc += SymFunc::p(Partition{k}, w) * a[static_cast<std::size_t>(m - k)];
        }
        a[static_cast<std::size_t>(m)] = acc * TRational(BigRational(1, m));
    }
    return a[static_cast<std::size_t>(n)];
}

namespace {

TRational family_weight(Family family, int k)
{
    const bool odd = k % 2 != 0;
    switch (family) {
    case Family::H:
        return 1;
    case Family::E:
        return odd ? 1 : -1;
    case Family::Q:
        return TRational(TPoly::one_minus_t_pow(static_cast<std::uint32_t>(k)));
    case Family::B: {
        TRational w(TPoly::one_minus_t_pow(static_cast<std::uint32_t>(k)));
        return odd ? w : -w;
    }
    case Family::QPrime:
        return odd ? 2 : 0;
    }
    return 0;
}

constexpr std::size_t kFamilies = 5;

} // namespace

const SymFunc& generator(Family family, int n)
{
    static const SymFunc zero;
    static std::array<Memo<int, SymFunc>, kFamilies> memo;
    if (n < 0)
        return zero;
    // Builds on the memoized lower coefficients rather than restarting the
    // recurrence for every n.
    return memo[static_cast<std::size_t>(family)].get(n, [family, n] {
        if (n == 0)
            return SymFunc(1);
        SymFunc acc;
        for (int k = 1; k <= n; ++k) {
            TRational w = family_weight(family, k);
            if (w.is_zero())
                continue;
            acc += SymFunc::p(Partition{k}, w) * generator(family, n - k);
        }
        return acc * TRational(BigRational(1, n));
    });
}

SymFunc generator_product(Family family, const Composition& index)
{
    std::vector<int> parts;
    for (int part : index.parts()) {
        if (part < 0)
            return {};
        if (part > 0)
            parts.push_back(part);
    }
    static std::array<Memo<Partition, SymFunc>, kFamilies> memo;
    const Partition key = Partition::from_multiset(std::move(parts));
    return memo[static_cast<std::size_t>(family)].get(key, [family, &key] {
        SymFunc out(1);
        for (int part : key.parts())
            out = out * generator(family, part);
        return out;
    });
}

// ---- determinants and Pfaffians --------------------------------------------

SymFunc determinant(const SymMatrix& matrix)
{
    const std::size_t n = matrix.size();
    if (n == 0)
        return SymFunc(1);
    // minor(row, cols) = det of rows [row, n) restricted to the column set.
    std::unordered_map<std::uint32_t, SymFunc> memo;
    std::function<SymFunc(std::size_t, std::uint32_t)> minor = [&](std::size_t row, std::uint32_t cols) -> SymFunc {
        if (row == n)
            return SymFunc(1);
        if (auto it = memo.find(cols); it != memo.end())
            return it->second;
        SymFunc total;
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(cols & (1u << c)))
                continue;
            const SymFunc& entry = matrix[row][c];
            if (!entry.is_zero()) {
                SymFunc term = entry * minor(row + 1, cols & ~(1u << c));
                if (sign > 0)
                    total += term;
                else
                    total -= term;
            }
            sign = -sign;
        }
        memo.emplace(cols, total);
        return total;
    };
    return minor(0, (n == 32 ? 0u : (1u << n)) - 1u);
}

SymFunc pfaffian(const SymMatrix& matrix)
{
    const std::size_t n = matrix.size();
    if (n % 2 != 0)
        return {};
    std::unordered_map<std::uint32_t, SymFunc> memo;
    std::function<SymFunc(std::uint32_t)> pf = [&](std::uint32_t set) -> SymFunc {
        if (set == 0)
            return SymFunc(1);
        if (auto it = memo.find(set); it != memo.end())
            return it->second;
        const std::size_t first = static_cast<std::size_t>(__builtin_ctz(set));
        SymFunc total;
        int sign = 1;
        for (std::size_t j = first + 1; j < n; ++j) {
            if (!(set & (1u << j)))
                continue;
            const SymFunc& entry = matrix[first][j];
            if (!entry.is_zero()) {
                SymFunc term = entry * pf(set & ~(1u << first) & ~(1u << j));
                if (sign > 0)
                    total += term;
                else
                    total -= term;
            }
            sign = -sign;
        }
        memo.emplace(set, total);
        return total;
    };
    return pf((1u << n) - 1u);
}

SymFunc schur(const Composition& lambda)
{
    const std::size_t n = lambda.size();
    SymMatrix m(n, std::vector<SymFunc>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = gen_h(lambda[i] - static_cast<int>(i) + static_cast<int>(j));
    return determinant(m);
}

SymMatrix schurQ_matrix(const Composition& lambda)
{
    std::vector<int> parts = lambda.parts();
    if (parts.size() % 2 != 0)
        parts.push_back(0);
    const std::size_t n = parts.size();
    auto upper = [](int a, int b) {
        SymFunc entry = gen_qprime(a) * gen_qprime(b);
        for (int k = 1; k <= b; ++k) {
            SymFunc term = gen_qprime(a + k) * gen_qprime(b - k) * TRational(2);
            if (k % 2 != 0)
                entry -= term;
            else
                entry += term;
        }
        return entry;
    };
    SymMatrix m(n, std::vector<SymFunc>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            m[i][j] = upper(parts[i], parts[j]);
            m[j][i] = -m[i][j];
        }
    }
    return m;
}

SymFunc schurQ(const Composition& lambda)
{
    return pfaffian(schurQ_matrix(lambda));
}

// ---- Hall-Littlewood functions ---------------------------------------------

const SymFunc& hl_Q(const Composition& lambda)
{
    static Memo<Composition, SymFunc> memo;
    const Composition key = lambda.canonical();
    return memo.get(key, [&key] {
        if (key.size() == 0)
            return SymFunc(1);
        const Composition tail(std::vector<int>(key.parts().begin() + 1, key.parts().end()));
        return jing_H(key[0], hl_Q(tail));
    });
}

SymFunc hl_B(const Composition& lambda)
{
    return omega(hl_Q(lambda));
}

const SymFunc& hl_B_vertex(const Composition& lambda)
{
    static Memo<Composition, SymFunc> memo;
    const Composition key = lambda.canonical();
    return memo.get(key, [&key] {
        if (key.size() == 0)
            return SymFunc(1);
        const Composition tail(std::vector<int>(key.parts().begin() + 1, key.parts().end()));
        return jing_Hbar(key[0], hl_B_vertex(tail));
    });
}

std::map<Partition, TPoly> raising_expansion(const Composition& lambda, std::optional<long> cap)
{
    const long k_max = cap.value_or(lambda.positive_weight());
    const std::size_t len = lambda.size();

    // The factor coefficients t^k - t^{k-1}.
    std::vector<TPoly> factor(static_cast<std::size_t>(std::max(k_max, 0L)) + 1);
    for (long k = 1; k <= k_max; ++k)
        factor[static_cast<std::size_t>(k)] =
            TPoly::monomial(1, static_cast<std::uint32_t>(k)) - TPoly::monomial(1, static_cast<std::uint32_t>(k - 1));

    // Factors commute, so they are applied column by column from the right:
    // once every R_ij with this j is applied, part j never changes again, and
    // while they are applied it only decreases, so a negative part j is final.
    std::map<std::vector<int>, TPoly> states;
    states.emplace(lambda.parts(), TPoly(1));
    for (std::size_t j = len; j-- > 1;) {
        for (auto it = states.begin(); it != states.end();) {
            if (it->first[j] < 0)
                it = states.erase(it);
            else
                ++it;
        }
        for (std::size_t i = j; i-- > 0;) {
            std::map<std::vector<int>, TPoly> next;
            for (const auto& [index, coeff] : states) {
                next[index] += coeff;
                std::vector<int> raised = index;
                for (long k = 1; k <= k_max; ++k) {
                    ++raised[i];
                    --raised[j];
                    if (raised[j] < 0)
                        break;
                    next[raised] += coeff * factor[static_cast<std::size_t>(k)];
                }
            }
            std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
            states = std::move(next);
        }
    }

    std::map<Partition, TPoly> out;
    for (const auto& [index, coeff] : states) {
        if (std::any_of(index.begin(), index.end(), [](int p) { return p < 0; }))
            continue;
        out[Partition::from_multiset(index)] += coeff;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

namespace {

SymFunc apply_raising(Family family, const Composition& lambda, std::optional<long> cap)
{
    SymFunc out;
    for (const auto& [index, coeff] : raising_expansion(lambda, cap))
        out += generator_product(family, index.as_composition()) * TRational(coeff);
    return out;
}

} // namespace

SymFunc hl_Q_raising(const Composition& lambda, std::optional<long> cap)
{
    return apply_raising(Family::Q, lambda, cap);
}

SymFunc hl_B_raising(const Composition& lambda, std::optional<long> cap)
{
    return apply_raising(Family::B, lambda, cap);
}

SymFunc skew_Q(const Partition& lambda, const Partition& mu)
{
    SymFunc lowered = adjoint_apply(hl_Q(mu.as_composition()), hl_Q(lambda.as_composition()));
    return lowered * (TRational(1) / TRational(c_poly(mu)));
}

SymFunc skew_B(const Partition& lambda, const Partition& mu)
{
    return omega(skew_Q(lambda, mu));
}

} // namespace hlv
