#include "hlv/structure.hpp"

#include "hlv/bases.hpp"
#include "hlv/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace hlv {

std::map<Partition, TRational> product_expand_Q(const Partition& mu, const Partition& nu)
{
    std::map<Partition, TRational> out;
    const SymFunc product = hl_Q(mu.as_composition()) * hl_Q(nu.as_composition());
    for (const Partition& lambda : enumerate_partitions(mu.weight() + nu.weight())) {
        TRational a = inner(product, hl_Q(lambda.as_composition())) / TRational(c_poly(lambda));
        if (a.is_zero())
            continue;
        a.as_polynomial("Q-product expansion coefficient");
        out.emplace(lambda, std::move(a));
    }
    return out;
}

TRational f_inner(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    if (lambda.weight() != mu.weight() + nu.weight())
        return {};
    return inner(skew_Q(lambda, mu), hl_Q(nu.as_composition()));
}

TRational f_coeff(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    return f_inner(lambda, mu, nu) / TRational(c_poly(nu));
}

TPoly hall_g(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    if (lambda.weight() != mu.weight() + nu.weight())
        return {};
    const long shift = epsilon(lambda) - epsilon(mu) - epsilon(nu);
    const TRational g = f_coeff(lambda, mu, nu).hall_twist(static_cast<int>(shift));
    const TPoly& poly = g.as_polynomial("Hall polynomial");
    if (!poly.has_integer_coefficients())
        throw IntegrityError("Hall polynomial with non-integer coefficients: " + poly.to_string());
    return poly;
}

// ---- stability scans -------------------------------------------------------

int theorem_bound(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    return mu.largest() + nu.largest() + lambda.weight() - mu.weight() - nu.weight();
}

int separation_limit(const Partition& mu, const Partition& nu)
{
    return mu.largest() + nu.largest() + 1;
}

int onset_limit(ScanKind kind, const Partition& lambda, const Partition& mu, const Partition& nu)
{
    const int limit = theorem_bound(lambda, mu, nu) + 1;
    if (kind != ScanKind::Hall)
        return limit;
    const int offset = lambda.weight() - mu.weight() - nu.weight();
    return std::max({limit, separation_limit(mu, nu), nu.largest() - offset + 1, lambda.largest()});
}

int StabilityReport::onset_limit() const
{
    return hlv::onset_limit(kind, lambda, mu, nu);
}

std::optional<int> detect_onset(const std::vector<std::pair<int, TRational>>& samples)
{
    if (samples.empty())
        return std::nullopt;
    std::size_t first = samples.size() - 1;
    while (first > 0 && samples[first - 1].second == samples.back().second)
        --first;
    if (samples.size() - 1 - first < static_cast<std::size_t>(kStableRun))
        return std::nullopt;
    return samples[first].first;
}

int scan_start(ScanKind kind, const Partition& lambda, const Partition& mu, const Partition& nu)
{
    const int offset = lambda.weight() - mu.weight() - nu.weight();
    if (kind == ScanKind::Hall)
        return std::max(lambda.largest(), nu.largest() - offset);
    return -lambda.weight() - 1;
}

namespace {

Partition with_first_part(int m, const Partition& rest)
{
    std::vector<int> parts{m};
    parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
    return Partition(std::move(parts));
}

TRational sample(ScanKind kind, int m, int n, const Partition& lambda, const Partition& mu, const Partition& nu)
{
    const Composition top = prepend(m, lambda.as_composition());
    const Composition side = prepend(n, nu.as_composition());
    switch (kind) {
    case ScanKind::Skew:
        return inner(hl_Q(top), hl_Q(mu.as_composition()) * hl_Q(side));
    case ScanKind::SkewB:
        return inner(hl_B_vertex(top), hl_B_vertex(mu.as_composition()) * hl_B_vertex(side));
    case ScanKind::Hall:
        return TRational(hall_g(with_first_part(m, lambda), mu, with_first_part(n, nu)));
    }
    return {};
}

} // namespace

StabilityReport stability_scan(const Partition& lambda, const Partition& mu, const Partition& nu, int m_max,
                               ScanKind kind)
{
    StabilityReport report;
    report.lambda = lambda;
    report.mu = mu;
    report.nu = nu;
    report.kind = kind;
    report.offset = lambda.weight() - mu.weight() - nu.weight();
    report.theorem_bound = theorem_bound(lambda, mu, nu);

    const int start = scan_start(kind, lambda, mu, nu);
    if (m_max < report.theorem_bound + 3 || m_max < start)
        throw std::invalid_argument("m_max = " + std::to_string(m_max) + " is below the theorem bound + 3 = " +
                                    std::to_string(report.theorem_bound + 3) + " or the scan start");

    for (int m = start; m <= m_max; ++m)
        report.samples.emplace_back(m, sample(kind, m, m + report.offset, lambda, mu, nu));

    report.onset = detect_onset(report.samples);
    if (report.onset)
        report.stable_value = report.samples.back().second;
    return report;
}

StabilityReport hall_stability_scan(const Partition& lambda, const Partition& mu, const Partition& nu, int m_max)
{
    return stability_scan(lambda, mu, nu, m_max, ScanKind::Hall);
}

} // namespace hlv
