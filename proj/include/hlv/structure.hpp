#pragma once

#include "hlv/symfunc.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace hlv {

/// Coefficients a_lambda with Q_mu Q_nu = sum a_lambda Q_lambda. Every
/// coefficient must be a polynomial in t; IntegrityError otherwise.
std::map<Partition, TRational> product_expand_Q(const Partition& mu, const Partition& nu);

/// (Q_{lambda/mu}, Q_nu), unnormalized.
TRational f_inner(const Partition& lambda, const Partition& mu, const Partition& nu);

/// f^lambda_{mu nu}(t): the coefficient of Q_nu in Q_{lambda/mu}, i.e.
/// f_inner / c_nu(t).
TRational f_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

/// g^lambda_{mu nu}(t) = t^{eps(lambda)-eps(mu)-eps(nu)} f^lambda_{mu nu}(1/t).
/// Zero unless |lambda| = |mu| + |nu|. Throws IntegrityError unless the
/// result is a polynomial with integer coefficients.
TPoly hall_g(const Partition& lambda, const Partition& mu, const Partition& nu);

enum class ScanKind {
    Skew,  ///< (Q_{(m,lambda)}, Q_mu Q_{(n,nu)})
    SkewB, ///< (B_{(m,lambda)}, B_mu B_{(n,nu)}), B from the dual vertex route
    Hall,  ///< g^{(m,lambda)}_{mu,(n,nu)}(t)
};

struct StabilityReport {
    Partition lambda;
    Partition mu;
    Partition nu;
    ScanKind kind = ScanKind::Skew;
    int offset = 0; ///< |lambda| - |mu| - |nu|; n = m + offset
    std::vector<std::pair<int, TRational>> samples;
    std::optional<int> onset;
    std::optional<TRational> stable_value;
    int theorem_bound = 0; ///< mu_1 + nu_1 + offset

    /// Largest onset accepted for this scan kind: theorem_bound + 1 for the
    /// skew scans. Hall scans use the larger of that, separation_limit, and
    /// the first m where c_{(n,nu)} and eps((n,nu)) have settled
    /// (n > nu_1, m >= lambda_1).
    int onset_limit() const;
    bool stabilized_within_bound() const { return onset && *onset <= onset_limit(); }
};

/// mu_1 + nu_1 + |lambda| - |mu| - |nu|.
int theorem_bound(const Partition& lambda, const Partition& mu, const Partition& nu);
/// mu_1 + nu_1 + 1: from this m on, every skew Q_{(n,nu)/(i)} met in the
/// skew scan satisfies the separation lemma, so the sequence is constant.
/// Exceeds theorem_bound + 1 when |lambda| < |mu| + |nu|.
int separation_limit(const Partition& mu, const Partition& nu);
/// Same value as StabilityReport::onset_limit, available before scanning.
int onset_limit(ScanKind kind, const Partition& lambda, const Partition& mu, const Partition& nu);

/// Samples needed past the onset before a value is declared stable.
inline constexpr int kStableRun = 3;

/// Least sampled m from which every later sample agrees, provided at least
/// kStableRun samples follow it.
std::optional<int> detect_onset(const std::vector<std::pair<int, TRational>>& samples);

/// First m sampled by the scans. Skew scans start at -|lambda| - 1, below
/// which Q_{(m,lambda)} vanishes; Hall scans start at the first m with
/// (m,lambda) and (n,nu) both partitions.
int scan_start(ScanKind kind, const Partition& lambda, const Partition& mu, const Partition& nu);

/// Samples m = scan_start .. m_max. Throws std::invalid_argument when
/// m_max < theorem_bound + 3.
StabilityReport stability_scan(const Partition& lambda, const Partition& mu, const Partition& nu, int m_max,
                               ScanKind kind = ScanKind::Skew);

/// Same as stability_scan with ScanKind::Hall.
StabilityReport hall_stability_scan(const Partition& lambda, const Partition& mu, const Partition& nu, int m_max);

} // namespace hlv
