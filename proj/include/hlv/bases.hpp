#pragma once

#include "hlv/symfunc.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace hlv {

/// One-row generator families, each the z^n coefficient of an exponential
/// generating series exp(sum_k w_k p_k z^k / k):
///   H (sigma_z): w_k = 1            E (lambda_z): w_k = (-1)^{k-1}
///   Q (alpha_z): w_k = 1 - t^k      B (beta_z):   w_k = (-1)^{k-1}(1 - t^k)
///   QPrime (kappa_z = sigma_z lambda_z): w_k = 1 - (-1)^k
enum class Family { H, E, Q, B, QPrime };

/// Coefficient of z^n in exp(sum_{k>=1} weight(k) p_k z^k / k), via the
/// recurrence n a_n = sum_k weight(k) p_k a_{n-k}. Zero for n < 0.
SymFunc exp_series_coefficient(const std::function<TRational(int)>& weight, int n);

/// Memoized generator of the family; 0 for n < 0 and 1 for n = 0.
const SymFunc& generator(Family family, int n);
/// prod_i generator(family, index_i); zero when any part is negative.
SymFunc generator_product(Family family, const Composition& index);

inline const SymFunc& gen_h(int n) { return generator(Family::H, n); }
inline const SymFunc& gen_e(int n) { return generator(Family::E, n); }
inline const SymFunc& gen_q(int n) { return generator(Family::Q, n); }
inline const SymFunc& gen_b(int n) { return generator(Family::B, n); }
inline const SymFunc& gen_qprime(int n) { return generator(Family::QPrime, n); }

using SymMatrix = std::vector<std::vector<SymFunc>>;

/// Division-free Laplace expansion, memoized on column subsets.
SymFunc determinant(const SymMatrix& matrix);
/// Expansion along the first row, memoized on index subsets. Odd size gives 0.
SymFunc pfaffian(const SymMatrix& matrix);

/// Jacobi-Trudi: det(h_{lambda_i - i + j}).
SymFunc schur(const Composition& lambda);

/// The skew-symmetric matrix M(lambda) over q'_n, padded to even size with a zero part.
SymMatrix schurQ_matrix(const Composition& lambda);
/// Schur's Q-function Q'_lambda = Pf M(lambda).
SymFunc schurQ(const Composition& lambda);

/// Hall-Littlewood Q_lambda by iterating Jing operators on 1 (memoized).
const SymFunc& hl_Q(const Composition& lambda);
/// B_lambda = omega(Q_lambda).
SymFunc hl_B(const Composition& lambda);
/// B_lambda by iterating the dual operators on 1 (memoized).
const SymFunc& hl_B_vertex(const Composition& lambda);

/// prod_{i<j} (1 - R_ij)/(1 - t R_ij) applied to the index, as a map from the
/// sorted surviving generator index to its coefficient. Each factor is
/// expanded as 1 + sum_{k=1}^{cap} (t^k - t^{k-1}) R_ij^k; the default cap is
/// the sum of the positive parts. Indices with a negative part are dropped.
std::map<Partition, TPoly> raising_expansion(const Composition& lambda, std::optional<long> cap = std::nullopt);

/// The raising-operator expansion applied to q_lambda (Q) or b_lambda (B).
SymFunc hl_Q_raising(const Composition& lambda, std::optional<long> cap = std::nullopt);
SymFunc hl_B_raising(const Composition& lambda, std::optional<long> cap = std::nullopt);

/// Q_{lambda/mu} = Q_mu^perp Q_lambda / c_mu(t).
SymFunc skew_Q(const Partition& lambda, const Partition& mu);
/// B_{lambda/mu} = omega(Q_{lambda/mu}).
SymFunc skew_B(const Partition& lambda, const Partition& mu);

} // namespace hlv
