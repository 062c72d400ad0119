#pragma once

#include "hlv/symfunc.hpp"

namespace hlv {

enum class SeriesKind { Alpha, Beta };

/// A vertex operator X_z Y_{-1/z}^perp built from two of the series
/// alpha_z, beta_z: mult is the multiplying series X, adj the adjoint one Y.
/// (Alpha, Beta) is Jing's operator H(z), (Beta, Alpha) its dual.
struct VertexSpec {
    SeriesKind mult;
    SeriesKind adj;
    friend bool operator==(const VertexSpec&, const VertexSpec&) = default;
};

inline constexpr VertexSpec kJing{SeriesKind::Alpha, SeriesKind::Beta};
inline constexpr VertexSpec kJingDual{SeriesKind::Beta, SeriesKind::Alpha};

/// Component n: sum_{i>=0} (-1)^i x_{n+i} y_i^perp F, with x, y the
/// coefficient families of mult and adj. The sum stops at i = deg F.
SymFunc generic_vertex(VertexSpec spec, int n, const SymFunc& f);

/// Applies the components lambda_1, ..., lambda_k right to left on 1.
SymFunc iterate(VertexSpec spec, const Composition& lambda);

/// H_n F = sum_i (-1)^i q_{n+i} b_i^perp F.
SymFunc jing_H(int n, const SymFunc& f);
/// Hbar_n F = sum_i (-1)^i b_{n+i} q_i^perp F.
SymFunc jing_Hbar(int n, const SymFunc& f);

/// Row Bernstein operator sum_i (-1)^i h_{n+i} e_i^perp, Hall adjoint.
SymFunc bernstein(int n, const SymFunc& f);
/// Column form sum_i (-1)^i e_{n+i} h_i^perp, Hall adjoint.
SymFunc bernstein_col(int n, const SymFunc& f);

/// Laurent expansion of an operator applied to F, kept on the exponent
/// window [lo, hi]. component() outside the window throws std::out_of_range.
class VertexSeries {
public:
    VertexSeries(int lo, int hi, LaurentZ series) : lo_(lo), hi_(hi), series_(std::move(series)) {}

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    const LaurentZ& series() const { return series_; }
    SymFunc component(int n) const;

private:
    int lo_;
    int hi_;
    LaurentZ series_;
};

/// X_z Y_{-1/z}^perp F on [lo, hi]: the adjoint factor is evaluated as a
/// plethystic translation of X (F[X - 1/z] for beta, F[X + (-1/z)] for
/// alpha), then multiplied by the mult series.
VertexSeries vertex_series(VertexSpec spec, const SymFunc& f, int lo, int hi);

/// The dual Jing operator H*(z) = exp(-sum (1-t^n)/n p_n z^n) exp(sum (1-t^n)/n p_n^perp z^{-n})
/// applied to F on [lo, hi], built directly from its exponential form.
VertexSeries dual_jing_series(const SymFunc& f, int lo, int hi);

} // namespace hlv
