#pragma once

#include <vector>

#include "skewq/func_expr.hpp"
#include "skewq/spherical_series.hpp"

namespace skewq {

/// S'(T) = sum_n n q_n P_O(T)^(n-1) P_O'(T), built as
/// (sum_n (n+1) q_(n+1) P_O^n) ◇ P_O'. P_O' = 2T - 2x0, or 1 for a trivial center.
Expr series_derivative(const SphericalSeries& s);

struct DqDecomposition {
    /// E = sum_n q_n P_n(T), with S = S(q0) + E◇(T - q0).
    SkewPoly e_poly;
    Expr e = fx::constant(0.0);
    Quaternion s_at_q0;
    /// max |S(q) - S(q0) - (E◇(T - q0))(q)| over the supplied points.
    double max_residual = 0.0;
    /// Largest per-point bound N |q_N| |q + q0 - 2x0| m^(N-1) / (1 - m/R) on the
    /// first omitted term family; zero for an exact finite series.
    double tail_bound = 0.0;
};

/// Builds E through P_1 = L, P_(n+1) = P_O(q0)^n L + P_O(T) P_n, where
/// L = T + q0 - 2x0 (or 1 for a trivial center). Throws OutsideRegion
/// unless q0 lies strictly inside the region of convergence.
DqDecomposition series_dq_decomposition(const SphericalSeries& s, const Quaternion& q0,
                                        const std::vector<Quaternion>& sample_points = {});

/// Partial sum of sum_(n=0..terms-1) P_O(q)^(-n-1) (q + p - 2x0) P_O(p)^n.
/// Requires p not on O and |P_O(p)| < |P_O(q)|; throws OutsideAnnulus otherwise.
SeriesValue right_skew_inverse_series(const Quaternion& p, const Orbit& orbit, const Quaternion& q,
                                      int terms = 32);

}  // namespace skewq
