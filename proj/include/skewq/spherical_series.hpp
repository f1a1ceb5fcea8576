#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "skewq/orbit.hpp"
#include "skewq/quaternion.hpp"

namespace skewq {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Estimate of R = 1 / limsup |q_n|^(1/n) from a finite coefficient list.
struct RadiusEstimate {
    double value = kInfinity;
    /// Fewer than four nonzero coefficients in the tail window.
    bool low_confidence = true;
};

/// Uses the tail window n in [max(1, N/2), N]; R = 1 / max |q_n|^(1/n) there.
/// Infinite when every tail coefficient vanishes.
RadiusEstimate radius_estimate(const std::vector<Quaternion>& coeffs);

/// Truncated spherical series sum_n q_n P_O(T)^n centered at an orbit.
class SphericalSeries {
public:
    SphericalSeries() = default;
    SphericalSeries(Orbit center, std::vector<Quaternion> coeffs,
                    std::optional<double> declared_radius = std::nullopt);

    const Orbit& center() const { return center_; }
    const std::vector<Quaternion>& coeffs() const { return coeffs_; }
    std::optional<double> declared_radius() const { return declared_radius_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const CharPoly& char_poly() const { return char_poly_; }

    /// Declared radius if present, otherwise the estimate. A low-confidence
    /// estimate is ignored: the finite sum is then exact everywhere.
    double effective_radius() const;

    bool in_region(const Quaternion& q) const;

private:
    Orbit center_;
    std::vector<Quaternion> coeffs_;
    std::optional<double> declared_radius_;
    CharPoly char_poly_;
};

struct SeriesValue {
    Quaternion value;
    /// |q_N| |P_O(q)|^N / (1 - |P_O(q)| / R_eff); zero when R_eff is infinite
    /// and the list has no tail to speak of.
    double tail_bound = 0.0;
};

/// S(q) = sum q_n P_O(q)^n. Throws OutsideRegion unless |P_O(q)| < R_eff.
SeriesValue series_eval(const SphericalSeries& s, const Quaternion& q);

}  // namespace skewq
