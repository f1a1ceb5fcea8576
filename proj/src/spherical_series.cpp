#include "skewq/spherical_series.hpp"

#include <algorithm>
#include <cmath>

#include "skewq/errors.hpp"

namespace skewq {

RadiusEstimate radius_estimate(const std::vector<Quaternion>& coeffs) {
    RadiusEstimate est;
    if (coeffs.size() < 2) return est;
    const std::size_t last = coeffs.size() - 1;
    const std::size_t first = std::max<std::size_t>(1, last / 2);
    double limsup = 0.0;
    int nonzero = 0;
    for (std::size_t n = first; n <= last; ++n) {
        const double a = coeffs[n].norm();
        if (a == 0.0) continue;
        ++nonzero;
        limsup = std::max(limsup, std::pow(a, 1.0 / static_cast<double>(n)));
    }
    est.low_confidence = nonzero < 4;
    est.value = limsup == 0.0 ? kInfinity : 1.0 / limsup;
    return est;
}

SphericalSeries::SphericalSeries(Orbit center, std::vector<Quaternion> coeffs,
                                 std::optional<double> declared_radius)
    : center_(center),
      coeffs_(std::move(coeffs)),
      declared_radius_(declared_radius),
      char_poly_(orbit_char_poly(center_)) {}

double SphericalSeries::effective_radius() const {
    if (declared_radius_) return *declared_radius_;
    const RadiusEstimate est = radius_estimate(coeffs_);
    return est.low_confidence ? kInfinity : est.value;
}

bool SphericalSeries::in_region(const Quaternion& q) const {
    return char_poly_.eval(q).norm() < effective_radius();
}

SeriesValue series_eval(const SphericalSeries& s, const Quaternion& q) {
    const Quaternion w = s.char_poly().eval(q);
    const double r = s.effective_radius();
    const double wn = w.norm();
    if (!(wn < r)) {
        throw MathError(ErrorKind::OutsideRegion, "series_eval: |P_O(q)| is not below the radius");
    }
    SeriesValue out;
    const auto& cs = s.coeffs();
    if (cs.empty()) return out;
    // Horner from the right: w commutes with every power of itself.
    Quaternion acc = cs.back();
    for (std::size_t n = cs.size() - 1; n-- > 0;) acc = acc * w + cs[n];
    out.value = acc;
    if (std::isfinite(r)) {
        const double n = static_cast<double>(cs.size() - 1);
        out.tail_bound = cs.back().norm() * std::pow(wn, n) / (1.0 - wn / r);
    }
    return out;
}

}  // namespace skewq
