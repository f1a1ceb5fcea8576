#include "skewq/orbit.hpp"

#include <cmath>

#include "skewq/errors.hpp"

namespace skewq {

Orbit::Orbit(double x0, double y0, double tol) : x0_(x0), y0_(y0) {
    const double d = y0 * y0 - x0 * x0;
    if (y0 < 0.0 || d < -tol * (1.0 + y0 * y0)) {
        throw MathError(ErrorKind::DomainError, "Orbit: norm must be at least |re|");
    }
    imag_rad_ = d > 0.0 ? std::sqrt(d) : 0.0;
}

Orbit Orbit::of(const Quaternion& q) {
    Orbit o;
    o.x0_ = q.r0;
    o.y0_ = q.norm();
    o.imag_rad_ = q.im_norm();
    return o;
}

bool Orbit::contains(const Quaternion& q, double tol) const {
    return std::abs(q.r0 - x0_) <= tol && std::abs(q.norm() - y0_) <= tol;
}

bool near_orbit(const Orbit& orbit, const Quaternion& q, double tol) {
    const double t = tol * (1.0 + orbit.y0());
    return std::abs(q.r0 - orbit.x0()) < t && std::abs(q.norm() - orbit.y0()) < t;
}

CharPoly orbit_char_poly(const Orbit& orbit, double tol) {
    if (orbit.trivial(tol)) return {1, 0.0, -orbit.x0()};
    return {2, -2.0 * orbit.x0(), orbit.y0() * orbit.y0()};
}

SlicePlane::SlicePlane(const Quaternion& unit) {
    const Quaternion v = unit.im();
    const double n = v.norm();
    if (n == 0.0) throw MathError(ErrorKind::DomainError, "SlicePlane: unit must be non-real");
    unit_ = v / n;
}

SlicePlane SlicePlane::through(const Quaternion& q) {
    if (q.im_norm() == 0.0) {
        throw MathError(ErrorKind::RealPoint, "SlicePlane: a real point lies in every slice");
    }
    return SlicePlane(q);
}

std::pair<double, double> SlicePlane::coords(const Quaternion& q) const {
    const double y = q.r1 * unit_.r1 + q.r2 * unit_.r2 + q.r3 * unit_.r3;
    return {q.r0, y};
}

std::pair<Quaternion, Quaternion> slice_points(const Orbit& orbit, const SlicePlane& plane) {
    return {plane.at(orbit.x0(), orbit.imag_rad()), plane.at(orbit.x0(), -orbit.imag_rad())};
}

std::vector<Quaternion> orbit_samples(const Quaternion& q, int count, Rng& rng) {
    std::vector<Quaternion> out;
    out.reserve(static_cast<std::size_t>(count));
    if (count > 0) out.push_back(q);
    if (count > 1) out.push_back(q.conj());
    while (static_cast<int>(out.size()) < count) {
        const Quaternion p = random_quaternion(rng, 1.0);
        if (p.norm() < 1e-3) continue;
        out.push_back(conjugate_action(p, q));
    }
    return out;
}

}  // namespace skewq
