#pragma once

#include <utility>
#include <vector>

#include "skewq/quaternion.hpp"

namespace skewq {

/// Conjugacy class {q : Re(q) = x0, |q| = y0} of H* acting on H.
class Orbit {
public:
    Orbit() = default;
    /// Throws DomainError when y0 < |x0| beyond `tol`.
    Orbit(double x0, double y0, double tol = kDefaultTol);

    static Orbit of(const Quaternion& q);

    double x0() const { return x0_; }
    double y0() const { return y0_; }
    /// sqrt(y0^2 - x0^2), clamped at 0 within the construction tolerance.
    double imag_rad() const { return imag_rad_; }

    bool trivial(double tol = kDefaultTol) const { return imag_rad_ <= tol; }
    bool contains(const Quaternion& q, double tol = kDefaultTol) const;

    /// A canonical point x0 + imag_rad * i of the orbit.
    Quaternion representative() const { return {x0_, imag_rad_, 0.0, 0.0}; }

private:
    double x0_ = 0.0;
    double y0_ = 0.0;
    double imag_rad_ = 0.0;
};

/// Pole-orbit membership test used by the function engine:
/// |Re(q) - x0| and ||q| - y0| both below tol * (1 + y0).
bool near_orbit(const Orbit& orbit, const Quaternion& q, double tol = kDefaultTol);

/// Characteristic polynomial of an orbit with real coefficients:
/// T^2 + c1 T + c0 for nontrivial orbits, T + c0 for trivial ones.
struct CharPoly {
    int degree = 2;
    double c1 = 0.0;
    double c0 = 0.0;

    Quaternion eval(const Quaternion& q) const {
        return degree == 1 ? q + c0 : q * q + c1 * q + c0;
    }
    /// Formal derivative evaluated at q.
    Quaternion derivative(const Quaternion& q) const {
        return degree == 1 ? Quaternion(1.0) : 2.0 * q + c1;
    }
};

CharPoly orbit_char_poly(const Orbit& orbit, double tol = kDefaultTol);

/// The commutative plane R + R I with I^2 = -1.
class SlicePlane {
public:
    SlicePlane() = default;
    /// Normalizes the imaginary part of `unit`; throws DomainError if it is zero.
    explicit SlicePlane(const Quaternion& unit);

    /// Plane through a non-real q; throws RealPoint for real q.
    static SlicePlane through(const Quaternion& q);

    const Quaternion& unit() const { return unit_; }
    Quaternion at(double x, double y) const { return Quaternion(x) + y * unit_; }
    /// Coordinates (x, y) of a point assumed to lie in the plane.
    std::pair<double, double> coords(const Quaternion& q) const;

private:
    Quaternion unit_ = Quaternion::i();
};

/// O ∩ (R + R I) = {x0 + r I, x0 - r I}; equal points for trivial orbits.
std::pair<Quaternion, Quaternion> slice_points(const Orbit& orbit, const SlicePlane& plane);

/// `count` deterministic points of the orbit of q: q, conj(q), then conjugates
/// of q by random units.
std::vector<Quaternion> orbit_samples(const Quaternion& q, int count, Rng& rng);

}  // namespace skewq
