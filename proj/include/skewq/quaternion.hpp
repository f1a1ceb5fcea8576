#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

namespace skewq {

/// Absolute tolerance used by orbit membership and equality tests.
inline constexpr double kDefaultTol = 1e-9;

/// A real quaternion r0 + r1 i + r2 j + r3 k.
struct Quaternion {
    double r0 = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double a, double b, double c, double d) : r0(a), r1(b), r2(c), r3(d) {}
    // Reals embed as the center of H.
    constexpr Quaternion(double a) : r0(a) {}  // NOLINT(google-explicit-constructor)

    static constexpr Quaternion i() { return {0, 1, 0, 0}; }
    static constexpr Quaternion j() { return {0, 0, 1, 0}; }
    static constexpr Quaternion k() { return {0, 0, 0, 1}; }

    constexpr double re() const { return r0; }
    constexpr Quaternion im() const { return {0, r1, r2, r3}; }
    constexpr Quaternion conj() const { return {r0, -r1, -r2, -r3}; }
    constexpr double norm2() const { return r0 * r0 + r1 * r1 + r2 * r2 + r3 * r3; }
    double norm() const { return std::sqrt(norm2()); }
    double im_norm() const { return std::sqrt(r1 * r1 + r2 * r2 + r3 * r3); }

    /// Multiplicative inverse; the zero quaternion maps to NaNs.
    Quaternion inverse() const {
        const double n2 = norm2();
        return {r0 / n2, -r1 / n2, -r2 / n2, -r3 / n2};
    }

    bool is_real(double tol = kDefaultTol) const { return im_norm() <= tol; }
    bool is_zero(double tol = 0.0) const { return norm() <= tol; }

    constexpr Quaternion operator-() const { return {-r0, -r1, -r2, -r3}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        r0 += o.r0; r1 += o.r1; r2 += o.r2; r3 += o.r3;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        r0 -= o.r0; r1 -= o.r1; r2 -= o.r2; r3 -= o.r3;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        r0 *= s; r1 *= s; r2 *= s; r3 *= s;
        return *this;
    }
    constexpr Quaternion& operator/=(double s) {
        r0 /= s; r1 /= s; r2 /= s; r3 /= s;
        return *this;
    }

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

/// Hamilton product.
constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) {
    return {a.r0 * b.r0 - a.r1 * b.r1 - a.r2 * b.r2 - a.r3 * b.r3,
            a.r0 * b.r1 + a.r1 * b.r0 + a.r2 * b.r3 - a.r3 * b.r2,
            a.r0 * b.r2 - a.r1 * b.r3 + a.r2 * b.r0 + a.r3 * b.r1,
            a.r0 * b.r3 + a.r1 * b.r2 - a.r2 * b.r1 + a.r3 * b.r0};
}

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return mul(a, b); }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

inline double distance(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

inline bool approx_equal(const Quaternion& a, const Quaternion& b, double tol = kDefaultTol) {
    return distance(a, b) <= tol;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// The action pqp^-1 of H* on H. Throws ZeroActor when p = 0.
Quaternion conjugate_action(const Quaternion& p, const Quaternion& q);

/// Conjugation of q by the commutator pq - qp; always equals conj(q).
/// Throws Commuting when pq = qp (up to `tol`).
Quaternion commutator_conjugate(const Quaternion& p, const Quaternion& q, double tol = 1e-14);

/// Unique x with a*x + b*x*p = 1, solved as a 4x4 real system with partial
/// pivoting. Throws SingularSystem when the map x -> ax + bxp is (numerically)
/// not injective, i.e. |det| < 1e-12 * (|a| + |b||p|)^4.
Quaternion solve_affine_unit(const Quaternion& a, const Quaternion& b, const Quaternion& p);

/// Quaternionic exponential.
Quaternion qexp(const Quaternion& q);

/// Principal logarithm. Throws BranchCut on the closed negative real axis
/// (including 0).
Quaternion qlog(const Quaternion& q, double tol = 0.0);

/// Real-linear matrices of x -> a*x and x -> x*a, column m = image of e_m.
using Mat4 = std::array<std::array<double, 4>, 4>;
Mat4 left_matrix(const Quaternion& a);
Mat4 right_matrix(const Quaternion& a);

/// Random helpers used by property checks. Deterministic for a given engine state.
using Rng = std::mt19937_64;
Quaternion random_quaternion(Rng& rng, double scale = 1.0);
Quaternion random_unit_imaginary(Rng& rng);

}  // namespace skewq
