#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "skewq/orbit.hpp"
#include "skewq/quaternion.hpp"

namespace skewq {

/// An endomorphism sigma of H together with a sigma-derivation delta.
/// Callables must be pure. Twists compare by identity.
struct SigmaDelta {
    std::function<Quaternion(const Quaternion&)> sigma;
    std::function<Quaternion(const Quaternion&)> delta;
    std::string label;
};

using Twist = std::shared_ptr<const SigmaDelta>;

/// sigma(x) = u x u^-1, delta = 0.
Twist inner_automorphism(const Quaternion& u);
/// sigma(x) = u x u^-1, delta(x) = c x - sigma(x) c (an inner sigma-derivation).
Twist inner_derivation(const Quaternion& u, const Quaternion& c);

/// (sigma, delta)-action  ^b a = sigma(b) a b^-1 + delta(b) b^-1.
/// A null twist gives ordinary conjugation. Throws ZeroActor for b = 0.
Quaternion sd_action(const Quaternion& b, const Quaternion& a, const Twist& twist = nullptr);

/// Polynomial sum_m a_m T^m with left coefficients in H[T; sigma, delta].
/// A null twist means T is central.
class SkewPoly {
public:
    SkewPoly() = default;
    explicit SkewPoly(std::vector<Quaternion> coeffs, Twist twist = nullptr);

    static SkewPoly constant(const Quaternion& c, Twist twist = nullptr);
    /// c T^m
    static SkewPoly monomial(const Quaternion& c, int m, Twist twist = nullptr);
    /// T - a
    static SkewPoly linear(const Quaternion& a, Twist twist = nullptr);
    static SkewPoly from_real(const std::vector<double>& coeffs);

    const std::vector<Quaternion>& coeffs() const { return coeffs_; }
    const Twist& twist() const { return twist_; }
    bool untwisted() const { return twist_ == nullptr; }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Quaternion coeff(int m) const;
    Quaternion leading() const { return is_zero() ? Quaternion{} : coeffs_.back(); }
    bool has_real_coeffs(double tol = 0.0) const;
    double max_coeff_norm() const;

    SkewPoly operator-() const;

private:
    void normalize();

    std::vector<Quaternion> coeffs_;
    Twist twist_;
};

SkewPoly operator+(const SkewPoly& p, const SkewPoly& q);
SkewPoly operator-(const SkewPoly& p, const SkewPoly& q);
/// Left scalar multiple c*P.
SkewPoly operator*(const Quaternion& c, const SkewPoly& p);

/// Ring product using T a = sigma(a) T + delta(a). Throws TwistMismatch.
SkewPoly poly_mul(const SkewPoly& p, const SkewPoly& q);
inline SkewPoly operator*(const SkewPoly& p, const SkewPoly& q) { return poly_mul(p, q); }

/// P(a): sum a_m N_m(a) with N_0 = 1, N_{m+1} = sigma(N_m) a + delta(N_m);
/// sum a_m a^m when untwisted.
Quaternion lam_leroy_eval(const SkewPoly& p, const Quaternion& a);

struct RightDivision {
    SkewPoly quotient;
    Quaternion remainder;
};

/// P = Q (T - a) + r. Synthetic division when untwisted, long division otherwise.
RightDivision right_divide(const SkewPoly& p, const Quaternion& a);

/// Formal derivative sum m a_m T^(m-1) of an untwisted polynomial.
SkewPoly formal_derivative(const SkewPoly& p);

/// Remainder c T + d of an untwisted P modulo the orbit polynomial P_O
/// (or the constant P(r) for a trivial orbit {r}, returned as c = 0).
struct OrbitRemainder {
    Quaternion c;
    Quaternion d;
};
OrbitRemainder reduce_mod_orbit(const SkewPoly& p, const Orbit& orbit, double tol = kDefaultTol);

/// True iff P vanishes somewhere on the orbit. Uses the remainder cT + d:
/// the zero -c^-1 d must lie on O, or c = d = 0 (a sphere of zeros).
bool has_root_on_orbit(const SkewPoly& p, const Orbit& orbit, double tol = kDefaultTol);

/// Composition P(R(T)) for untwisted P and real-coefficient R.
SkewPoly compose_real(const SkewPoly& p, const SkewPoly& r);

}  // namespace skewq
