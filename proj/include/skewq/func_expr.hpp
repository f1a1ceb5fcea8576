#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewq/orbit.hpp"
#include "skewq/quaternion.hpp"
#include "skewq/skew_poly.hpp"
#include "skewq/spherical_series.hpp"

namespace skewq {

enum class ExprKind {
    Constant,
    Identity,
    Conjugation,
    OrbitConstant,
    Polynomial,
    Series,
    Sum,
    SkewProd,
    RightSkewProd,
    SkewInvLinear,
    SkewInvRealPoly,
    SkewInvAffineOrbit,
    RightSkewInvLinear,
    Compose,
    Exp,
    Log,
    Scale,
};

/// A function of (x0, y0) = (Re q, |q|): constant on every orbit.
using OrbitFn = std::function<Quaternion(double, double)>;

/// Immutable, shareable expression tree for a quaternion-valued function.
class Expr {
public:
    struct Node {
        ExprKind kind = ExprKind::Identity;
        Quaternion q;  // Constant value, Scale factor, or q0 of a linear inverse
        std::optional<SkewPoly> poly;
        std::optional<SphericalSeries> series;
        OrbitFn orbit_fn;
        std::string label;
        std::vector<Expr> args;
    };

    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    ExprKind kind() const { return node_->kind; }
    const Node& node() const { return *node_; }
    const Quaternion& value() const { return node_->q; }
    const SkewPoly& poly() const { return *node_->poly; }
    const SphericalSeries& series() const { return *node_->series; }
    const std::vector<Expr>& args() const { return node_->args; }
    const Expr& arg(std::size_t n) const { return node_->args.at(n); }

    Quaternion operator()(const Quaternion& q) const;

private:
    std::shared_ptr<const Node> node_;
};

std::string_view to_string(ExprKind kind);

/// Node constructors.
namespace fx {
Expr constant(const Quaternion& c);
Expr identity();
Expr conjugation();
Expr orbit_constant(OrbitFn fn, std::string label = "orbit-constant");
/// Untwisted polynomials only.
Expr polynomial(SkewPoly p);
Expr series(SphericalSeries s);
Expr sum(Expr f, Expr g);
Expr skew_prod(Expr f, Expr g);
Expr right_skew_prod(Expr f, Expr g);
Expr skew_inv_linear(const Quaternion& q0);
/// Requires real coefficients.
Expr skew_inv_real_poly(SkewPoly p);
Expr skew_inv_affine_orbit(Expr f);
Expr right_skew_inv_linear(const Quaternion& q0);
/// outer(inner(q)); `inner` is expected to be action-preserving.
Expr compose(Expr outer, Expr inner);
Expr exp();
Expr log();
Expr scale(const Quaternion& a, Expr f);
}  // namespace fx

inline Expr operator+(Expr f, Expr g) { return fx::sum(std::move(f), std::move(g)); }
inline Expr operator-(Expr f, Expr g) { return fx::sum(std::move(f), fx::scale(-1.0, std::move(g))); }

/// Evaluates F at q. Domain failures raise MathError whose path names the
/// failing subexpression.
Quaternion eval(const Expr& f, const Quaternion& q);

/// Structural sufficient condition for phi(pqp^-1) = p phi(q) p^-1.
bool is_action_preserving(const Expr& f);

/// Reduces F to an untwisted polynomial when it is built from constants,
/// T, polynomials, sums, scales, skew products and compositions with
/// real-coefficient polynomials.
std::optional<SkewPoly> as_polynomial(const Expr& f);

/// Domain summary computed bottom-up.
struct Domain {
    std::vector<Orbit> pole_orbits;
    /// Series regions |P_O(q)| < R.
    std::vector<std::pair<Orbit, double>> regions;
    bool branch_cut = false;
    /// Exclusions under a composition or general skew inverse, not tracked.
    bool opaque = false;

    bool contains(const Quaternion& q, double tol = kDefaultTol) const;
};
Domain domain(const Expr& f);

// Skew inverses with closed forms or finite solves.

/// (T - q0)^<-1>(q) = (q - conj q0)(q^2 - 2Re(q0) q + |q0|^2)^-1; solves xq - q0x = 1.
/// Throws PoleOrbit on O(q0).
Quaternion skew_inverse_linear_eval(const Quaternion& q0, const Quaternion& q);
/// (q^2 - 2Re(q0) q + |q0|^2)^-1 (q - conj q0); solves qx - xq0 = 1.
Quaternion right_skew_inverse_linear_eval(const Quaternion& q0, const Quaternion& q);
/// P(q)^-1 for real-coefficient P. Throws PoleOrbit when q is in Z(P).
Quaternion skew_inverse_real_poly_eval(const SkewPoly& p, const Quaternion& q);
/// Skew inverse of q -> a + bq on O(p), evaluated at p.
Quaternion skew_inverse_affine_orbit_eval(const Quaternion& a, const Quaternion& b, const Quaternion& p);
/// The unique q with (T - q0)^<-1>(q) = x, i.e. q = x^-1 q0 x + x^-1.
/// Throws ExcludedImagePoint for x = 0 or Re(x) = 0 with Re(q0 x) = -1/2.
Quaternion invertibility_roundtrip(const Quaternion& q0, const Quaternion& x, double tol = kDefaultTol);

/// Left-affine data a + bq of a skew-convex F on the orbit of q, fitted from
/// F(q) and F(conj q). Trivial orbits give b = 0.
std::pair<Quaternion, Quaternion> orbit_affine_fit(const Expr& f, const Quaternion& q);

struct SkewConvexityOptions {
    int samples = 256;
    int pairs = 16;
    double tol = 1e-8;
    std::uint64_t seed = 0;
    /// Sample points are drawn from [-radius, radius]^4.
    double radius = 2.0;
};

struct SkewConvexity {
    bool convex = true;
    double max_residual = 0.0;
    int checked = 0;
    int skipped = 0;
};

/// Samples F◇(a+b) - F◇a - F◇b at random points and constants.
SkewConvexity is_skew_convex(const Expr& f, const SkewConvexityOptions& opts = {});

}  // namespace skewq
