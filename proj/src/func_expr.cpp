#include "skewq/func_expr.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>

#include "skewq/errors.hpp"

namespace skewq {

std::string_view to_string(ExprKind kind) {
    switch (kind) {
        case ExprKind::Constant: return "const";
        case ExprKind::Identity: return "id";
        case ExprKind::Conjugation: return "conj";
        case ExprKind::OrbitConstant: return "orbitconst";
        case ExprKind::Polynomial: return "poly";
        case ExprKind::Series: return "series";
        case ExprKind::Sum: return "sum";
        case ExprKind::SkewProd: return "skewprod";
        case ExprKind::RightSkewProd: return "rskewprod";
        case ExprKind::SkewInvLinear: return "skewinv_linear";
        case ExprKind::SkewInvRealPoly: return "skewinv_realpoly";
        case ExprKind::SkewInvAffineOrbit: return "skewinv_affine";
        case ExprKind::RightSkewInvLinear: return "rskewinv_linear";
        case ExprKind::Compose: return "compose";
        case ExprKind::Exp: return "exp";
        case ExprKind::Log: return "log";
        case ExprKind::Scale: return "scale";
    }
    return "?";
}

Quaternion Expr::operator()(const Quaternion& q) const { return eval(*this, q); }

namespace fx {
namespace {

Expr make(Expr::Node node) { return Expr(std::make_shared<const Expr::Node>(std::move(node))); }

Expr::Node node_of(ExprKind kind) {
    Expr::Node n;
    n.kind = kind;
    return n;
}

}  // namespace

Expr constant(const Quaternion& c) {
    auto n = node_of(ExprKind::Constant);
    n.q = c;
    return make(std::move(n));
}

Expr identity() { return make(node_of(ExprKind::Identity)); }
Expr conjugation() { return make(node_of(ExprKind::Conjugation)); }

Expr orbit_constant(OrbitFn fn, std::string label) {
    auto n = node_of(ExprKind::OrbitConstant);
    n.orbit_fn = std::move(fn);
    n.label = std::move(label);
    return make(std::move(n));
}

Expr polynomial(SkewPoly p) {
    if (!p.untwisted()) {
        throw MathError(ErrorKind::TwistMismatch, "polynomial nodes take untwisted polynomials");
    }
    auto n = node_of(ExprKind::Polynomial);
    n.poly = std::move(p);
    return make(std::move(n));
}

Expr series(SphericalSeries s) {
    auto n = node_of(ExprKind::Series);
    n.series = std::move(s);
    return make(std::move(n));
}

namespace {
Expr binary(ExprKind kind, Expr f, Expr g) {
    auto n = node_of(kind);
    n.args = {std::move(f), std::move(g)};
    return make(std::move(n));
}
}  // namespace

Expr sum(Expr f, Expr g) { return binary(ExprKind::Sum, std::move(f), std::move(g)); }
Expr skew_prod(Expr f, Expr g) { return binary(ExprKind::SkewProd, std::move(f), std::move(g)); }
Expr right_skew_prod(Expr f, Expr g) { return binary(ExprKind::RightSkewProd, std::move(f), std::move(g)); }
Expr compose(Expr outer, Expr inner) { return binary(ExprKind::Compose, std::move(outer), std::move(inner)); }

Expr skew_inv_linear(const Quaternion& q0) {
    auto n = node_of(ExprKind::SkewInvLinear);
    n.q = q0;
    return make(std::move(n));
}

Expr right_skew_inv_linear(const Quaternion& q0) {
    auto n = node_of(ExprKind::RightSkewInvLinear);
    n.q = q0;
    return make(std::move(n));
}

Expr skew_inv_real_poly(SkewPoly p) {
    if (!p.untwisted() || !p.has_real_coeffs() || p.is_zero()) {
        throw MathError(ErrorKind::DomainError, "skewinv_realpoly needs a nonzero real-coefficient polynomial");
    }
    auto n = node_of(ExprKind::SkewInvRealPoly);
    n.poly = std::move(p);
    return make(std::move(n));
}

Expr skew_inv_affine_orbit(Expr f) {
    auto n = node_of(ExprKind::SkewInvAffineOrbit);
    n.args = {std::move(f)};
    return make(std::move(n));
}

Expr exp() { return make(node_of(ExprKind::Exp)); }
Expr log() { return make(node_of(ExprKind::Log)); }

Expr scale(const Quaternion& a, Expr f) {
    auto n = node_of(ExprKind::Scale);
    n.q = a;
    n.args = {std::move(f)};
    return make(std::move(n));
}

}  // namespace fx

// ---------------------------------------------------------------------------
// Closed-form skew inverses

Quaternion skew_inverse_linear_eval(const Quaternion& q0, const Quaternion& q) {
    if (near_orbit(Orbit::of(q0), q)) {
        throw MathError(ErrorKind::PoleOrbit, "(T - q0)^<-1>: point lies on the orbit of q0");
    }
    const Quaternion p = q * q - 2.0 * q0.re() * q + q0.norm2();
    return (q - q0.conj()) * p.inverse();
}

Quaternion right_skew_inverse_linear_eval(const Quaternion& q0, const Quaternion& q) {
    if (near_orbit(Orbit::of(q0), q)) {
        throw MathError(ErrorKind::PoleOrbit, "(T - q0)^<-1>_r: point lies on the orbit of q0");
    }
    const Quaternion p = q * q - 2.0 * q0.re() * q + q0.norm2();
    return p.inverse() * (q - q0.conj());
}

Quaternion skew_inverse_real_poly_eval(const SkewPoly& p, const Quaternion& q) {
    if (has_root_on_orbit(p, Orbit::of(q))) {
        throw MathError(ErrorKind::PoleOrbit, "P^<-1>: P has a zero on the orbit of the point");
    }
    return lam_leroy_eval(p, q).inverse();
}

Quaternion skew_inverse_affine_orbit_eval(const Quaternion& a, const Quaternion& b, const Quaternion& p) {
    return solve_affine_unit(a, b, p);
}

Quaternion invertibility_roundtrip(const Quaternion& q0, const Quaternion& x, double tol) {
    if (x.norm() <= tol) {
        throw MathError(ErrorKind::ExcludedImagePoint, "roundtrip: x = 0 is not a value of the skew inverse");
    }
    if (std::abs(x.re()) <= tol && std::abs((q0 * x).re() + 0.5) <= tol) {
        throw MathError(ErrorKind::ExcludedImagePoint,
                        "roundtrip: Re(x) = 0 and Re(q0 x) = -1/2 lies outside the image");
    }
    const Quaternion xinv = x.inverse();
    return xinv * q0 * x + xinv;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

Quaternion eval_child(const Expr& f, const Quaternion& q, std::string_view segment) {
    try {
        return eval(f, q);
    } catch (const MathError& e) {
        throw e.nested(segment);
    }
}

Quaternion eval_node(const Expr& f, const Quaternion& q) {
    const auto& n = f.node();
    switch (n.kind) {
        case ExprKind::Constant: return n.q;
        case ExprKind::Identity: return q;
        case ExprKind::Conjugation: return q.conj();
        case ExprKind::OrbitConstant: return n.orbit_fn(q.re(), q.norm());
        case ExprKind::Polynomial: return lam_leroy_eval(*n.poly, q);
        case ExprKind::Series: return series_eval(*n.series, q).value;
        case ExprKind::Sum:
            return eval_child(n.args[0], q, ".args[0]") + eval_child(n.args[1], q, ".args[1]");
        case ExprKind::SkewProd: {
            const Quaternion g = eval_child(n.args[1], q, ".args[1]");
            if (g.norm2() == 0.0) return {};
            return eval_child(n.args[0], g * q * g.inverse(), ".args[0]") * g;
        }
        case ExprKind::RightSkewProd: {
            const Quaternion v = eval_child(n.args[0], q, ".args[0]");
            if (v.norm2() == 0.0) return {};
            return v * eval_child(n.args[1], v.inverse() * q * v, ".args[1]");
        }
        case ExprKind::SkewInvLinear: return skew_inverse_linear_eval(n.q, q);
        case ExprKind::RightSkewInvLinear: return right_skew_inverse_linear_eval(n.q, q);
        case ExprKind::SkewInvRealPoly: return skew_inverse_real_poly_eval(*n.poly, q);
        case ExprKind::SkewInvAffineOrbit: {
            std::pair<Quaternion, Quaternion> ab;
            try {
                ab = orbit_affine_fit(n.args[0], q);
            } catch (const MathError& e) {
                throw e.nested(".arg");
            }
            if (Orbit::of(q).trivial()) {
                const Quaternion v = ab.first + ab.second * q;
                if (v.norm2() == 0.0) {
                    throw MathError(ErrorKind::SingularSystem, "skew inverse: function vanishes at a real point");
                }
                return v.inverse();
            }
            return skew_inverse_affine_orbit_eval(ab.first, ab.second, q);
        }
        case ExprKind::Compose: {
            const Quaternion inner = eval_child(n.args[1], q, ".inner");
            return eval_child(n.args[0], inner, ".outer");
        }
        case ExprKind::Exp: return qexp(q);
        case ExprKind::Log: return qlog(q);
        case ExprKind::Scale: return n.q * eval_child(n.args[0], q, ".arg");
    }
    return {};
}

}  // namespace

Quaternion eval(const Expr& f, const Quaternion& q) {
    try {
        return eval_node(f, q);
    } catch (const MathError& e) {
        if (!e.path().empty()) throw;
        throw MathError(e.kind(), e.what(), "$");
    }
}

std::pair<Quaternion, Quaternion> orbit_affine_fit(const Expr& f, const Quaternion& q) {
    const Quaternion v1 = eval(f, q);
    if (Orbit::of(q).trivial()) return {v1, Quaternion{}};
    const Quaternion qb = q.conj();
    const Quaternion v2 = eval(f, qb);
    const Quaternion b = (v1 - v2) * (q - qb).inverse();
    return {v1 - b * q, b};
}

// ---------------------------------------------------------------------------
// Structure queries

bool is_action_preserving(const Expr& f) {
    const auto& n = f.node();
    switch (n.kind) {
        case ExprKind::Identity:
        case ExprKind::Conjugation:
        case ExprKind::Exp:
        case ExprKind::Log:
        case ExprKind::SkewInvRealPoly: return true;
        case ExprKind::Constant:
        case ExprKind::Scale:
            if (n.q.im_norm() != 0.0) return false;
            return n.kind == ExprKind::Constant || is_action_preserving(n.args[0]);
        case ExprKind::Polynomial: return n.poly->has_real_coeffs();
        case ExprKind::Series:
            return n.series->center().trivial() &&
                   std::all_of(n.series->coeffs().begin(), n.series->coeffs().end(),
                               [](const Quaternion& c) { return c.im_norm() == 0.0; });
        case ExprKind::Sum:
        case ExprKind::SkewProd:
        case ExprKind::RightSkewProd:
        case ExprKind::Compose:
            return is_action_preserving(n.args[0]) && is_action_preserving(n.args[1]);
        case ExprKind::SkewInvLinear:
        case ExprKind::RightSkewInvLinear: return n.q.im_norm() == 0.0;
        default: return false;
    }
}

std::optional<SkewPoly> as_polynomial(const Expr& f) {
    const auto& n = f.node();
    switch (n.kind) {
        case ExprKind::Constant: return SkewPoly::constant(n.q);
        case ExprKind::Identity: return SkewPoly::linear(Quaternion{});
        case ExprKind::Polynomial: return *n.poly;
        case ExprKind::Sum:
        case ExprKind::SkewProd: {
            auto a = as_polynomial(n.args[0]);
            auto b = as_polynomial(n.args[1]);
            if (!a || !b) return std::nullopt;
            return n.kind == ExprKind::Sum ? *a + *b : poly_mul(*a, *b);
        }
        case ExprKind::Scale: {
            auto a = as_polynomial(n.args[0]);
            if (!a) return std::nullopt;
            return n.q * *a;
        }
        case ExprKind::Compose: {
            auto outer = as_polynomial(n.args[0]);
            auto inner = as_polynomial(n.args[1]);
            if (!outer || !inner || !inner->has_real_coeffs()) return std::nullopt;
            return compose_real(*outer, *inner);
        }
        default: return std::nullopt;
    }
}

namespace {

std::vector<Orbit> real_poly_root_orbits(const SkewPoly& p) {
    std::vector<Orbit> out;
    const int deg = p.degree();
    if (deg < 1) return out;
    // Companion matrix of the monic polynomial.
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(deg, deg);
    const double lead = p.leading().re();
    for (int m = 0; m < deg; ++m) c(0, m) = -p.coeff(deg - 1 - m).re() / lead;
    for (int m = 1; m < deg; ++m) c(m, m - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(c, false);
    for (int m = 0; m < deg; ++m) {
        const std::complex<double> z = solver.eigenvalues()[m];
        if (z.imag() < 0.0) continue;  // conjugate pairs share an orbit
        out.emplace_back(z.real(), std::abs(z), 1e-6);
    }
    return out;
}

void collect(const Expr& f, Domain& d) {
    const auto& n = f.node();
    switch (n.kind) {
        case ExprKind::SkewInvLinear:
        case ExprKind::RightSkewInvLinear: d.pole_orbits.push_back(Orbit::of(n.q)); break;
        case ExprKind::SkewInvRealPoly: {
            auto orbits = real_poly_root_orbits(*n.poly);
            d.pole_orbits.insert(d.pole_orbits.end(), orbits.begin(), orbits.end());
            break;
        }
        case ExprKind::Series: {
            const double r = n.series->effective_radius();
            if (std::isfinite(r)) d.regions.emplace_back(n.series->center(), r);
            break;
        }
        case ExprKind::Log: d.branch_cut = true; break;
        case ExprKind::SkewInvAffineOrbit: d.opaque = true; collect(n.args[0], d); break;
        case ExprKind::Compose: {
            // Exclusions of the outer function live in the image of the inner one.
            Domain outer;
            collect(n.args[0], outer);
            if (!outer.pole_orbits.empty() || !outer.regions.empty() || outer.branch_cut || outer.opaque)
                d.opaque = true;
            collect(n.args[1], d);
            break;
        }
        case ExprKind::SkewProd:
        case ExprKind::RightSkewProd: {
            // The left factor is evaluated at conjugates of q: same orbit, same exclusions.
            collect(n.args[0], d);
            collect(n.args[1], d);
            break;
        }
        default:
            for (const auto& a : n.args) collect(a, d);
            break;
    }
}

}  // namespace

Domain domain(const Expr& f) {
    Domain d;
    collect(f, d);
    return d;
}

bool Domain::contains(const Quaternion& q, double tol) const {
    for (const auto& o : pole_orbits)
        if (near_orbit(o, q, tol)) return false;
    for (const auto& [o, r] : regions)
        if (!(orbit_char_poly(o).eval(q).norm() < r)) return false;
    if (branch_cut && q.im_norm() == 0.0 && q.re() <= 0.0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Skew convexity sampling

SkewConvexity is_skew_convex(const Expr& f, const SkewConvexityOptions& opts) {
    Rng rng(opts.seed);
    SkewConvexity out;
    // (F◇c)(q) = F(c q c^-1) c for a constant c.
    auto times_const = [&](const Quaternion& q, const Quaternion& c) -> Quaternion {
        if (c.norm2() == 0.0) return {};
        return eval(f, c * q * c.inverse()) * c;
    };
    for (int s = 0; s < opts.samples; ++s) {
        const Quaternion q = random_quaternion(rng, opts.radius);
        for (int t = 0; t < opts.pairs; ++t) {
            const Quaternion a = random_quaternion(rng, 1.0);
            const Quaternion b = random_quaternion(rng, 1.0);
            try {
                const Quaternion fa = times_const(q, a);
                const Quaternion fb = times_const(q, b);
                const Quaternion fab = times_const(q, a + b);
                const double scale = std::max(1.0, fa.norm() + fb.norm());
                const double r = (fab - fa - fb).norm() / scale;
                out.max_residual = std::max(out.max_residual, r);
                ++out.checked;
            } catch (const MathError&) {
                ++out.skipped;
            }
        }
    }
    out.convex = out.checked > 0 && out.max_residual < opts.tol;
    return out;
}

}  // namespace skewq
