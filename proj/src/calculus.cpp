#include "skewq/calculus.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "skewq/errors.hpp"
#include "skewq/series_ops.hpp"

namespace skewq {

namespace {

double rel(const Quaternion& a, const Quaternion& b) { return distance(a, b) / std::max(1.0, b.norm()); }

// Directions with |Re u| >= 1/2 keep q0 + eps u off the orbit of q0.
const std::array<Quaternion, 4> kDirections = {
    Quaternion(1.0, 0.0, 0.0, 0.0),
    Quaternion(0.6, 0.8, 0.0, 0.0),
    Quaternion(-0.6, 0.0, 0.8, 0.0),
    Quaternion(0.5, 0.5, 0.5, 0.5),
};

// (F(^x q) - F(q0)) x at q = q0 + eps u, x = (T - q0)^<-1>(q). P_O(q0)(q) is
// expanded around q0 so it carries no cancellation.
Quaternion difference_at(const Expr& f, const Quaternion& q0, const Quaternion& f0, double eps, const Quaternion& u) {
    const Quaternion q = q0 + eps * u;
    if (q0.is_real(0.0)) return (eval(f, q) - f0) * (eps * u).inverse();
    const Quaternion pq = eps * (q0 * u + u * q0 - 2.0 * q0.re() * u) + (eps * eps) * (u * u);
    const Quaternion x = (q - q0.conj()) * pq.inverse();
    return (eval(f, conjugate_action(x, q)) - f0) * x;
}

Quaternion numeric_limit(const Expr& f, const Quaternion& q0, double tol) {
    const Quaternion f0 = eval(f, q0);
    const double scale = std::max(1.0, q0.norm());
    std::array<Quaternion, kDirections.size()> limits;
    for (std::size_t d = 0; d < kDirections.size(); ++d) {
        const Quaternion& u = kDirections[d];
        const double eps[3] = {1e-3 * scale, 1e-4 * scale, 1e-5 * scale};
        Quaternion dv[3];
        for (int k = 0; k < 3; ++k) dv[k] = difference_at(f, q0, f0, eps[k], u);
        const Quaternion r1 = (10.0 * dv[1] - dv[0]) / 9.0;
        const Quaternion r2 = (10.0 * dv[2] - dv[1]) / 9.0;
        if (rel(r1, r2) > std::sqrt(tol)) {
            throw MathError(ErrorKind::NoLimit, "skew derivative: difference quotients do not converge");
        }
        limits[d] = (100.0 * r2 - r1) / 99.0;
    }
    for (std::size_t d = 1; d < limits.size(); ++d) {
        if (rel(limits[d], limits[0]) > tol) {
            throw MathError(ErrorKind::NoLimit, "skew derivative: Richardson extrapolants disagree across directions");
        }
    }
    return limits[0];
}

OrbitAffineData make_dq(const Quaternion& skew, const Quaternion& orbital, const Quaternion& q) {
    if (q.is_real(0.0)) return OrbitAffineData{skew, Quaternion(), Orbit::of(q)};
    return affine_extend(skew, orbital, q);
}

}  // namespace

OrbitAffineData affine_extend(const Quaternion& v1, const Quaternion& v2, const Quaternion& q) {
    if (q.is_real(0.0)) throw MathError(ErrorKind::RealPoint, "affine extension needs a non-real point");
    const Quaternion b = (v1 - v2) * (q - q.conj()).inverse();
    return OrbitAffineData{v1 - b * q, b, Orbit::of(q)};
}

Quaternion orbital_quotient(const Expr& f, const Quaternion& q, const Quaternion& p) {
    return (eval(f, p) - eval(f, q)) * (p - q).inverse();
}

Quaternion orbital_derivative(const Expr& f, const Quaternion& q) {
    if (q.is_real(0.0)) return Quaternion();
    const Quaternion v = orbital_quotient(f, q, q.conj());
    // Second witness: conjugate of q by a rotation about an axis orthogonal to Im q.
    const Quaternion im = q.im();
    const Quaternion e = std::abs(im.r1) < 0.9 * im.norm() ? Quaternion(0, 1, 0, 0) : Quaternion(0, 0, 1, 0);
    const Quaternion w = (im * e).im();
    const Quaternion u = Quaternion(std::cos(0.7)) + std::sin(0.7) / w.norm() * w;
    const Quaternion p = conjugate_action(u, q);
    const Quaternion v2 = orbital_quotient(f, q, p);
    if (distance(v, v2) > 1e-8 * (1.0 + v.norm())) {
        throw MathError(ErrorKind::WitnessDisagreement, "orbital derivative depends on the witness");
    }
    return v;
}

Quaternion orbital_derivative_poly(const SkewPoly& p, const Quaternion& q) {
    const Quaternion qb = q.conj();
    Quaternion total;
    for (int m = 1; m <= p.degree(); ++m) {
        Quaternion inner;
        Quaternion left(1.0);
        for (int k = 0; k < m; ++k) {
            Quaternion right(1.0);
            for (int r = 0; r < m - 1 - k; ++r) right = right * q;
            inner += left * right;
            left = left * qb;
        }
        total += p.coeff(m) * inner;
    }
    return total;
}

std::string_view to_string(DerivativeMethod m) {
    switch (m) {
        case DerivativeMethod::ExactPoly: return "exact-poly";
        case DerivativeMethod::ExactSeries: return "exact-series";
        case DerivativeMethod::NumericLimit: return "numeric-limit";
    }
    return "unknown";
}

std::optional<Expr> derivative_expr(const Expr& f) {
    switch (f.kind()) {
        case ExprKind::Constant: return fx::constant(0.0);
        case ExprKind::Identity: return fx::constant(1.0);
        case ExprKind::Polynomial: return fx::polynomial(formal_derivative(f.poly()));
        case ExprKind::Series: return series_derivative(f.series());
        case ExprKind::Sum: {
            auto a = derivative_expr(f.arg(0));
            auto b = derivative_expr(f.arg(1));
            if (!a || !b) return std::nullopt;
            return fx::sum(*a, *b);
        }
        case ExprKind::SkewProd: {
            auto a = derivative_expr(f.arg(0));
            auto b = derivative_expr(f.arg(1));
            if (!a || !b) return std::nullopt;
            return fx::sum(fx::skew_prod(*a, f.arg(1)), fx::skew_prod(f.arg(0), *b));
        }
        case ExprKind::Scale: {
            auto a = derivative_expr(f.arg(0));
            if (!a) return std::nullopt;
            return fx::scale(f.value(), *a);
        }
        case ExprKind::SkewInvLinear: return fx::scale(-1.0, fx::skew_prod(f, f));
        case ExprKind::SkewInvRealPoly: {
            const Expr dp = fx::polynomial(formal_derivative(f.poly()));
            return fx::scale(-1.0, fx::skew_prod(fx::skew_prod(f, dp), f));
        }
        case ExprKind::Exp: return fx::exp();
        case ExprKind::Log: return fx::skew_inv_linear(0.0);
        case ExprKind::Compose: {
            if (!is_action_preserving(f.arg(1))) return std::nullopt;
            auto a = derivative_expr(f.arg(0));
            auto b = derivative_expr(f.arg(1));
            if (!a || !b) return std::nullopt;
            return fx::skew_prod(fx::compose(*a, f.arg(1)), *b);
        }
        default: return std::nullopt;
    }
}

DerivativeReport skew_derivative(const Expr& f, const Quaternion& q, const DerivativeOptions& opts) {
    DerivativeReport rep;
    rep.point = q;
    const bool trivial = q.is_real(0.0);
    if (!opts.force_numeric) {
        if (auto p = as_polynomial(f)) {
            const SkewPoly quotient = right_divide(*p, q).quotient;
            rep.skew = lam_leroy_eval(quotient, q);
            rep.orbital = trivial ? Quaternion() : lam_leroy_eval(quotient, q.conj());
            rep.method = DerivativeMethod::ExactPoly;
            rep.dq = make_dq(rep.skew, rep.orbital, q);
            return rep;
        }
        if (f.kind() == ExprKind::Series) {
            rep.skew = eval(*derivative_expr(f), q);
            rep.orbital = orbital_derivative(f, q);
            rep.method = DerivativeMethod::ExactSeries;
            rep.dq = make_dq(rep.skew, rep.orbital, q);
            return rep;
        }
    }
    rep.skew = numeric_limit(f, q, opts.limit_tol);
    rep.orbital = orbital_derivative(f, q);
    rep.method = DerivativeMethod::NumericLimit;
    rep.dq = make_dq(rep.skew, rep.orbital, q);
    return rep;
}

double slice_cr_residual(const Expr& f, const Quaternion& q, double h, std::optional<SlicePlane> plane) {
    const SlicePlane pl = plane ? *plane : SlicePlane::through(q);
    const auto [x, y] = pl.coords(q);
    const double floor = 64.0 * 2.220446049250313e-16 * (1.0 + q.norm());
    if (!(h > floor)) throw MathError(ErrorKind::StepUnderflow, "slice CR residual: step too small");
    const Quaternion dx = (eval(f, pl.at(x + h, y)) - eval(f, pl.at(x - h, y))) / (2.0 * h);
    const Quaternion dy = (eval(f, pl.at(x, y + h)) - eval(f, pl.at(x, y - h))) / (2.0 * h);
    return (0.5 * (dx + dy * pl.unit())).norm();
}

Quaternion slice_extension(const SliceFn& f, const SlicePlane& plane, const Quaternion& q) {
    const Orbit o = Orbit::of(q);
    const auto [z, zb] = slice_points(o, plane);
    if (o.trivial()) return f(z);
    const OrbitAffineData d = affine_extend(f(z), f(zb), z);
    return d(q);
}

ChainRuleResiduals chain_rule_check(const Expr& f, const Expr& phi, const Quaternion& q0, int samples,
                                    const DerivativeOptions& opts) {
    const DerivativeReport d1 = skew_derivative(fx::compose(f, phi), q0, opts);
    const DerivativeReport d2 = skew_derivative(f, eval(phi, q0), opts);
    const DerivativeReport d3 = skew_derivative(phi, q0, opts);
    Rng rng(opts.seed);
    ChainRuleResiduals out;
    for (const auto& p : orbit_samples(q0, samples, rng)) {
        const Quaternion lhs = d1.dq_at(p);
        const Quaternion g = d3.dq_at(p);
        const Quaternion rhs = g.is_zero(0.0) ? Quaternion() : d2.dq_at(eval(phi, conjugate_action(g, p))) * g;
        out.dq = std::max(out.dq, rel(lhs, rhs));
    }
    out.orbital = rel(d1.orbital, d2.orbital * d3.orbital);
    return out;
}

double composition_inverse_check(const Expr& phi, const Expr& psi, const Quaternion& q0, int samples,
                                 const DerivativeOptions& opts) {
    const DerivativeReport dphi = skew_derivative(phi, q0, opts);
    const Quaternion y0 = eval(phi, q0);
    const DerivativeReport dpsi = skew_derivative(psi, y0, opts);
    const Quaternion e1 = dpsi.dq_at(y0);
    if (q0.is_real(0.0)) return rel(e1.inverse(), dphi.skew);
    const Quaternion e2 = dpsi.dq_at(eval(phi, q0.conj()));
    const OrbitAffineData e = affine_extend(e1, e2, q0);
    Rng rng(opts.seed);
    double worst = 0.0;
    for (const auto& p : orbit_samples(q0, samples, rng)) {
        worst = std::max(worst, rel(skew_inverse_affine_orbit_eval(e.a, e.b, p), dphi.dq_at(p)));
    }
    return worst;
}

}  // namespace skewq
