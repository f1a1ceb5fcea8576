#include "skewq/series_ops.hpp"

#include <algorithm>
#include <cmath>

#include "skewq/errors.hpp"

namespace skewq {

namespace {

std::optional<double> inherited_radius(const SphericalSeries& s) {
    if (s.declared_radius()) return s.declared_radius();
    const double r = s.effective_radius();
    return std::isfinite(r) ? std::optional<double>(r) : std::nullopt;
}

SkewPoly char_poly_as_skew(const CharPoly& cp) {
    if (cp.degree == 1) return SkewPoly::from_real({cp.c0, 1.0});
    return SkewPoly::from_real({cp.c0, cp.c1, 1.0});
}

}  // namespace

Expr series_derivative(const SphericalSeries& s) {
    const auto& cs = s.coeffs();
    if (cs.size() < 2) return fx::constant(0.0);
    std::vector<Quaternion> shifted(cs.size() - 1);
    for (std::size_t n = 0; n + 1 < cs.size(); ++n) shifted[n] = static_cast<double>(n + 1) * cs[n + 1];
    Expr tilde = fx::series(SphericalSeries(s.center(), std::move(shifted), inherited_radius(s)));
    const CharPoly& cp = s.char_poly();
    if (cp.degree == 1) return tilde;
    // P_O' is real, so it commutes with q and the skew product is pointwise.
    return fx::skew_prod(std::move(tilde), fx::polynomial(SkewPoly::from_real({cp.c1, 2.0})));
}

DqDecomposition series_dq_decomposition(const SphericalSeries& s, const Quaternion& q0,
                                        const std::vector<Quaternion>& sample_points) {
    const double radius = s.effective_radius();
    const CharPoly& cp = s.char_poly();
    const Quaternion w0 = cp.eval(q0);
    if (!(w0.norm() < radius)) {
        throw MathError(ErrorKind::OutsideRegion, "dq decomposition: q0 is outside the region of convergence");
    }
    const double x0 = s.center().x0();
    const SkewPoly pO = char_poly_as_skew(cp);
    // P_O(T) - P_O(q0) = L (T - q0)
    const SkewPoly l = cp.degree == 1 ? SkewPoly::constant(1.0) : SkewPoly({q0 - 2.0 * x0, Quaternion(1.0)});

    DqDecomposition out;
    out.s_at_q0 = series_eval(s, q0).value;
    const auto& cs = s.coeffs();
    SkewPoly e;
    SkewPoly pn = l;        // P_1
    Quaternion w0n = w0;    // P_O(q0)^1
    for (std::size_t n = 1; n < cs.size(); ++n) {
        e = e + cs[n] * pn;
        pn = w0n * l + poly_mul(pO, pn);
        w0n = w0n * w0;
    }
    out.e_poly = e;
    out.e = fx::polynomial(e);

    const Expr recon = fx::skew_prod(out.e, fx::polynomial(SkewPoly::linear(q0)));
    const std::size_t big_n = cs.empty() ? 0 : cs.size() - 1;
    for (const auto& q : sample_points) {
        const Quaternion lhs = series_eval(s, q).value - out.s_at_q0;
        out.max_residual = std::max(out.max_residual, (lhs - eval(recon, q)).norm());
        if (std::isfinite(radius) && big_n > 0) {
            const double m = std::max(cp.eval(q).norm(), w0.norm());
            const double lq = cp.degree == 1 ? 1.0 : (q + q0 - 2.0 * x0).norm();
            const double b = static_cast<double>(big_n) * cs.back().norm() * lq *
                             std::pow(m, static_cast<double>(big_n) - 1.0) / (1.0 - m / radius);
            out.tail_bound = std::max(out.tail_bound, b);
        }
    }
    return out;
}

SeriesValue right_skew_inverse_series(const Quaternion& p, const Orbit& orbit, const Quaternion& q, int terms) {
    const CharPoly cp = orbit_char_poly(orbit);
    const Quaternion wq = cp.eval(q);
    const Quaternion wp = cp.eval(p);
    if (orbit.contains(p) || !(wp.norm() < wq.norm())) {
        throw MathError(ErrorKind::OutsideAnnulus, "right inverse series needs |P_O(p)| < |P_O(q)|");
    }
    const Quaternion l = cp.degree == 1 ? Quaternion(1.0) : q + p - 2.0 * orbit.x0();
    const Quaternion winv = wq.inverse();
    SeriesValue out;
    Quaternion left = winv;     // P_O(q)^(-n-1)
    Quaternion right(1.0);      // P_O(p)^n
    Quaternion term;
    for (int n = 0; n < terms; ++n) {
        term = left * l * right;
        out.value += term;
        left = left * winv;
        right = right * wp;
    }
    const double ratio = wp.norm() / wq.norm();
    out.tail_bound = terms > 0 ? term.norm() * ratio / (1.0 - ratio) : kInfinity;
    return out;
}

}  // namespace skewq
