#include "skewq/contour.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "skewq/errors.hpp"

namespace skewq {

namespace {

void require_winding(const Contour& c, const Quaternion& point, const char* what) {
    if (c.winding(point) != 1) {
        throw MathError(ErrorKind::BadWinding, std::string("contour must wind once around ") + what);
    }
}

void require_admissible(const Expr& f, const Contour& c, const Quaternion& p) {
    const auto [a, b] = slice_points(Orbit::of(p), c.slice());
    require_winding(c, a, "the slice points of O(p)");
    require_winding(c, b, "the slice points of O(p)");
    for (const auto& o : domain(f).pole_orbits) {
        const auto [u, v] = slice_points(o, c.slice());
        if (c.winding(u) != 0 || c.winding(v) != 0) {
            throw MathError(ErrorKind::BadWinding, "contour encloses a pole orbit of F");
        }
    }
}

Quaternion integrate(const Expr& f, const Contour& c, const Expr& kernel) {
    Quaternion total;
    for (const auto& node : c.quadrature()) total += eval(f, node.q) * node.weight * eval(kernel, node.q);
    return total;
}

}  // namespace

Contour::Contour(SlicePlane slice, std::vector<Circle> circles, int nodes_per_circle)
    : slice_(std::move(slice)), circles_(std::move(circles)), nodes_(nodes_per_circle) {
    if (nodes_ < 8) throw MathError(ErrorKind::DomainError, "contour needs at least 8 nodes per circle");
    for (const auto& k : circles_) {
        if (!(k.radius > 0.0)) throw MathError(ErrorKind::DomainError, "circle radius must be positive");
        if (k.orient != 1 && k.orient != -1) throw MathError(ErrorKind::DomainError, "orientation must be +1 or -1");
    }
}

int Contour::winding(double x, double y) const {
    int w = 0;
    for (const auto& k : circles_) {
        const double d = std::hypot(x - k.cx, y - k.cy);
        if (std::abs(d - k.radius) <= 1e-12 * (1.0 + k.radius)) {
            throw MathError(ErrorKind::BadWinding, "point lies on the contour");
        }
        if (d < k.radius) w += k.orient;
    }
    return w;
}

int Contour::winding(const Quaternion& q) const {
    const auto [x, y] = slice_.coords(q);
    return winding(x, y);
}

std::vector<Contour::Node> Contour::quadrature() const {
    std::vector<Node> out;
    out.reserve(circles_.size() * static_cast<std::size_t>(nodes_));
    const double step = 2.0 * std::numbers::pi / nodes_;
    for (const auto& k : circles_) {
        const Quaternion center = slice_.at(k.cx, k.cy);
        for (int n = 0; n < nodes_; ++n) {
            const double t = k.orient * step * n;
            const Quaternion q = slice_.at(k.cx + k.radius * std::cos(t), k.cy + k.radius * std::sin(t));
            out.push_back({q, (k.orient / static_cast<double>(nodes_)) * (q - center), center});
        }
    }
    return out;
}

Contour orbit_circles(const Orbit& orbit, const SlicePlane& slice, double radius, int nodes) {
    std::vector<Circle> cs{{orbit.x0(), orbit.imag_rad(), radius, 1}};
    if (!orbit.trivial()) cs.push_back({orbit.x0(), -orbit.imag_rad(), radius, 1});
    return Contour(slice, std::move(cs), nodes);
}

Quaternion line_integral(const Expr& f, const Expr& g, const Contour& c) {
    // dq = 2pi I (-I dq)/(2pi) = 2pi I weight
    const Quaternion scale = 2.0 * std::numbers::pi * c.slice().unit();
    Quaternion total;
    for (const auto& node : c.quadrature()) {
        total += eval(f, node.q) * (scale * node.weight) * eval(g, node.q);
    }
    return total;
}

Quaternion cauchy_eval(const Expr& f, const Contour& c, const Quaternion& p) {
    require_admissible(f, c, p);
    return integrate(f, c, fx::right_skew_inv_linear(p));
}

Quaternion orbital_via_integral(const Expr& f, const Contour& c, const Quaternion& p) {
    require_admissible(f, c, p);
    const Orbit o = Orbit::of(p);
    if (o.trivial()) return Quaternion();
    const CharPoly cp = orbit_char_poly(o);
    return integrate(f, c, fx::skew_inv_real_poly(SkewPoly::from_real({cp.c0, cp.c1, 1.0})));
}

Quaternion higher_derivative(const Expr& f, const Contour& c, const Quaternion& p, int n) {
    if (n < 0) throw MathError(ErrorKind::DomainError, "derivative order must be non-negative");
    require_admissible(f, c, p);
    const Expr r = fx::right_skew_inv_linear(p);
    Expr kernel = r;
    double fact = 1.0;
    for (int k = 1; k <= n; ++k) {
        kernel = fx::right_skew_prod(kernel, r);
        fact *= k;
    }
    return fact * integrate(f, c, kernel);
}

Quaternion Extraction::operator()(const Quaternion& q) const {
    Quaternion v = series_eval(s1, q).value;
    if (!s2.coeffs().empty()) v += series_eval(s2, q).value * q;
    return v;
}

Extraction spherical_coeff_extract(const Expr& f, const Orbit& orbit, const Contour& c, int order) {
    if (order < 0) throw MathError(ErrorKind::DomainError, "extraction order must be non-negative");
    const auto [a, b] = slice_points(orbit, c.slice());
    require_winding(c, a, "the slice points of O");
    if (!orbit.trivial()) require_winding(c, b, "the slice points of O");
    const CharPoly cp = orbit_char_poly(orbit);
    const bool trivial = cp.degree == 1;
    const std::size_t count = static_cast<std::size_t>(order) + 1;
    std::vector<Quaternion> c1(count), c2(trivial ? 0 : count);
    double radius = kInfinity;
    for (const auto& node : c.quadrature()) {
        const Quaternion w = cp.eval(node.q);
        radius = std::min(radius, w.norm());
        const Quaternion winv = w.inverse();
        const Quaternion fw = eval(f, node.q) * node.weight;
        Quaternion pw = winv;  // P_O^(-n-1)
        const Quaternion shift = node.q - 2.0 * orbit.x0();
        for (std::size_t n = 0; n < count; ++n) {
            if (trivial) {
                c1[n] += fw * pw;
            } else {
                c1[n] += fw * pw * shift;
                c2[n] += fw * pw;
            }
            pw = pw * winv;
        }
    }
    Extraction out;
    out.radius = radius;
    out.s1 = SphericalSeries(orbit, std::move(c1), radius);
    out.s2 = SphericalSeries(orbit, std::move(c2), radius);
    return out;
}

}  // namespace skewq
