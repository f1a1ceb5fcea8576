#include "skewq/skew_poly.hpp"

#include <algorithm>
#include <cmath>

#include "skewq/errors.hpp"

namespace skewq {

Twist inner_automorphism(const Quaternion& u) {
    const Quaternion uinv = u.inverse();
    return std::make_shared<SigmaDelta>(SigmaDelta{
        [u, uinv](const Quaternion& x) { return u * x * uinv; },
        [](const Quaternion&) { return Quaternion{}; },
        "inner-automorphism"});
}

Twist inner_derivation(const Quaternion& u, const Quaternion& c) {
    const Quaternion uinv = u.inverse();
    return std::make_shared<SigmaDelta>(SigmaDelta{
        [u, uinv](const Quaternion& x) { return u * x * uinv; },
        [u, uinv, c](const Quaternion& x) { return c * x - u * x * uinv * c; },
        "inner-derivation"});
}

Quaternion sd_action(const Quaternion& b, const Quaternion& a, const Twist& twist) {
    if (b.norm2() == 0.0) throw MathError(ErrorKind::ZeroActor, "sd_action: actor is zero");
    const Quaternion binv = b.inverse();
    if (!twist) return b * a * binv;
    return twist->sigma(b) * a * binv + twist->delta(b) * binv;
}

SkewPoly::SkewPoly(std::vector<Quaternion> coeffs, Twist twist)
    : coeffs_(std::move(coeffs)), twist_(std::move(twist)) {
    normalize();
}

SkewPoly SkewPoly::constant(const Quaternion& c, Twist twist) {
    return SkewPoly({c}, std::move(twist));
}

SkewPoly SkewPoly::monomial(const Quaternion& c, int m, Twist twist) {
    std::vector<Quaternion> cs(static_cast<std::size_t>(m) + 1);
    cs.back() = c;
    return SkewPoly(std::move(cs), std::move(twist));
}

SkewPoly SkewPoly::linear(const Quaternion& a, Twist twist) {
    return SkewPoly({-a, Quaternion(1.0)}, std::move(twist));
}

SkewPoly SkewPoly::from_real(const std::vector<double>& coeffs) {
    std::vector<Quaternion> cs(coeffs.begin(), coeffs.end());
    return SkewPoly(std::move(cs));
}

Quaternion SkewPoly::coeff(int m) const {
    if (m < 0 || m > degree()) return {};
    return coeffs_[static_cast<std::size_t>(m)];
}

bool SkewPoly::has_real_coeffs(double tol) const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [tol](const Quaternion& c) { return c.im_norm() <= tol; });
}

double SkewPoly::max_coeff_norm() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, c.norm());
    return m;
}

void SkewPoly::normalize() {
    const double cutoff = 1e-14 * max_coeff_norm();
    while (!coeffs_.empty() && coeffs_.back().norm() <= cutoff) coeffs_.pop_back();
}

SkewPoly SkewPoly::operator-() const {
    std::vector<Quaternion> cs;
    cs.reserve(coeffs_.size());
    for (const auto& c : coeffs_) cs.push_back(-c);
    return SkewPoly(std::move(cs), twist_);
}

namespace {

void check_twists(const SkewPoly& p, const SkewPoly& q) {
    if (p.twist() != q.twist()) {
        throw MathError(ErrorKind::TwistMismatch, "skew polynomials carry different twists");
    }
}

// T * (sum b_n T^n) = sum sigma(b_n) T^(n+1) + delta(b_n) T^n.
std::vector<Quaternion> times_t_left(const std::vector<Quaternion>& b, const SigmaDelta& sd) {
    std::vector<Quaternion> out(b.size() + 1);
    for (std::size_t n = 0; n < b.size(); ++n) {
        out[n + 1] += sd.sigma(b[n]);
        out[n] += sd.delta(b[n]);
    }
    return out;
}

}  // namespace

SkewPoly operator+(const SkewPoly& p, const SkewPoly& q) {
    check_twists(p, q);
    std::vector<Quaternion> cs(std::max(p.coeffs().size(), q.coeffs().size()));
    for (std::size_t m = 0; m < p.coeffs().size(); ++m) cs[m] += p.coeffs()[m];
    for (std::size_t m = 0; m < q.coeffs().size(); ++m) cs[m] += q.coeffs()[m];
    return SkewPoly(std::move(cs), p.twist());
}

SkewPoly operator-(const SkewPoly& p, const SkewPoly& q) { return p + (-q); }

SkewPoly operator*(const Quaternion& c, const SkewPoly& p) {
    std::vector<Quaternion> cs;
    cs.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) cs.push_back(c * a);
    return SkewPoly(std::move(cs), p.twist());
}

SkewPoly poly_mul(const SkewPoly& p, const SkewPoly& q) {
    check_twists(p, q);
    if (p.is_zero() || q.is_zero()) return SkewPoly({}, p.twist());
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    std::vector<Quaternion> out(a.size() + b.size() - 1);
    if (p.untwisted()) {
        for (std::size_t m = 0; m < a.size(); ++m)
            for (std::size_t n = 0; n < b.size(); ++n) out[m + n] += a[m] * b[n];
        return SkewPoly(std::move(out));
    }
    // sum_m a_m (T^m Q), building T^m Q by repeated left multiplication by T.
    std::vector<Quaternion> tq = b;
    for (std::size_t m = 0; m < a.size(); ++m) {
        if (m > 0) tq = times_t_left(tq, *p.twist());
        if (out.size() < tq.size()) out.resize(tq.size());
        for (std::size_t n = 0; n < tq.size(); ++n) out[n] += a[m] * tq[n];
    }
    return SkewPoly(std::move(out), p.twist());
}

Quaternion lam_leroy_eval(const SkewPoly& p, const Quaternion& a) {
    const auto& cs = p.coeffs();
    if (cs.empty()) return {};
    if (p.untwisted()) {
        Quaternion acc = cs.back();
        for (std::size_t m = cs.size() - 1; m-- > 0;) acc = acc * a + cs[m];
        return acc;
    }
    const SigmaDelta& sd = *p.twist();
    Quaternion n_m(1.0);
    Quaternion acc;
    for (std::size_t m = 0; m < cs.size(); ++m) {
        if (m > 0) n_m = sd.sigma(n_m) * a + sd.delta(n_m);
        acc += cs[m] * n_m;
    }
    return acc;
}

RightDivision right_divide(const SkewPoly& p, const Quaternion& a) {
    const auto& cs = p.coeffs();
    if (p.degree() < 1) return {SkewPoly({}, p.twist()), p.coeff(0)};
    const std::size_t n = cs.size() - 1;
    std::vector<Quaternion> q(n);
    if (p.untwisted()) {
        // p_n = b_(n-1), p_m = b_(m-1) - b_m a, p_0 = r - b_0 a.
        q[n - 1] = cs[n];
        for (std::size_t m = n - 1; m >= 1; --m) q[m - 1] = cs[m] + q[m] * a;
        const Quaternion r = cs[0] + q[0] * a;
        return {SkewPoly(std::move(q)), r};
    }
    const SkewPoly divisor = SkewPoly::linear(a, p.twist());
    std::vector<Quaternion> rem = cs;
    for (std::size_t top = n; top >= 1; --top) {
        const Quaternion c = rem[top];
        q[top - 1] = c;
        const SkewPoly sub = poly_mul(SkewPoly::monomial(c, static_cast<int>(top) - 1, p.twist()), divisor);
        for (std::size_t m = 0; m < sub.coeffs().size() && m < top; ++m) rem[m] -= sub.coeffs()[m];
        rem[top] = Quaternion{};
    }
    return {SkewPoly(std::move(q), p.twist()), rem[0]};
}

SkewPoly formal_derivative(const SkewPoly& p) {
    if (p.degree() < 1) return SkewPoly({}, p.twist());
    std::vector<Quaternion> cs(p.coeffs().size() - 1);
    for (std::size_t m = 1; m < p.coeffs().size(); ++m) cs[m - 1] = static_cast<double>(m) * p.coeffs()[m];
    return SkewPoly(std::move(cs), p.twist());
}

OrbitRemainder reduce_mod_orbit(const SkewPoly& p, const Orbit& orbit, double tol) {
    const CharPoly cp = orbit_char_poly(orbit, tol);
    if (cp.degree == 1) return {Quaternion{}, lam_leroy_eval(p, Quaternion(orbit.x0()))};
    std::vector<Quaternion> r = p.coeffs();
    for (std::size_t m = r.size(); m-- > 2;) {
        const Quaternion t = r[m];
        r[m - 1] -= t * cp.c1;
        r[m - 2] -= t * cp.c0;
        r[m] = Quaternion{};
    }
    r.resize(2);
    return {r[1], r[0]};
}

bool has_root_on_orbit(const SkewPoly& p, const Orbit& orbit, double tol) {
    const auto [c, d] = reduce_mod_orbit(p, orbit, tol);
    const double y = 1.0 + orbit.y0();
    double scale = 0.0;
    for (std::size_t m = 0; m < p.coeffs().size(); ++m)
        scale += p.coeffs()[m].norm() * std::pow(y, static_cast<double>(m));
    const double small = 1e-12 * std::max(scale, 1e-300);
    if (orbit.trivial(tol)) return d.norm() <= small;
    if (c.norm() * y <= small) return d.norm() <= small;
    // cq + d = 0 on O iff -c^-1 d is in O; |cq + d| >= |c| dist(-c^-1 d, O).
    const Quaternion z = -(c.inverse() * d);
    const double dist = std::hypot(z.r0 - orbit.x0(), z.im_norm() - orbit.imag_rad());
    return c.norm() * dist <= std::max(small, tol * scale);
}

SkewPoly compose_real(const SkewPoly& p, const SkewPoly& r) {
    if (p.is_zero()) return p;
    const auto& cs = p.coeffs();
    SkewPoly acc = SkewPoly::constant(cs.back());
    for (std::size_t m = cs.size() - 1; m-- > 0;) acc = poly_mul(acc, r) + SkewPoly::constant(cs[m]);
    return acc;
}

}  // namespace skewq
