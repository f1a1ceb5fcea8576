#include "skewq/quaternion.hpp"

#include <algorithm>
#include <numbers>
#include <utility>

#include "skewq/errors.hpp"

namespace skewq {

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '[' << q.r0 << ", " << q.r1 << ", " << q.r2 << ", " << q.r3 << ']';
}

Quaternion conjugate_action(const Quaternion& p, const Quaternion& q) {
    if (p.norm2() == 0.0) {
        throw MathError(ErrorKind::ZeroActor, "conjugate_action: actor is zero");
    }
    return p * q * p.inverse();
}

Quaternion commutator_conjugate(const Quaternion& p, const Quaternion& q, double tol) {
    const Quaternion c = p * q - q * p;
    if (c.norm() <= tol * (1.0 + p.norm() * q.norm())) {
        throw MathError(ErrorKind::Commuting, "commutator_conjugate: p and q commute");
    }
    return c * q * c.inverse();
}

namespace {

Quaternion basis(int m) {
    Quaternion e;
    switch (m) {
        case 0: e.r0 = 1; break;
        case 1: e.r1 = 1; break;
        case 2: e.r2 = 1; break;
        default: e.r3 = 1; break;
    }
    return e;
}

std::array<double, 4> components(const Quaternion& q) { return {q.r0, q.r1, q.r2, q.r3}; }

}  // namespace

Mat4 left_matrix(const Quaternion& a) {
    Mat4 m{};
    for (int col = 0; col < 4; ++col) {
        const auto c = components(a * basis(col));
        for (int row = 0; row < 4; ++row) m[row][col] = c[row];
    }
    return m;
}

Mat4 right_matrix(const Quaternion& a) {
    Mat4 m{};
    for (int col = 0; col < 4; ++col) {
        const auto c = components(basis(col) * a);
        for (int row = 0; row < 4; ++row) m[row][col] = c[row];
    }
    return m;
}

Quaternion solve_affine_unit(const Quaternion& a, const Quaternion& b, const Quaternion& p) {
    // Column m of the system matrix is a*e_m + b*e_m*p.
    Mat4 m{};
    for (int col = 0; col < 4; ++col) {
        const Quaternion e = basis(col);
        const auto c = components(a * e + b * e * p);
        for (int row = 0; row < 4; ++row) m[row][col] = c[row];
    }
    std::array<double, 4> rhs{1.0, 0.0, 0.0, 0.0};

    const double scale = std::pow(a.norm() + b.norm() * p.norm(), 4);
    double det = 1.0;
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int row = col + 1; row < 4; ++row) {
            if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
        }
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            std::swap(rhs[pivot], rhs[col]);
            det = -det;
        }
        det *= m[col][col];
        if (m[col][col] == 0.0) break;
        for (int row = col + 1; row < 4; ++row) {
            const double f = m[row][col] / m[col][col];
            for (int k = col; k < 4; ++k) m[row][k] -= f * m[col][k];
            rhs[row] -= f * rhs[col];
        }
    }
    if (!(std::abs(det) >= 1e-12 * scale) || scale == 0.0) {
        throw MathError(ErrorKind::SingularSystem,
                        "solve_affine_unit: x -> ax + bxp is singular (a + bq vanishes on O(p))");
    }
    std::array<double, 4> x{};
    for (int row = 3; row >= 0; --row) {
        double s = rhs[row];
        for (int k = row + 1; k < 4; ++k) s -= m[row][k] * x[k];
        x[row] = s / m[row][row];
    }
    return {x[0], x[1], x[2], x[3]};
}

Quaternion qexp(const Quaternion& q) {
    const double v = q.im_norm();
    const double ea = std::exp(q.r0);
    if (v == 0.0) return Quaternion(ea);
    const double s = ea * std::sin(v) / v;
    return {ea * std::cos(v), s * q.r1, s * q.r2, s * q.r3};
}

Quaternion qlog(const Quaternion& q, double tol) {
    const double v = q.im_norm();
    if (v <= tol && q.r0 <= 0.0) {
        throw MathError(ErrorKind::BranchCut, "qlog: argument on the closed negative real axis");
    }
    const double n = q.norm();
    if (v == 0.0) return Quaternion(std::log(q.r0));
    // Angle in (0, pi) for non-real arguments.
    const double theta = std::atan2(v, q.r0);
    const double s = theta / v;
    return {std::log(n), s * q.r1, s * q.r2, s * q.r3};
}

Quaternion random_quaternion(Rng& rng, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    const double a = u(rng);
    const double b = u(rng);
    const double c = u(rng);
    const double d = u(rng);
    return {a, b, c, d};
}

Quaternion random_unit_imaginary(Rng& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    for (;;) {
        const double a = n(rng);
        const double b = n(rng);
        const double c = n(rng);
        const Quaternion v{0.0, a, b, c};
        const double len = v.norm();
        if (len > 1e-6) return v / len;
    }
}

}  // namespace skewq
