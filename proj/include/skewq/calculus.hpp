#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "skewq/func_expr.hpp"
#include "skewq/orbit.hpp"
#include "skewq/quaternion.hpp"
#include "skewq/skew_poly.hpp"

namespace skewq {

/// F(p) = a + b p on an orbit.
struct OrbitAffineData {
    Quaternion a;
    Quaternion b;
    Orbit orbit;

    Quaternion operator()(const Quaternion& p) const { return a + b * p; }
};

/// Solves a + b q = v1, a + b conj(q) = v2. Throws RealPoint for real q.
OrbitAffineData affine_extend(const Quaternion& v1, const Quaternion& v2, const Quaternion& q);

/// (F(p) - F(q))(p - q)^-1 over the orbit of q, checked against a second
/// witness. Zero on trivial orbits. Throws WitnessDisagreement when the two
/// witnesses differ by more than 1e-8 (1 + |value|).
Quaternion orbital_derivative(const Expr& f, const Quaternion& q);

/// Same quotient from an explicit witness p on O(q), p != q.
Quaternion orbital_quotient(const Expr& f, const Quaternion& q, const Quaternion& p);

/// sum_m q_m sum_k conj(q)^k q^(m-1-k).
Quaternion orbital_derivative_poly(const SkewPoly& p, const Quaternion& q);

enum class DerivativeMethod { ExactPoly, ExactSeries, NumericLimit };
std::string_view to_string(DerivativeMethod m);

struct DerivativeReport {
    Quaternion point;
    Quaternion skew;     ///< F'(q)
    Quaternion orbital;  ///< F^o(q)
    DerivativeMethod method = DerivativeMethod::NumericLimit;
    /// D_q(F) restricted to O(q): F'(q) + (F'(q) - F^o(q))(q - conj q)^-1 (p - q).
    OrbitAffineData dq;

    Quaternion dq_at(const Quaternion& p) const { return dq(p); }
};

struct DerivativeOptions {
    bool force_numeric = false;
    /// Relative agreement required between the extrapolated limits of the four
    /// directions; successive first-level extrapolants must agree to sqrt(limit_tol).
    double limit_tol = 1e-6;
    std::uint64_t seed = 0;
};

/// Skew derivative and the orbit restriction of D_q(F). Exact for
/// polynomial expressions (right division) and series nodes (term-wise);
/// otherwise the limit of (F - F(q))◇(T - q)^<-1> at q + eps u is
/// Richardson-extrapolated over eps in {1e-3, 1e-4, 1e-5} (two levels) and four directions.
/// Throws NoLimit when those disagree.
DerivativeReport skew_derivative(const Expr& f, const Quaternion& q, const DerivativeOptions& opts = {});

/// Closed-form skew derivative as an expression, when the tree is built
/// from nodes with term-wise rules (sum, product, inverse and series rules).
std::optional<Expr> derivative_expr(const Expr& f);

/// |(1/2)(dF/dx + dF/dy I)| at q = x + yI by central differences.
/// Real q needs an explicit plane. Throws StepUnderflow for steps too small
/// to resolve at |q|.
double slice_cr_residual(const Expr& f, const Quaternion& q, double h = 1e-5,
                         std::optional<SlicePlane> plane = std::nullopt);

/// Function on a slice plane, used by slice_extension.
using SliceFn = std::function<Quaternion(const Quaternion&)>;

/// Value at q of the orbit-affine extension of f from the slice points of O(q).
Quaternion slice_extension(const SliceFn& f, const SlicePlane& plane, const Quaternion& q);

struct ChainRuleResiduals {
    double dq = 0.0;       ///< max over orbit samples of the D_q identity
    double orbital = 0.0;  ///< (F∘phi)^o(q0) vs F^o(phi(q0)) phi^o(q0)
};

/// Compares D_q0(F∘phi) with (D_phi(q0)(F)∘phi)◇D_q0(phi) on O(q0).
ChainRuleResiduals chain_rule_check(const Expr& f, const Expr& phi, const Quaternion& q0, int samples = 8,
                                    const DerivativeOptions& opts = {});

/// Compares D_q0(phi) with (D_phi(q0)(psi)∘phi)^<-1> on O(q0), where psi∘phi = id.
double composition_inverse_check(const Expr& phi, const Expr& psi, const Quaternion& q0, int samples = 8,
                                 const DerivativeOptions& opts = {});

}  // namespace skewq
