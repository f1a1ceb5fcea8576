#include "skewq/errors.hpp"
#include "skewq/func_expr.hpp"
#include "support.hpp"

using namespace skewq;
using namespace skewq::test;

namespace {

// Direct definition of the left skew product, independent of the engine.
Quaternion skew_direct(const Expr& f, const Expr& g, const Quaternion& a) {
    const Quaternion ga = eval(g, a);
    if (ga.is_zero()) return {};
    return eval(f, ga * a * ga.inverse()) * ga;
}

}  // namespace

TEST_CASE("skew product examples") {
    const Quaternion v = eval(fx::skew_prod(fx::identity(), fx::constant(J)), I);
    CHECK_QNEAR(v, -K, 1e-15);
    CHECK_QNEAR(eval(fx::skew_prod(fx::exp(), fx::constant(0.0)), I + J), Quaternion(), 0.0);
    const Expr jt = fx::polynomial(SkewPoly::monomial(J, 1));
    CHECK_QNEAR(eval(fx::skew_prod(jt, jt), I), Quaternion(1.0), 1e-15);
}

TEST_CASE("skew product of polynomials is the ring product") {
    Rng rng(31);
    for (int n = 0; n < 300; ++n) {
        std::vector<Quaternion> a(1 + rng() % 4), b(1 + rng() % 4);
        for (auto& x : a) x = random_quaternion(rng);
        for (auto& x : b) x = random_quaternion(rng);
        const SkewPoly p(a), q(b);
        const Quaternion z = random_quaternion(rng);
        const Quaternion lhs = eval(fx::skew_prod(fx::polynomial(p), fx::polynomial(q)), z);
        CHECK_QNEAR(lhs, lam_leroy_eval(poly_mul(p, q), z), 1e-10 * std::max(1.0, lhs.norm()));
        CHECK_QNEAR(lhs, skew_direct(fx::polynomial(p), fx::polynomial(q), z), 1e-10 * std::max(1.0, lhs.norm()));
    }
}

TEST_CASE("near-ring laws on mixed atoms") {
    Rng rng(32);
    auto atom = [&](int k) {
        switch (k % 4) {
            case 0: return fx::constant(random_quaternion(rng));
            case 1: return fx::polynomial(SkewPoly({random_quaternion(rng), random_quaternion(rng)}));
            case 2: {
                const Quaternion c = random_quaternion(rng);
                return fx::orbit_constant([c](double x, double y) { return (x + y) * c; });
            }
            default: return fx::identity();
        }
    };
    for (int n = 0; n < 500; ++n) {
        const Expr f = atom(rng() % 4), g = atom(rng() % 4), h = atom(rng() % 4);
        const Quaternion q = random_quaternion(rng);
        const Quaternion a = eval(fx::skew_prod(fx::skew_prod(f, g), h), q);
        const Quaternion b = eval(fx::skew_prod(f, fx::skew_prod(g, h)), q);
        CHECK_QNEAR(a, b, 1e-10 * std::max(1.0, a.norm()));
        const Quaternion c = eval(fx::skew_prod(f + g, h), q);
        const Quaternion d = eval(fx::skew_prod(f, h) + fx::skew_prod(g, h), q);
        CHECK_QNEAR(c, d, 1e-10 * std::max(1.0, c.norm()));
    }
}

TEST_CASE("skew_inverse_linear_eval") {
    CHECK_QNEAR(skew_inverse_linear_eval(I, 2.0 * I), -I, 1e-15);
    CHECK_QNEAR(skew_inverse_linear_eval(I, Quaternion(1.0) + J), Quaternion(3, 1, -1, -2) / 5.0, 1e-15);
    CHECK_QNEAR(skew_inverse_linear_eval(1.0, 2.0), Quaternion(1.0), 1e-15);
    CHECK_THROWS_KIND(skew_inverse_linear_eval(I, J), ErrorKind::PoleOrbit);

    Rng rng(33);
    for (int n = 0; n < 1000; ++n) {
        const Quaternion q0 = random_quaternion(rng), q = random_quaternion(rng);
        const Quaternion x = skew_inverse_linear_eval(q0, q);
        // x q - q0 x = 1, compared with the linear solve.
        CHECK_QNEAR(x * q - q0 * x, Quaternion(1.0), 1e-9 * std::max(1.0, x.norm()));
        CHECK_QNEAR(x, solve_affine_unit(-q0, 1.0, q), 1e-8 * std::max(1.0, x.norm()));
    }
}

TEST_CASE("right_skew_inverse_linear_eval") {
    CHECK_QNEAR(right_skew_inverse_linear_eval(I, 2.0 * I), -I, 1e-15);
    const Quaternion q = Quaternion(1.0) + J;
    const Quaternion x = right_skew_inverse_linear_eval(I, q);
    CHECK_QNEAR(q * x - x * I, Quaternion(1.0), 1e-14);
    CHECK_QNEAR(x, solve_affine_unit(q, -1.0, I), 1e-14);
    CHECK_QNEAR(right_skew_inverse_linear_eval(0.5, 3.0), Quaternion(0.4), 1e-15);
}

TEST_CASE("skew_inverse_real_poly_eval") {
    const SkewPoly p = SkewPoly::from_real({1, 0, 1});
    CHECK_QNEAR(skew_inverse_real_poly_eval(p, 2.0 * I), Quaternion(-1.0 / 3.0), 1e-15);
    CHECK_QNEAR(skew_inverse_real_poly_eval(SkewPoly::from_real({-1, 1}), 3.0), Quaternion(0.5), 1e-15);
    // (1+j)^2 + 1 = 1 + 2j
    CHECK_QNEAR(skew_inverse_real_poly_eval(p, Quaternion(1.0) + J), (Quaternion(1.0) - 2.0 * J) / 5.0, 1e-15);
    CHECK_THROWS_KIND(skew_inverse_real_poly_eval(p, K), ErrorKind::PoleOrbit);
}

TEST_CASE("skew_inverse_affine_orbit_eval") {
    CHECK_QNEAR(skew_inverse_affine_orbit_eval(0.0, 1.0, 2.0 * I), -0.5 * I, 1e-15);
    CHECK_QNEAR(skew_inverse_affine_orbit_eval(-I, 1.0, Quaternion(1.0) + J),
                skew_inverse_linear_eval(I, Quaternion(1.0) + J), 1e-14);
    CHECK_QNEAR(skew_inverse_affine_orbit_eval(1.0, 0.0, J), Quaternion(1.0), 1e-15);
}

TEST_CASE("skew inverse round trips") {
    Rng rng(34);
    for (int n = 0; n < 500; ++n) {
        const Quaternion q0 = random_quaternion(rng), q = random_quaternion(rng);
        const Expr lin = fx::polynomial(SkewPoly::linear(q0));
        const Expr inv = fx::skew_inv_linear(q0);
        CHECK_QNEAR(eval(fx::skew_prod(lin, inv), q), Quaternion(1.0), 1e-9);
        CHECK_QNEAR(eval(fx::skew_prod(inv, lin), q), Quaternion(1.0), 1e-9);
        const Expr rinv = fx::right_skew_inv_linear(q0);
        CHECK_QNEAR(eval(fx::right_skew_prod(lin, rinv), q), Quaternion(1.0), 1e-9);
        CHECK_QNEAR(eval(fx::right_skew_prod(rinv, lin), q), Quaternion(1.0), 1e-9);
    }
}

TEST_CASE("invertibility_roundtrip") {
    CHECK_QNEAR(invertibility_roundtrip(I, -I), 2.0 * I, 1e-15);
    CHECK_QNEAR(invertibility_roundtrip(0.0, 1.0), Quaternion(1.0), 1e-15);
    const Quaternion q = invertibility_roundtrip(I, I);
    CHECK_QNEAR(skew_inverse_linear_eval(I, q), I, 1e-12);
    CHECK_THROWS_KIND(invertibility_roundtrip(I, 0.5 * I), ErrorKind::ExcludedImagePoint);
    CHECK_THROWS_KIND(invertibility_roundtrip(I, Quaternion()), ErrorKind::ExcludedImagePoint);

    Rng rng(35);
    for (int n = 0; n < 500; ++n) {
        const Quaternion q0 = random_quaternion(rng), x = random_quaternion(rng);
        const Quaternion back = invertibility_roundtrip(q0, x);
        CHECK_QNEAR(skew_inverse_linear_eval(q0, back), x, 1e-9 * std::max(1.0, x.norm()));
    }
}

TEST_CASE("skew convexity") {
    CHECK(is_skew_convex(fx::constant(J + 0.5)).convex);
    CHECK(is_skew_convex(fx::polynomial(SkewPoly({I, J, K, Quaternion(1.0)}))).convex);
    CHECK(is_skew_convex(fx::exp()).convex);
    // q -> conj(q): F◇c = c conj(q), which is additive in c.
    CHECK(is_skew_convex(fx::conjugation()).convex);
    // q -> q j is not.
    const SkewConvexity w = is_skew_convex(fx::right_skew_prod(fx::identity(), fx::constant(J)));
    CHECK_FALSE(w.convex);
    CHECK(w.max_residual > 0.1);
}

TEST_CASE("pullback along an action-preserving map is a homomorphism") {
    Rng rng(36);
    const Expr phi = fx::polynomial(SkewPoly::from_real({0.3, -0.5, 0.7}));
    for (int n = 0; n < 200; ++n) {
        const Expr f = fx::polynomial(SkewPoly({random_quaternion(rng), random_quaternion(rng)}));
        const Expr g = fx::polynomial(SkewPoly({random_quaternion(rng), random_quaternion(rng)}));
        const Quaternion q = random_quaternion(rng);
        const Quaternion a = eval(fx::compose(fx::skew_prod(f, g), phi), q);
        const Quaternion b = eval(fx::skew_prod(fx::compose(f, phi), fx::compose(g, phi)), q);
        CHECK_QNEAR(a, b, 1e-10 * std::max(1.0, a.norm()));
    }
    CHECK(is_action_preserving(phi));
    CHECK(is_action_preserving(fx::exp()));
    CHECK_FALSE(is_action_preserving(fx::polynomial(SkewPoly::monomial(J, 1))));
}

TEST_CASE("as_polynomial reduces product trees") {
    const Expr jt = fx::polynomial(SkewPoly::monomial(J, 1));
    const auto p = as_polynomial(fx::skew_prod(jt, jt) + fx::constant(I));
    REQUIRE(p);
    CHECK_QNEAR(p->coeff(2), Quaternion(-1.0), 1e-15);
    CHECK_QNEAR(p->coeff(0), I, 1e-15);
    CHECK_FALSE(as_polynomial(fx::exp()));
}

TEST_CASE("domain and error paths") {
    const Expr f = fx::sum(fx::identity(), fx::skew_inv_linear(I));
    const Domain d = domain(f);
    REQUIRE(d.pole_orbits.size() == 1);
    CHECK_FALSE(d.contains(J));
    CHECK(d.contains(2.0 * J));
    try {
        (void)eval(f, J);
        FAIL("expected a pole error");
    } catch (const MathError& e) {
        CHECK(e.kind() == ErrorKind::PoleOrbit);
        CHECK(e.path() == "$.args[1]");
    }
    CHECK(domain(fx::log()).branch_cut);
    CHECK_THROWS_KIND(eval(fx::log(), Quaternion(-2.0)), ErrorKind::BranchCut);
    CHECK_THROWS_KIND(fx::skew_inv_real_poly(SkewPoly({I, 1.0})), ErrorKind::DomainError);
}
