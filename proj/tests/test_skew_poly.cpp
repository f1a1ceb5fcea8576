#include "skewq/errors.hpp"
#include "skewq/skew_poly.hpp"
#include "support.hpp"

using namespace skewq;
using namespace skewq::test;

namespace {

SkewPoly random_poly(Rng& rng, int max_deg, Twist twist = nullptr) {
    const int deg = static_cast<int>(rng() % static_cast<std::uint64_t>(max_deg + 1));
    std::vector<Quaternion> c(deg + 1);
    for (auto& x : c) x = random_quaternion(rng);
    return SkewPoly(std::move(c), twist);
}

// Brute force: P(a) = sum a_m a^m with explicit powers.
Quaternion horner_free_eval(const SkewPoly& p, const Quaternion& a) {
    Quaternion out, pw(1.0);
    for (const auto& c : p.coeffs()) {
        out += c * pw;
        pw = pw * a;
    }
    return out;
}

// Remainder by repeated subtraction of lc T^(m-1) (T - a), using only poly_mul.
Quaternion long_division_remainder(SkewPoly p, const Quaternion& a) {
    const SkewPoly lin = SkewPoly::linear(a, p.twist());
    while (p.degree() >= 1) {
        const SkewPoly step = poly_mul(SkewPoly::monomial(p.leading(), p.degree() - 1, p.twist()), lin);
        p = p - step;
    }
    return p.coeff(0);
}

// Oracle for orbit roots: dense sphere sampling then a local pattern search.
double min_on_orbit(const SkewPoly& p, const Orbit& o) {
    auto value = [&](double th, double ph) {
        const double r = o.imag_rad();
        const Quaternion q(o.x0(), r * std::sin(th) * std::cos(ph), r * std::sin(th) * std::sin(ph),
                           r * std::cos(th));
        return lam_leroy_eval(p, q).norm();
    };
    double best = 1e300, bt = 0, bp = 0;
    for (int a = 0; a <= 40; ++a) {
        for (int b = 0; b < 80; ++b) {
            const double th = M_PI * a / 40, ph = 2 * M_PI * b / 80;
            const double v = value(th, ph);
            if (v < best) best = v, bt = th, bp = ph;
        }
    }
    for (double step = 0.05; step > 1e-12; step *= 0.5) {
        bool moved = true;
        while (moved) {
            moved = false;
            const double cand[4][2] = {{bt + step, bp}, {bt - step, bp}, {bt, bp + step}, {bt, bp - step}};
            for (const auto& c : cand) {
                const double v = value(c[0], c[1]);
                if (v < best) best = v, bt = c[0], bp = c[1], moved = true;
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("poly_mul examples") {
    const SkewPoly jt = SkewPoly::monomial(J, 1);
    const SkewPoly sq = poly_mul(jt, jt);
    REQUIRE(sq.degree() == 2);
    CHECK_QNEAR(sq.coeff(2), Quaternion(-1.0), 0.0);
    CHECK_QNEAR(sq.coeff(1), Quaternion(), 0.0);
    CHECK_QNEAR(sq.coeff(0), Quaternion(), 0.0);

    const SkewPoly p({I, J, K});
    const SkewPoly one = poly_mul(p, SkewPoly::constant(1.0));
    REQUIRE(one.degree() == 2);
    for (int m = 0; m <= 2; ++m) CHECK_QNEAR(one.coeff(m), p.coeff(m), 0.0);

    const SkewPoly q = poly_mul(SkewPoly::linear(I), SkewPoly::linear(-I));
    REQUIRE(q.degree() == 2);
    CHECK_QNEAR(q.coeff(0), Quaternion(1.0), 0.0);
    CHECK_QNEAR(q.coeff(1), Quaternion(), 0.0);
    CHECK_QNEAR(q.coeff(2), Quaternion(1.0), 0.0);
}

TEST_CASE("twist mismatch") {
    const SkewPoly a({I, J}, inner_automorphism(K));
    const SkewPoly b({I, J}, inner_automorphism(K));
    CHECK_THROWS_KIND(poly_mul(a, b), ErrorKind::TwistMismatch);
    CHECK_THROWS_KIND(poly_mul(a, SkewPoly({I, J})), ErrorKind::TwistMismatch);
}

TEST_CASE("lam_leroy_eval examples") {
    CHECK_QNEAR(lam_leroy_eval(SkewPoly::monomial(1.0, 2), I), Quaternion(-1.0), 0.0);
    CHECK_QNEAR(lam_leroy_eval(SkewPoly::monomial(J, 1), I), -K, 0.0);
    CHECK_QNEAR(lam_leroy_eval(SkewPoly::from_real({1, 0, 1}), J), Quaternion(), 1e-15);
}

TEST_CASE("product formula against brute force") {
    Rng rng(21);
    for (int n = 0; n < 1000; ++n) {
        const SkewPoly p = random_poly(rng, 6);
        const SkewPoly q = random_poly(rng, 6);
        const Quaternion a = random_quaternion(rng);
        const Quaternion qa = horner_free_eval(q, a);
        // (PQ)(a) = P(^{Q(a)} a) Q(a), zero when Q(a) = 0.
        const Quaternion expect = qa.is_zero() ? Quaternion() : horner_free_eval(p, conjugate_action(qa, a)) * qa;
        const Quaternion got = lam_leroy_eval(poly_mul(p, q), a);
        CHECK(distance(got, expect) <= 1e-10 * std::max(1.0, expect.norm()));
    }
}

TEST_CASE("twisted evaluation equals the division remainder") {
    Rng rng(22);
    const Twist tw[2] = {inner_automorphism(Quaternion(1.0) + J), inner_derivation(K + 0.5, I - J)};
    for (int n = 0; n < 300; ++n) {
        const Twist& t = tw[n % 2];
        const SkewPoly p = random_poly(rng, 5, t);
        const Quaternion a = random_quaternion(rng);
        const Quaternion oracle = long_division_remainder(p, a);
        CHECK_QNEAR(lam_leroy_eval(p, a), oracle, 1e-10 * std::max(1.0, oracle.norm()));
        const RightDivision d = right_divide(p, a);
        CHECK_QNEAR(d.remainder, oracle, 1e-10 * std::max(1.0, oracle.norm()));
        // P = Q (T - a) + r
        const SkewPoly back = poly_mul(d.quotient, SkewPoly::linear(a, t)) + SkewPoly::constant(d.remainder, t);
        for (int m = 0; m <= p.degree(); ++m) CHECK_QNEAR(back.coeff(m), p.coeff(m), 1e-10);
    }
}

TEST_CASE("right_divide examples") {
    const RightDivision a = right_divide(SkewPoly::from_real({1, 0, 1}), I);
    REQUIRE(a.quotient.degree() == 1);
    CHECK_QNEAR(a.quotient.coeff(0), I, 0.0);
    CHECK_QNEAR(a.quotient.coeff(1), Quaternion(1.0), 0.0);
    CHECK_QNEAR(a.remainder, Quaternion(), 0.0);

    const RightDivision b = right_divide(SkewPoly::constant(J + K), I);
    CHECK(b.quotient.is_zero());
    CHECK_QNEAR(b.remainder, J + K, 0.0);

    const RightDivision c = right_divide(SkewPoly::monomial(J, 1), I);
    REQUIRE(c.quotient.degree() == 0);
    CHECK_QNEAR(c.quotient.coeff(0), J, 0.0);
    CHECK_QNEAR(c.remainder, -K, 0.0);
}

TEST_CASE("untwisted right division reconstructs") {
    Rng rng(23);
    for (int n = 0; n < 500; ++n) {
        const SkewPoly p = random_poly(rng, 6);
        const Quaternion a = random_quaternion(rng);
        const RightDivision d = right_divide(p, a);
        const SkewPoly back = poly_mul(d.quotient, SkewPoly::linear(a)) + SkewPoly::constant(d.remainder);
        for (int m = 0; m <= p.degree(); ++m) CHECK_QNEAR(back.coeff(m), p.coeff(m), 1e-12);
        CHECK_QNEAR(d.remainder, horner_free_eval(p, a), 1e-11);
    }
}

TEST_CASE("sd_action") {
    CHECK_QNEAR(sd_action(J, I), -I, 1e-15);
    const Twist t = inner_automorphism(K);
    const Quaternion q(0.3, -1.0, 2.0, 0.5);
    CHECK_QNEAR(sd_action(1.0, q, t), q, 1e-15);
    CHECK_QNEAR(sd_action(2.0, 5.0), Quaternion(5.0), 1e-15);
    CHECK_THROWS_KIND(sd_action(Quaternion(), I), ErrorKind::ZeroActor);
}

TEST_CASE("has_root_on_orbit examples") {
    const Orbit oi = Orbit::of(I);
    CHECK(has_root_on_orbit(SkewPoly::from_real({1, 0, 1}), oi));
    CHECK(has_root_on_orbit(SkewPoly::linear(J), oi));
    CHECK_FALSE(has_root_on_orbit(SkewPoly::linear(2.0), oi));
}

TEST_CASE("has_root_on_orbit matches a sampling oracle") {
    Rng rng(24);
    int with_root = 0;
    for (int n = 0; n < 60; ++n) {
        Quaternion q = random_quaternion(rng);
        if (q.im_norm() < 0.2) q += 0.5 * I;
        const Orbit o = Orbit::of(q);
        SkewPoly p = random_poly(rng, 3);
        if (n % 2 == 0) {
            // Right factor T - s with s on the orbit forces a root at s.
            const Quaternion s = conjugate_action(random_quaternion(rng), q);
            p = poly_mul(p, SkewPoly::linear(s));
        }
        if (p.is_zero()) continue;
        const double scale = std::max(1.0, p.max_coeff_norm()) * std::pow(1.0 + o.y0(), p.degree());
        const bool oracle = min_on_orbit(p, o) < 1e-7 * scale;
        CHECK(has_root_on_orbit(p, o) == oracle);
        with_root += oracle;
    }
    CHECK(with_root >= 30);
}

TEST_CASE("real coefficients commute with the action") {
    Rng rng(25);
    for (int n = 0; n < 500; ++n) {
        std::vector<double> c(1 + rng() % 6);
        for (auto& x : c) x = uniform(rng, -1, 1);
        const SkewPoly p = SkewPoly::from_real(c);
        const Quaternion q = random_quaternion(rng);
        const Quaternion u = random_quaternion(rng);
        CHECK_QNEAR(lam_leroy_eval(p, conjugate_action(u, q)), conjugate_action(u, lam_leroy_eval(p, q)), 1e-11);
    }
}

TEST_CASE("reduce_mod_orbit agrees with evaluation on the orbit") {
    Rng rng(26);
    for (int n = 0; n < 300; ++n) {
        const SkewPoly p = random_poly(rng, 6);
        const Quaternion q = random_quaternion(rng);
        const Orbit o = Orbit::of(q);
        const OrbitRemainder r = reduce_mod_orbit(p, o);
        for (const auto& s : orbit_samples(q, 4, rng)) {
            CHECK_QNEAR(r.c * s + r.d, lam_leroy_eval(p, s), 1e-10 * std::max(1.0, p.max_coeff_norm()) * 100);
        }
    }
}
