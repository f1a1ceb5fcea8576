#include "skewq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "skewq/calculus.hpp"
#include "skewq/contour.hpp"
#include "skewq/series_ops.hpp"

namespace skewq {

namespace {

double uni(Rng& rng, double a, double b) { return a + (b - a) * std::ldexp(static_cast<double>(rng() >> 11), -53); }
int uni_int(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

double rel(const Quaternion& a, const Quaternion& b) { return distance(a, b) / std::max(1.0, b.norm()); }

struct Acc {
    Check c;
    Acc(std::string label, double tol, bool lower = false) {
        c.label = std::move(label);
        c.tolerance = tol;
        c.lower_bound = lower;
        c.residual = lower ? kInfinity : 0.0;
    }
    void add(double r) {
        c.residual = c.lower_bound ? std::min(c.residual, r) : std::max(c.residual, r);
        if (std::isnan(r)) c.residual = r;
        ++c.samples;
    }
};

SkewPoly random_poly(Rng& rng, int min_deg, int max_deg, double scale = 1.0) {
    std::vector<Quaternion> cs(static_cast<std::size_t>(uni_int(rng, min_deg, max_deg)) + 1);
    for (auto& c : cs) c = random_quaternion(rng, scale);
    return SkewPoly(std::move(cs));
}

SkewPoly random_real_poly(Rng& rng, int min_deg, int max_deg) {
    std::vector<double> cs(static_cast<std::size_t>(uni_int(rng, min_deg, max_deg)) + 1);
    for (auto& c : cs) c = uni(rng, -1.0, 1.0);
    cs.back() = cs.back() < 0.0 ? cs.back() - 0.5 : cs.back() + 0.5;
    return SkewPoly::from_real(cs);
}

Quaternion random_nonreal(Rng& rng, double scale, double min_im = 0.1) {
    for (;;) {
        const Quaternion q = random_quaternion(rng, scale);
        if (q.im_norm() > min_im) return q;
    }
}

Expr random_atom(Rng& rng) {
    switch (uni_int(rng, 0, 3)) {
        case 0: return fx::polynomial(random_poly(rng, 0, 3));
        case 1: return fx::constant(random_quaternion(rng));
        case 2: {
            const Quaternion c = random_quaternion(rng);
            const double s = uni(rng, 0.5, 1.5);
            return fx::orbit_constant([c, s](double x0, double y0) { return (s + x0 * x0 - 0.3 * y0) * c; });
        }
        default: return fx::identity();
    }
}

Quaternion in_slice(double x, double y, const Quaternion& unit) { return Quaternion(x) + y * unit; }

// A finite sum is a polynomial: no region restriction.
SphericalSeries finite_series(const Orbit& o, std::vector<Quaternion> cs) {
    return SphericalSeries(o, std::move(cs), kInfinity);
}

Orbit random_orbit(Rng& rng, double rmin, double rmax) {
    const double x0 = uni(rng, -0.5, 0.5);
    const double r = uni(rng, rmin, rmax);
    return Orbit(x0, std::sqrt(x0 * x0 + r * r));
}

using Builder = std::function<std::vector<Check>(Rng&)>;

std::vector<Check> near_ring_laws(Rng& rng) {
    Acc assoc("associativity", 1e-10), dist("right-distributivity", 1e-10), oc("orbit-constant-pointwise", 1e-10);
    for (int n = 0; n < 1000; ++n) {
        const Expr f = random_atom(rng), g = random_atom(rng), h = random_atom(rng);
        const Quaternion q = random_quaternion(rng);
        assoc.add(rel(eval(fx::skew_prod(fx::skew_prod(f, g), h), q), eval(fx::skew_prod(f, fx::skew_prod(g, h)), q)));
        dist.add(rel(eval(fx::skew_prod(f + g, h), q), eval(fx::skew_prod(f, h) + fx::skew_prod(g, h), q)));
    }
    for (int n = 0; n < 200; ++n) {
        const Quaternion a = random_quaternion(rng), b = random_quaternion(rng);
        const Expr f = fx::orbit_constant([a](double x0, double y0) { return (1.0 + x0 * y0) * a; });
        const Expr g = fx::orbit_constant([b](double x0, double y0) { return (0.5 - x0 + y0 * y0) * b; });
        const Quaternion q = random_quaternion(rng);
        oc.add(rel(eval(fx::skew_prod(f, g), q), eval(f, q) * eval(g, q)));
    }
    return {assoc.c, dist.c, oc.c};
}

std::vector<Check> lam_leroy_product(Rng& rng) {
    Acc plain("untwisted", 1e-10), twisted("inner-sigma-delta", 1e-10);
    auto product_formula = [](const SkewPoly& p, const SkewPoly& q, const Quaternion& a) {
        const Quaternion qa = lam_leroy_eval(q, a);
        if (qa.is_zero(0.0)) return Quaternion();
        return lam_leroy_eval(p, sd_action(qa, a, q.twist())) * qa;
    };
    for (int n = 0; n < 1000; ++n) {
        const SkewPoly p = random_poly(rng, 0, 6), q = random_poly(rng, 0, 6);
        const Quaternion a = random_quaternion(rng);
        plain.add(rel(lam_leroy_eval(poly_mul(p, q), a), product_formula(p, q, a)));
    }
    for (int n = 0; n < 200; ++n) {
        const Twist t = inner_derivation(random_nonreal(rng, 1.0, 0.2) + 0.5, random_quaternion(rng));
        std::vector<Quaternion> pc(static_cast<std::size_t>(uni_int(rng, 1, 4))), qc(static_cast<std::size_t>(uni_int(rng, 1, 4)));
        for (auto& c : pc) c = random_quaternion(rng);
        for (auto& c : qc) c = random_quaternion(rng);
        const SkewPoly p(pc, t), q(qc, t);
        const Quaternion a = random_quaternion(rng);
        twisted.add(rel(lam_leroy_eval(poly_mul(p, q), a), product_formula(p, q, a)));
    }
    return {plain.c, twisted.c};
}

std::vector<Check> inverses(Rng& rng) {
    Acc solve("closed-form-vs-solve", 1e-11), round("skew-product-round-trips", 1e-10),
        image("round-trip-image", 1e-11);
    for (int n = 0; n < 1000; ++n) {
        const Quaternion q0 = random_quaternion(rng);
        Quaternion q;
        do {
            q = random_quaternion(rng);
        } while (std::abs(q.re() - q0.re()) + std::abs(q.norm() - q0.norm()) < 0.05);
        const Quaternion x = skew_inverse_linear_eval(q0, q);
        const Quaternion y = right_skew_inverse_linear_eval(q0, q);
        solve.add(rel(x, solve_affine_unit(-1.0 * q0, 1.0, q)));
        solve.add(rel(y, solve_affine_unit(q, -1.0, q0)));

        const Expr lin = fx::polynomial(SkewPoly::linear(q0));
        const Expr inv = fx::skew_inv_linear(q0);
        const Expr rinv = fx::right_skew_inv_linear(q0);
        round.add(rel(eval(fx::skew_prod(lin, inv), q), 1.0));
        round.add(rel(eval(fx::skew_prod(inv, lin), q), 1.0));
        round.add(rel(eval(fx::right_skew_prod(lin, rinv), q), 1.0));
        round.add(rel(eval(fx::right_skew_prod(rinv, lin), q), 1.0));
        image.add(rel(invertibility_roundtrip(q0, x), q));
    }
    return {solve.c, round.c, image.c};
}

std::vector<Check> orbital_leibniz(Rng& rng) {
    Acc leib("leibniz", 1e-9), spread("witness-spread", 1e-9), formula("polynomial-formula", 1e-9);
    for (int n = 0; n < 200; ++n) {
        const SkewPoly fp = random_poly(rng, 0, 4), gp = random_poly(rng, 0, 4);
        const Expr f = fx::polynomial(fp), g = fx::polynomial(gp);
        const Quaternion p = random_nonreal(rng, 1.0, 0.2);
        const Quaternion fo = orbital_derivative_poly(fp, p);
        const Quaternion go = orbital_derivative_poly(gp, p);
        const Quaternion second = go.is_zero(0.0) ? Quaternion() : eval(f, conjugate_action(go, p.conj())) * go;
        const Quaternion rhs = fo * eval(g, p) + second;
        leib.add(rel(orbital_derivative(fx::skew_prod(f, g), p), rhs));
        formula.add(rel(orbital_derivative(f, p), fo));

        const auto witnesses = orbit_samples(p, 9, rng);
        for (std::size_t k = 1; k < witnesses.size(); ++k) {
            if (distance(witnesses[k], p) < 0.1 * p.im_norm()) continue;
            spread.add(rel(orbital_quotient(f, p, witnesses[k]), fo));
        }
    }
    return {leib.c, spread.c, formula.c};
}

std::vector<Check> product_rule_checks(Rng& rng, int samples, Acc& prod) {
    for (int n = 0; n < samples; ++n) {
        const SkewPoly fp = random_poly(rng, 0, 4), gp = random_poly(rng, 0, 4);
        const Quaternion q = random_quaternion(rng);
        const Quaternion quotient = skew_derivative(fx::polynomial(poly_mul(fp, gp)), q).skew;
        const Expr rule = *derivative_expr(fx::skew_prod(fx::polynomial(fp), fx::polynomial(gp)));
        prod.add(rel(eval(rule, q), quotient));
    }
    return {prod.c};
}

std::vector<Check> product_rule(Rng& rng) {
    Acc prod("product", 1e-8), series("series-times-polynomial", 1e-8);
    product_rule_checks(rng, 300, prod);
    for (int n = 0; n < 100; ++n) {
        // A finite spherical series is a polynomial; compare against its expansion.
        const Orbit o = random_orbit(rng, 0.3, 1.0);
        std::vector<Quaternion> cs(static_cast<std::size_t>(uni_int(rng, 1, 4)));
        for (auto& c : cs) c = random_quaternion(rng);
        const CharPoly cp = orbit_char_poly(o);
        const SkewPoly po = SkewPoly::from_real({cp.c0, cp.c1, 1.0});
        SkewPoly as_poly, power = SkewPoly::constant(1.0);
        for (const auto& c : cs) {
            as_poly = as_poly + c * power;
            power = poly_mul(po, power);
        }
        const SkewPoly gp = random_poly(rng, 0, 3);
        const Quaternion q = random_quaternion(rng);
        const Expr rule = *derivative_expr(fx::skew_prod(fx::series(finite_series(o, cs)), fx::polynomial(gp)));
        series.add(rel(eval(rule, q), skew_derivative(fx::polynomial(poly_mul(as_poly, gp)), q).skew));
    }
    return {prod.c, series.c};
}

std::vector<Check> derivative_rules(Rng& rng) {
    Acc sum("sum", 1e-8), prod("product", 1e-8), dq("dq-orbit-quotient", 1e-10), inv("inverse", 1e-8),
        ser("series-vs-numeric", 1e-6);
    for (int n = 0; n < 200; ++n) {
        const SkewPoly fp = random_poly(rng, 0, 4), gp = random_poly(rng, 0, 4);
        const Quaternion q = random_nonreal(rng, 1.0);
        const Quaternion lhs = skew_derivative(fx::polynomial(fp + gp), q).skew;
        sum.add(rel(lhs, skew_derivative(fx::polynomial(fp), q).skew + skew_derivative(fx::polynomial(gp), q).skew));

        const SkewPoly pq = poly_mul(fp, gp);
        const DerivativeReport rep = skew_derivative(fx::polynomial(pq), q);
        const SkewPoly quotient = right_divide(pq, q).quotient;
        for (const auto& p : orbit_samples(q, 6, rng)) dq.add(rel(rep.dq_at(p), lam_leroy_eval(quotient, p)));
    }
    product_rule_checks(rng, 200, prod);
    DerivativeOptions numeric;
    numeric.force_numeric = true;
    for (int n = 0; n < 50; ++n) {
        const Quaternion q0 = random_quaternion(rng);
        Quaternion q;
        do {
            q = random_nonreal(rng, 1.0);
        } while (std::abs(q.re() - q0.re()) + std::abs(q.norm() - q0.norm()) < 0.3);
        const Expr x = fx::skew_inv_linear(q0);
        inv.add(rel(skew_derivative(x, q, numeric).skew, eval(*derivative_expr(x), q)));

        const SkewPoly rp = random_real_poly(rng, 1, 2);
        const Expr xr = fx::skew_inv_real_poly(rp);
        const Quaternion p = random_nonreal(rng, 1.0);
        try {
            if (lam_leroy_eval(rp, p).norm() < 0.3) continue;
            inv.add(rel(skew_derivative(xr, p, numeric).skew, eval(*derivative_expr(xr), p)));
        } catch (const MathError&) {
            continue;
        }
    }
    for (int n = 0; n < 30; ++n) {
        const Orbit o = random_orbit(rng, 0.5, 1.0);
        std::vector<Quaternion> cs(8);
        for (std::size_t k = 0; k < cs.size(); ++k) cs[k] = std::pow(0.5, static_cast<double>(k)) * random_quaternion(rng);
        const SphericalSeries s(o, cs, 1.0);
        Quaternion q;
        do {
            q = random_nonreal(rng, 1.5);
        } while (!(orbit_char_poly(o).eval(q).norm() < 0.7));
        ser.add(rel(skew_derivative(fx::series(s), q, numeric).skew, skew_derivative(fx::series(s), q).skew));
    }
    return {sum.c, prod.c, dq.c, inv.c, ser.c};
}

std::vector<Check> chain_rule(Rng& rng) {
    Acc exp_dq("exp-compose-dq", 1e-6), exp_orb("exp-compose-orbital", 1e-6), poly_dq("poly-compose-dq", 1e-6),
        poly_orb("poly-compose-orbital", 1e-6), ci("exp-log-inverse", 1e-6), logd("log-derivative", 1e-6),
        expd("exp-derivative", 1e-6);
    DerivativeOptions numeric;
    numeric.force_numeric = true;
    for (int n = 0; n < 20; ++n) {
        const Expr phi = fx::polynomial(random_real_poly(rng, 1, 2));
        const Quaternion q0 = random_nonreal(rng, 0.8);
        DerivativeOptions opts;
        opts.seed = rng();
        const ChainRuleResiduals e = chain_rule_check(fx::exp(), phi, q0, 8, opts);
        exp_dq.add(e.dq);
        exp_orb.add(e.orbital);
        const ChainRuleResiduals p = chain_rule_check(fx::polynomial(random_poly(rng, 1, 3)), phi, q0, 8, opts);
        poly_dq.add(p.dq);
        poly_orb.add(p.orbital);
        ci.add(composition_inverse_check(fx::exp(), fx::log(), q0, 8, opts));

        const Quaternion q = random_nonreal(rng, 1.5, 0.2);
        logd.add(rel(skew_derivative(fx::log(), q, numeric).skew, q.inverse()));
        expd.add(rel(skew_derivative(fx::exp(), q, numeric).skew, qexp(q)));
    }
    return {exp_dq.c, exp_orb.c, poly_dq.c, poly_orb.c, ci.c, logd.c, expd.c};
}

std::vector<Check> cauchy(Rng& rng) {
    Acc recon("reconstruction", 1e-6), invariance("contour-invariance", 1e-6), orbital("orbital-integral", 1e-6),
        doubling("node-doubling", 1e-9);
    const SlicePlane slice(Quaternion::i());
    const Contour a(slice, {{0.0, 1.0, 0.5, 1}, {0.0, -1.0, 0.5, 1}}, 2048);
    const Contour b(slice, {{0.0, 0.0, 2.0, 1}}, 2048);
    const Contour c(slice, {{0.03, 0.98, 0.45, 1}, {0.03, -0.98, 0.45, 1}}, 2048);
    const Contour half(slice, a.circles(), 1024);
    for (int k = 0; k < 5; ++k) {
        const Expr f = fx::polynomial(random_poly(rng, 1, 5));
        for (int n = 0; n < 20; ++n) {
            const double rho = 0.2 * std::sqrt(uni(rng, 0.0, 1.0));
            const double th = uni(rng, 0.0, 6.283185307179586);
            const Quaternion p = in_slice(rho * std::cos(th), 1.0 + rho * std::sin(th), random_unit_imaginary(rng));
            const Quaternion direct = eval(f, p);
            const Quaternion va = cauchy_eval(f, a, p), vb = cauchy_eval(f, b, p), vc = cauchy_eval(f, c, p);
            recon.add(rel(va, direct));
            recon.add(rel(vb, direct));
            recon.add(rel(vc, direct));
            invariance.add(std::max({rel(va, vb), rel(vb, vc), rel(va, vc)}));
            orbital.add(rel(orbital_via_integral(f, a, p), orbital_derivative(f, p)));
            doubling.add(rel(cauchy_eval(f, half, p), va));
        }
    }
    return {recon.c, invariance.c, orbital.c, doubling.c};
}

std::vector<Check> extraction(Rng& rng) {
    Acc coeffs("coefficients", 1e-8), recon("reconstruction", 1e-7), d1("higher-derivative-1", 1e-5),
        d2("higher-derivative-2", 1e-5);
    const SlicePlane slice(Quaternion::i());
    for (int n = 0; n < 20; ++n) {
        const Orbit o = random_orbit(rng, 0.6, 1.2);
        const int order = uni_int(rng, 1, 6);
        std::vector<Quaternion> c1(static_cast<std::size_t>(order) + 1), c2(c1.size());
        for (auto& c : c1) c = random_quaternion(rng);
        for (auto& c : c2) c = random_quaternion(rng);
        const Expr f = fx::series(finite_series(o, c1)) +
                       fx::skew_prod(fx::series(finite_series(o, c2)), fx::identity());
        const double rho = o.imag_rad() + 1.0;
        const Contour gamma(slice, {{o.x0(), 0.0, rho, 1}}, 2048);
        const Extraction ext = spherical_coeff_extract(f, o, gamma, order + 2);
        for (std::size_t k = 0; k < ext.s1.coeffs().size(); ++k) {
            const Quaternion t1 = k < c1.size() ? c1[k] : Quaternion();
            const Quaternion t2 = k < c2.size() ? c2[k] : Quaternion();
            coeffs.add(std::max(distance(ext.s1.coeffs()[k], t1), distance(ext.s2.coeffs()[k], t2)));
        }
        const CharPoly cp = orbit_char_poly(o);
        int taken = 0;
        while (taken < 100) {
            const Quaternion q = random_quaternion(rng, 2.0);
            if (!(cp.eval(q).norm() < 0.9 * ext.radius)) continue;
            recon.add(rel(ext(q), eval(f, q)));
            ++taken;
        }
        const Expr f1 = *derivative_expr(f);
        const Expr f2 = *derivative_expr(f1);
        for (int k = 0; k < 2; ++k) {
            const double r = uni(rng, 0.0, 0.5 * rho);
            const double th = uni(rng, 0.0, 6.283185307179586);
            const Quaternion p = in_slice(o.x0() + r * std::cos(th), r * std::sin(th), random_unit_imaginary(rng));
            d1.add(rel(higher_derivative(f, gamma, p, 1), eval(f1, p)));
            d2.add(rel(higher_derivative(f, gamma, p, 2), eval(f2, p)));
        }
    }
    return {coeffs.c, recon.c, d1.c, d2.c};
}

std::vector<Check> slice_cr(Rng& rng) {
    Acc poly("polynomial", 1e-7), series("series", 1e-7), control("conjugation-control", 0.9, true);
    for (int n = 0; n < 100; ++n) {
        const Expr f = fx::polynomial(random_poly(rng, 1, 5));
        const Quaternion q = random_nonreal(rng, 1.0);
        poly.add(slice_cr_residual(f, q) / std::max(1.0, eval(f, q).norm()));

        const Orbit o = random_orbit(rng, 0.3, 1.0);
        std::vector<Quaternion> cs(static_cast<std::size_t>(uni_int(rng, 2, 6)));
        for (auto& c : cs) c = random_quaternion(rng, 0.5);
        const Expr s = fx::series(finite_series(o, cs));
        series.add(slice_cr_residual(s, q) / std::max(1.0, eval(s, q).norm()));

        control.add(slice_cr_residual(fx::conjugation(), q));
    }
    return {poly.c, series.c, control.c};
}

std::vector<Check> right_inverse_series(Rng& rng) {
    Acc ratio("fitted-ratio", 0.05), closed("closed-form-n40", 1e-10);
    int done = 0;
    while (done < 20) {
        const Orbit o = random_orbit(rng, 0.5, 1.0);
        const CharPoly cp = orbit_char_poly(o);
        const Quaternion p = in_slice(o.x0() + uni(rng, -0.3, 0.3), o.imag_rad() + uni(rng, -0.3, 0.3),
                                      random_unit_imaginary(rng));
        const Quaternion q = random_quaternion(rng, 2.0);
        if (o.contains(p, 1e-6)) continue;
        const double r = cp.eval(p).norm() / cp.eval(q).norm();
        if (r < 0.3 || r > 0.7) continue;
        const Quaternion exact = right_skew_inverse_linear_eval(p, q);
        // Least-squares slope of log error against the term count.
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int m = 0;
        for (int terms = 4; terms <= 60; ++terms) {
            const double e = distance(right_skew_inverse_series(p, o, q, terms).value, exact);
            if (e < 1e-12 * std::max(1.0, exact.norm())) break;
            sx += terms;
            sy += std::log(e);
            sxx += static_cast<double>(terms) * terms;
            sxy += terms * std::log(e);
            ++m;
        }
        if (m < 5) continue;
        const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        ratio.add(std::abs(std::exp(slope) / r - 1.0));
        closed.add(rel(right_skew_inverse_series(p, o, q, 40 + static_cast<int>(std::log(1e-16) / std::log(r))).value,
                       exact));
        ++done;
    }
    return {ratio.c, closed.c};
}

struct SuiteDef {
    const char* law;
    double tolerance;
    Builder run;
};

const std::map<std::string, SuiteDef>& registry() {
    static const std::map<std::string, SuiteDef> r = {
        {"near-ring-laws", {"(f◇g)◇h = f◇(g◇h); (f+g)◇h = f◇h + g◇h", 1e-10, near_ring_laws}},
        {"lam-leroy-product", {"(PQ)(a) = P(^{Q(a)}a) Q(a)", 1e-10, lam_leroy_product}},
        {"inverses", {"(T-q0)◇(T-q0)^<-1> = 1 = (T-q0)^<-1>◇(T-q0)", 1e-10, inverses}},
        {"orbital-leibniz", {"(F◇G)^o(p) = F^o(p)G(p) + (F◇G^o)(conj p)", 1e-9, orbital_leibniz}},
        {"derivative-rules", {"(F+G)' = F'+G'; (F◇G)' = F'◇G + F◇G'; inverse rule", 1e-8, derivative_rules}},
        {"product-rule", {"(F◇G)' = F'◇G + F◇G'", 1e-8, product_rule}},
        {"chain-rule", {"D(F∘phi) = (D(F)∘phi)◇D(phi)", 1e-6, chain_rule}},
        {"cauchy", {"F(p) = (1/2pi)∮F(q)(-I dq)(T-p)^<-1>_r(q)", 1e-6, cauchy}},
        {"extraction", {"F = S1 + S2◇T with contour coefficients", 1e-7, extraction}},
        {"slice-cr", {"(1/2)(dF/dx + dF/dy I) = 0 on every slice", 1e-7, slice_cr}},
        {"right-inverse-series", {"(T-p)^<-1>_r = sum P_O(q)^(-n-1)(q+p-2x0)P_O(p)^n", 0.05, right_inverse_series}},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "near-ring-laws", "lam-leroy-product", "inverses", "orbital-leibniz", "derivative-rules", "product-rule",
        "chain-rule",     "cauchy",            "extraction", "slice-cr",      "right-inverse-series",
    };
    return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
    const auto& reg = registry();
    auto it = reg.find(name);
    if (it == reg.end()) throw MathError(ErrorKind::UnknownSuite, "unknown suite \"" + name + "\"");
    Rng rng(seed);
    SuiteReport r;
    r.name = name;
    r.law = it->second.law;
    r.tolerance = it->second.tolerance;
    try {
        r.checks = it->second.run(rng);
    } catch (const MathError& e) {
        Check c;
        c.label = std::string("error: ") + std::string(to_string(e.kind())) + ": " + e.what();
        c.residual = kInfinity;
        c.tolerance = r.tolerance;
        r.checks.push_back(c);
    }
    for (const auto& c : r.checks) {
        r.samples += c.samples;
        if (!c.lower_bound) r.max_residual = std::max(r.max_residual, c.residual);
        if (!c.pass()) r.pass = false;
    }
    return r;
}

std::vector<SuiteReport> verify_suites(const std::vector<std::string>& names, std::uint64_t seed) {
    for (const auto& n : names) {
        if (!registry().count(n)) throw MathError(ErrorKind::UnknownSuite, "unknown suite \"" + n + "\"");
    }
    std::vector<SuiteReport> out;
    for (const auto& n : names) out.push_back(run_suite(n, seed));
    return out;
}

io::Json to_json(const SuiteReport& r) {
    io::Json checks = io::Json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"label", c.label},
                          {"residual", c.residual},
                          {"tolerance", c.tolerance},
                          {"bound", c.lower_bound ? "min" : "max"},
                          {"samples", c.samples},
                          {"pass", c.pass()}});
    }
    return {{"name", r.name},           {"law", r.law},       {"samples", r.samples},
            {"max_residual", r.max_residual}, {"tolerance", r.tolerance}, {"pass", r.pass},
            {"checks", checks}};
}

}  // namespace skewq
