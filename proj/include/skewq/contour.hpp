#pragma once

#include <vector>

#include "skewq/func_expr.hpp"
#include "skewq/orbit.hpp"
#include "skewq/spherical_series.hpp"

namespace skewq {

struct Circle {
    double cx = 0.0;
    double cy = 0.0;
    double radius = 1.0;
    /// +1 counterclockwise in slice coordinates, -1 clockwise.
    int orient = 1;
};

/// Oriented union of circles in one slice plane.
class Contour {
public:
    Contour(SlicePlane slice, std::vector<Circle> circles, int nodes_per_circle = 2048);

    const SlicePlane& slice() const { return slice_; }
    const std::vector<Circle>& circles() const { return circles_; }
    int nodes() const { return nodes_; }

    /// Throws BadWinding when (x, y) lies on a circle.
    int winding(double x, double y) const;
    /// Winding around the projection of q to the slice.
    int winding(const Quaternion& q) const;

    /// Quadrature node and weight: (1/2pi)(-I dq) ~ weight at that node.
    struct Node {
        Quaternion q;
        Quaternion weight;
        Quaternion center;
    };
    /// Nodes in fixed order: circle by circle, angle increasing.
    std::vector<Node> quadrature() const;

private:
    SlicePlane slice_;
    std::vector<Circle> circles_;
    int nodes_ = 2048;
};

/// Two circles of `radius` around the slice points of `orbit` (one circle for
/// a trivial orbit).
Contour orbit_circles(const Orbit& orbit, const SlicePlane& slice, double radius, int nodes = 2048);

/// Trapezoid value of the integral of F(g(t)) g'(t) G(g(t)) dt.
Quaternion line_integral(const Expr& f, const Expr& g, const Contour& c);

/// F(p) = (1/2pi) ∮ F(q)(-I dq)(T - p)^<-1>_r(q). Needs winding +1 at both
/// slice points of O(p) and winding 0 at the slice points of every pole orbit.
Quaternion cauchy_eval(const Expr& f, const Contour& c, const Quaternion& p);

/// F^o(p) = (1/2pi) ∮ F(q)(-I dq) P_O(p)(q)^-1; zero on trivial orbits.
Quaternion orbital_via_integral(const Expr& f, const Contour& c, const Quaternion& p);

/// F^(n)(p) = (n!/2pi) ∮ F(q)(-I dq)(T - p)^<-n-1>_r(q).
Quaternion higher_derivative(const Expr& f, const Contour& c, const Quaternion& p, int n);

struct Extraction {
    SphericalSeries s1;
    SphericalSeries s2;
    /// min |P_O(q)| over the contour nodes, declared on both series.
    double radius = 0.0;

    /// S1(q) + S2(q) q.
    Quaternion operator()(const Quaternion& q) const;
};

/// Coefficients of F = S1 + S2◇T up to `order`:
/// c1_n = (1/2pi)∮ F(-I dq) P_O^(-n-1)(q - 2x0), c2_n = (1/2pi)∮ F(-I dq) P_O^(-n-1).
/// A trivial orbit {r} gives the ordinary expansion in S1 and S2 = 0.
Extraction spherical_coeff_extract(const Expr& f, const Orbit& orbit, const Contour& c, int order = 32);

}  // namespace skewq
