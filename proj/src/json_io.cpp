#include "skewq/json_io.hpp"

#include <cmath>

namespace skewq::io {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& msg) {
    throw MathError(ErrorKind::Schema, msg, path);
}

double number(const Json& j, const std::string& path) {
    if (!j.is_number()) schema(path, "expected a number");
    return j.get<double>();
}

int integer(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) schema(path, "expected an integer");
    return j.get<int>();
}

const Json& field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) schema(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) schema(path, std::string("missing field \"") + key + "\"");
    return *it;
}

double clean(double x) { return x == 0.0 ? 0.0 : x; }

// Re-raise errors from library constructors as schema errors at `path`.
template <class F>
auto guarded(const std::string& path, F&& f) {
    try {
        return f();
    } catch (const MathError& e) {
        if (e.kind() == ErrorKind::Schema) throw;
        schema(path, e.what());
    }
}

}  // namespace

Quaternion quaternion_from_json(const Json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 4) schema(path, "quaternion must be an array of 4 numbers");
    Quaternion q;
    q.r0 = number(j[0], path + "[0]");
    q.r1 = number(j[1], path + "[1]");
    q.r2 = number(j[2], path + "[2]");
    q.r3 = number(j[3], path + "[3]");
    return q;
}

std::vector<Quaternion> quaternions_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) schema(path, "expected an array of quaternions");
    std::vector<Quaternion> out;
    out.reserve(j.size());
    for (std::size_t n = 0; n < j.size(); ++n) {
        out.push_back(quaternion_from_json(j[n], path + "[" + std::to_string(n) + "]"));
    }
    return out;
}

Orbit orbit_from_json(const Json& j, const std::string& path) {
    const double re = number(field(j, "re", path), path + ".re");
    const double nm = number(field(j, "norm", path), path + ".norm");
    return guarded(path, [&] { return Orbit(re, nm); });
}

SphericalSeries series_from_json(const Json& j, const std::string& path) {
    const Orbit o = orbit_from_json(field(j, "orbit", path), path + ".orbit");
    auto coeffs = quaternions_from_json(field(j, "coeffs", path), path + ".coeffs");
    std::optional<double> radius;
    if (j.contains("radius") && !j["radius"].is_null()) {
        radius = number(j["radius"], path + ".radius");
        if (!(*radius > 0.0)) schema(path + ".radius", "radius must be positive");
    }
    return SphericalSeries(o, std::move(coeffs), radius);
}

Contour contour_from_json(const Json& j, const std::string& path, int default_nodes) {
    const Quaternion unit = quaternion_from_json(field(j, "slice", path), path + ".slice");
    const Json& cs = field(j, "circles", path);
    if (!cs.is_array() || cs.empty()) schema(path + ".circles", "expected a non-empty array of circles");
    std::vector<Circle> circles;
    for (std::size_t n = 0; n < cs.size(); ++n) {
        const std::string p = path + ".circles[" + std::to_string(n) + "]";
        const Json& c = field(cs[n], "center", p);
        if (!c.is_array() || c.size() != 2) schema(p + ".center", "center must be [x, y]");
        Circle k;
        k.cx = number(c[0], p + ".center[0]");
        k.cy = number(c[1], p + ".center[1]");
        k.radius = number(field(cs[n], "radius", p), p + ".radius");
        k.orient = cs[n].contains("orient") ? integer(cs[n]["orient"], p + ".orient") : 1;
        circles.push_back(k);
    }
    const int nodes = j.contains("nodes") ? integer(j["nodes"], path + ".nodes") : default_nodes;
    return guarded(path, [&] { return Contour(SlicePlane(unit), std::move(circles), nodes); });
}

Expr expr_from_json(const Json& j, const std::string& path) {
    if (!j.is_object()) schema(path, "expression must be an object");
    const Json& opj = field(j, "op", path);
    if (!opj.is_string()) schema(path + ".op", "op must be a string");
    const std::string op = opj.get<std::string>();
    auto sub = [&](const char* key) { return expr_from_json(field(j, key, path), path + "." + key); };
    auto args = [&](std::size_t need) {
        const Json& a = field(j, "args", path);
        if (!a.is_array() || a.size() < need) {
            schema(path + ".args", "expected at least " + std::to_string(need) + " arguments");
        }
        std::vector<Expr> out;
        for (std::size_t n = 0; n < a.size(); ++n) {
            out.push_back(expr_from_json(a[n], path + ".args[" + std::to_string(n) + "]"));
        }
        return out;
    };
    auto quat = [&](const char* key) { return quaternion_from_json(field(j, key, path), path + "." + key); };
    auto poly = [&] {
        return SkewPoly(quaternions_from_json(field(j, "coeffs", path), path + ".coeffs"));
    };

    if (op == "const") return fx::constant(quat("q"));
    if (op == "id") return fx::identity();
    if (op == "conj") return fx::conjugation();
    if (op == "exp") return fx::exp();
    if (op == "log") return fx::log();
    if (op == "orbitconst") {
        const Quaternion c = quat("c");
        const double rp = j.contains("re_pow") ? number(j["re_pow"], path + ".re_pow") : 0.0;
        const double np = j.contains("norm_pow") ? number(j["norm_pow"], path + ".norm_pow") : 0.0;
        return fx::orbit_constant(
            [c, rp, np](double x0, double y0) { return std::pow(x0, rp) * std::pow(y0, np) * c; }, "orbitconst");
    }
    if (op == "poly") return fx::polynomial(poly());
    if (op == "series") return fx::series(series_from_json(j, path));
    if (op == "sum") {
        auto a = args(2);
        Expr acc = a[0];
        for (std::size_t n = 1; n < a.size(); ++n) acc = fx::sum(acc, a[n]);
        return acc;
    }
    if (op == "skewprod" || op == "rskewprod") {
        auto a = args(2);
        if (a.size() != 2) schema(path + ".args", "expected exactly 2 arguments");
        return op == "skewprod" ? fx::skew_prod(a[0], a[1]) : fx::right_skew_prod(a[0], a[1]);
    }
    if (op == "skewinv_linear") return fx::skew_inv_linear(quat("q0"));
    if (op == "rskewinv_linear") return fx::right_skew_inv_linear(quat("q0"));
    if (op == "skewinv_realpoly") {
        SkewPoly p = poly();
        return guarded(path, [&] { return fx::skew_inv_real_poly(std::move(p)); });
    }
    if (op == "skewinv_affine") return fx::skew_inv_affine_orbit(sub("arg"));
    if (op == "compose") return fx::compose(sub("outer"), sub("inner"));
    if (op == "scale") return fx::scale(quat("a"), sub("arg"));
    schema(path + ".op", "unknown op \"" + op + "\"");
}

Json to_json(const Quaternion& q) {
    return Json::array({clean(q.r0), clean(q.r1), clean(q.r2), clean(q.r3)});
}

Json to_json(const Orbit& o) { return Json{{"re", clean(o.x0())}, {"norm", clean(o.y0())}}; }

Json to_json(const SphericalSeries& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
    Json out{{"orbit", to_json(s.center())}, {"coeffs", coeffs}};
    const double r = s.effective_radius();
    out["radius"] = std::isfinite(r) ? Json(r) : Json(nullptr);
    return out;
}

Json error_to_json(const MathError& e) {
    return Json{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()},
                {"path", e.path().empty() ? "$" : e.path()}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace skewq::io
