#include "skewq/job.hpp"

#include <cmath>
#include <optional>

#include "skewq/calculus.hpp"
#include "skewq/contour.hpp"
#include "skewq/verify.hpp"

namespace skewq {

namespace {

using io::Json;

struct Options {
    std::uint64_t seed = 0;
    double tolerance = 1e-8;
    int nodes = 2048;
    int order = 32;
    int samples = 8;
};

[[noreturn]] void schema(const std::string& path, const std::string& msg) {
    throw MathError(ErrorKind::Schema, msg, path);
}

Options read_options(const Json& spec) {
    Options o;
    if (!spec.contains("options")) return o;
    const Json& j = spec["options"];
    if (!j.is_object()) schema("$.options", "options must be an object");
    auto positive_int = [&](const char* key, int& out) {
        if (!j.contains(key)) return;
        if (!j[key].is_number_integer() || j[key].get<long long>() <= 0) {
            schema(std::string("$.options.") + key, "expected a positive integer");
        }
        out = j[key].get<int>();
    };
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) schema("$.options.seed", "seed must be a non-negative integer");
        o.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("tolerance")) {
        if (!j["tolerance"].is_number() || !(j["tolerance"].get<double>() > 0.0)) {
            schema("$.options.tolerance", "tolerance must be a positive number");
        }
        o.tolerance = j["tolerance"].get<double>();
    }
    positive_int("nodes", o.nodes);
    positive_int("order", o.order);
    positive_int("samples", o.samples);
    return o;
}

std::vector<Quaternion> read_points(const Json& spec) {
    if (!spec.contains("points")) schema("$", "missing field \"points\"");
    return io::quaternions_from_json(spec["points"], "$.points");
}

Expr read_expr(const Json& spec) {
    if (!spec.contains("expr")) schema("$", "missing field \"expr\"");
    return io::expr_from_json(spec["expr"], "$.expr");
}

std::optional<Contour> read_contour(const Json& spec, int nodes) {
    if (!spec.contains("contour") || spec["contour"].is_null()) return std::nullopt;
    return io::contour_from_json(spec["contour"], "$.contour", nodes);
}

// Per-point loop: domain errors become error entries.
template <class F>
Json per_point(const std::vector<Quaternion>& points, bool& failed, F&& body) {
    Json results = Json::array();
    for (const auto& p : points) {
        Json entry{{"point", io::to_json(p)}};
        try {
            body(p, entry);
        } catch (const MathError& e) {
            // Expression paths are rooted at the job's "expr" field.
            entry["error"] = io::error_to_json(e.path().empty() ? e : e.nested(".expr"));
            failed = true;
        }
        results.push_back(std::move(entry));
    }
    return results;
}

Contour default_contour(const Orbit& o, int nodes) {
    const double r = o.trivial() ? 0.5 : 0.5 * o.imag_rad();
    return orbit_circles(o, SlicePlane(Quaternion::i()), r, nodes);
}

Json run_command(const std::string& cmd, const Json& spec, const Options& opt, bool& failed) {
    Json out{{"command", cmd}};
    if (cmd == "verify") {
        // No "suites" field runs every registered suite.
        std::vector<std::string> names = suite_names();
        if (spec.contains("suites")) {
            names.clear();
            const Json& s = spec["suites"];
            if (!s.is_array()) schema("$.suites", "suites must be an array of names");
            for (std::size_t n = 0; n < s.size(); ++n) {
                if (!s[n].is_string()) schema("$.suites[" + std::to_string(n) + "]", "suite name must be a string");
                names.push_back(s[n].get<std::string>());
            }
        }
        out["seed"] = opt.seed;
        Json suites = Json::array();
        for (const auto& r : verify_suites(names, opt.seed)) {
            if (!r.pass) failed = true;
            suites.push_back(to_json(r));
        }
        out["suites"] = std::move(suites);
        return out;
    }

    const Expr f = read_expr(spec);
    const auto points = read_points(spec);
    const auto contour = read_contour(spec, opt.nodes);

    if (cmd == "eval") {
        out["results"] = per_point(points, failed, [&](const Quaternion& p, Json& e) {
            e["value"] = io::to_json(eval(f, p));
        });
    } else if (cmd == "derive") {
        DerivativeOptions dopt;
        dopt.seed = opt.seed;
        out["results"] = per_point(points, failed, [&](const Quaternion& p, Json& e) {
            const DerivativeReport r = skew_derivative(f, p, dopt);
            e["skew"] = io::to_json(r.skew);
            e["orbital"] = io::to_json(r.orbital);
            e["method"] = std::string(to_string(r.method));
            e["dq"] = Json{{"a", io::to_json(r.dq.a)}, {"b", io::to_json(r.dq.b)}};
        });
    } else if (cmd == "invert") {
        const Expr inv = fx::skew_inv_affine_orbit(f);
        out["results"] = per_point(points, failed, [&](const Quaternion& p, Json& e) {
            const Quaternion x = eval(inv, p);
            const double res = distance(eval(fx::skew_prod(f, inv), p), 1.0);
            e["value"] = io::to_json(x);
            e["residual"] = res;
            e["within_tolerance"] = res < opt.tolerance;
        });
    } else if (cmd == "cauchy") {
        if (!contour) schema("$", "cauchy needs a contour");
        out["results"] = per_point(points, failed, [&](const Quaternion& p, Json& e) {
            const Quaternion v = cauchy_eval(f, *contour, p);
            const Quaternion d = eval(f, p);
            const double res = distance(v, d) / std::max(1.0, d.norm());
            e["value"] = io::to_json(v);
            e["direct"] = io::to_json(d);
            e["residual"] = res;
            e["within_tolerance"] = res < opt.tolerance;
        });
    } else if (cmd == "series-expand") {
        if (points.empty()) schema("$.points", "series-expand needs a point fixing the orbit");
        const Orbit o = Orbit::of(points.front());
        out["orbit"] = io::to_json(o);
        try {
            const Contour c = contour ? *contour : default_contour(o, opt.nodes);
            const Extraction ext = spherical_coeff_extract(f, o, c, opt.order);
            out["s1"] = io::to_json(ext.s1);
            out["s2"] = io::to_json(ext.s2);
            out["radius"] = ext.radius;
            out["results"] = per_point(points, failed, [&](const Quaternion& p, Json& e) {
                const Quaternion v = ext(p);
                const Quaternion d = eval(f, p);
                const double res = distance(v, d) / std::max(1.0, d.norm());
                e["value"] = io::to_json(v);
                e["direct"] = io::to_json(d);
                e["residual"] = res;
                e["within_tolerance"] = res < opt.tolerance;
            });
        } catch (const MathError& e) {
            out["error"] = io::error_to_json(e);
            failed = true;
        }
    } else {
        schema("$.command", "unknown command \"" + cmd + "\"");
    }
    return out;
}

}  // namespace

JobResult run_job(const Json& spec) {
    JobResult r;
    try {
        if (!spec.is_object()) schema("$", "job must be an object");
        if (!spec.contains("command") || !spec["command"].is_string()) {
            schema("$.command", "command must be a string");
        }
        const Options opt = read_options(spec);
        bool failed = false;
        r.report = run_command(spec["command"].get<std::string>(), spec, opt, failed);
        r.report["ok"] = !failed;
        r.exit_code = failed ? 1 : 0;
    } catch (const MathError& e) {
        r.report = Json{{"ok", false}, {"error", io::error_to_json(e)}};
        r.exit_code = (e.kind() == ErrorKind::Schema || e.kind() == ErrorKind::UnknownSuite) ? 2 : 1;
    }
    return r;
}

}  // namespace skewq
