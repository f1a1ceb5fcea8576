#include "skewq/job.hpp"
#include "skewq/verify.hpp"
#include "support.hpp"

using namespace skewq;
using namespace skewq::test;
using io::Json;

namespace {

std::string schema_path(const Json& j) {
    try {
        (void)io::expr_from_json(j);
    } catch (const MathError& e) {
        CHECK(e.kind() == ErrorKind::Schema);
        return e.path();
    }
    return "<no error>";
}

}  // namespace

TEST_CASE("expression parsing") {
    const Expr f = io::expr_from_json(Json::parse(R"({"op":"poly","coeffs":[[1,0,0,0],[0,0,0,0],[1,0,0,0]]})"));
    CHECK_QNEAR(eval(f, I), Quaternion(), 0.0);
    const Expr g = io::expr_from_json(Json::parse(
        R"({"op":"skewprod","args":[{"op":"id"},{"op":"const","q":[0,0,1,0]}]})"));
    CHECK_QNEAR(eval(g, I), -K, 1e-15);
    const Expr h = io::expr_from_json(Json::parse(
        R"({"op":"compose","outer":{"op":"exp"},"inner":{"op":"scale","a":[2,0,0,0],"arg":{"op":"id"}}})"));
    CHECK_QNEAR(eval(h, 0.25 * M_PI * J), J, 1e-15);
    const Expr s = io::expr_from_json(Json::parse(
        R"({"op":"series","orbit":{"re":0,"norm":1},"coeffs":[[-1,0,0,0],[1,0,0,0]]})"));
    CHECK_QNEAR(eval(s, K), Quaternion(-1.0), 1e-15);
}

TEST_CASE("schema errors name the offending path") {
    CHECK(schema_path(Json::parse(R"({"op":"poly","coeffs":[["x",0,0,0]]})")) == "$.coeffs[0][0]");
    CHECK(schema_path(Json::parse(R"({"op":"poly","coeffs":[[1,0,0]]})")) == "$.coeffs[0]");
    CHECK(schema_path(Json::parse(R"({"op":"nope"})")) == "$.op");
    CHECK(schema_path(Json::parse(R"({"op":"sum","args":[{"op":"id"},{"op":"const"}]})")) == "$.args[1]");
    CHECK(schema_path(Json::parse(R"({"op":"skewprod","args":[{"op":"id"}]})")) == "$.args");
    CHECK(schema_path(Json::parse(R"([1,2])")) == "$");
}

TEST_CASE("writers") {
    CHECK(io::to_json(Quaternion(-0.0, 1.0, -0.0, 2.5)).dump() == "[0.0,1.0,0.0,2.5]");
    const Json o = io::to_json(Orbit(1.0, 2.0));
    CHECK(o["re"] == 1.0);
    CHECK(o["norm"] == 2.0);
    const Json s = io::to_json(SphericalSeries(Orbit::of(I), {1.0}));
    CHECK(s["radius"].is_null());
    const Json e = io::error_to_json(MathError(ErrorKind::PoleOrbit, "pole", "$.expr"));
    CHECK(e["kind"] == "PoleOrbit");
    CHECK(e["path"] == "$.expr");
}

TEST_CASE("contour parsing") {
    const Contour c = io::contour_from_json(Json::parse(
        R"({"slice":[0,1,0,0],"circles":[{"center":[0,1],"radius":0.3,"orient":1}],"nodes":64})"));
    CHECK(c.nodes() == 64);
    CHECK(c.circles().size() == 1);
    try {
        (void)io::contour_from_json(Json::parse(R"({"slice":[0,1,0,0],"circles":[{"center":[0,1],"radius":-1}]})"));
        FAIL("expected schema error");
    } catch (const MathError& e) {
        CHECK(e.kind() == ErrorKind::Schema);
    }
}

TEST_CASE("eval and derive jobs") {
    const JobResult a = run_job(Json::parse(
        R"({"command":"eval","expr":{"op":"poly","coeffs":[[1,0,0,0],[0,0,0,0],[1,0,0,0]]},"points":[[0,1,0,0]]})"));
    CHECK(a.exit_code == 0);
    CHECK(a.report["results"][0]["value"].dump() == "[0.0,0.0,0.0,0.0]");

    const JobResult d = run_job(Json::parse(
        R"({"command":"derive","expr":{"op":"poly","coeffs":[[0,0,0,0],[0,0,0,0],[1,0,0,0]]},"points":[[0,1,0,0]]})"));
    CHECK(d.exit_code == 0);
    CHECK(d.report["results"][0]["skew"].dump() == "[0.0,2.0,0.0,0.0]");
    CHECK(d.report["results"][0]["orbital"].dump() == "[0.0,0.0,0.0,0.0]");
}

TEST_CASE("domain errors are per point with exit 1") {
    const JobResult r = run_job(Json::parse(
        R"({"command":"eval","expr":{"op":"sum","args":[{"op":"id"},{"op":"skewinv_linear","q0":[0,1,0,0]}]},
            "points":[[0,0,2,0],[0,0,1,0]]})"));
    CHECK(r.exit_code == 1);
    CHECK(r.report["results"][0].contains("value"));
    CHECK(r.report["results"][1]["error"]["kind"] == "PoleOrbit");
    CHECK(r.report["results"][1]["error"]["path"] == "$.expr.args[1]");
}

TEST_CASE("schema errors give exit 2") {
    const JobResult r = run_job(Json::parse(R"({"command":"eval","expr":{"op":"poly","coeffs":[[1,0,0]]},"points":[]})"));
    CHECK(r.exit_code == 2);
    CHECK(r.report["error"]["path"] == "$.expr.coeffs[0]");
    CHECK(run_job(Json::parse(R"({"command":"launch"})")).exit_code == 2);
    CHECK(run_job(Json::parse(R"({"command":"verify","suites":["bogus"]})")).exit_code == 2);
}

TEST_CASE("cauchy, invert and series-expand jobs") {
    const JobResult c = run_job(Json::parse(R"({"command":"cauchy",
        "expr":{"op":"poly","coeffs":[[0,0,0,0],[0,0,0,0],[1,0,0,0]]},
        "points":[[0,0.9,0,0]],
        "contour":{"slice":[0,1,0,0],"circles":[{"center":[0,1],"radius":0.3},{"center":[0,-1],"radius":0.3}]}})"));
    CHECK(c.exit_code == 0);
    CHECK(c.report["results"][0]["within_tolerance"] == true);

    const JobResult inv = run_job(Json::parse(R"({"command":"invert",
        "expr":{"op":"poly","coeffs":[[0,-1,0,0],[1,0,0,0]]},"points":[[1,0,1,0]]})"));
    CHECK(inv.exit_code == 0);
    CHECK(inv.report["results"][0]["value"][0].get<double>() == doctest::Approx(0.6));

    const JobResult s = run_job(Json::parse(R"({"command":"series-expand",
        "expr":{"op":"poly","coeffs":[[0,0,0,0],[0,0,0,0],[1,0,0,0]]},"points":[[0,1,0,0],[0,0,0.9,0]],
        "options":{"order":6}})"));
    CHECK(s.exit_code == 0);
    CHECK(s.report["s1"]["coeffs"][1][0].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("verify jobs") {
    const JobResult e = run_job(Json::parse(R"({"command":"verify","suites":[]})"));
    CHECK(e.exit_code == 0);
    CHECK(e.report["suites"].empty());

    const JobResult p = run_job(Json::parse(R"({"command":"verify","suites":["product-rule"],"options":{"seed":7}})"));
    CHECK(p.exit_code == 0);
    CHECK(p.report["suites"][0]["pass"] == true);
    CHECK(p.report["suites"][0]["max_residual"].get<double>() < 1e-8);

    for (const char* name : {"near-ring-laws", "cauchy"}) {
        const SuiteReport r = run_suite(name, 1);
        CHECK(r.pass);
        CHECK(r.max_residual < (std::string(name) == "cauchy" ? 1e-6 : 1e-10));
    }
}

TEST_CASE("jobs are byte-stable") {
    const Json spec = Json::parse(R"({"command":"verify","suites":["inverses","cauchy"],"options":{"seed":3}})");
    CHECK(io::dump(run_job(spec).report) == io::dump(run_job(spec).report));
}
