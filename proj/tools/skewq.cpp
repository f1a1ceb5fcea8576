#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "skewq/job.hpp"

namespace {

using skewq::io::Json;

std::string slurp(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Inline JSON when the argument looks like JSON, otherwise a file name.
Json load(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return Json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw std::runtime_error("cannot open " + arg);
    return Json::parse(slurp(in));
}

int emit(const skewq::JobResult& r, const std::string& json_out) {
    const std::string text = skewq::io::dump(r.report);
    if (json_out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(json_out, std::ios::binary);
        out << text;
    }
    return r.exit_code;
}

int schema_failure(const std::string& msg, const std::string& json_out) {
    skewq::JobResult r;
    r.report = Json{{"ok", false}, {"error", {{"kind", "Schema"}, {"message", msg}, {"path", "$"}}}};
    r.exit_code = 2;
    return emit(r, json_out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skewq: skew analysis over the quaternions"};
    app.require_subcommand(1);

    std::string expr, points, contour, json_out, job_file;
    std::uint64_t seed = 0;
    int nodes = 2048, order = 32, samples = 8;
    double tol = 1e-8;
    std::vector<std::string> suites;

    auto common = [&](CLI::App* sub, bool with_expr) {
        if (with_expr) {
            sub->add_option("--expr", expr, "expression JSON file or inline JSON")->required();
            sub->add_option("--points", points, "points JSON file or inline array")->required();
            sub->add_option("--contour", contour, "contour JSON file or inline JSON");
        }
        sub->add_option("--seed", seed, "random seed")->capture_default_str();
        sub->add_option("--nodes", nodes, "quadrature nodes per circle")->capture_default_str();
        sub->add_option("--order", order, "series order")->capture_default_str();
        sub->add_option("--tol", tol, "tolerance")->capture_default_str();
        sub->add_option("--samples", samples, "orbit samples")->capture_default_str();
        sub->add_option("--json-out", json_out, "write the report here instead of stdout");
    };

    const std::vector<std::string> commands = {"eval", "derive", "invert", "series-expand", "cauchy"};
    for (const auto& c : commands) common(app.add_subcommand(c, c + " at each point"), true);
    auto* verify = app.add_subcommand("verify", "run verification suites");
    common(verify, false);
    auto* suites_opt = verify->add_option("--suites", suites, "comma-separated suite names (default: all)")
                           ->delimiter(',')
                           ->expected(0, CLI::detail::expected_max_vector_size);
    auto* run = app.add_subcommand("run", "run a job spec from a file or stdin");
    run->add_option("job", job_file, "job JSON file (stdin when omitted)");
    run->add_option("--json-out", json_out, "write the report here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    Json spec;
    try {
        if (run->parsed()) {
            spec = job_file.empty() ? Json::parse(slurp(std::cin)) : load(job_file);
        } else {
            CLI::App* sub = app.get_subcommands().front();
            spec["command"] = sub->get_name();
            if (sub == verify) {
                if (suites_opt->count() > 0) {
                    std::erase(suites, std::string());
                    spec["suites"] = suites;
                }
            } else {
                spec["expr"] = load(expr);
                spec["points"] = load(points);
                if (!contour.empty()) spec["contour"] = load(contour);
            }
            spec["options"] = {{"seed", seed}, {"tolerance", tol}, {"nodes", nodes}, {"order", order},
                               {"samples", samples}};
        }
    } catch (const std::exception& e) {
        return schema_failure(e.what(), json_out);
    }
    return emit(skewq::run_job(spec), json_out);
}
