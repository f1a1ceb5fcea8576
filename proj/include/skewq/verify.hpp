#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewq/json_io.hpp"

namespace skewq {

struct Check {
    std::string label;
    double residual = 0.0;
    double tolerance = 0.0;
    /// Negative controls: pass when residual >= tolerance.
    bool lower_bound = false;
    int samples = 0;

    bool pass() const { return lower_bound ? residual >= tolerance : residual < tolerance; }
};

struct SuiteReport {
    std::string name;
    std::string law;
    int samples = 0;
    /// Largest residual among the upper-bound checks.
    double max_residual = 0.0;
    double tolerance = 0.0;
    std::vector<Check> checks;
    bool pass = true;
};

/// Registered suite names, in report order.
const std::vector<std::string>& suite_names();

/// Throws MathError(UnknownSuite).
SuiteReport run_suite(const std::string& name, std::uint64_t seed);
std::vector<SuiteReport> verify_suites(const std::vector<std::string>& names, std::uint64_t seed);

io::Json to_json(const SuiteReport& r);

}  // namespace skewq
