#pragma once

#include <string>

#include "skewq/json_io.hpp"

namespace skewq {

struct JobResult {
    io::Json report;
    /// 0 ok, 1 domain errors or failed suites, 2 schema errors.
    int exit_code = 0;
};

/// Runs one job:
/// {"command": ..., "expr": ..., "points": [...], "contour": {...},
///  "suites": [...], "options": {"seed", "tolerance", "nodes", "order", "samples"}}.
/// Never throws; schema problems come back as {"error": ...} with exit code 2.
JobResult run_job(const io::Json& spec);

}  // namespace skewq
