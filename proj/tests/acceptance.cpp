// Acceptance runner: one line per criterion, nonzero exit if any fails.
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "skewq/verify.hpp"

using namespace skewq;

namespace {

constexpr std::uint64_t kSeed = 1;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Runs a suite and requires the named checks (all checks when empty).
Outcome from_suite(const std::string& suite, const std::vector<std::string>& labels = {}) {
    const SuiteReport r = run_suite(suite, kSeed);
    Outcome o;
    double worst = 0.0;
    int used = 0;
    for (const auto& c : r.checks) {
        bool wanted = labels.empty();
        for (const auto& l : labels) wanted = wanted || c.label.rfind(l, 0) == 0;
        if (!wanted) continue;
        ++used;
        if (!c.pass()) {
            o.pass = false;
            o.detail += " failed[" + c.label + "]";
        }
        if (!c.lower_bound) worst = std::max(worst, c.residual / c.tolerance);
    }
    if (used == 0 || used < static_cast<int>(labels.size())) {
        o.pass = false;
        o.detail += " missing checks";
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s: %d checks, worst residual/tolerance %.3g", suite.c_str(), used, worst);
    o.detail = buf + o.detail;
    return o;
}

Outcome merge(std::vector<Outcome> parts) {
    Outcome o;
    for (auto& p : parts) {
        o.pass = o.pass && p.pass;
        o.detail += (o.detail.empty() ? "" : "; ") + p.detail;
    }
    return o;
}

Outcome determinism() {
    const auto& names = suite_names();
    std::string first, second;
    for (const auto& r : verify_suites(names, kSeed)) first += io::dump(to_json(r));
    for (const auto& r : verify_suites(names, kSeed)) second += io::dump(to_json(r));
    Outcome o;
    o.pass = !first.empty() && first == second;
    o.detail = std::to_string(first.size()) + " report bytes compared across two runs";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"near-ring laws", [] { return from_suite("near-ring-laws", {"associativity", "right-distributivity"}); }},
        {"product formula", [] { return from_suite("lam-leroy-product", {"untwisted"}); }},
        {"linear skew inverse", [] { return from_suite("inverses"); }},
        {"orbit-affine theory", [] { return from_suite("orbital-leibniz", {"leibniz", "witness-spread"}); }},
        {"derivative calculus", [] { return merge({from_suite("derivative-rules"), from_suite("chain-rule")}); }},
        {"skew implies slice", [] { return from_suite("slice-cr"); }},
        {"cauchy reconstruction", [] { return from_suite("cauchy"); }},
        {"coefficient extraction", [] { return from_suite("extraction"); }},
        {"right-inverse series", [] { return from_suite("right-inverse-series", {"fitted-ratio"}); }},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t n = 0; n < criteria.size(); ++n) {
        Outcome o;
        try {
            o = criteria[n].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += !o.pass;
        std::printf("criterion %zu %-24s %s  (%s)\n", n + 1, criteria[n].first.c_str(), o.pass ? "PASS" : "FAIL",
                    o.detail.c_str());
    }
    return failed == 0 ? 0 : 1;
}
