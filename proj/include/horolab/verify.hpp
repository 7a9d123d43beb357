#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "horolab/minkowski.hpp"

namespace horolab {

/// One invariant check: pass iff max_residual < tolerance (strict, so a
/// forced tolerance of zero fails everything).
struct Check {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<Check> checks;

    bool all_pass() const;
};

const std::vector<std::string>& suite_names();  // parallels, horosphere, duality, units, all

/// Run the named module's invariant suite.  tol_override, when present,
/// replaces every check's tolerance (fault-injection hook).
SuiteReport run_suite(const std::string& suite, std::uint64_t seed, Curvature k = {},
                      std::optional<double> tol_override = {});

std::string report_to_json(const SuiteReport& rep);
std::string report_to_text(const SuiteReport& rep);

}  // namespace horolab
