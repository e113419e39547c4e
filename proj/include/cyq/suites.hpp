#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cyq/gm_verify.hpp"
#include "cyq/ode.hpp"

namespace cyq {

struct ReportEntry {
    std::string suite;
    CheckResult check;
    /// Where the first disagreement sits, e.g. "q^9" or "(-1/50)t2 q^7"; empty on success.
    std::string first_failure;
    double millis = 0;
};

/// Supplies the quintic ODE solution at a requested order (possibly from a cache).
using SolutionSource = std::function<SeriesSolution(int order)>;

const std::vector<std::string> &suite_names(); ///< tables, oracle, conjecture, symbolic

/// Runs one named suite at the given order; throws std::invalid_argument for an unknown name.
std::vector<ReportEntry> run_suite(const std::string &suite, int order, const SolutionSource &source);

} // namespace cyq
