#ifndef RAMP_TOOLS_VALIDATE_SUITE_HPP
#define RAMP_TOOLS_VALIDATE_SUITE_HPP

#include "run_config.hpp"

#include <json.hpp>

namespace ramp::tool {

struct ValidationRun {
    nlohmann::json output;
    bool all_pass = true;
};

/// The default validation suite: exact enumeration and Monte Carlo against
/// the analytic formulas over a probability grid, the as-printed vs
/// corrected a_r comparison table, and codeword-level Monte Carlo at
/// inflated RBER. Deterministic for a fixed (seed, trials).
ValidationRun run_validation_suite(const RunConfig& cfg);

} // namespace ramp::tool

#endif
