#ifndef RAMP_TOOLS_RUN_CONFIG_HPP
#define RAMP_TOOLS_RUN_CONFIG_HPP

#include "ramp/codes.hpp"
#include "ramp/schemes.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramp::tool {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CodeConfig {
    int data_bits = 2048;
    int correctable = 22;
};

struct TargetsConfig {
    std::optional<double> due;
    /// Convenience: derive the DUE target from a baseline run at this code
    /// strength under the same memory config.
    std::optional<int> due_from_baseline_t;
    std::optional<double> nde;
};

struct OracleConfig {
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 42;
    double z_threshold = 4.0;
};

struct SweepConfig {
    std::string axis = "t";
    std::vector<long> range;
    std::string mode = "raw";
};

struct OutputConfig {
    std::string format = "text"; // text | json | csv
    std::string path;            // empty: stdout
};

struct RunConfig {
    MemoryConfig memory;
    CodeConfig code;
    std::vector<Scheme> schemes{Scheme::baseline()};
    TargetsConfig targets;
    OracleConfig oracle;
    SweepConfig sweep;
    OutputConfig output;

    /// Parse and validate. Unknown keys anywhere are a hard error.
    static RunConfig from_json(const nlohmann::json& j);

    /// Effective configuration, canonical form (used for the sidecar hash).
    nlohmann::json to_json() const;

    SweepAxis sweep_axis() const;
    SweepMode sweep_mode() const;

    /// Resolve the DUE target: explicit value wins, else baseline-t
    /// derivation, else (if required) a ConfigError.
    std::optional<LogProb> resolved_target_due() const;
    std::optional<LogProb> resolved_target_nde() const;
};

RunConfig load_config_file(const std::string& path);

} // namespace ramp::tool

#endif
