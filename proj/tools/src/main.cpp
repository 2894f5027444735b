#include "emit.hpp"
#include "run_config.hpp"
#include "validate_suite.hpp"

#include "ramp/oracle.hpp"
#include "ramp/schemes.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace ramp;
using namespace ramp::tool;

constexpr int kExitOk = 0;
constexpr int kExitValidationFailed = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitOraclePrecondition = 4;

struct CommonOpts {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<std::string> format;
    std::optional<std::string> out;
    int t_max = 512;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "JSON run configuration");
    cmd->add_option("--seed", opts.seed, "Override oracle.seed");
    cmd->add_option("--trials", opts.trials, "Override oracle.trials");
    cmd->add_option("--format", opts.format, "Output format: json|csv|text");
    cmd->add_option("--out", opts.out, "Output path (default stdout)");
}

/// File config first, then flags on top.
RunConfig effective_config(const CommonOpts& opts) {
    RunConfig cfg = opts.config_path.empty() ? RunConfig{}
                                             : load_config_file(opts.config_path);
    if (opts.seed) {
        cfg.oracle.seed = *opts.seed;
    }
    if (opts.trials) {
        cfg.oracle.trials = *opts.trials;
    }
    if (opts.format) {
        if (*opts.format != "text" && *opts.format != "json" &&
            *opts.format != "csv") {
            throw ConfigError("--format: expected text|json|csv");
        }
        cfg.output.format = *opts.format;
    }
    if (opts.out) {
        cfg.output.path = *opts.out;
    }
    return cfg;
}

std::string render_report(const ReliabilityReport& rep,
                          const RunConfig& cfg) {
    if (cfg.output.format == "json") {
        return report_to_json(rep).dump(2) + "\n";
    }
    return report_to_text(rep);
}

int cmd_analyze(const CommonOpts& opts) {
    const RunConfig cfg = effective_config(opts);
    std::string out;
    for (const auto& scheme : cfg.schemes) {
        const ReliabilityReport rep = analyze(
            bch_code(cfg.code.data_bits, cfg.code.correctable), cfg.memory,
            scheme);
        if (cfg.schemes.size() > 1) {
            out += "# scheme " + scheme.name() + "\n";
        }
        out += render_report(rep, cfg);
    }
    emit_output(cfg.output.path, out, cfg.to_json(), cfg.oracle.seed);
    return kExitOk;
}

int cmd_optimize(const CommonOpts& opts) {
    const RunConfig cfg = effective_config(opts);
    const auto target_due = cfg.resolved_target_due();
    if (!target_due) {
        throw ConfigError("optimize: targets.due or targets.due_from_baseline_t required");
    }
    const auto target_nde = cfg.resolved_target_nde();

    // Savings are quoted against the t=22 baseline reference overhead.
    const double reference =
        storage_overhead(bch_code(cfg.code.data_bits, 22), cfg.memory);

    std::string out;
    for (const auto& scheme : cfg.schemes) {
        const ReliabilityReport rep =
            optimize(cfg.memory, scheme, *target_due, target_nde,
                     cfg.code.data_bits, opts.t_max);
        if (cfg.schemes.size() > 1) {
            out += "# scheme " + scheme.name() + "\n";
        }
        if (cfg.output.format == "json") {
            nlohmann::json j = report_to_json(rep);
            j["t_star"] = rep.code.correctable;
            j["reference_overhead"] = reference;
            j["savings_points"] = (reference - rep.overhead_total) * 100.0;
            out += j.dump(2) + "\n";
        } else {
            out += render_report(rep, cfg);
            char line[160];
            std::snprintf(line, sizeof(line),
                          "savings vs t=22 baseline: %.1f points (%.1f%% -> "
                          "%.1f%%) at t*=%d\n",
                          (reference - rep.overhead_total) * 100.0,
                          reference * 100.0, rep.overhead_total * 100.0,
                          rep.code.correctable);
            out += line;
        }
    }
    emit_output(cfg.output.path, out, cfg.to_json(), cfg.oracle.seed);
    return kExitOk;
}

int cmd_sweep(const CommonOpts& opts) {
    const RunConfig cfg = effective_config(opts);
    if (cfg.sweep.range.empty()) {
        throw ConfigError("sweep: empty range");
    }
    SweepSpec spec;
    spec.axis = cfg.sweep_axis();
    spec.mode = cfg.sweep_mode();
    spec.range = cfg.sweep.range;
    if (spec.mode == SweepMode::OverheadAtTarget) {
        spec.target_due = cfg.resolved_target_due();
        if (!spec.target_due) {
            // Default target: the t=22 baseline operating point.
            RunConfig ref = cfg;
            ref.targets.due_from_baseline_t = 22;
            spec.target_due = ref.resolved_target_due();
        }
        spec.target_nde = cfg.resolved_target_nde();
    }

    const CodeSpec base =
        bch_code(cfg.code.data_bits, cfg.code.correctable);
    const bool multi = cfg.schemes.size() > 1;
    for (const auto& scheme : cfg.schemes) {
        SweepTable table;
        try {
            table = sweep(spec, base, cfg.memory, scheme);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("sweep: ") + e.what());
        }
        const std::string csv = sweep_to_csv(table);
        std::string path = cfg.output.path;
        if (!path.empty() && multi) {
            // One file per scheme: stem_scheme.csv
            const auto dot = path.rfind(".csv");
            const std::string stem =
                dot == std::string::npos ? path : path.substr(0, dot);
            path = stem + "_" + scheme.name() + ".csv";
        }
        std::string content;
        if (path.empty() && multi) {
            content = "# scheme " + scheme.name() + "\n";
        }
        content += csv;
        emit_output(path, content, cfg.to_json(), cfg.oracle.seed);
    }
    return kExitOk;
}

int cmd_validate(const CommonOpts& opts) {
    const RunConfig cfg = effective_config(opts);
    ValidationRun run;
    try {
        run = run_validation_suite(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "oracle precondition failed: " << e.what() << "\n";
        return kExitOraclePrecondition;
    }
    emit_output(cfg.output.path, run.output.dump(2) + "\n", cfg.to_json(),
                cfg.oracle.seed);
    return run.all_pass ? kExitOk : kExitValidationFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Reliability/storage-overhead modeling for replication-aware "
        "memory-error protection"};
    app.require_subcommand(1);

    CommonOpts opts;
    auto* analyze_cmd =
        app.add_subcommand("analyze", "Single-point reliability report");
    auto* sweep_cmd =
        app.add_subcommand("sweep", "Parameter sweep, CSV output");
    auto* optimize_cmd = app.add_subcommand(
        "optimize", "Minimal code strength meeting DUE/NDE targets");
    optimize_cmd->add_option("--t-max", opts.t_max,
                             "Upper bound of the code-strength scan");
    auto* validate_cmd = app.add_subcommand(
        "validate", "Check the analytic model against exact enumeration and "
                    "Monte Carlo");
    for (auto* cmd : {analyze_cmd, sweep_cmd, optimize_cmd, validate_cmd}) {
        add_common(cmd, opts);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    try {
        if (analyze_cmd->parsed()) {
            return cmd_analyze(opts);
        }
        if (sweep_cmd->parsed()) {
            return cmd_sweep(opts);
        }
        if (optimize_cmd->parsed()) {
            return cmd_optimize(opts);
        }
        return cmd_validate(opts);
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
}
