#include "run_config.hpp"

#include <fstream>
#include <set>

namespace ramp::tool {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::string& where,
                         const std::set<std::string>& allowed) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.contains(key)) {
            throw ConfigError(where + ": unknown key \"" + key + "\"");
        }
    }
}

template <typename T>
void read_field(const json& obj, const std::string& where,
                const std::string& key, T& out) {
    if (!obj.contains(key)) {
        return;
    }
    try {
        out = obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(where + "." + key + ": wrong type");
    }
}

MemoryConfig parse_memory(const json& j) {
    reject_unknown_keys(j, "memory",
                        {"rber", "cache_line_bytes", "block_bytes",
                         "perf_tier_overhead", "perf_filter", "granularity",
                         "tail_variant", "tail_threshold"});
    MemoryConfig m;
    read_field(j, "memory", "rber", m.rber);
    read_field(j, "memory", "cache_line_bytes", m.cache_line_bytes);
    read_field(j, "memory", "block_bytes", m.block_bytes);
    read_field(j, "memory", "perf_tier_overhead", m.perf_tier_overhead);
    read_field(j, "memory", "perf_filter", m.perf_filter);
    if (j.contains("granularity")) {
        const auto g = j.at("granularity").get<std::string>();
        if (g == "cache_lines") {
            m.granularity = BlockGranularity::CacheLines;
        } else if (g == "codewords") {
            m.granularity = BlockGranularity::Codewords;
        } else {
            throw ConfigError("memory.granularity: expected cache_lines|codewords");
        }
    }
    if (j.contains("tail_variant")) {
        const auto v = j.at("tail_variant").get<std::string>();
        if (v == "corrected") {
            m.tail_variant = TailVariant::SuccessComplement;
        } else if (v == "as_printed") {
            m.tail_variant = TailVariant::AsPrinted;
        } else {
            throw ConfigError("memory.tail_variant: expected corrected|as_printed");
        }
    }
    if (j.contains("tail_threshold")) {
        const auto v = j.at("tail_threshold").get<std::string>();
        if (v == "more_than_t") {
            m.tail_threshold = TailThreshold::MoreThanT;
        } else if (v == "at_least_t") {
            m.tail_threshold = TailThreshold::AtLeastT;
        } else {
            throw ConfigError(
                "memory.tail_threshold: expected more_than_t|at_least_t");
        }
    }
    try {
        m.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("memory: ") + e.what());
    }
    return m;
}

Scheme parse_scheme(const json& j, const std::string& where) {
    reject_unknown_keys(j, where, {"kind", "n", "k"});
    if (!j.contains("kind")) {
        throw ConfigError(where + ": missing \"kind\"");
    }
    const auto kind = j.at("kind").get<std::string>();
    try {
        if (kind == "baseline") {
            return Scheme::baseline();
        }
        if (kind == "primary_backup") {
            if (!j.contains("n")) {
                throw ConfigError(where + ": primary_backup requires \"n\"");
            }
            return Scheme::primary_backup(j.at("n").get<int>());
        }
        if (kind == "erasure_code") {
            if (!j.contains("n") || !j.contains("k")) {
                throw ConfigError(where + ": erasure_code requires \"n\" and \"k\"");
            }
            return Scheme::erasure_code(j.at("n").get<int>(),
                                        j.at("k").get<int>());
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(where + ": " + e.what());
    }
    throw ConfigError(where +
                      ": kind must be baseline|primary_backup|erasure_code");
}

std::vector<long> parse_range(const json& j) {
    if (j.is_array()) {
        return j.get<std::vector<long>>();
    }
    if (j.is_object()) {
        reject_unknown_keys(j, "sweep.range", {"from", "to", "step"});
        const long from = j.at("from").get<long>();
        const long to = j.at("to").get<long>();
        const long step = j.value("step", 1L);
        if (step <= 0 || to < from) {
            throw ConfigError("sweep.range: need from <= to and step > 0");
        }
        std::vector<long> r;
        for (long v = from; v <= to; v += step) {
            r.push_back(v);
        }
        return r;
    }
    throw ConfigError("sweep.range: expected array or {from,to,step}");
}

const char* granularity_name(BlockGranularity g) {
    return g == BlockGranularity::CacheLines ? "cache_lines" : "codewords";
}
const char* tail_variant_name(TailVariant v) {
    return v == TailVariant::SuccessComplement ? "corrected" : "as_printed";
}
const char* tail_threshold_name(TailThreshold t) {
    return t == TailThreshold::MoreThanT ? "more_than_t" : "at_least_t";
}

json scheme_to_json(const Scheme& s) {
    switch (s.kind) {
    case Scheme::Kind::Baseline:
        return {{"kind", "baseline"}};
    case Scheme::Kind::PrimaryBackup:
        return {{"kind", "primary_backup"}, {"n", s.total_blocks}};
    case Scheme::Kind::ErasureCode:
        return {{"kind", "erasure_code"},
                {"n", s.total_blocks},
                {"k", s.data_blocks}};
    }
    return {};
}

} // namespace

RunConfig RunConfig::from_json(const json& j) {
    if (!j.is_object()) {
        throw ConfigError("config root must be a JSON object");
    }
    reject_unknown_keys(j, "config",
                        {"memory", "code", "scheme", "schemes", "targets",
                         "oracle", "sweep", "output"});
    RunConfig c;
    if (j.contains("memory")) {
        c.memory = parse_memory(j.at("memory"));
    }
    if (j.contains("code")) {
        const auto& cj = j.at("code");
        reject_unknown_keys(cj, "code", {"k", "t"});
        read_field(cj, "code", "k", c.code.data_bits);
        read_field(cj, "code", "t", c.code.correctable);
        if (c.code.data_bits < 2) {
            throw ConfigError("code.k: must be >= 2");
        }
        if (c.code.correctable < 0) {
            throw ConfigError("code.t: must be >= 0");
        }
    }
    if (j.contains("scheme") && j.contains("schemes")) {
        throw ConfigError("config: give either \"scheme\" or \"schemes\", not both");
    }
    if (j.contains("scheme")) {
        c.schemes = {parse_scheme(j.at("scheme"), "scheme")};
    } else if (j.contains("schemes")) {
        c.schemes.clear();
        for (const auto& sj : j.at("schemes")) {
            c.schemes.push_back(parse_scheme(sj, "schemes[]"));
        }
        if (c.schemes.empty()) {
            throw ConfigError("schemes: must not be empty");
        }
    }
    if (j.contains("targets")) {
        const auto& tj = j.at("targets");
        reject_unknown_keys(tj, "targets", {"due", "due_from_baseline_t", "nde"});
        if (tj.contains("due")) {
            c.targets.due = tj.at("due").get<double>();
        }
        if (tj.contains("due_from_baseline_t")) {
            c.targets.due_from_baseline_t =
                tj.at("due_from_baseline_t").get<int>();
        }
        if (tj.contains("nde")) {
            c.targets.nde = tj.at("nde").get<double>();
        }
        if (c.targets.due && c.targets.due_from_baseline_t) {
            throw ConfigError(
                "targets: give either due or due_from_baseline_t, not both");
        }
    }
    if (j.contains("oracle")) {
        const auto& oj = j.at("oracle");
        reject_unknown_keys(oj, "oracle", {"trials", "seed", "z_threshold"});
        read_field(oj, "oracle", "trials", c.oracle.trials);
        read_field(oj, "oracle", "seed", c.oracle.seed);
        read_field(oj, "oracle", "z_threshold", c.oracle.z_threshold);
    }
    if (j.contains("sweep")) {
        const auto& sj = j.at("sweep");
        reject_unknown_keys(sj, "sweep", {"axis", "range", "mode"});
        read_field(sj, "sweep", "axis", c.sweep.axis);
        read_field(sj, "sweep", "mode", c.sweep.mode);
        if (sj.contains("range")) {
            c.sweep.range = parse_range(sj.at("range"));
        }
    }
    if (j.contains("output")) {
        const auto& oj = j.at("output");
        reject_unknown_keys(oj, "output", {"format", "path"});
        read_field(oj, "output", "format", c.output.format);
        read_field(oj, "output", "path", c.output.path);
        if (c.output.format != "text" && c.output.format != "json" &&
            c.output.format != "csv") {
            throw ConfigError("output.format: expected text|json|csv");
        }
    }
    return c;
}

json RunConfig::to_json() const {
    json schemes_j = json::array();
    for (const auto& s : schemes) {
        schemes_j.push_back(scheme_to_json(s));
    }
    json targets_j;
    if (targets.due) {
        targets_j["due"] = *targets.due;
    }
    if (targets.due_from_baseline_t) {
        targets_j["due_from_baseline_t"] = *targets.due_from_baseline_t;
    }
    if (targets.nde) {
        targets_j["nde"] = *targets.nde;
    }
    return {
        {"memory",
         {{"rber", memory.rber},
          {"cache_line_bytes", memory.cache_line_bytes},
          {"block_bytes", memory.block_bytes},
          {"perf_tier_overhead", memory.perf_tier_overhead},
          {"perf_filter", memory.perf_filter},
          {"granularity", granularity_name(memory.granularity)},
          {"tail_variant", tail_variant_name(memory.tail_variant)},
          {"tail_threshold", tail_threshold_name(memory.tail_threshold)}}},
        {"code", {{"k", code.data_bits}, {"t", code.correctable}}},
        {"schemes", schemes_j},
        {"targets", targets_j},
        {"oracle",
         {{"trials", oracle.trials},
          {"seed", oracle.seed},
          {"z_threshold", oracle.z_threshold}}},
        {"sweep",
         {{"axis", sweep.axis}, {"range", sweep.range}, {"mode", sweep.mode}}},
        {"output", {{"format", output.format}, {"path", output.path}}},
    };
}

SweepAxis RunConfig::sweep_axis() const {
    if (sweep.axis == "t") {
        return SweepAxis::CodeStrength;
    }
    if (sweep.axis == "block_bytes") {
        return SweepAxis::BlockBytes;
    }
    if (sweep.axis == "n") {
        return SweepAxis::Replicas;
    }
    throw ConfigError("sweep.axis: expected t|block_bytes|n");
}

SweepMode RunConfig::sweep_mode() const {
    if (sweep.mode == "raw") {
        return SweepMode::Raw;
    }
    if (sweep.mode == "overhead_at_target") {
        return SweepMode::OverheadAtTarget;
    }
    throw ConfigError("sweep.mode: expected raw|overhead_at_target");
}

std::optional<LogProb> RunConfig::resolved_target_due() const {
    if (targets.due) {
        if (!(*targets.due > 0.0 && *targets.due <= 1.0)) {
            throw ConfigError("targets.due: must be in (0,1]");
        }
        return LogProb::from_linear(*targets.due);
    }
    if (targets.due_from_baseline_t) {
        const ReliabilityReport ref =
            analyze(bch_code(code.data_bits, *targets.due_from_baseline_t),
                    memory, Scheme::baseline());
        return ref.p_lb_due;
    }
    return std::nullopt;
}

std::optional<LogProb> RunConfig::resolved_target_nde() const {
    if (!targets.nde) {
        return std::nullopt;
    }
    if (!(*targets.nde > 0.0 && *targets.nde <= 1.0)) {
        throw ConfigError("targets.nde: must be in (0,1]");
    }
    return LogProb::from_linear(*targets.nde);
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    return RunConfig::from_json(j);
}

} // namespace ramp::tool
