#include "emit.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>

namespace ramp::tool {

namespace {

constexpr const char* kToolVersion = "0.1.0";

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

std::string prob_cell(LogProb p) {
    return p.is_zero() ? "0" : fmt("%.12e", p.linear());
}

std::string log10_cell(LogProb p) {
    return p.is_zero() ? "-inf" : fmt("%.6f", p.log10());
}

std::string code_name(const CodeSpec& c) {
    return "BCH(" + std::to_string(c.codeword_bits) + "," +
           std::to_string(c.data_bits) + "," + std::to_string(c.correctable) +
           ")";
}

} // namespace

nlohmann::json prob_to_json(LogProb p) {
    nlohmann::json j;
    j["linear"] = p.linear();
    if (p.is_zero()) {
        j["log10"] = "-inf";
    } else {
        j["log10"] = p.log10();
    }
    return j;
}

nlohmann::json report_to_json(const ReliabilityReport& rep) {
    return {
        {"scheme", rep.scheme.name()},
        {"code",
         {{"n", rep.code.codeword_bits},
          {"k", rep.code.data_bits},
          {"t", rep.code.correctable}}},
        {"overhead_total", rep.overhead_total},
        {"p_c_due", prob_to_json(rep.p_c_due)},
        {"p_c_nde", prob_to_json(rep.p_c_nde)},
        {"p_b_due", prob_to_json(rep.p_b_due)},
        {"p_b_nde", prob_to_json(rep.p_b_nde)},
        {"p_lb_due", prob_to_json(rep.p_lb_due)},
        {"a_r", rep.a_r},
        {"q_miscorrect", prob_to_json(rep.code.q_miscorrect)},
    };
}

std::string report_to_text(const ReliabilityReport& rep) {
    std::string out;
    auto line = [&out](const std::string& key, const std::string& value) {
        out += key;
        out.append(key.size() < 16 ? 16 - key.size() : 1, ' ');
        out += value;
        out += "\n";
    };
    auto prob_line = [&](const std::string& key, LogProb p) {
        line(key, prob_cell(p) + "  (log10 " + log10_cell(p) + ")");
    };
    line("scheme", rep.scheme.name());
    line("code", code_name(rep.code));
    // Overhead as a percentage with one decimal (27.0%, 17.7%).
    line("overhead_total", fmt("%.1f%%", rep.overhead_total * 100.0));
    prob_line("p_c_due", rep.p_c_due);
    prob_line("p_c_nde", rep.p_c_nde);
    prob_line("p_b_due", rep.p_b_due);
    prob_line("p_b_nde", rep.p_b_nde);
    prob_line("p_lb_due", rep.p_lb_due);
    line("a_r", fmt("%.6e", rep.a_r));
    prob_line("q_miscorrect", rep.code.q_miscorrect);
    return out;
}

std::string sweep_to_csv(const SweepTable& table) {
    const char* axis_name = table.axis == SweepAxis::CodeStrength ? "t"
                            : table.axis == SweepAxis::BlockBytes
                                ? "block_bytes"
                                : "n";
    std::string out;
    if (table.mode == SweepMode::Raw) {
        out = std::string(axis_name) +
              ",overhead_total,p_lb_due,p_b_nde,a_r,p_lb_due_log10,"
              "p_b_nde_log10\n";
        for (const auto& r : table.rows) {
            out += std::to_string(r.axis_value) + "," +
                   fmt("%.9f", r.overhead_total) + "," + prob_cell(r.p_lb_due) +
                   "," + prob_cell(r.p_b_nde) + "," + fmt("%.12e", r.a_r) +
                   "," + log10_cell(r.p_lb_due) + "," + log10_cell(r.p_b_nde) +
                   "\n";
        }
    } else {
        out = std::string(axis_name) + ",overhead_at_target\n";
        for (const auto& r : table.rows) {
            out += std::to_string(r.axis_value) + ",";
            out += r.feasible ? fmt("%.9f", r.overhead_total) : "infeasible";
            out += "\n";
        }
    }
    return out;
}

nlohmann::json verdict_to_json(const ValidationVerdict& v) {
    return {
        {"name", v.name},       {"analytic", v.analytic},
        {"empirical", v.empirical}, {"std_error", v.std_error},
        {"z", v.z},             {"pass", v.pass},
        {"low_events", v.low_events}, {"trials", v.trials},
        {"seed", v.seed},
    };
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
    return buf;
}

void emit_output(const std::string& path, const std::string& content,
                 const nlohmann::json& effective_config, std::uint64_t seed) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    {
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot write output file: " + path);
        }
        out << content;
    }
    const nlohmann::json meta = {
        {"tool", "ramp"},
        {"version", kToolVersion},
        {"config_hash", fnv1a_hex(effective_config.dump())},
        {"seed", seed},
    };
    std::ofstream meta_out(path + ".meta.json", std::ios::binary);
    if (!meta_out) {
        throw std::runtime_error("cannot write sidecar for: " + path);
    }
    meta_out << meta.dump(2) << "\n";
}

} // namespace ramp::tool
