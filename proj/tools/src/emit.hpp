#ifndef RAMP_TOOLS_EMIT_HPP
#define RAMP_TOOLS_EMIT_HPP

#include "ramp/oracle.hpp"
#include "ramp/schemes.hpp"

#include <json.hpp>

#include <string>

namespace ramp::tool {

/// {"linear": p, "log10": lg} — every emitted probability carries its log10
/// so plotting tools never have to exponentiate tiny values themselves.
nlohmann::json prob_to_json(LogProb p);

nlohmann::json report_to_json(const ReliabilityReport& rep);
std::string report_to_text(const ReliabilityReport& rep);

std::string sweep_to_csv(const SweepTable& table);

nlohmann::json verdict_to_json(const ValidationVerdict& v);

/// Stable 64-bit FNV-1a, hex-encoded. Used for the config hash in sidecars.
std::string fnv1a_hex(const std::string& bytes);

/// Write `content` to `path`, or stdout when path is empty. When a path is
/// given, also writes `<path>.meta.json` carrying tool version, config hash
/// and seed (timestamps stay out of the data files).
void emit_output(const std::string& path, const std::string& content,
                 const nlohmann::json& effective_config, std::uint64_t seed);

} // namespace ramp::tool

#endif
