#pragma once

/*
 * report.hpp
 * ----------
 * JSON run reports (schema 1): command, input digests, verdicts, witness
 * chains, seed and timings, plus a determinism digest over everything
 * except the timing fields.  Two runs with the same inputs and seed must
 * produce the same digest.
 */

#include <json.hpp>

#include <string>
#include <string_view>

#include "keller/automorphism.hpp"
#include "keller/reduction.hpp"

namespace keller {

std::uint64_t fnv1a64(std::string_view data);
std::string digest_hex(std::string_view data);

nlohmann::json make_report(const std::string& command);
void report_add_input(nlohmann::json& report, const std::string& label, std::string_view content);

/// Dump with "timings" and "determinism_digest" removed, then hash.
std::string determinism_digest(const nlohmann::json& report);

/// Sets elapsed time and the determinism digest.
void finalize_report(nlohmann::json& report, double elapsed_seconds);

nlohmann::json to_json(const Automorphism& a);
nlohmann::json to_json(const EquivalenceWitness& w);
nlohmann::json to_json(const PolyMap& f);
nlohmann::json to_json(const ChainLink& link);

}  // namespace keller
