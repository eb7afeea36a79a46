#pragma once

#include "seqcap/channels.hpp"
#include "seqcap/qec.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace seqcap {

/// Channel JSON schema:
///   { "dim_in": int, "dim_out": int,
///     "kraus": [ [[ [re,im], ... ] row-major ] ... ] }
nlohmann::json channel_to_json(const QuantumChannel& c);
QuantumChannel channel_from_json(const nlohmann::json& j);

/// Code JSON schema: { "physical_dim": int, "words": [ [ [re,im], ... ], ... ] }
nlohmann::json code_to_json(const Code& code);
Code code_from_json(const nlohmann::json& j);

QuantumChannel load_channel(const std::string& path);
Code load_code(const std::string& path);

/// Fixed 12-significant-digit float formatting for reproducible output.
std::string format_float(double v);

}  // namespace seqcap
