#pragma once

#include "qlab/claims.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qlab {

/// Claim <-> JSON manifest. A manifest is {"claims": [...]}; each document
/// carries id, kind, modulus ("exact" or an integer), source, and either
/// lhs/rhs stream objects {series, stride, offset, start} or a "streams"
/// array when a claim groups more than two progressions. exact_identity
/// entries serialize their rendered expressions and are resolved back to the
/// built-in builders by id on import.
nlohmann::json claim_to_json(const Claim& claim);
Claim claim_from_json(const nlohmann::json& doc);

nlohmann::json claims_to_manifest(const std::vector<Claim>& claims);
std::vector<Claim> claims_from_manifest(const nlohmann::json& manifest);
std::vector<Claim> load_manifest_file(const std::string& path);

/// Verification report rendered around the claim's manifest document, so
/// reports round-trip through the manifest schema.
nlohmann::json report_to_json(const Claim& claim, const VerificationReport& report);

}  // namespace qlab
