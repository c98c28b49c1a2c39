#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "rclkit/bias.hpp"
#include "rclkit/model_search.hpp"
#include "rclkit/set_granular.hpp"

namespace rclkit {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

/// Writes through a sibling temp file and a rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

/// Serialized form is {"elements", "order" (covers), "covers_only": true}.
FiniteLattice lattice_from_json(const Json& doc);
Json lattice_to_json(const FiniteLattice& lattice);

/// Lattice file plus "lower", "upper" and an optional "complement" map. A
/// claim result document is accepted too; its witness structure is loaded.
RclStructure structure_from_json(const Json& doc);
Json structure_to_json(const RclStructure& s);

/// {"universe", "granules", "mode", "nu"}; "nu" is a selector name or a list
/// of subsets (custom family).
SetRcl set_rcl_from_json(const Json& doc);
Json set_rcl_to_json(const SetRcl& s);
bool is_set_rcl_document(const Json& doc);

/// {"cases": [{"C", "E", "F"}, ...]} with element names or subset literals.
std::vector<ElementCase> element_cases_from_json(const FiniteLattice& lattice, const Json& config);
std::vector<SubsetCase> subset_cases_from_json(const SetRcl& s, const Json& config);

Json rational_to_json(const Rational& r);

Json claim_result_to_json(const ClaimResult& r);
ClaimResult claim_result_from_json(const Json& doc);

/// Either host kind a command may run on.
using Host = std::variant<RclStructure, SetRcl>;
Host host_from_json(const Json& doc);

std::string dump(const Json& doc);

}  // namespace rclkit
