#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rclkit/aggregation.hpp"
#include "rclkit/bias.hpp"
#include "rclkit/io.hpp"
#include "rclkit/model_search.hpp"
#include "rclkit/negation.hpp"
#include "rclkit/set_granular.hpp"

namespace rclkit {

enum class Format { Json, Markdown, TextTable };
Format parse_format(std::string_view name);  // UnsupportedFormat on anything else
std::string_view format_name(Format f);

/// A command result ready for rendering. `text` is empty when the payload
/// has no tabular text form.
struct Payload {
  Json json;
  std::string markdown;
  std::optional<std::string> text;
};

std::string render(const Payload& p, Format f);

Payload axiom_payload(const RclStructure& s);
Payload operation_table_payload(const OperationTable& t, std::string_view symbol, std::string_view status);
Payload unary_table_payload(const UnaryTable& t, std::string_view symbol, std::string_view status);
/// One titled section per law family.
Payload laws_payload(const std::vector<std::pair<std::string, LawFlags>>& sections, const FiniteLattice& lattice,
                     std::string_view status);
Payload tarski_payload(const std::vector<std::pair<std::string, TarskiReport>>& sections, const FiniteLattice& lattice);
Payload sgrcl_payload(const SgrclReport& r, const SetRcl& s, UnderlapScope scope);
Payload rough_objects_payload(const RclStructure& s, const RoughOrderReport& order);
Payload bias_payload(const BiasReport& r);
Payload claim_payload(const ClaimResult& r);
Payload partition_payload(const InformationTable& t, const std::vector<std::string>& attributes, const Granulation& g);
Payload dependence_payload(const SetRcl& s, const Subset& x, const Subset& z, const DependenceResult& d);

/// Display width in terminal columns, counting code points.
std::size_t display_width(std::string_view s);

}  // namespace rclkit
