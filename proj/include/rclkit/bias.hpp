#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rclkit/approximation.hpp"
#include "rclkit/set_granular.hpp"

namespace rclkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// One (C, E, F) triple of lattice elements.
struct ElementCase {
  Elem c, e, f;
};

/// One (C, E, F) triple in a set RCL.
struct SubsetCase {
  Subset c, e, f;
};

/// The four aggregates of a case and the cardinalities of their principal filters.
struct CaseRecord {
  std::size_t index = 0;
  std::string c, e, f;
  std::string c_cca, c_oa, e_cca, e_oa;
  BigInt card_c_cca, card_c_oa, card_e_cca, card_e_oa;

  bool sharp_degenerate() const { return card_e_oa == card_e_cca; }
};

enum class SharpMode { Strict, SkipDegenerate };

struct SharpResult {
  std::optional<Rational> value;  // empty when every case is degenerate
  std::vector<std::size_t> skipped;
};

/// 1 − (1/k) Σ |F(C·F)| / |F(E·F)|.
Rational bias_flat(std::span<const CaseRecord> cases);

/// 1 − (1/k) Σ (|F(C⊗F)| − |F(C·F)|) / (|F(E⊗F)| − |F(E·F)|). Strict mode
/// raises DegenerateDenominator naming the first zero-denominator case.
SharpResult bias_sharp(std::span<const CaseRecord> cases, SharpMode mode = SharpMode::Strict);

struct BiasReport {
  std::vector<CaseRecord> cases;
  Rational flat;
  std::optional<Rational> sharp;
  std::vector<std::size_t> degenerate;  // cases with a zero sharp denominator
  bool skip_degenerate = false;
  std::string axiom_status;  // stamp of the host structure
};

BiasReport audit(const RclStructure& s, std::span<const ElementCase> cases, SharpMode mode = SharpMode::Strict);

/// Filter cardinalities are counted as 2^(|U| − |X|), so the universe may be
/// larger than anything materializable.
BiasReport audit(const SetRcl& s, std::span<const SubsetCase> cases, SharpMode mode = SharpMode::Strict);

std::string to_string(const Rational& r);

}  // namespace rclkit
