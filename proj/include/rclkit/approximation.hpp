#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "rclkit/laws.hpp"
#include "rclkit/lattice.hpp"

namespace rclkit {

enum class Axiom {
  Lu1Idempotence,  // x^ll = x^l
  Lu1Sandwich,     // x^l <= x <= x^u
  Lu1Uu,           // x^u <= x^uu
  LMo,
  UMo,
  Lu2Ineq,  // a^l v b^l <= (a v b)^l
  Lu2Eq,    // a^u v b^u = (a v b)^u
  Lu3Eq,    // (a ^ b)^l = a^l ^ b^l
  Lu3Ineq,  // (a ^ b)^u <= a^u ^ b^u
  TopBot,
};

inline constexpr std::size_t kAxiomCount = 10;
std::string_view axiom_name(Axiom axiom);
std::optional<Axiom> axiom_from_name(std::string_view name);

struct AxiomReport : LawFlags {
  bool is_core = false;  // lu1 (all three parts), l-mo, u-mo, topbot
  bool is_rcl = false;   // every axiom
  const LawResult& operator[](Axiom a) const { return laws[static_cast<std::size_t>(a)]; }
};

/// A finite lattice with total lower/upper operator tables and an optional
/// complement table. The axiom report is computed once on construction;
/// structures failing it stay fully usable.
class RclStructure {
 public:
  RclStructure(std::shared_ptr<const FiniteLattice> lattice, std::vector<Elem> lower,
               std::vector<Elem> upper, std::optional<std::vector<Elem>> complement = std::nullopt);

  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  const std::shared_ptr<const FiniteLattice>& lattice_ptr() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return lower_.size(); }

  Elem lower(Elem x) const noexcept { return lower_[x]; }
  Elem upper(Elem x) const noexcept { return upper_[x]; }
  const std::vector<Elem>& lower_table() const noexcept { return lower_; }
  const std::vector<Elem>& upper_table() const noexcept { return upper_; }

  bool has_complement() const noexcept { return complement_.has_value(); }
  Elem complement(Elem x) const;
  const std::optional<std::vector<Elem>>& complement_table() const noexcept { return complement_; }

  const AxiomReport& axioms() const noexcept { return report_; }

 private:
  std::shared_ptr<const FiniteLattice> lattice_;
  std::vector<Elem> lower_;
  std::vector<Elem> upper_;
  std::optional<std::vector<Elem>> complement_;
  AxiomReport report_;
};

AxiomReport check_rcl_axioms(const RclStructure& s);

/// "rcl", "core-only" or "not-rcl".
std::string_view axiom_status(const AxiomReport& r);

/// Re-evaluates one axiom at one tuple (a single element for the unary
/// axioms, a pair for the binary ones). True when the axiom holds there.
bool axiom_holds_at(const RclStructure& s, Axiom axiom, std::span<const Elem> tuple);

enum class DefiniteKind { Lower, Upper, Both };
ElementSet definite_elements(const RclStructure& s, DefiniteKind kind);

enum class Variant { Both, Lower, Upper };

/// Maximal class of elements sharing their approximation signature.
struct RoughObject {
  std::optional<Elem> lower_end;
  std::optional<Elem> upper_end;
  ElementSet members;
  Variant variant;
};

/// Objects are listed in order of their first member.
std::vector<RoughObject> rough_objects(const RclStructure& s, Variant variant);

struct RoughOrderReport {
  std::vector<RoughObject> objects;
  /// related[i * k + j] iff objects[i] is below objects[j].
  std::vector<bool> related;
  bool reflexive = true;
  bool antisymmetric = true;
  bool transitive = true;
  std::optional<std::size_t> least;
  std::optional<std::size_t> greatest;
  bool bottom_pair_least = false;  // (⊥,⊥) is an object and the least one
  bool top_pair_greatest = false;  // (⊤,⊤) is an object and the greatest one
  std::vector<bool> meet_exists;
  std::vector<bool> join_exists;
  bool all_meets_exist = true;
  bool all_joins_exist = true;
};

RoughOrderReport rough_order(const RclStructure& s);

enum class Relation { Less, Greater, Equal, Incomparable };
std::string_view relation_name(Relation r);
Relation compare(const FiniteLattice& lattice, Elem a, Elem b);

struct WeakComplementReport {
  LawResult c1;  // x^cc <= x
  LawResult c2;  // x^c ^ x = ⊥
  /// Per element: relation of ~a to a^{lc}.
  std::vector<Relation> sim_vs_lc;
  bool bound_holds = true;  // ~a <= a^{lc} everywhere
};

WeakComplementReport check_weak_complementation(const RclStructure& s);

}  // namespace rclkit
