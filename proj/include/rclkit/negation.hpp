#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rclkit/aggregation.hpp"

namespace rclkit {

/// neg: ¬a = inf{z : a⊗z = ⊤}; sim: ~a = sup{z : a·z = ⊥}.
enum class NegKind { Neg, Sim };
std::string_view neg_kind_name(NegKind k);

struct NegationValue {
  Elem value;
  ElementSet defining_set;
  /// Whether the extremum is itself a member of the defining set.
  bool attained;
};

NegationValue negation(const RclStructure& s, NegKind kind, Elem a);

struct UnaryTable {
  std::shared_ptr<const FiniteLattice> lattice;
  std::string kind;  // "neg", "sim" or "custom"
  std::vector<Elem> entries;
  std::vector<bool> attained;  // empty for custom tables

  Elem at(Elem a) const noexcept { return entries[a]; }
};

UnaryTable negation_table(const RclStructure& s, NegKind kind);

/// neg: (¬a)⊗b, o: (¬a)∨b, sim: (~a)·b, s: (~a)∧b.
enum class ImpKind { Neg, O, Sim, S };
std::string_view imp_kind_name(ImpKind k);

Elem implication(const RclStructure& s, ImpKind kind, Elem a, Elem b);
OperationTable implication_table(const RclStructure& s, ImpKind kind);

/// ⊥ only at (⊤,⊥), ⊤ elsewhere.
OperationTable top_implication(std::shared_ptr<const FiniteLattice> lattice);
/// ⊤ only at (⊥,⊤), ⊥ elsewhere.
OperationTable bottom_implication(std::shared_ptr<const FiniteLattice> lattice);

/// FPA, SPM, BC1, BC2, BC3, LNP, EP, OP, IBL, CB, CB-converse, IP, plus the
/// aggregate flag `is-implication` (FPA ∧ SPM ∧ BC1 ∧ BC2 ∧ BC3).
LawFlags check_implication_laws(const FiniteLattice& lattice, const OperationTable& table);

/// N1–N4 against the bare lattice; WN1-N, WN2-N, WN3-N, WN2-S, WN3-S using the
/// structure's l and u. The WN1-N clause "≠⊤ = ⊥" is read as ¬⊤ = ⊥.
LawFlags check_negation_laws(const RclStructure& s, const UnaryTable& table);

struct TarskiReport {
  LawFlags laws;  // LNP, IP, T3, T4
  bool is_tarski = false;
  /// When all laws hold: a ≤ b iff a→b = ⊤ (row-major), and a∨b = (a→b)→b.
  std::vector<bool> induced_order;
  std::vector<Elem> induced_join;
};

TarskiReport check_tarski(const FiniteLattice& lattice, const OperationTable& table);

enum class ImplicationOrder { FirstBelow, SecondBelow, Equal, Incomparable };
std::string_view implication_order_name(ImplicationOrder o);

struct ImplicationComparison {
  ImplicationOrder order;
  /// For Incomparable: a pair where the first is not below the second, then
  /// one where the second is not below the first.
  std::vector<std::pair<Elem, Elem>> witnesses;
};

ImplicationComparison compare_implications(const OperationTable& first, const OperationTable& second);

}  // namespace rclkit
