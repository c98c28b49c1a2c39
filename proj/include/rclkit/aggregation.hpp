#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rclkit/approximation.hpp"

namespace rclkit {

/// cca: a^l ∧ b^l, oa: a^u ∨ b^u, odot: a^l ∨ b^l, cross: a^u ∧ b^u.
enum class AggOp { Cca, Oa, Odot, Cross };

std::string_view agg_op_name(AggOp op);
std::string_view agg_op_symbol(AggOp op);

/// Total binary operation on a lattice carrier, row index = left operand.
struct OperationTable {
  std::shared_ptr<const FiniteLattice> lattice;
  std::string kind;
  std::vector<Elem> entries;

  std::size_t size() const noexcept { return lattice->size(); }
  Elem at(Elem a, Elem b) const noexcept { return entries[a * lattice->size() + b]; }
};

Elem aggregate(const RclStructure& s, AggOp op, Elem a, Elem b);
OperationTable operation_table(const RclStructure& s, AggOp op);

/// Builds a table from any binary function over the carrier.
template <class F>
OperationTable tabulate(std::shared_ptr<const FiniteLattice> lattice, std::string kind, F&& f) {
  const auto n = static_cast<Elem>(lattice->size());
  OperationTable t{std::move(lattice), std::move(kind), {}};
  t.entries.resize(std::size_t{n} * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t.entries[std::size_t{a} * n + b] = f(a, b);
  return t;
}

OperationTable meet_table(std::shared_ptr<const FiniteLattice> lattice);
OperationTable join_table(std::shared_ptr<const FiniteLattice> lattice);

/// Ccomm, Casso, Cm, Cb for `·` and Acomm, wAsso1, wAsso2, Am, Ab for `⊗`.
/// wAsso2 is checked as a⊗((b∨e)⊗a) = ((a∨b)⊗e)⊗e.
LawFlags check_aggregation_laws(const RclStructure& s);

/// Ccomm, Casso, Cm, Cb for an arbitrary table.
LawFlags check_cca_laws(const FiniteLattice& lattice, const OperationTable& dot);
/// Acomm, wAsso1, wAsso2, Am, Ab for an arbitrary table; the wAsso1 premise
/// uses the structure's upper approximation.
LawFlags check_oa_laws(const RclStructure& s, const OperationTable& ot);

enum class NormKind { PseudoUninorm, Uninorm, PseudoTNorm, TNorm, PseudoSNorm, SNorm, None };
std::string_view norm_kind_name(NormKind k);

struct NormClassification {
  NormKind kind = NormKind::None;
  std::vector<std::string> failed;  // of: order-compatible, associative, identity, commutative
};

NormClassification classify_norm(const FiniteLattice& lattice, const OperationTable& table, Elem identity);

}  // namespace rclkit
