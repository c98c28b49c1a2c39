#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rclkit/bitset.hpp"
#include "rclkit/error.hpp"

namespace rclkit {

/// Index of an element in a lattice carrier.
using Elem = std::uint32_t;

inline constexpr std::size_t kMaxExplicitElements = 4096;

enum class LatticeOp { Meet, Join };

/// Finite bounded lattice with materialized order, meet and join tables.
/// Immutable once built.
class FiniteLattice {
 public:
  /// Builds from declared names and arbitrary `x <= y` pairs; the
  /// reflexive-transitive closure is taken internally.
  static FiniteLattice build(std::vector<std::string> names,
                             const std::vector<std::pair<std::string, std::string>>& order);

  /// Same as `build` with pairs given as indices into `names`.
  static FiniteLattice build_indexed(std::vector<std::string> names,
                                     const std::vector<std::pair<Elem, Elem>>& order);

  /// Powerset of `items` ordered by inclusion. Element `k` is the subset whose
  /// bit `i` is set iff item `i` belongs to it.
  static FiniteLattice powerset(const std::vector<std::string>& items);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Elem e) const { return names_.at(e); }

  /// Resolves a name. `bot`/`⊥` and `top`/`⊤` resolve to the bounds when no
  /// element is declared under that spelling.
  Elem find(std::string_view name) const;
  std::optional<Elem> try_find(std::string_view name) const;

  bool leq(Elem a, Elem b) const noexcept { return up_[a].test(b); }
  Elem meet(Elem a, Elem b) const noexcept { return meet_[a * size() + b]; }
  Elem join(Elem a, Elem b) const noexcept { return join_[a * size() + b]; }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  const ElementSet& up_set(Elem a) const noexcept { return up_[a]; }
  const ElementSet& down_set(Elem a) const noexcept { return down_[a]; }

  /// Hasse diagram edges (x, y) with y covering x, sorted by index.
  std::vector<std::pair<Elem, Elem>> covers() const;

  /// Same names in the same order and the same order relation.
  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.names_ == b.names_ && a.up_ == b.up_;
  }

 private:
  FiniteLattice() = default;
  void index_names();
  void materialize_bounds_and_tables();

  std::vector<std::string> names_;
  std::unordered_map<std::string, Elem> by_name_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

Elem lattice_op(const FiniteLattice& lattice, LatticeOp which, Elem a, Elem b);

struct Extrema {
  Elem inf;
  Elem sup;
};

/// Iterated meet and join over `subset`; the empty subset yields (top, bottom).
Extrema subset_extrema(const FiniteLattice& lattice, const ElementSet& subset);

/// Upward closure of `a`. Its `count()` is the filter cardinality.
ElementSet principal_filter(const FiniteLattice& lattice, Elem a);

/// Canonical form of a bound alias: `bot` -> `⊥`, `top` -> `⊤`, else unchanged.
std::string_view canonical_alias(std::string_view name);

}  // namespace rclkit
