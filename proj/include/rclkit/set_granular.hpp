#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rclkit/approximation.hpp"
#include "rclkit/bitset.hpp"

namespace rclkit {

/// Set RCLs above this universe size stay implicit.
inline constexpr std::size_t kMaxMaterializedUniverse = 12;
/// Exhaustive subset scans (sGRCL axioms, ν enumeration) stop here.
inline constexpr std::size_t kMaxScannedUniverse = 20;

struct Universe {
  std::vector<std::string> items;

  std::size_t size() const noexcept { return items.size(); }
  std::optional<std::size_t> try_find(std::string_view item) const;
};

struct Granulation {
  std::vector<Subset> granules;
};

/// Granules given by item names; unknown names raise GranuleOutOfUniverse.
Granulation granulation_from_names(const Universe& universe,
                                   const std::vector<std::vector<std::string>>& granules);

/// Rectangular table of string cells.
struct InformationTable {
  std::vector<std::string> row_ids;
  std::vector<std::string> attributes;
  std::vector<std::vector<std::string>> values;  // values[row][attribute]

  /// First record is the header. With `key_column`, that column names the
  /// rows and is not an attribute; otherwise rows are named r1, r2, ...
  static InformationTable from_csv(std::istream& in, const std::optional<std::string>& key_column = {});

  Universe universe() const { return Universe{row_ids}; }
};

/// Rows grouped by equal values on `attributes`, blocks in order of first row.
Granulation indiscernibility_partition(const InformationTable& table, const std::vector<std::string>& attributes);

enum class GranuleMode { Partition, Covering };
enum class NuSelector { LowerDefinite, Definite, Custom };
std::string_view nu_selector_name(NuSelector nu);

/// How the two dependence degrees read the extremum over ν-elements.
/// Extremal: greatest ν-element inside / least ν-element containing the
/// common-granule union. Literal: meet of the ν-elements inside / join of the
/// ν-elements containing it.
enum class DependenceReading { Extremal, Literal };

/// Powerset-based RCL with lower(X) = ∪{g ⊆ X} and upper(X) = ∪{g ∩ X ≠ ∅}.
class SetRcl {
 public:
  SetRcl(Universe universe, Granulation granulation, GranuleMode mode);

  const Universe& universe() const noexcept { return universe_; }
  const Granulation& granulation() const noexcept { return granulation_; }
  GranuleMode mode() const noexcept { return mode_; }

  NuSelector nu() const noexcept { return nu_; }
  const std::vector<Subset>& custom_nu() const noexcept { return custom_nu_; }
  void set_nu(NuSelector nu, std::vector<Subset> custom = {});

  Subset lower(const Subset& x) const;
  Subset upper(const Subset& x) const;
  Subset empty_set() const { return Subset(universe_.size()); }
  Subset full_set() const { return Subset::full(universe_.size()); }

  /// Accepts `{1,2}`, `1,2`, `{}` or `∅`; items are universe names.
  Subset parse_subset(std::string_view literal) const;
  std::string format_subset(const Subset& s) const;

  /// The ν family, listed in increasing subset order.
  std::vector<Subset> nu_family() const;

  /// Explicit powerset structure; element k is the subset with bit mask k.
  RclStructure materialize() const;

 private:
  Universe universe_;
  Granulation granulation_;
  GranuleMode mode_;
  NuSelector nu_ = NuSelector::LowerDefinite;
  std::vector<Subset> custom_nu_;
};

SetRcl build_set_rcl(Universe universe, Granulation granulation, GranuleMode mode);

/// Subset-valued law outcome.
struct SubsetLaw {
  std::string name;
  bool holds = true;
  std::size_t violations = 0;
  std::vector<std::vector<Subset>> witnesses;
  std::string note;

  void fail(std::vector<Subset> tuple);
};

/// Range of x in the full-underlap axiom.
enum class UnderlapScope { Granules, AllSubsets };

struct SgrclReport {
  SubsetLaw wra;  // every x^l and x^u is a union of granules
  SubsetLaw ls;   // g ⊆ x implies g ⊆ x^l
  SubsetLaw fu;   // for x, a: some definite z strictly contains both
  bool all() const { return wra.holds && ls.holds && fu.holds; }
};

using SubsetMap = std::function<Subset(const Subset&)>;

SgrclReport check_sgrcl_axioms(std::size_t universe_size, const Granulation& granulation,
                               const SubsetMap& lower, const SubsetMap& upper,
                               UnderlapScope scope = UnderlapScope::Granules);
SgrclReport check_sgrcl_axioms(const SetRcl& s, UnderlapScope scope = UnderlapScope::Granules);

struct DependenceResult {
  Subset common_union;  // ∪{g : g ⊆ x and g ⊆ z}
  std::optional<Subset> beta_i;
  std::optional<Subset> beta_s;
  bool beta_i_attained = false;  // the value is itself a ν-element
  bool beta_s_attained = false;
  DependenceReading reading = DependenceReading::Extremal;
};

DependenceResult rough_dependence(const SetRcl& s, const Subset& x, const Subset& z,
                                  DependenceReading reading = DependenceReading::Extremal);

}  // namespace rclkit
