#include "rclkit/set_granular.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <memory>
#include <unordered_map>

namespace rclkit {

namespace {

void require_scannable(std::size_t n) {
  if (n > kMaxScannedUniverse)
    throw Error(ErrorKind::BoundExceeded,
                "exhaustive subset scans are limited to universes of 20 items, got " + std::to_string(n));
}

template <class F>
void for_each_subset(std::size_t n, F&& f) {
  require_scannable(n);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) f(Subset::from_word(n, mask));
}

Subset union_of_granules_inside(const Granulation& g, const Subset& x) {
  Subset out(x.width());
  for (const auto& granule : g.granules)
    if (granule.is_subset_of(x)) out |= granule;
  return out;
}

std::vector<std::string> split_csv_record(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw Error(ErrorKind::InvalidInput, "unterminated quoted CSV field");
  return fields;
}

}  // namespace

std::optional<std::size_t> Universe::try_find(std::string_view item) const {
  for (std::size_t i = 0; i < items.size(); ++i)
    if (items[i] == item) return i;
  return std::nullopt;
}

Granulation granulation_from_names(const Universe& universe,
                                   const std::vector<std::vector<std::string>>& granules) {
  Granulation g;
  for (const auto& names : granules) {
    Subset s(universe.size());
    for (const auto& name : names) {
      const auto i = universe.try_find(name);
      if (!i) throw Error(ErrorKind::GranuleOutOfUniverse, "granule item '" + name + "' is not in the universe");
      s.set(*i);
    }
    g.granules.push_back(std::move(s));
  }
  return g;
}

InformationTable InformationTable::from_csv(std::istream& in, const std::optional<std::string>& key_column) {
  InformationTable t;
  std::string line;
  std::vector<std::vector<std::string>> records;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    records.push_back(split_csv_record(line));
  }
  if (records.empty()) throw Error(ErrorKind::InvalidInput, "CSV input has no header row");
  const auto header = records.front();
  std::optional<std::size_t> key;
  if (key_column) {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == *key_column) key = i;
    if (!key) throw Error(ErrorKind::UnknownAttribute, "no column named '" + *key_column + "'");
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (key && *key == i) continue;
    for (const auto& a : t.attributes)
      if (a == header[i]) throw Error(ErrorKind::InvalidInput, "duplicate attribute '" + a + "'");
    t.attributes.push_back(header[i]);
  }
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != header.size())
      throw Error(ErrorKind::InvalidInput, "CSV row " + std::to_string(r) + " has " + std::to_string(rec.size()) +
                                               " fields, header has " + std::to_string(header.size()));
    std::string id = key ? rec[*key] : "r" + std::to_string(r);
    if (!seen.emplace(id, r).second) throw Error(ErrorKind::InvalidInput, "duplicate row key '" + id + "'");
    std::vector<std::string> row;
    for (std::size_t i = 0; i < rec.size(); ++i)
      if (!key || *key != i) row.push_back(rec[i]);
    t.row_ids.push_back(std::move(id));
    t.values.push_back(std::move(row));
  }
  return t;
}

Granulation indiscernibility_partition(const InformationTable& table, const std::vector<std::string>& attributes) {
  std::vector<std::size_t> cols;
  for (const auto& a : attributes) {
    std::optional<std::size_t> col;
    for (std::size_t i = 0; i < table.attributes.size(); ++i)
      if (table.attributes[i] == a) col = i;
    if (!col) throw Error(ErrorKind::UnknownAttribute, "no attribute named '" + a + "'");
    cols.push_back(*col);
  }
  const std::size_t n = table.row_ids.size();
  std::map<std::vector<std::string>, std::size_t> block_of;
  Granulation g;
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<std::string> signature;
    for (auto c : cols) signature.push_back(table.values[r][c]);
    auto [it, inserted] = block_of.emplace(std::move(signature), g.granules.size());
    if (inserted) g.granules.emplace_back(n);
    g.granules[it->second].set(r);
  }
  return g;
}

std::string_view nu_selector_name(NuSelector nu) {
  switch (nu) {
    case NuSelector::LowerDefinite: return "lower-definite";
    case NuSelector::Definite: return "definite";
    case NuSelector::Custom: return "custom";
  }
  return "?";
}

SetRcl::SetRcl(Universe universe, Granulation granulation, GranuleMode mode)
    : universe_(std::move(universe)), granulation_(std::move(granulation)), mode_(mode) {
  const std::size_t n = universe_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (universe_.items[i] == universe_.items[j])
        throw Error(ErrorKind::InvalidInput, "duplicate universe item '" + universe_.items[i] + "'");
  if (granulation_.granules.empty()) throw Error(ErrorKind::InvalidInput, "granulation is empty");
  for (const auto& g : granulation_.granules)
    if (g.width() != n) throw Error(ErrorKind::GranuleOutOfUniverse, "granule does not range over the universe");
  if (mode_ == GranuleMode::Partition) {
    Subset covered(n);
    for (const auto& g : granulation_.granules) {
      if (g.empty()) throw Error(ErrorKind::NonPartition, "partition block is empty");
      if (g.intersects(covered)) throw Error(ErrorKind::NonPartition, "partition blocks overlap");
      covered |= g;
    }
    if (covered != Subset::full(n)) throw Error(ErrorKind::NonPartition, "partition blocks do not cover the universe");
  }
}

void SetRcl::set_nu(NuSelector nu, std::vector<Subset> custom) {
  for (const auto& c : custom)
    if (c.width() != universe_.size()) throw Error(ErrorKind::InvalidInput, "ν element does not range over the universe");
  nu_ = nu;
  custom_nu_ = std::move(custom);
}

Subset SetRcl::lower(const Subset& x) const { return union_of_granules_inside(granulation_, x); }

Subset SetRcl::upper(const Subset& x) const {
  Subset out(x.width());
  for (const auto& g : granulation_.granules)
    if (g.intersects(x)) out |= g;
  return out;
}

Subset SetRcl::parse_subset(std::string_view literal) const {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(literal);
  Subset out(universe_.size());
  if (body == "∅") return out;
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw Error(ErrorKind::InvalidInput, "unbalanced subset literal '" + std::string(literal) + "'");
    body = trim(body.substr(1, body.size() - 2));
  }
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto item = trim(body.substr(0, comma));
    const auto idx = universe_.try_find(item);
    if (!idx) throw Error(ErrorKind::UnknownElement, "'" + std::string(item) + "' is not in the universe");
    out.set(*idx);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

std::string SetRcl::format_subset(const Subset& s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ',';
    out += universe_.items[i];
    first = false;
  });
  return out + "}";
}

std::vector<Subset> SetRcl::nu_family() const {
  if (nu_ == NuSelector::Custom) {
    auto out = custom_nu_;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  std::vector<Subset> out;
  for_each_subset(universe_.size(), [&](const Subset& v) {
    if (lower(v) != v) return;
    if (nu_ == NuSelector::Definite && upper(v) != v) return;
    out.push_back(v);
  });
  return out;
}

RclStructure SetRcl::materialize() const {
  if (universe_.size() > kMaxMaterializedUniverse)
    throw Error(ErrorKind::BoundExceeded, "set RCLs over more than 12 items are not materialized");
  auto lattice = std::make_shared<const FiniteLattice>(FiniteLattice::powerset(universe_.items));
  const std::size_t n = lattice->size();
  std::vector<Elem> lo(n), up(n);
  for (std::size_t mask = 0; mask < n; ++mask) {
    const auto x = Subset::from_word(universe_.size(), mask);
    lo[mask] = static_cast<Elem>(lower(x).low_word());
    up[mask] = static_cast<Elem>(upper(x).low_word());
  }
  return RclStructure(std::move(lattice), std::move(lo), std::move(up));
}

SetRcl build_set_rcl(Universe universe, Granulation granulation, GranuleMode mode) {
  return SetRcl(std::move(universe), std::move(granulation), mode);
}

void SubsetLaw::fail(std::vector<Subset> tuple) {
  holds = false;
  ++violations;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(tuple));
}

SgrclReport check_sgrcl_axioms(std::size_t n, const Granulation& granulation, const SubsetMap& lower,
                               const SubsetMap& upper, UnderlapScope scope) {
  require_scannable(n);
  SgrclReport r;
  r.wra.name = "WRA";
  r.wra.note = "term: iterated union of granules";
  r.ls.name = "LS";
  r.fu.name = "FU";
  r.fu.note = scope == UnderlapScope::Granules ? "x ranges over granules" : "x ranges over all subsets";

  std::vector<Subset> definite;
  for_each_subset(n, [&](const Subset& x) {
    const Subset xl = lower(x);
    const Subset xu = upper(x);
    if (union_of_granules_inside(granulation, xl) != xl || union_of_granules_inside(granulation, xu) != xu)
      r.wra.fail({x});
    for (const auto& g : granulation.granules)
      if (g.is_subset_of(x) && !g.is_subset_of(xl)) r.ls.fail({g, x});
    if (xl == x && xu == x) definite.push_back(x);
  });

  auto strictly_inside = [](const Subset& a, const Subset& b) { return a.is_subset_of(b) && a != b; };
  auto underlap = [&](const Subset& x) {
    for (const auto& a : granulation.granules) {
      bool found = false;
      for (const auto& z : definite)
        if (strictly_inside(x, z) && strictly_inside(a, z)) {
          found = true;
          break;
        }
      if (!found) r.fu.fail({x, a});
    }
  };
  if (scope == UnderlapScope::Granules) {
    for (const auto& x : granulation.granules) underlap(x);
  } else {
    for_each_subset(n, underlap);
  }
  return r;
}

SgrclReport check_sgrcl_axioms(const SetRcl& s, UnderlapScope scope) {
  return check_sgrcl_axioms(
      s.universe().size(), s.granulation(), [&](const Subset& x) { return s.lower(x); },
      [&](const Subset& x) { return s.upper(x); }, scope);
}

DependenceResult rough_dependence(const SetRcl& s, const Subset& x, const Subset& z, DependenceReading reading) {
  const std::size_t n = s.universe().size();
  if (x.width() != n || z.width() != n) throw Error(ErrorKind::InvalidInput, "subset does not range over the universe");
  DependenceResult r;
  r.reading = reading;
  r.common_union = Subset(n);
  for (const auto& g : s.granulation().granules)
    if (g.is_subset_of(x) && g.is_subset_of(z)) r.common_union |= g;

  const auto family = s.nu_family();
  auto in_family = [&](const Subset& v) { return std::binary_search(family.begin(), family.end(), v); };
  std::vector<const Subset*> inside, containing;
  for (const auto& v : family) {
    if (v.is_subset_of(r.common_union)) inside.push_back(&v);
    if (r.common_union.is_subset_of(v)) containing.push_back(&v);
  }
  if (!inside.empty()) {
    Subset acc = reading == DependenceReading::Extremal ? Subset(n) : Subset::full(n);
    for (const auto* v : inside) {
      if (reading == DependenceReading::Extremal) acc |= *v;
      else acc &= *v;
    }
    r.beta_i_attained = in_family(acc);
    if (reading == DependenceReading::Literal || r.beta_i_attained) r.beta_i = acc;
  }
  if (!containing.empty()) {
    Subset acc = reading == DependenceReading::Extremal ? Subset::full(n) : Subset(n);
    for (const auto* v : containing) {
      if (reading == DependenceReading::Extremal) acc &= *v;
      else acc |= *v;
    }
    r.beta_s_attained = in_family(acc);
    if (reading == DependenceReading::Literal || r.beta_s_attained) r.beta_s = acc;
  }
  return r;
}

}  // namespace rclkit
