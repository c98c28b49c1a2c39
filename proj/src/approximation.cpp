#include "rclkit/approximation.hpp"

#include <array>
#include <map>

#include "rclkit/negation.hpp"

namespace rclkit {

namespace {

constexpr std::array<std::string_view, kAxiomCount> kAxiomNames = {
    "lu1-idempotence", "lu1-sandwich", "lu1-uu", "l-mo",     "u-mo",
    "lu2-ineq",        "lu2-eq",       "lu3-eq", "lu3-ineq", "topbot",
};

void check_table(const FiniteLattice& L, const std::vector<Elem>& table, const char* what) {
  if (table.size() != L.size())
    throw Error(ErrorKind::PartialTable, std::string(what) + " table has " +
                                             std::to_string(table.size()) + " entries for " +
                                             std::to_string(L.size()) + " elements");
  for (Elem v : table)
    if (v >= L.size())
      throw Error(ErrorKind::PartialTable, std::string(what) + " table maps outside the carrier");
}

}  // namespace

std::string_view axiom_name(Axiom axiom) { return kAxiomNames[static_cast<std::size_t>(axiom)]; }

std::optional<Axiom> axiom_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kAxiomCount; ++i)
    if (kAxiomNames[i] == name) return static_cast<Axiom>(i);
  return std::nullopt;
}

RclStructure::RclStructure(std::shared_ptr<const FiniteLattice> lattice, std::vector<Elem> lower,
                           std::vector<Elem> upper, std::optional<std::vector<Elem>> complement)
    : lattice_(std::move(lattice)),
      lower_(std::move(lower)),
      upper_(std::move(upper)),
      complement_(std::move(complement)) {
  if (!lattice_) throw Error(ErrorKind::InvalidInput, "structure without a lattice");
  check_table(*lattice_, lower_, "lower");
  check_table(*lattice_, upper_, "upper");
  if (complement_) check_table(*lattice_, *complement_, "complement");
  report_ = check_rcl_axioms(*this);
}

Elem RclStructure::complement(Elem x) const {
  if (!complement_) throw Error(ErrorKind::MissingComplement, "structure has no complement table");
  return (*complement_)[x];
}

bool axiom_holds_at(const RclStructure& s, Axiom axiom, std::span<const Elem> t) {
  const auto& L = s.lattice();
  auto l = [&](Elem x) { return s.lower(x); };
  auto u = [&](Elem x) { return s.upper(x); };
  const std::size_t need = (axiom == Axiom::LMo || axiom == Axiom::UMo || axiom == Axiom::Lu2Ineq ||
                            axiom == Axiom::Lu2Eq || axiom == Axiom::Lu3Eq || axiom == Axiom::Lu3Ineq)
                               ? 2
                               : 1;
  if (t.size() != need) throw Error(ErrorKind::InvalidInput, "wrong witness arity");
  for (Elem e : t)
    if (e >= L.size()) throw Error(ErrorKind::UnknownElement, "witness index out of range");
  const Elem x = t[0];
  const Elem y = need == 2 ? t[1] : x;
  switch (axiom) {
    case Axiom::Lu1Idempotence: return l(l(x)) == l(x);
    case Axiom::Lu1Sandwich: return L.leq(l(x), x) && L.leq(x, u(x));
    case Axiom::Lu1Uu: return L.leq(u(x), u(u(x)));
    case Axiom::LMo: return !L.leq(x, y) || L.leq(l(x), l(y));
    case Axiom::UMo: return !L.leq(x, y) || L.leq(u(x), u(y));
    case Axiom::Lu2Ineq: return L.leq(L.join(l(x), l(y)), l(L.join(x, y)));
    case Axiom::Lu2Eq: return L.join(u(x), u(y)) == u(L.join(x, y));
    case Axiom::Lu3Eq: return l(L.meet(x, y)) == L.meet(l(x), l(y));
    case Axiom::Lu3Ineq: return L.leq(u(L.meet(x, y)), L.meet(u(x), u(y)));
    case Axiom::TopBot:
      if (x == L.top() && u(x) != L.top()) return false;
      if (x == L.bottom() && (l(x) != L.bottom() || u(x) != L.bottom())) return false;
      return true;
  }
  return true;
}

AxiomReport check_rcl_axioms(const RclStructure& s) {
  const auto& L = s.lattice();
  const auto n = static_cast<Elem>(L.size());
  AxiomReport report;
  for (auto name : kAxiomNames) report.add(std::string(name));
  auto& laws = report.laws;

  for (std::size_t ai = 0; ai < kAxiomCount; ++ai) {
    const auto axiom = static_cast<Axiom>(ai);
    auto& law = laws[ai];
    if (axiom == Axiom::TopBot) {
      for (Elem x = 0; x < n; ++x) {
        const Elem t[1] = {x};
        if ((x == L.bottom() || x == L.top()) && !axiom_holds_at(s, axiom, t)) law.fail({x});
      }
      continue;
    }
    const bool binary = axiom != Axiom::Lu1Idempotence && axiom != Axiom::Lu1Sandwich &&
                        axiom != Axiom::Lu1Uu;
    for (Elem x = 0; x < n; ++x) {
      if (!binary) {
        const Elem t[1] = {x};
        if (!axiom_holds_at(s, axiom, t)) law.fail({x});
        continue;
      }
      for (Elem y = 0; y < n; ++y) {
        const Elem t[2] = {x, y};
        if (!axiom_holds_at(s, axiom, t)) law.fail({x, y});
      }
    }
  }
  auto ok = [&](Axiom a) { return laws[static_cast<std::size_t>(a)].holds; };
  report.is_core = ok(Axiom::Lu1Idempotence) && ok(Axiom::Lu1Sandwich) && ok(Axiom::Lu1Uu) &&
                   ok(Axiom::LMo) && ok(Axiom::UMo) && ok(Axiom::TopBot);
  report.is_rcl = report.all();
  return report;
}

ElementSet definite_elements(const RclStructure& s, DefiniteKind kind) {
  ElementSet out(s.size());
  for (Elem x = 0; x < s.size(); ++x) {
    const bool lo = s.lower(x) == x;
    const bool up = s.upper(x) == x;
    if ((kind == DefiniteKind::Lower && lo) || (kind == DefiniteKind::Upper && up) ||
        (kind == DefiniteKind::Both && lo && up))
      out.set(x);
  }
  return out;
}

std::vector<RoughObject> rough_objects(const RclStructure& s, Variant variant) {
  std::vector<RoughObject> out;
  std::map<std::pair<Elem, Elem>, std::size_t> index;
  for (Elem x = 0; x < s.size(); ++x) {
    const Elem lo = variant == Variant::Upper ? 0 : s.lower(x);
    const Elem up = variant == Variant::Lower ? 0 : s.upper(x);
    auto [it, inserted] = index.emplace(std::pair{lo, up}, out.size());
    if (inserted) {
      RoughObject obj{std::nullopt, std::nullopt, ElementSet(s.size()), variant};
      if (variant != Variant::Upper) obj.lower_end = lo;
      if (variant != Variant::Lower) obj.upper_end = up;
      out.push_back(std::move(obj));
    }
    out[it->second].members.set(x);
  }
  return out;
}

RoughOrderReport rough_order(const RclStructure& s) {
  const auto& L = s.lattice();
  RoughOrderReport r;
  r.objects = rough_objects(s, Variant::Both);
  const std::size_t k = r.objects.size();
  auto below = [&](std::size_t i, std::size_t j) {
    return L.leq(*r.objects[i].lower_end, *r.objects[j].lower_end) &&
           L.leq(*r.objects[i].upper_end, *r.objects[j].upper_end);
  };
  r.related.assign(k * k, false);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) r.related[i * k + j] = below(i, j);
  auto rel = [&](std::size_t i, std::size_t j) { return r.related[i * k + j]; };

  for (std::size_t i = 0; i < k; ++i) {
    if (!rel(i, i)) r.reflexive = false;
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && rel(i, j) && rel(j, i)) r.antisymmetric = false;
      for (std::size_t m = 0; m < k; ++m)
        if (rel(i, j) && rel(j, m) && !rel(i, m)) r.transitive = false;
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    bool least = true, greatest = true;
    for (std::size_t j = 0; j < k; ++j) {
      least = least && rel(i, j);
      greatest = greatest && rel(j, i);
    }
    if (least && !r.least) r.least = i;
    if (greatest && !r.greatest) r.greatest = i;
  }
  if (r.least) {
    const auto& o = r.objects[*r.least];
    r.bottom_pair_least = *o.lower_end == L.bottom() && *o.upper_end == L.bottom();
  }
  if (r.greatest) {
    const auto& o = r.objects[*r.greatest];
    r.top_pair_greatest = *o.lower_end == L.top() && *o.upper_end == L.top();
  }

  // A meet of i and j exists iff the common lower bounds have a greatest member.
  r.meet_exists.assign(k * k, false);
  r.join_exists.assign(k * k, false);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t m = 0; m < k; ++m) {
        if (!r.meet_exists[i * k + j] && rel(m, i) && rel(m, j)) {
          bool top_of_bounds = true;
          for (std::size_t q = 0; q < k && top_of_bounds; ++q)
            if (rel(q, i) && rel(q, j) && !rel(q, m)) top_of_bounds = false;
          if (top_of_bounds) r.meet_exists[i * k + j] = true;
        }
        if (!r.join_exists[i * k + j] && rel(i, m) && rel(j, m)) {
          bool bottom_of_bounds = true;
          for (std::size_t q = 0; q < k && bottom_of_bounds; ++q)
            if (rel(i, q) && rel(j, q) && !rel(m, q)) bottom_of_bounds = false;
          if (bottom_of_bounds) r.join_exists[i * k + j] = true;
        }
      }
      if (!r.meet_exists[i * k + j]) r.all_meets_exist = false;
      if (!r.join_exists[i * k + j]) r.all_joins_exist = false;
    }
  }
  return r;
}

std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::Greater: return ">";
    case Relation::Equal: return "=";
    case Relation::Incomparable: return "||";
  }
  return "?";
}

Relation compare(const FiniteLattice& L, Elem a, Elem b) {
  if (a == b) return Relation::Equal;
  if (L.leq(a, b)) return Relation::Less;
  if (L.leq(b, a)) return Relation::Greater;
  return Relation::Incomparable;
}

WeakComplementReport check_weak_complementation(const RclStructure& s) {
  if (!s.has_complement())
    throw Error(ErrorKind::MissingComplement, "weak complementation needs a complement table");
  const auto& L = s.lattice();
  WeakComplementReport r;
  r.c1.name = "c1";
  r.c2.name = "c2";
  for (Elem x = 0; x < s.size(); ++x) {
    const Elem c = s.complement(x);
    if (!L.leq(s.complement(c), x)) r.c1.fail({x});
    if (L.meet(c, x) != L.bottom()) r.c2.fail({x});
    const Elem sim = negation(s, NegKind::Sim, x).value;
    const Relation rel = compare(L, sim, s.complement(s.lower(x)));
    r.sim_vs_lc.push_back(rel);
    if (rel != Relation::Less && rel != Relation::Equal) r.bound_holds = false;
  }
  return r;
}

std::string_view axiom_status(const AxiomReport& r) {
  return r.is_rcl ? "rcl" : (r.is_core ? "core-only" : "not-rcl");
}

}  // namespace rclkit
