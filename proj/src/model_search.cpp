#include "rclkit/model_search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <set>
#include <thread>

namespace rclkit {

namespace {

using Code = std::uint64_t;

/// leq as per-element up-set masks over at most 8 elements.
struct SmallOrder {
  std::size_t n = 0;
  std::vector<std::uint32_t> up;

  bool leq(std::size_t a, std::size_t b) const { return (up[a] >> b) & 1u; }
};

bool small_is_lattice(const SmallOrder& o) {
  const std::size_t n = o.n;
  std::vector<std::uint32_t> down(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (o.leq(a, b)) down[b] |= 1u << a;
  auto has_extremum = [&](std::uint32_t bounds, const std::vector<std::uint32_t>& cone) {
    for (std::size_t g = 0; g < n; ++g)
      if (((bounds >> g) & 1u) && cone[g] == bounds) return true;
    return false;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!has_extremum(down[a] & down[b], down) || !has_extremum(o.up[a] & o.up[b], o.up)) return false;
  return true;
}

Code full_code(const SmallOrder& o, const std::vector<std::size_t>& perm) {
  Code c = 0;
  for (std::size_t a = 0; a < o.n; ++a)
    for (std::size_t b = 0; b < o.n; ++b)
      if (o.leq(a, b)) c |= Code{1} << (perm[a] * o.n + perm[b]);
  return c;
}

SmallOrder decode(std::size_t n, Code c) {
  SmallOrder o{n, std::vector<std::uint32_t>(n, 0)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if ((c >> (a * n + b)) & 1u) o.up[a] |= 1u << b;
  return o;
}

FiniteLattice to_lattice(const SmallOrder& o, std::vector<std::string> names) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (std::size_t a = 0; a < o.n; ++a)
    for (std::size_t b = 0; b < o.n; ++b)
      if (a != b && o.leq(a, b)) pairs.emplace_back(static_cast<Elem>(a), static_cast<Elem>(b));
  return FiniteLattice::build_indexed(std::move(names), pairs);
}

/// Canonical codes of all iso classes; bottom is element 0 and top n-1 in
/// every candidate, middle elements are permuted.
std::vector<Code> canonical_codes(std::size_t n) {
  if (n == 1) return {Code{1}};
  const std::size_t m = n - 2;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) slots.emplace_back(i, j);

  std::set<Code> codes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    SmallOrder o{n, std::vector<std::uint32_t>(n, 0)};
    for (std::size_t a = 0; a < n; ++a) {
      o.up[0] |= 1u << a;
      o.up[a] |= (1u << a) | (1u << (n - 1));
    }
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1u) o.up[slots[s].first + 1] |= 1u << (slots[s].second + 1);
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = 0; b < n && transitive; ++b)
        if (o.leq(a, b) && (o.up[b] & ~o.up[a]) != 0) transitive = false;
    if (!transitive || !small_is_lattice(o)) continue;

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Code best = ~Code{0};
    do {
      best = std::min(best, full_code(o, perm));
    } while (std::next_permutation(perm.begin() + 1, perm.end() - 1));
    codes.insert(best);
  }
  return {codes.begin(), codes.end()};
}

std::vector<std::string> iso_names(std::size_t n) {
  if (n == 1) return {"⊥"};
  std::vector<std::string> names{"⊥"};
  for (std::size_t i = 0; i + 2 < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  names.push_back("⊤");
  return names;
}

void enumerate_maps(const FiniteLattice& L, bool lower, std::vector<std::vector<Elem>>& out) {
  const auto n = static_cast<Elem>(L.size());
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return L.down_set(a).count() < L.down_set(b).count(); });
  std::vector<Elem> f(n, 0);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      out.push_back(f);
      return;
    }
    const Elem x = order[k];
    for (Elem v = 0; v < n; ++v) {
      if (lower ? !L.leq(v, x) : !L.leq(x, v)) continue;
      bool monotone = true;
      for (std::size_t j = 0; j < k && monotone; ++j) {
        const Elem y = order[j];
        if (L.leq(y, x) && !L.leq(f[y], v)) monotone = false;
      }
      if (!monotone) continue;
      f[x] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
}

std::string elem_label(const FiniteLattice& L, Elem e) { return L.name(e); }

std::optional<Violation> first_failure(const LawFlags& flags, std::initializer_list<std::string_view> names,
                                       const std::string& prefix = {}) {
  for (auto name : names) {
    const auto* law = flags.find(name);
    if (law != nullptr && !law->holds)
      return Violation{prefix + law->name, law->witnesses.front(), {}, std::nullopt, std::nullopt};
  }
  return std::nullopt;
}

void annotate_neg_attainment(const RclStructure& s, const UnaryTable& neg, Violation& v, bool include_double) {
  const auto& L = s.lattice();
  for (Elem e : v.tuple) {
    v.attainment["¬" + elem_label(L, e)] = neg.attained[e];
    if (include_double) v.attainment["¬¬" + elem_label(L, e)] = neg.attained[neg.at(e)];
  }
}

bool all_attained(const UnaryTable& t) {
  return std::all_of(t.attained.begin(), t.attained.end(), [](bool b) { return b; });
}

ClaimVerdict law_claim(const LawFlags& flags, std::initializer_list<std::string_view> names,
                       const std::string& prefix = {}) {
  return ClaimVerdict{first_failure(flags, names, prefix), std::nullopt};
}

ClaimVerdict negimpl_claim(const RclStructure& s, std::initializer_list<std::string_view> names) {
  const auto neg = negation_table(s, NegKind::Neg);
  const auto flags = check_implication_laws(s.lattice(), implication_table(s, ImpKind::Neg));
  ClaimVerdict v{first_failure(flags, names, "imp-neg:"), all_attained(neg)};
  if (v.violation) annotate_neg_attainment(s, neg, *v.violation, false);
  return v;
}

/// Complements satisfying c1 and c2, in lexicographic table order.
template <class F>
bool for_each_weak_complement(const FiniteLattice& L, F&& visit) {
  const auto n = static_cast<Elem>(L.size());
  std::vector<Elem> c(n, 0);
  auto rec = [&](auto&& self, Elem x) -> bool {
    if (x == n) {
      for (Elem y = 0; y < n; ++y)
        if (!L.leq(c[c[y]], y)) return false;
      return visit(c);
    }
    for (Elem v = 0; v < n; ++v) {
      if (L.meet(v, x) != L.bottom()) continue;
      c[x] = v;
      if (self(self, x + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

ClaimVerdict representability_claim(const RclStructure& s) {
  const auto& L = s.lattice();
  const auto n = static_cast<Elem>(L.size());
  AbstractAlgebra base{s, operation_table(s, AggOp::Cca).entries, operation_table(s, AggOp::Oa).entries,
                       negation_table(s, NegKind::Neg).entries, negation_table(s, NegKind::Sim).entries,
                       std::nullopt, std::nullopt};
  if (!check_representability(base).in_abstract_class) return {};

  std::vector<std::pair<Elem, Elem>> cells;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b)
      if (a != L.bottom() && b != L.bottom()) cells.emplace_back(a, b);
  std::vector<Elem> t(std::size_t{n} * n, L.bottom());
  const auto dot = [&](Elem a, Elem b) { return t[std::size_t{a} * n + b]; };
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells.size(); ++i) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
      const Elem v = static_cast<Elem>(rest % n);
      rest /= n;
      t[std::size_t{it->first} * n + it->second] = v;
      t[std::size_t{it->second} * n + it->first] = v;
    }
    if (t == base.cca) continue;
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        for (Elem e = 0; e < n && ok; ++e) {
          if (dot(a, dot(b, e)) != dot(dot(a, b), e)) ok = false;
          if (L.leq(a, b) && !L.leq(dot(a, e), dot(b, e))) ok = false;
        }
    if (!ok) continue;
    AbstractAlgebra alt = base;
    alt.cca = t;
    const auto rep = check_representability(alt);
    if (!rep.in_abstract_class || rep.representable) continue;
    Violation v{"cca-representable", {}, {}, std::nullopt, t};
    for (Elem a = 0; a < n && v.tuple.empty(); ++a)
      for (Elem b = 0; b < n && v.tuple.empty(); ++b)
        if (dot(a, b) != base.cca[std::size_t{a} * n + b]) v.tuple = {a, b};
    return ClaimVerdict{std::move(v), std::nullopt};
  }
  return {};
}

std::vector<ClaimSpec> build_registry() {
  std::vector<ClaimSpec> r;
  auto add = [&](std::string id, std::string statement, AxiomSet space, Expectation exp,
                 std::function<ClaimVerdict(const RclStructure&)> check, bool attainment = false,
                 std::size_t max_size = kMaxEnumeratedLatticeSize) {
    r.push_back(ClaimSpec{std::move(id), std::move(statement), space, exp, max_size, attainment, std::move(check)});
  };

  add("prop1-lu2eq", "lu1, l-mo, u-mo and topbot imply (a∨b)^u = a^u ∨ b^u", AxiomSet::Core, Expectation::Holds,
      [](const RclStructure& s) { return law_claim(s.axioms(), {"lu2-eq"}); });
  add("prop1-lu3eq", "lu1, l-mo, u-mo and topbot imply (a∧b)^l = a^l ∧ b^l", AxiomSet::Core, Expectation::Holds,
      [](const RclStructure& s) { return law_claim(s.axioms(), {"lu3-eq"}); });
  add("thm1-laws", "· satisfies Ccomm, Casso, Cm, Cb", AxiomSet::FullRcl, Expectation::Holds,
      [](const RclStructure& s) {
        return law_claim(check_aggregation_laws(s), {"Ccomm", "Casso", "Cm", "Cb"});
      });
  add("thm2-laws", "⊗ satisfies Acomm, wAsso1, wAsso2, Am, Ab", AxiomSet::FullRcl, Expectation::Holds,
      [](const RclStructure& s) {
        return law_claim(check_aggregation_laws(s), {"Acomm", "wAsso1", "wAsso2", "Am", "Ab"});
      });
  add("wn1n", "¬⊥ ≤ ⊤ and ¬⊤ = ⊥", AxiomSet::FullRcl, Expectation::Holds, [](const RclStructure& s) {
    return law_claim(check_negation_laws(s, negation_table(s, NegKind::Neg)), {"WN1-N"}, "neg:");
  });
  add("wn2n", "a ≤ b implies ¬b ≤ (¬b)^u ≤ (¬a)^u", AxiomSet::FullRcl, Expectation::Holds,
      [](const RclStructure& s) {
        return law_claim(check_negation_laws(s, negation_table(s, NegKind::Neg)), {"WN2-N"}, "neg:");
      });
  add(
      "wn3n", "¬¬a ≤ a^u", AxiomSet::FullRcl, Expectation::Holds,
      [](const RclStructure& s) {
        const auto neg = negation_table(s, NegKind::Neg);
        ClaimVerdict v{first_failure(check_negation_laws(s, neg), {"WN3-N"}, "neg:"), all_attained(neg)};
        if (v.violation) annotate_neg_attainment(s, neg, *v.violation, true);
        return v;
      },
      true);
  add("wn-s", "~ satisfies WN2-S and WN3-S", AxiomSet::FullRcl, Expectation::Holds, [](const RclStructure& s) {
    return law_claim(check_negation_laws(s, negation_table(s, NegKind::Sim)), {"WN2-S", "WN3-S"}, "sim:");
  });
  add("thm5-laws", "⊨_~ satisfies FPA, SPM, BC3, IBL and the converse of CB", AxiomSet::FullRcl,
      Expectation::Holds, [](const RclStructure& s) {
        return law_claim(check_implication_laws(s.lattice(), implication_table(s, ImpKind::Sim)),
                         {"FPA", "SPM", "BC3", "IBL", "CB-converse"}, "imp-sim:");
      });
  add("sim-bc-fail", "⊨_~ satisfies BC1, BC2 and IP (asserted to fail in general)", AxiomSet::FullRcl,
      Expectation::FailsInGeneral, [](const RclStructure& s) {
        return law_claim(check_implication_laws(s.lattice(), implication_table(s, ImpKind::Sim)),
                         {"BC1", "BC2", "IP"}, "imp-sim:");
      });
  for (const char* law : {"FPA", "SPM", "BC1", "BC2", "BC3", "IP"}) {
    add(std::string("negimpl-") + law, std::string("⊨_¬ satisfies ") + law, AxiomSet::FullRcl, Expectation::Holds,
        [law](const RclStructure& s) { return negimpl_claim(s, {law}); }, true);
  }
  add("negimpl-laws", "⊨_¬ satisfies FPA, IP, SPM, BC1, BC2, BC3", AxiomSet::FullRcl, Expectation::Holds,
      [](const RclStructure& s) { return negimpl_claim(s, {"FPA", "IP", "SPM", "BC1", "BC2", "BC3"}); }, true);
  add("intervals", "rough objects are the maximal classes sharing (x^l, x^u)", AxiomSet::FullRcl,
      Expectation::Holds, [](const RclStructure& s) {
        const auto& L = s.lattice();
        const auto objects = rough_objects(s, Variant::Both);
        ElementSet seen(L.size());
        for (const auto& o : objects) {
          ElementSet expected(L.size());
          for (Elem y = 0; y < L.size(); ++y)
            if (s.lower(y) == *o.lower_end && s.upper(y) == *o.upper_end) expected.set(y);
          bool ok = expected == o.members && !o.members.intersects(seen) && !o.members.empty();
          o.members.for_each([&](std::size_t x) {
            if (s.lower(static_cast<Elem>(x)) != *o.lower_end || s.upper(static_cast<Elem>(x)) != *o.upper_end)
              ok = false;
          });
          if (!ok) {
            const Elem first = static_cast<Elem>(o.members.members().front());
            return ClaimVerdict{Violation{"maximal-signature-class", {first}, {}, std::nullopt, std::nullopt},
                                std::nullopt};
          }
          seen |= o.members;
        }
        if (seen.count() != L.size())
          return ClaimVerdict{Violation{"partition", {}, {}, std::nullopt, std::nullopt}, std::nullopt};
        return ClaimVerdict{};
      });
  add("intervals-literal", "every rough object is the whole lattice interval [x^l, x^u]", AxiomSet::FullRcl,
      Expectation::Holds, [](const RclStructure& s) {
        const auto& L = s.lattice();
        for (const auto& o : rough_objects(s, Variant::Both)) {
          const ElementSet interval = L.up_set(*o.lower_end) & L.down_set(*o.upper_end);
          if (interval != o.members) {
            const Elem first = static_cast<Elem>(o.members.members().front());
            return ClaimVerdict{Violation{"interval", {first}, {}, std::nullopt, std::nullopt}, std::nullopt};
          }
        }
        return ClaimVerdict{};
      });
  add("rough-order-bounded", "⋐ is a partial order with least element (⊥,⊥) and a greatest element",
      AxiomSet::FullRcl, Expectation::Holds, [](const RclStructure& s) {
        const auto r = rough_order(s);
        const char* law = !r.reflexive        ? "reflexive"
                          : !r.antisymmetric  ? "antisymmetric"
                          : !r.transitive     ? "transitive"
                          : !r.bottom_pair_least ? "least-(⊥,⊥)"
                          : !r.greatest       ? "greatest"
                                              : nullptr;
        if (law == nullptr) return ClaimVerdict{};
        return ClaimVerdict{Violation{law, {}, {}, std::nullopt, std::nullopt}, std::nullopt};
      });
  add("rough-order-top", "the greatest rough object is (⊤,⊤)", AxiomSet::FullRcl, Expectation::Holds,
      [](const RclStructure& s) {
        if (rough_order(s).top_pair_greatest) return ClaimVerdict{};
        return ClaimVerdict{Violation{"greatest-(⊤,⊤)", {s.lattice().top()}, {}, std::nullopt, std::nullopt},
                            std::nullopt};
      });
  add("wc-bound", "with a weak complement (c1, c2): ~a ≤ a^{lc}", AxiomSet::FullRcl, Expectation::Holds,
      [](const RclStructure& s) {
        ClaimVerdict verdict;
        for_each_weak_complement(s.lattice(), [&](const std::vector<Elem>& c) {
          RclStructure with_c(s.lattice_ptr(), s.lower_table(), s.upper_table(), c);
          const auto report = check_weak_complementation(with_c);
          for (Elem a = 0; a < with_c.size(); ++a) {
            const auto rel = report.sim_vs_lc[a];
            if (rel == Relation::Less || rel == Relation::Equal) continue;
            verdict.violation = Violation{std::string("~a ") + std::string(relation_name(rel)) + " a^{lc}",
                                          {a}, {}, with_c, std::nullopt};
            return true;
          }
          return false;
        });
        return verdict;
      });
  add("representability",
      "every algebra satisfying the abstract aggregation-negation conditions over an RCL has · = a^l ∧ b^l",
      AxiomSet::FullRcl, Expectation::Open, representability_claim, false, 3);
  return r;
}

unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("RCLKIT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

struct LatticeOutcome {
  std::size_t structures = 0;
  std::size_t violating = 0;
  std::optional<ClaimWitness> first;
  AttainmentCorrelation corr;
};

}  // namespace

std::vector<FiniteLattice> enumerate_lattices(std::size_t n, bool up_to_iso) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "lattices need at least one element");
  if (n > kMaxEnumeratedLatticeSize)
    throw Error(ErrorKind::BoundExceeded, "lattice enumeration is limited to 7 elements");
  const auto codes = canonical_codes(n);
  std::vector<FiniteLattice> out;
  if (up_to_iso) {
    for (Code c : codes) out.push_back(to_lattice(decode(n, c), iso_names(n)));
    return out;
  }
  std::set<Code> labelled;
  for (Code c : codes) {
    const auto o = decode(n, c);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      labelled.insert(full_code(o, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  for (Code c : labelled) out.push_back(to_lattice(decode(n, c), names));
  return out;
}

std::string_view axiom_set_name(AxiomSet a) { return a == AxiomSet::Core ? "core" : "full-rcl"; }

StructureFamily enumerate_structures(const FiniteLattice& L, AxiomSet axioms) {
  const auto n = static_cast<Elem>(L.size());
  StructureFamily fam;
  std::vector<std::vector<Elem>> lowers, uppers;
  enumerate_maps(L, true, lowers);
  enumerate_maps(L, false, uppers);
  for (auto& l : lowers) {
    bool ok = l[L.bottom()] == L.bottom();
    for (Elem x = 0; x < n && ok; ++x) ok = l[l[x]] == l[x];
    if (axioms == AxiomSet::FullRcl)
      for (Elem a = 0; a < n && ok; ++a)
        for (Elem b = 0; b < n && ok; ++b) ok = l[L.meet(a, b)] == L.meet(l[a], l[b]);
    if (ok) fam.lowers.push_back(std::move(l));
  }
  for (auto& u : uppers) {
    bool ok = u[L.bottom()] == L.bottom() && u[L.top()] == L.top();
    for (Elem x = 0; x < n && ok; ++x) ok = L.leq(u[x], u[u[x]]);
    if (axioms == AxiomSet::FullRcl)
      for (Elem a = 0; a < n && ok; ++a)
        for (Elem b = 0; b < n && ok; ++b) ok = u[L.join(a, b)] == L.join(u[a], u[b]);
    if (ok) fam.uppers.push_back(std::move(u));
  }
  std::sort(fam.lowers.begin(), fam.lowers.end());
  std::sort(fam.uppers.begin(), fam.uppers.end());
  return fam;
}

const std::vector<ClaimSpec>& claim_registry() {
  static const std::vector<ClaimSpec> registry = build_registry();
  return registry;
}

const ClaimSpec& find_claim(std::string_view id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return c;
  throw Error(ErrorKind::UnknownClaim, "no claim registered as '" + std::string(id) + "'");
}

std::string_view expectation_name(Expectation e) {
  switch (e) {
    case Expectation::Holds: return "holds";
    case Expectation::FailsInGeneral: return "fails-in-general";
    case Expectation::Open: return "open";
  }
  return "?";
}

std::string_view claim_status_name(ClaimStatus s) {
  return s == ClaimStatus::ConfirmedUpToBound ? "confirmed-up-to-bound" : "counterexample";
}

ClaimResult test_claim(std::string_view claim_id, std::size_t max_size, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  const auto& spec = find_claim(claim_id);
  if (max_size == 0) throw Error(ErrorKind::InvalidInput, "search bound must be at least 1");
  if (max_size > kMaxEnumeratedLatticeSize)
    throw Error(ErrorKind::BoundExceeded, "search bound is limited to 7 elements");

  ClaimResult result;
  result.claim_id = spec.id;
  result.statement = spec.statement;
  result.space = spec.space;
  result.expectation = spec.expectation;
  result.max_size = max_size;
  result.effective_max_size = std::min(max_size, spec.max_supported_size);

  std::vector<std::shared_ptr<const FiniteLattice>> lattices;
  for (std::size_t n = 1; n <= result.effective_max_size; ++n)
    for (auto& L : enumerate_lattices(n, true)) lattices.push_back(std::make_shared<const FiniteLattice>(std::move(L)));

  std::vector<LatticeOutcome> outcomes(lattices.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < lattices.size(); i = next++) {
      auto& out = outcomes[i];
      const auto family = enumerate_structures(*lattices[i], spec.space);
      for (const auto& lo : family.lowers) {
        for (const auto& up : family.uppers) {
          RclStructure s(lattices[i], lo, up);
          auto verdict = spec.check(s);
          ++out.structures;
          const bool bad = verdict.violation.has_value();
          if (verdict.all_attained) {
            const bool att = *verdict.all_attained;
            if (bad) ++(att ? out.corr.violating_attained : out.corr.violating_nonattained);
            else ++(att ? out.corr.clean_attained : out.corr.clean_nonattained);
          }
          if (!bad) continue;
          ++out.violating;
          if (!out.first) {
            auto& v = *verdict.violation;
            RclStructure reported = v.structure ? *v.structure : s;
            v.structure.reset();
            out.first = ClaimWitness{std::move(reported), std::move(v)};
          }
        }
      }
    }
  };
  const unsigned nthreads = std::min<unsigned>(worker_count(threads), static_cast<unsigned>(std::max<std::size_t>(1, lattices.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  if (spec.attainment_relevant) result.correlation = AttainmentCorrelation{};
  for (auto& o : outcomes) {
    ++result.lattices_checked;
    result.structures_checked += o.structures;
    result.violating_structures += o.violating;
    if (!result.witness && o.first) result.witness = std::move(o.first);
    if (result.correlation) {
      result.correlation->violating_attained += o.corr.violating_attained;
      result.correlation->violating_nonattained += o.corr.violating_nonattained;
      result.correlation->clean_attained += o.corr.clean_attained;
      result.correlation->clean_nonattained += o.corr.clean_nonattained;
    }
  }
  result.status = result.witness ? ClaimStatus::Counterexample : ClaimStatus::ConfirmedUpToBound;
  result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

RepresentabilityReport check_representability(const AbstractAlgebra& alg) {
  const auto& s = alg.base;
  const auto& L = s.lattice();
  const auto lp = s.lattice_ptr();
  const std::size_t n = L.size();
  auto table = [&](const std::vector<Elem>& entries, const char* kind) {
    if (entries.size() != n * n) throw Error(ErrorKind::PartialTable, std::string(kind) + " table is not total");
    return OperationTable{lp, kind, entries};
  };
  auto unary = [&](const std::vector<Elem>& entries, const char* kind) {
    if (entries.size() != n) throw Error(ErrorKind::PartialTable, std::string(kind) + " table is not total");
    return UnaryTable{lp, kind, entries, {}};
  };

  RepresentabilityReport r;
  auto& rcl = r.abstract_axioms.add("rcl");
  if (!s.axioms().is_rcl) rcl.holds = false;
  auto merge = [&](const LawFlags& f, std::initializer_list<std::string_view> names, const std::string& prefix) {
    for (auto name : names) {
      const auto* law = f.find(name);
      LawResult copy = *law;
      copy.name = prefix + copy.name;
      r.abstract_axioms.laws.push_back(std::move(copy));
    }
  };
  const auto cca = table(alg.cca, "cca");
  const auto oa = table(alg.oa, "oa");
  merge(check_cca_laws(L, cca), {"Ccomm", "Casso", "Cm", "Cb"}, "cdotc:");
  merge(check_oa_laws(s, oa), {"Acomm", "wAsso1", "wAsso2", "Am", "Ab"}, "otimc:");
  r.coincides["cca"] = alg.cca == operation_table(s, AggOp::Cca).entries;
  r.coincides["oa"] = alg.oa == operation_table(s, AggOp::Oa).entries;
  if (alg.neg) {
    merge(check_negation_laws(s, unary(*alg.neg, "neg")), {"WN1-N", "WN2-N", "WN3-N"}, "negc:");
    r.coincides["neg"] = *alg.neg == negation_table(s, NegKind::Neg).entries;
  }
  if (alg.sim) {
    merge(check_negation_laws(s, unary(*alg.sim, "sim")), {"WN2-S", "WN3-S"}, "simc:");
    r.coincides["sim"] = *alg.sim == negation_table(s, NegKind::Sim).entries;
  }
  if (alg.imp_sim) {
    merge(check_implication_laws(L, table(*alg.imp_sim, "imp-sim")), {"FPA", "SPM", "BC3", "IBL"}, "imsc:");
    r.coincides["imp-sim"] = *alg.imp_sim == implication_table(s, ImpKind::Sim).entries;
  }
  if (alg.imp_neg) {
    merge(check_implication_laws(L, table(*alg.imp_neg, "imp-neg")), {"FPA", "IP", "SPM", "BC1", "BC2", "BC3"},
          "inegc:");
    r.coincides["imp-neg"] = *alg.imp_neg == implication_table(s, ImpKind::Neg).entries;
  }
  r.in_abstract_class = r.abstract_axioms.all();
  r.representable = std::all_of(r.coincides.begin(), r.coincides.end(), [](const auto& kv) { return kv.second; });
  return r;
}

}  // namespace rclkit
