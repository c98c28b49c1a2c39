#include "rclkit/bias.hpp"

#include "rclkit/aggregation.hpp"

namespace rclkit {

namespace {

// The two-argument rational constructor rejects negative denominators.
Rational ratio(BigInt num, BigInt den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

BiasReport finish(std::vector<CaseRecord> records, SharpMode mode, std::string status) {
  BiasReport r;
  r.cases = std::move(records);
  r.flat = bias_flat(r.cases);
  r.skip_degenerate = mode == SharpMode::SkipDegenerate;
  r.axiom_status = std::move(status);
  for (const auto& c : r.cases)
    if (c.sharp_degenerate()) r.degenerate.push_back(c.index);
  // Strict mode leaves the sharp measure empty rather than throwing, so the
  // flat measure is still reported.
  if (r.degenerate.empty() || mode == SharpMode::SkipDegenerate)
    r.sharp = bias_sharp(r.cases, SharpMode::SkipDegenerate).value;
  return r;
}

}  // namespace

Rational bias_flat(std::span<const CaseRecord> cases) {
  if (cases.empty()) throw Error(ErrorKind::EmptyCaseList, "bias measures need at least one case");
  Rational sum = 0;
  for (const auto& c : cases) sum += ratio(c.card_c_cca, c.card_e_cca);
  return Rational(1) - sum / Rational(static_cast<long long>(cases.size()));
}

SharpResult bias_sharp(std::span<const CaseRecord> cases, SharpMode mode) {
  if (cases.empty()) throw Error(ErrorKind::EmptyCaseList, "bias measures need at least one case");
  SharpResult r;
  Rational sum = 0;
  long long used = 0;
  for (const auto& c : cases) {
    if (c.sharp_degenerate()) {
      if (mode == SharpMode::Strict)
        throw Error(ErrorKind::DegenerateDenominator,
                    "case " + std::to_string(c.index) + " has |F(E⊗F)| = |F(E·F)|");
      r.skipped.push_back(c.index);
      continue;
    }
    sum += ratio(c.card_c_oa - c.card_c_cca, c.card_e_oa - c.card_e_cca);
    ++used;
  }
  if (used > 0) r.value = Rational(1) - sum / Rational(used);
  return r;
}

BiasReport audit(const RclStructure& s, std::span<const ElementCase> cases, SharpMode mode) {
  if (cases.empty()) throw Error(ErrorKind::EmptyCaseList, "bias audit needs at least one case");
  const auto& L = s.lattice();
  std::vector<CaseRecord> records;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& k = cases[i];
    for (Elem x : {k.c, k.e, k.f})
      if (x >= L.size()) throw Error(ErrorKind::UnknownElement, "case element out of range");
    CaseRecord r;
    r.index = i + 1;
    r.c = L.name(k.c);
    r.e = L.name(k.e);
    r.f = L.name(k.f);
    const Elem c_cca = aggregate(s, AggOp::Cca, k.c, k.f);
    const Elem c_oa = aggregate(s, AggOp::Oa, k.c, k.f);
    const Elem e_cca = aggregate(s, AggOp::Cca, k.e, k.f);
    const Elem e_oa = aggregate(s, AggOp::Oa, k.e, k.f);
    r.c_cca = L.name(c_cca);
    r.c_oa = L.name(c_oa);
    r.e_cca = L.name(e_cca);
    r.e_oa = L.name(e_oa);
    r.card_c_cca = principal_filter(L, c_cca).count();
    r.card_c_oa = principal_filter(L, c_oa).count();
    r.card_e_cca = principal_filter(L, e_cca).count();
    r.card_e_oa = principal_filter(L, e_oa).count();
    records.push_back(std::move(r));
  }
  return finish(std::move(records), mode, std::string(axiom_status(s.axioms())));
}

BiasReport audit(const SetRcl& s, std::span<const SubsetCase> cases, SharpMode mode) {
  if (cases.empty()) throw Error(ErrorKind::EmptyCaseList, "bias audit needs at least one case");
  const std::size_t n = s.universe().size();
  auto filter_card = [n](const Subset& x) { return BigInt(1) << static_cast<unsigned>(n - x.count()); };
  std::vector<CaseRecord> records;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& k = cases[i];
    for (const auto* x : {&k.c, &k.e, &k.f})
      if (x->width() != n) throw Error(ErrorKind::UnknownElement, "case subset does not range over the universe");
    CaseRecord r;
    r.index = i + 1;
    r.c = s.format_subset(k.c);
    r.e = s.format_subset(k.e);
    r.f = s.format_subset(k.f);
    const Subset fl = s.lower(k.f), fu = s.upper(k.f);
    const Subset c_cca = s.lower(k.c) & fl;
    const Subset c_oa = s.upper(k.c) | fu;
    const Subset e_cca = s.lower(k.e) & fl;
    const Subset e_oa = s.upper(k.e) | fu;
    r.c_cca = s.format_subset(c_cca);
    r.c_oa = s.format_subset(c_oa);
    r.e_cca = s.format_subset(e_cca);
    r.e_oa = s.format_subset(e_oa);
    r.card_c_cca = filter_card(c_cca);
    r.card_c_oa = filter_card(c_oa);
    r.card_e_cca = filter_card(e_cca);
    r.card_e_oa = filter_card(e_oa);
    records.push_back(std::move(r));
  }
  return finish(std::move(records), mode, "set-rcl");
}

std::string to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

}  // namespace rclkit
