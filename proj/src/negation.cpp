#include "rclkit/negation.hpp"

namespace rclkit {

std::string_view neg_kind_name(NegKind k) { return k == NegKind::Neg ? "neg" : "sim"; }

std::string_view imp_kind_name(ImpKind k) {
  switch (k) {
    case ImpKind::Neg: return "imp-neg";
    case ImpKind::O: return "imp-o";
    case ImpKind::Sim: return "imp-sim";
    case ImpKind::S: return "imp-s";
  }
  return "?";
}

NegationValue negation(const RclStructure& s, NegKind kind, Elem a) {
  const auto& L = s.lattice();
  if (a >= L.size()) throw Error(ErrorKind::UnknownElement, "element index out of range");
  ElementSet defining(L.size());
  for (Elem z = 0; z < L.size(); ++z) {
    const bool member = kind == NegKind::Neg ? aggregate(s, AggOp::Oa, a, z) == L.top()
                                             : aggregate(s, AggOp::Cca, a, z) == L.bottom();
    if (member) defining.set(z);
  }
  const auto ext = subset_extrema(L, defining);
  const Elem value = kind == NegKind::Neg ? ext.inf : ext.sup;
  const bool attained = defining.test(value);
  return NegationValue{value, std::move(defining), attained};
}

UnaryTable negation_table(const RclStructure& s, NegKind kind) {
  UnaryTable t{s.lattice_ptr(), std::string(neg_kind_name(kind)), {}, {}};
  for (Elem a = 0; a < s.size(); ++a) {
    const auto v = negation(s, kind, a);
    t.entries.push_back(v.value);
    t.attained.push_back(v.attained);
  }
  return t;
}

Elem implication(const RclStructure& s, ImpKind kind, Elem a, Elem b) {
  const auto& L = s.lattice();
  if (a >= L.size() || b >= L.size()) throw Error(ErrorKind::UnknownElement, "element index out of range");
  switch (kind) {
    case ImpKind::Neg: return aggregate(s, AggOp::Oa, negation(s, NegKind::Neg, a).value, b);
    case ImpKind::O: return L.join(negation(s, NegKind::Neg, a).value, b);
    case ImpKind::Sim: return aggregate(s, AggOp::Cca, negation(s, NegKind::Sim, a).value, b);
    case ImpKind::S: return L.meet(negation(s, NegKind::Sim, a).value, b);
  }
  return a;
}

OperationTable implication_table(const RclStructure& s, ImpKind kind) {
  const auto& L = s.lattice();
  const bool uses_neg = kind == ImpKind::Neg || kind == ImpKind::O;
  const auto neg = negation_table(s, uses_neg ? NegKind::Neg : NegKind::Sim);
  return tabulate(s.lattice_ptr(), std::string(imp_kind_name(kind)), [&](Elem a, Elem b) {
    const Elem na = neg.at(a);
    switch (kind) {
      case ImpKind::Neg: return aggregate(s, AggOp::Oa, na, b);
      case ImpKind::O: return L.join(na, b);
      case ImpKind::Sim: return aggregate(s, AggOp::Cca, na, b);
      case ImpKind::S: return L.meet(na, b);
    }
    return na;
  });
}

OperationTable top_implication(std::shared_ptr<const FiniteLattice> lattice) {
  const auto* L = lattice.get();
  return tabulate(std::move(lattice), "top", [L](Elem a, Elem b) {
    return (a == L->top() && b == L->bottom()) ? L->bottom() : L->top();
  });
}

OperationTable bottom_implication(std::shared_ptr<const FiniteLattice> lattice) {
  const auto* L = lattice.get();
  return tabulate(std::move(lattice), "bottom", [L](Elem a, Elem b) {
    return (a == L->bottom() && b == L->top()) ? L->top() : L->bottom();
  });
}

LawFlags check_implication_laws(const FiniteLattice& L, const OperationTable& T) {
  if (T.size() != L.size()) throw Error(ErrorKind::HostMismatch, "table does not range over this lattice");
  const auto n = static_cast<Elem>(L.size());
  const Elem bot = L.bottom(), top = L.top();
  auto I = [&](Elem a, Elem b) { return T.at(a, b); };

  LawFlags f;
  auto& fpa = f.add("FPA");
  auto& spm = f.add("SPM");
  auto& bc1 = f.add("BC1");
  auto& bc2 = f.add("BC2");
  auto& bc3 = f.add("BC3");
  auto& lnp = f.add("LNP");
  auto& ep = f.add("EP", "a→(b→c) = b→(a→c)");
  auto& op = f.add("OP");
  auto& ibl = f.add("IBL");
  auto& cb = f.add("CB");
  auto& cbc = f.add("CB-converse", "a→b ≤ b");
  auto& ip = f.add("IP");

  if (I(bot, bot) != top) bc1.fail({bot, bot});
  if (I(top, top) != top) bc2.fail({top, top});
  if (I(top, bot) != bot) bc3.fail({top, bot});
  for (Elem a = 0; a < n; ++a) {
    if (I(top, a) != a) lnp.fail({a});
    if (I(a, a) != top) ip.fail({a});
    for (Elem b = 0; b < n; ++b) {
      if ((I(a, b) == top) != L.leq(a, b)) op.fail({a, b});
      if (I(a, I(a, b)) != I(a, b)) ibl.fail({a, b});
      if (!L.leq(b, I(a, b))) cb.fail({a, b});
      if (!L.leq(I(a, b), b)) cbc.fail({a, b});
      for (Elem c = 0; c < n; ++c) {
        if (L.leq(a, b) && !L.leq(I(b, c), I(a, c))) fpa.fail({a, b, c});
        if (L.leq(b, c) && !L.leq(I(a, b), I(a, c))) spm.fail({a, b, c});
        if (I(a, I(b, c)) != I(b, I(a, c))) ep.fail({a, b, c});
      }
    }
  }
  auto& agg = f.add("is-implication", "FPA ∧ SPM ∧ BC1 ∧ BC2 ∧ BC3");
  agg.holds = fpa.holds && spm.holds && bc1.holds && bc2.holds && bc3.holds;
  return f;
}

LawFlags check_negation_laws(const RclStructure& s, const UnaryTable& T) {
  const auto& L = s.lattice();
  if (T.entries.size() != L.size()) throw Error(ErrorKind::PartialTable, "unary table is not total");
  const auto n = static_cast<Elem>(L.size());
  const Elem bot = L.bottom(), top = L.top();
  auto N = [&](Elem a) { return T.at(a); };
  auto l = [&](Elem a) { return s.lower(a); };
  auto u = [&](Elem a) { return s.upper(a); };
  auto is_bound = [&](Elem a) { return a == bot || a == top; };

  LawFlags f;
  auto& n1 = f.add("N1");
  auto& n2 = f.add("N2");
  auto& n3 = f.add("N3");
  auto& n4 = f.add("N4");
  auto& wn1 = f.add("WN1-N", "read as n(⊥) ≤ ⊤ and n(⊤) = ⊥");
  auto& wn2n = f.add("WN2-N");
  auto& wn3n = f.add("WN3-N");
  auto& wn2s = f.add("WN2-S");
  auto& wn3s = f.add("WN3-S");

  if (N(bot) != top) n1.fail({bot});
  if (N(top) != bot) n1.fail({top});
  if (N(top) != bot) wn1.fail({top});
  if (!L.leq(bot, N(top)) || N(bot) != top) wn3s.fail({N(bot) != top ? bot : top});
  for (Elem a = 0; a < n; ++a) {
    if (N(N(a)) != a) n3.fail({a});
    if (is_bound(N(a)) != is_bound(a)) n4.fail({a});
    if (!L.leq(N(N(a)), u(a))) wn3n.fail({a});
    for (Elem b = 0; b < n; ++b) {
      if (!L.leq(a, b)) continue;
      if (!L.leq(N(b), N(a))) n2.fail({a, b});
      if (!L.leq(N(b), u(N(b))) || !L.leq(u(N(b)), u(N(a)))) wn2n.fail({a, b});
      if (!L.leq(l(N(b)), l(N(a))) || !L.leq(l(N(a)), N(a))) wn2s.fail({a, b});
    }
  }
  return f;
}

TarskiReport check_tarski(const FiniteLattice& L, const OperationTable& T) {
  if (T.size() != L.size()) throw Error(ErrorKind::HostMismatch, "table does not range over this lattice");
  const auto n = static_cast<Elem>(L.size());
  const Elem top = L.top();
  auto I = [&](Elem a, Elem b) { return T.at(a, b); };
  TarskiReport r;
  auto& lnp = r.laws.add("LNP");
  auto& ip = r.laws.add("IP");
  auto& t3 = r.laws.add("T3");
  auto& t4 = r.laws.add("T4");
  for (Elem a = 0; a < n; ++a) {
    if (I(top, a) != a) lnp.fail({a});
    if (I(a, a) != top) ip.fail({a});
    for (Elem b = 0; b < n; ++b) {
      if (I(I(a, b), b) != I(I(b, a), a)) t4.fail({a, b});
      for (Elem c = 0; c < n; ++c)
        if (I(a, I(b, c)) != I(I(a, b), I(a, c))) t3.fail({a, b, c});
    }
  }
  r.is_tarski = r.laws.all();
  if (r.is_tarski) {
    r.induced_order.resize(std::size_t{n} * n);
    r.induced_join.resize(std::size_t{n} * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        r.induced_order[std::size_t{a} * n + b] = I(a, b) == top;
        r.induced_join[std::size_t{a} * n + b] = I(I(a, b), b);
      }
  }
  return r;
}

std::string_view implication_order_name(ImplicationOrder o) {
  switch (o) {
    case ImplicationOrder::FirstBelow: return "first-below-second";
    case ImplicationOrder::SecondBelow: return "second-below-first";
    case ImplicationOrder::Equal: return "equal";
    case ImplicationOrder::Incomparable: return "incomparable";
  }
  return "?";
}

ImplicationComparison compare_implications(const OperationTable& first, const OperationTable& second) {
  if (!first.lattice || !second.lattice ||
      (first.lattice != second.lattice && !(*first.lattice == *second.lattice)))
    throw Error(ErrorKind::HostMismatch, "implications live on different lattices");
  const auto& L = *first.lattice;
  const auto n = static_cast<Elem>(L.size());
  std::optional<std::pair<Elem, Elem>> not_first_below, not_second_below;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!not_first_below && !L.leq(first.at(a, b), second.at(a, b))) not_first_below = {a, b};
      if (!not_second_below && !L.leq(second.at(a, b), first.at(a, b))) not_second_below = {a, b};
    }
  ImplicationComparison c{};
  if (!not_first_below && !not_second_below) c.order = ImplicationOrder::Equal;
  else if (!not_first_below) {
    c.order = ImplicationOrder::FirstBelow;
    c.witnesses.push_back(*not_second_below);
  } else if (!not_second_below) {
    c.order = ImplicationOrder::SecondBelow;
    c.witnesses.push_back(*not_first_below);
  } else {
    c.order = ImplicationOrder::Incomparable;
    c.witnesses = {*not_first_below, *not_second_below};
  }
  return c;
}

}  // namespace rclkit
