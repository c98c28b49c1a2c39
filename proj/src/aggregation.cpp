#include "rclkit/aggregation.hpp"

namespace rclkit {

std::string_view agg_op_name(AggOp op) {
  switch (op) {
    case AggOp::Cca: return "cca";
    case AggOp::Oa: return "oa";
    case AggOp::Odot: return "odot";
    case AggOp::Cross: return "cross";
  }
  return "?";
}

std::string_view agg_op_symbol(AggOp op) {
  switch (op) {
    case AggOp::Cca: return "·";
    case AggOp::Oa: return "⊗";
    case AggOp::Odot: return "⊙";
    case AggOp::Cross: return "×";
  }
  return "?";
}

Elem aggregate(const RclStructure& s, AggOp op, Elem a, Elem b) {
  const auto& L = s.lattice();
  if (a >= L.size() || b >= L.size()) throw Error(ErrorKind::UnknownElement, "element index out of range");
  switch (op) {
    case AggOp::Cca: return L.meet(s.lower(a), s.lower(b));
    case AggOp::Oa: return L.join(s.upper(a), s.upper(b));
    case AggOp::Odot: return L.join(s.lower(a), s.lower(b));
    case AggOp::Cross: return L.meet(s.upper(a), s.upper(b));
  }
  return a;
}

OperationTable operation_table(const RclStructure& s, AggOp op) {
  return tabulate(s.lattice_ptr(), std::string(agg_op_name(op)),
                  [&](Elem a, Elem b) { return aggregate(s, op, a, b); });
}

OperationTable meet_table(std::shared_ptr<const FiniteLattice> lattice) {
  const auto* L = lattice.get();
  return tabulate(std::move(lattice), "meet", [L](Elem a, Elem b) { return L->meet(a, b); });
}

OperationTable join_table(std::shared_ptr<const FiniteLattice> lattice) {
  const auto* L = lattice.get();
  return tabulate(std::move(lattice), "join", [L](Elem a, Elem b) { return L->join(a, b); });
}

LawFlags check_cca_laws(const FiniteLattice& L, const OperationTable& dot) {
  if (dot.size() != L.size()) throw Error(ErrorKind::HostMismatch, "table does not range over this lattice");
  const auto n = static_cast<Elem>(L.size());
  LawFlags f;
  auto& ccomm = f.add("Ccomm");
  auto& casso = f.add("Casso");
  auto& cm = f.add("Cm");
  auto& cb = f.add("Cb");
  for (Elem a = 0; a < n; ++a) {
    if (dot.at(a, L.bottom()) != L.bottom()) cb.fail({a});
    for (Elem b = 0; b < n; ++b) {
      if (dot.at(a, b) != dot.at(b, a)) ccomm.fail({a, b});
      for (Elem e = 0; e < n; ++e) {
        if (dot.at(a, dot.at(b, e)) != dot.at(dot.at(a, b), e)) casso.fail({a, b, e});
        if (L.leq(a, b) && !L.leq(dot.at(a, e), dot.at(b, e))) cm.fail({a, b, e});
      }
    }
  }
  return f;
}

LawFlags check_oa_laws(const RclStructure& s, const OperationTable& ot) {
  const auto& L = s.lattice();
  if (ot.size() != L.size()) throw Error(ErrorKind::HostMismatch, "table does not range over this lattice");
  const auto n = static_cast<Elem>(L.size());
  auto u = [&](Elem x) { return s.upper(x); };
  LawFlags f;
  auto& acomm = f.add("Acomm");
  auto& wasso1 = f.add("wAsso1", "checked only where a^uu=a^u, b^uu=b^u, e^uu=e^u");
  auto& wasso2 = f.add("wAsso2", "a⊗((b∨e)⊗a) = ((a∨b)⊗e)⊗e");
  auto& am = f.add("Am");
  auto& ab = f.add("Ab");
  for (Elem a = 0; a < n; ++a) {
    if (ot.at(a, L.top()) != L.top()) ab.fail({a});
    for (Elem b = 0; b < n; ++b) {
      if (ot.at(a, b) != ot.at(b, a)) acomm.fail({a, b});
      for (Elem e = 0; e < n; ++e) {
        if (L.leq(a, b) && !L.leq(ot.at(a, e), ot.at(b, e))) am.fail({a, b, e});
        const bool premise = u(u(a)) == u(a) && u(u(b)) == u(b) && u(u(e)) == u(e);
        if (premise && ot.at(a, ot.at(b, e)) != ot.at(ot.at(a, b), e)) wasso1.fail({a, b, e});
        if (ot.at(a, ot.at(L.join(b, e), a)) != ot.at(ot.at(L.join(a, b), e), e)) wasso2.fail({a, b, e});
      }
    }
  }
  return f;
}

LawFlags check_aggregation_laws(const RclStructure& s) {
  auto f = check_cca_laws(s.lattice(), operation_table(s, AggOp::Cca));
  auto g = check_oa_laws(s, operation_table(s, AggOp::Oa));
  for (auto& law : g.laws) f.laws.push_back(std::move(law));
  return f;
}

std::string_view norm_kind_name(NormKind k) {
  switch (k) {
    case NormKind::PseudoUninorm: return "pseudo-uninorm";
    case NormKind::Uninorm: return "uninorm";
    case NormKind::PseudoTNorm: return "pseudo-t-norm";
    case NormKind::TNorm: return "t-norm";
    case NormKind::PseudoSNorm: return "pseudo-s-norm";
    case NormKind::SNorm: return "s-norm";
    case NormKind::None: return "none";
  }
  return "none";
}

NormClassification classify_norm(const FiniteLattice& L, const OperationTable& t, Elem e) {
  if (e >= L.size()) throw Error(ErrorKind::UnknownElement, "identity candidate out of range");
  if (t.size() != L.size()) throw Error(ErrorKind::HostMismatch, "table does not range over this lattice");
  const auto n = static_cast<Elem>(L.size());
  bool order = true, assoc = true, ident = true, comm = true;
  for (Elem a = 0; a < n; ++a) {
    if (t.at(e, a) != a || t.at(a, e) != a) ident = false;
    for (Elem b = 0; b < n; ++b) {
      if (t.at(a, b) != t.at(b, a)) comm = false;
      for (Elem c = 0; c < n; ++c) {
        if (t.at(a, t.at(b, c)) != t.at(t.at(a, b), c)) assoc = false;
        if (L.leq(a, b) && (!L.leq(t.at(a, c), t.at(b, c)) || !L.leq(t.at(c, a), t.at(c, b)))) order = false;
      }
    }
  }
  NormClassification r;
  if (!order) r.failed.push_back("order-compatible");
  if (!assoc) r.failed.push_back("associative");
  if (!ident) r.failed.push_back("identity");
  if (!comm) r.failed.push_back("commutative");
  if (!order || !assoc || !ident) return r;
  if (e == L.top()) r.kind = comm ? NormKind::TNorm : NormKind::PseudoTNorm;
  else if (e == L.bottom()) r.kind = comm ? NormKind::SNorm : NormKind::PseudoSNorm;
  else r.kind = comm ? NormKind::Uninorm : NormKind::PseudoUninorm;
  return r;
}

}  // namespace rclkit
