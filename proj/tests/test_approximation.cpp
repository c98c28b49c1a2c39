#include <doctest.h>

#include "fixtures.hpp"
#include "rclkit/set_granular.hpp"

using namespace rclkit;

namespace {

std::vector<std::vector<std::string>> named_witnesses(const RclStructure& s, std::string_view law) {
  std::vector<std::vector<std::string>> out;
  for (const auto& w : s.axioms().find(law)->witnesses) {
    std::vector<std::string> t;
    for (Elem e : w) t.push_back(s.lattice().name(e));
    out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("worked example axiom diagnosis") {
  const auto s = fixtures::worked_example();
  const auto& r = s.axioms();
  CHECK_FALSE(r.is_rcl);
  CHECK_FALSE(r.is_core);
  CHECK_FALSE(r.holds("lu1-idempotence"));
  CHECK(named_witnesses(s, "lu1-idempotence") == std::vector<std::vector<std::string>>{{"⊤"}});
  CHECK(r.holds("lu1-sandwich"));
  CHECK(r.holds("lu1-uu"));
  CHECK(r.holds("topbot"));
  const auto umo = named_witnesses(s, "u-mo");
  CHECK(std::find(umo.begin(), umo.end(), std::vector<std::string>{"c", "a"}) != umo.end());
}

TEST_CASE("every witness re-verifies") {
  const auto s = fixtures::worked_example();
  for (const auto& law : s.axioms().laws) {
    const auto axiom = axiom_from_name(law.name);
    REQUIRE(axiom.has_value());
    CHECK(law.holds == law.witnesses.empty());
    for (const auto& w : law.witnesses) CHECK_FALSE(axiom_holds_at(s, *axiom, w));
  }
}

TEST_CASE("identity operators satisfy everything") {
  for (const auto& L : {fixtures::example_lattice(), fixtures::chain(4), fixtures::pentagon_j()}) {
    const auto s = fixtures::identity(L);
    CHECK(s.axioms().is_rcl);
    CHECK(s.axioms().is_core);
    CHECK(definite_elements(s, DefiniteKind::Both).count() == L->size());
    const auto objs = rough_objects(s, Variant::Both);
    CHECK(objs.size() == L->size());
    for (const auto& o : objs) {
      CHECK(o.members.count() == 1);
      CHECK(*o.lower_end == *o.upper_end);
    }
    const auto ord = rough_order(s);
    CHECK(ord.all_meets_exist);
    CHECK(ord.all_joins_exist);
    CHECK(ord.bottom_pair_least);
    CHECK(ord.top_pair_greatest);
  }
}

TEST_CASE("core structure refuting the upper join equality") {
  const auto L = fixtures::pentagon_j();
  const auto s = fixtures::structure(L, {"⊥", "x", "y", "j", "⊤"}, {"⊥", "x", "y", "⊤", "⊤"});
  CHECK(s.axioms().is_core);
  CHECK_FALSE(s.axioms().is_rcl);
  const auto* lu2 = s.axioms().find("lu2-eq");
  REQUIRE(lu2 != nullptr);
  CHECK_FALSE(lu2->holds);
  const std::vector<Elem> xy{L->find("x"), L->find("y")};
  CHECK(std::find(lu2->witnesses.begin(), lu2->witnesses.end(), xy) != lu2->witnesses.end());
  CHECK(s.axioms().holds("lu2-ineq"));
  CHECK(s.axioms().holds("lu3-ineq"));
}

TEST_CASE("definite elements of the worked example") {
  const auto s = fixtures::worked_example();
  const auto& L = s.lattice();
  ElementSet expected(L.size());
  for (const char* n : {"⊥", "b", "c"}) expected.set(L.find(n));
  CHECK(definite_elements(s, DefiniteKind::Lower) == expected);
}

TEST_CASE("classical set structure definite elements and rough objects") {
  const Universe u{{"1", "2", "3"}};
  const auto g = granulation_from_names(u, {{"1", "2"}, {"3"}});
  const SetRcl sr(u, g, GranuleMode::Partition);
  const auto s = sr.materialize();
  const auto& L = s.lattice();
  ElementSet both(L.size());
  for (const char* n : {"{}", "{1,2}", "{3}", "{1,2,3}"}) both.set(L.find(n));
  CHECK(definite_elements(s, DefiniteKind::Both) == both);

  const Elem one = L.find("{1}");
  bool found = false;
  for (const auto& o : rough_objects(s, Variant::Both)) {
    if (!o.members.test(one)) continue;
    found = true;
    CHECK(o.members.count() == 2);
    CHECK(o.members.test(L.find("{2}")));
    CHECK(L.name(*o.lower_end) == "{}");
    CHECK(L.name(*o.upper_end) == "{1,2}");
  }
  CHECK(found);

  for (const auto& o : rough_objects(s, Variant::Upper)) {
    CHECK_FALSE(o.lower_end.has_value());
    if (o.members.test(one)) {
      CHECK(o.members.test(L.find("{2}")));
      CHECK(o.members.test(L.find("{1,2}")));
      CHECK(o.members.count() == 3);
    }
  }

  const auto ord = rough_order(s);
  CHECK(ord.reflexive);
  CHECK(ord.antisymmetric);
  CHECK(ord.transitive);
  CHECK(ord.bottom_pair_least);
  CHECK(ord.top_pair_greatest);
}

TEST_CASE("rough order is bounded below on the worked example") {
  const auto s = fixtures::worked_example();
  const auto ord = rough_order(s);
  CHECK(ord.reflexive);
  CHECK(ord.least.has_value());
}

TEST_CASE("weak complementation") {
  const auto P = std::make_shared<const FiniteLattice>(FiniteLattice::powerset({"1", "2"}));
  std::vector<Elem> id(P->size()), boolean(P->size()), bottom(P->size(), P->bottom());
  for (Elem x = 0; x < P->size(); ++x) {
    id[x] = x;
    boolean[x] = static_cast<Elem>(~x & 3u);
  }
  const RclStructure b(P, id, id, boolean);
  const auto rb = check_weak_complementation(b);
  CHECK(rb.c1.holds);
  CHECK(rb.c2.holds);
  CHECK(rb.sim_vs_lc.size() == P->size());

  const RclStructure z(P, id, id, bottom);
  const auto rz = check_weak_complementation(z);
  CHECK(rz.c1.holds);
  CHECK(rz.c2.holds);
  // ~⊥ is ⊤ while ⊥^{lc} is ⊥
  CHECK(rz.sim_vs_lc[P->bottom()] == Relation::Greater);
  CHECK_FALSE(rz.bound_holds);

  const RclStructure none(P, id, id);
  CHECK_THROWS_AS(check_weak_complementation(none), Error);
  CHECK_THROWS_AS(none.complement(0), Error);
}

TEST_CASE("partial tables are rejected") {
  const auto L = fixtures::chain(3);
  CHECK_THROWS_AS(RclStructure(L, {0, 1}, {0, 1, 2}), Error);
  CHECK_THROWS_AS(RclStructure(L, {0, 1, 7}, {0, 1, 2}), Error);
}
