#include <doctest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "rclkit/io.hpp"
#include "rclkit/model_search.hpp"

using namespace rclkit;

TEST_CASE("iso-class counts") {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 5, 15};
  for (std::size_t n = 1; n <= expected.size(); ++n) CHECK(enumerate_lattices(n).size() == expected[n - 1]);
}

TEST_CASE("iso-class and labelled counts match the brute-force oracle") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto orders = oracle::labelled_lattices(n);
    CHECK(enumerate_lattices(n, false).size() == orders.size());
    CHECK(enumerate_lattices(n, true).size() == oracle::count_iso_classes(orders));
  }
}

TEST_CASE("labelled counts by hand") {
  CHECK(enumerate_lattices(1, false).size() == 1);
  CHECK(enumerate_lattices(2, false).size() == 2);
  CHECK(enumerate_lattices(3, false).size() == 6);
  CHECK(enumerate_lattices(4, false).size() == 36);
}

TEST_CASE("representatives are canonically named") {
  const auto four = enumerate_lattices(4);
  for (const auto& L : four) {
    CHECK(L.name(L.bottom()) == "⊥");
    CHECK(L.name(L.top()) == "⊤");
  }
  CHECK(enumerate_lattices(3)[0].names() == std::vector<std::string>{"⊥", "a", "⊤"});
}

TEST_CASE("enumeration bounds") {
  CHECK_THROWS_AS(enumerate_lattices(0), Error);
  try {
    enumerate_lattices(8);
    FAIL("expected a bound error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundExceeded);
  }
}

TEST_CASE("small structure families") {
  const auto two = fixtures::chain(2);
  CHECK(enumerate_structures(*two, AxiomSet::FullRcl).size() == 2);
  CHECK(enumerate_structures(*fixtures::chain(1), AxiomSet::FullRcl).size() == 1);
  for (const auto& L : enumerate_lattices(5)) {
    const auto fam = enumerate_structures(L, AxiomSet::FullRcl);
    std::vector<Elem> id(L.size());
    for (Elem i = 0; i < id.size(); ++i) id[i] = i;
    CHECK(std::find(fam.lowers.begin(), fam.lowers.end(), id) != fam.lowers.end());
    CHECK(std::find(fam.uppers.begin(), fam.uppers.end(), id) != fam.uppers.end());
  }
}

TEST_CASE("structure families match brute force over all map pairs") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& Lv : enumerate_lattices(n)) {
      const auto L = std::make_shared<const FiniteLattice>(Lv);
      std::size_t total = 1;
      for (std::size_t i = 0; i < n; ++i) total *= n;
      std::size_t core = 0, full = 0;
      std::vector<Elem> l(n), u(n);
      for (std::size_t li = 0; li < total; ++li) {
        std::size_t r = li;
        for (std::size_t i = 0; i < n; ++i, r /= n) l[i] = static_cast<Elem>(r % n);
        for (std::size_t ui = 0; ui < total; ++ui) {
          std::size_t q = ui;
          for (std::size_t i = 0; i < n; ++i, q /= n) u[i] = static_cast<Elem>(q % n);
          const RclStructure s(L, l, u);
          core += s.axioms().is_core;
          full += s.axioms().is_rcl;
        }
      }
      CHECK(enumerate_structures(*L, AxiomSet::Core).size() == core);
      CHECK(enumerate_structures(*L, AxiomSet::FullRcl).size() == full);
    }
  }
}

TEST_CASE("registry") {
  for (const char* id : {"prop1-lu2eq", "prop1-lu3eq", "thm1-laws", "thm2-laws", "wn3n", "wn-s", "thm5-laws",
                         "negimpl-laws", "negimpl-BC1", "negimpl-IP", "sim-bc-fail", "intervals",
                         "rough-order-bounded", "wc-bound", "representability"})
    CHECK_NOTHROW(find_claim(id));
  try {
    find_claim("no-such-claim");
    FAIL("expected UnknownClaim");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownClaim);
  }
}

TEST_CASE("upper join equality is refuted and the witness re-verifies") {
  const auto r = test_claim("prop1-lu2eq", 5, 1);
  CHECK(r.status == ClaimStatus::Counterexample);
  REQUIRE(r.witness.has_value());
  const auto& s = r.witness->structure;
  CHECK(s.axioms().is_core);
  const auto fresh = check_rcl_axioms(RclStructure(s.lattice_ptr(), s.lower_table(), s.upper_table()));
  CHECK_FALSE(fresh.holds("lu2-eq"));
  CHECK_FALSE(axiom_holds_at(s, Axiom::Lu2Eq, r.witness->violation.tuple));
  CHECK(r.agrees_with_source() == std::optional<bool>(false));
}

TEST_CASE("confirmed claims") {
  for (const char* id : {"thm1-laws", "thm2-laws", "intervals", "wn-s", "thm5-laws", "rough-order-bounded"}) {
    const auto r = test_claim(id, 5, 1);
    CHECK_MESSAGE(r.status == ClaimStatus::ConfirmedUpToBound, id);
    CHECK(r.violating_structures == 0);
    CHECK(r.structures_checked > 0);
  }
}

TEST_CASE("sim implication boundary laws fail somewhere") {
  const auto r = test_claim("sim-bc-fail", 4, 1);
  CHECK(r.status == ClaimStatus::Counterexample);
  CHECK(r.agrees_with_source() == std::optional<bool>(true));
}

TEST_CASE("attainment correlation is tallied") {
  const auto r = test_claim("negimpl-IP", 4, 1);
  REQUIRE(r.correlation.has_value());
  const auto& c = *r.correlation;
  CHECK(c.violating_attained + c.violating_nonattained + c.clean_attained + c.clean_nonattained ==
        r.structures_checked);
  CHECK(c.violating_attained + c.violating_nonattained == r.violating_structures);
}

TEST_CASE("results are independent of the worker count") {
  for (const char* id : {"prop1-lu3eq", "negimpl-laws", "wc-bound"}) {
    const auto one = dump(claim_result_to_json(test_claim(id, 5, 1)));
    const auto many = dump(claim_result_to_json(test_claim(id, 5, 4)));
    CHECK(one == many);
  }
}

TEST_CASE("search bounds") {
  CHECK_THROWS_AS(test_claim("thm1-laws", 8), Error);
  CHECK_THROWS_AS(test_claim("thm1-laws", 0), Error);
  const auto r = test_claim("representability", 5, 1);
  CHECK(r.effective_max_size == 3);
  CHECK_FALSE(r.agrees_with_source().has_value());
}

TEST_CASE("derived operations are representable") {
  const auto L = fixtures::chain(3);
  const auto s = fixtures::structure(L, {"c0", "c0", "c2"}, {"c0", "c2", "c2"});
  REQUIRE(s.axioms().is_rcl);
  AbstractAlgebra alg{s,
                      operation_table(s, AggOp::Cca).entries,
                      operation_table(s, AggOp::Oa).entries,
                      negation_table(s, NegKind::Neg).entries,
                      negation_table(s, NegKind::Sim).entries,
                      std::nullopt,
                      std::nullopt};
  const auto rep = check_representability(alg);
  CHECK(rep.representable);
  for (const auto& [op, same] : rep.coincides) CHECK_MESSAGE(same, op);

  alg.cca.assign(alg.cca.size(), L->bottom());
  const auto other = check_representability(alg);
  CHECK_FALSE(other.coincides.at("cca"));
  CHECK_FALSE(other.representable);

  alg.cca.pop_back();
  CHECK_THROWS_AS(check_representability(alg), Error);
}
