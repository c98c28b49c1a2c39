// One line per acceptance criterion. Exit status is nonzero when any fails.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "rclkit/bias.hpp"
#include "rclkit/cli.hpp"
#include "rclkit/model_search.hpp"
#include "rclkit/negation.hpp"
#include "rclkit/set_granular.hpp"

using namespace rclkit;

namespace {

using Clock = std::chrono::steady_clock;
using Rows = std::vector<std::vector<std::string>>;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

struct CliRun {
  int code;
  Json doc;
};

CliRun cli_json(std::vector<std::string> args) {
  args.insert(args.end(), {"--format", "json"});
  std::ostringstream out, err;
  const int code = run(args, out, err);
  Json doc;
  if (!out.str().empty()) doc = Json::parse(out.str());
  return {code, std::move(doc)};
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fixture() { return fixtures::data_path("example.json"); }

const std::vector<std::string> kOrder{"⊥", "⊤", "a", "b", "c", "e", "f"};

// Reference tables for the worked example, rows and columns in the order above.
const Rows kOa{{"⊥", "⊤", "a", "⊤", "e", "e", "b"}, {"⊤", "⊤", "⊤", "⊤", "⊤", "⊤", "⊤"},
               {"a", "⊤", "a", "⊤", "⊤", "⊤", "⊤"}, {"⊤", "⊤", "⊤", "⊤", "⊤", "⊤", "⊤"},
               {"e", "⊤", "⊤", "⊤", "e", "e", "⊤"}, {"e", "⊤", "⊤", "⊤", "e", "e", "⊤"},
               {"b", "⊤", "⊤", "⊤", "⊤", "⊤", "b"}};
const Rows kCca{{"⊥", "⊥", "⊥", "⊥", "⊥", "⊥", "⊥"}, {"⊥", "e", "c", "f", "c", "c", "⊥"},
                {"⊥", "c", "c", "⊥", "c", "c", "⊥"}, {"⊥", "f", "⊥", "b", "⊥", "⊥", "⊥"},
                {"⊥", "c", "c", "⊥", "c", "c", "⊥"}, {"⊥", "c", "c", "⊥", "c", "c", "⊥"},
                {"⊥", "⊥", "⊥", "⊥", "⊥", "⊥", "⊥"}};
const std::vector<std::string> kNeg{"b", "⊥", "⊥", "⊥", "⊥", "⊥", "⊥"};
const std::vector<std::string> kSim{"⊤", "f", "b", "c", "f", "f", "⊤"};

std::string norm(const Json& v) { return std::string(canonical_alias(v.get<std::string>())); }

std::size_t table_mismatches(const std::string& op, const Rows& golden, Outcome& o) {
  const auto r = cli_json({"table", "--op", op, fixture()});
  o.require(r.code == 0, "table --op " + op + " exit code");
  std::size_t bad = 0;
  for (std::size_t i = 0; i < kOrder.size(); ++i)
    for (std::size_t j = 0; j < kOrder.size(); ++j)
      if (norm(r.doc["rows"][kOrder[i]][j]) != golden[i][j]) ++bad;
  return bad;
}

std::vector<std::string> row_mismatches(const std::string& op, const std::vector<std::string>& golden, Outcome& o) {
  const auto r = cli_json({"table", "--op", op, fixture()});
  o.require(r.code == 0, "table --op " + op + " exit code");
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < kOrder.size(); ++i) {
    const auto got = norm(r.doc["values"][kOrder[i]]);
    if (got != golden[i]) bad.push_back(kOrder[i] + ": " + got + " vs reference " + golden[i]);
  }
  return bad;
}

Outcome golden_tables() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto oa = table_mismatches("oa", kOa, o);
  const auto cca = table_mismatches("cca", kCca, o);
  const auto neg = row_mismatches("neg", kNeg, o);
  const auto sim = row_mismatches("sim", kSim, o);
  o.require(oa == 0, std::to_string(oa) + " of 49 ⊗ entries differ");
  o.require(cca == 0, std::to_string(cca) + " of 49 · entries differ");
  o.require(neg.empty(), "¬ row differs");
  o.require(sim.empty(), "~ row differs");
  for (const auto& m : sim) o.note("~ at " + m);
  o.require(seconds_since(t0) < 1.0, "runtime under 1 s");
  return o;
}

Outcome example_diagnosis() {
  Outcome o;
  const auto r = cli_json({"validate", fixture()});
  o.require(r.code == 1, "validate exits 1");
  const auto s = structure_from_json(read_json_file(fixture()));
  const auto& L = s.lattice();
  for (const auto& law : r.doc["axioms"]) {
    const auto name = law["law"].get<std::string>();
    const auto axiom = axiom_from_name(name);
    o.require(axiom.has_value(), "known axiom " + name);
    if (!axiom) continue;
    for (const auto& w : law["witnesses"]) {
      std::vector<Elem> tuple;
      for (const auto& e : w) tuple.push_back(L.find(e.get<std::string>()));
      o.require(!axiom_holds_at(s, *axiom, tuple), "witness of " + name + " re-verifies");
    }
    const bool holds = law["holds"].get<bool>();
    if (name == "lu1-idempotence") {
      o.require(!holds && law["witnesses"] == Json::parse(R"([["⊤"]])"), "lu1-idempotence fails exactly at ⊤");
    } else if (name == "lu1-sandwich" || name == "lu1-uu" || name == "topbot") {
      o.require(holds, name + " passes");
    } else if (name == "u-mo") {
      bool has_ca = false;
      for (const auto& w : law["witnesses"]) has_ca |= w == Json::parse(R"(["c", "a"])");
      o.require(!holds && has_ca, "u-mo fails with witness (c,a)");
    } else if (!holds) {
      o.note(name + " also fails (" + std::to_string(law["violations"].get<std::size_t>()) + " tuples)");
    }
  }
  return o;
}

Outcome theorem_suite() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const char* id : {"thm1-laws", "thm2-laws", "wn-s", "thm5-laws", "wn2n", "intervals", "rough-order-bounded"}) {
    const auto r = test_claim(id, 5);
    o.require(r.status == ClaimStatus::ConfirmedUpToBound && r.effective_max_size == 5,
              std::string(id) + " has " + std::to_string(r.violating_structures) + " violating structures");
    o.note(std::string(id) + ": " + std::to_string(r.structures_checked) + " structures");
  }
  o.require(seconds_since(t0) < 600, "runtime under 10 min");
  return o;
}

Outcome refutation() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto r = cli_json({"search", "--claim", "prop1-lu2eq", "--max-size", "5"});
  o.require(r.code == 1, "search exits 1 with a counterexample");
  o.require(r.doc.value("status", "") == "counterexample", "status is counterexample");
  if (r.doc.contains("witness") && !r.doc["witness"].is_null()) {
    const auto s = structure_from_json(r.doc);
    const auto report = check_rcl_axioms(s);
    o.require(report.is_core, "witness satisfies lu1, l-mo, u-mo, topbot");
    o.require(!report.holds("lu2-eq"), "witness violates lu2 equality");
    o.note("witness on " + std::to_string(s.size()) + " elements");
  } else {
    o.require(false, "witness present");
  }
  o.require(seconds_since(t0) < 60, "runtime under 1 min");
  return o;
}

Outcome claim_ledger() {
  Outcome o;
  for (const char* id : {"wn3n", "negimpl-BC1", "negimpl-IP"}) {
    const auto r = test_claim(id, 5);
    o.require(r.effective_max_size == 5, std::string(id) + " searched up to 5");
    o.require(r.correlation.has_value(), std::string(id) + " reports attainment correlation");
    if (r.status == ClaimStatus::Counterexample) {
      o.require(r.witness.has_value(), std::string(id) + " has a witness");
      if (r.witness) {
        const auto verdict = find_claim(id).check(r.witness->structure);
        o.require(verdict.violation.has_value(), std::string(id) + " witness re-verifies");
      }
    }
    std::string line = std::string(id) + ": " + std::string(claim_status_name(r.status));
    if (r.correlation)
      line += ", violating non-attained " + std::to_string(r.correlation->violating_nonattained) +
              ", violating attained " + std::to_string(r.correlation->violating_attained) + ", clean non-attained " +
              std::to_string(r.correlation->clean_nonattained) + ", clean attained " +
              std::to_string(r.correlation->clean_attained);
    o.note(line);
  }
  return o;
}

Outcome classical_coincidence() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937 rng(20261019);
  std::size_t bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + rng() % 8;
    std::vector<oracle::Mask> blocks(m, 0);
    for (std::size_t i = 0; i < m; ++i) blocks[rng() % m] |= oracle::Mask{1} << i;
    std::erase(blocks, oracle::Mask{0});
    Universe u;
    for (std::size_t i = 0; i < m; ++i) u.items.push_back("x" + std::to_string(i));
    Granulation g;
    for (auto b : blocks) g.granules.push_back(Subset::from_word(m, b));
    const SetRcl s(u, g, GranuleMode::Partition);
    const oracle::Mask full = (oracle::Mask{1} << m) - 1;
    const oracle::Mask x = rng() & full, z = rng() & full;
    const oracle::Mask expected = oracle::classical_lower(blocks, x) & oracle::classical_lower(blocks, z);

    const auto d = rough_dependence(s, Subset::from_word(m, x), Subset::from_word(m, z));
    const auto explicit_s = s.materialize();
    const Elem cca = aggregate(explicit_s, AggOp::Cca, x, z);
    const bool ok = d.beta_i && d.beta_s && d.beta_i->low_word() == expected && d.beta_s->low_word() == expected &&
                    cca == expected;
    bad += !ok;
  }
  o.require(bad == 0, std::to_string(bad) + " of 100 instances disagree");
  o.require(seconds_since(t0) < 5, "runtime under 5 s");
  return o;
}

// Brute-force filter sizes over every subset of the powerset.
Outcome bias_arithmetic() {
  Outcome o;
  std::mt19937 rng(20261019 + 7);
  std::size_t bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng() % 4;
    std::vector<oracle::Mask> blocks(m, 0);
    for (std::size_t i = 0; i < m; ++i) blocks[rng() % m] |= oracle::Mask{1} << i;
    std::erase(blocks, oracle::Mask{0});
    Universe u;
    for (std::size_t i = 0; i < m; ++i) u.items.push_back(std::to_string(i + 1));
    Granulation g;
    for (auto b : blocks) g.granules.push_back(Subset::from_word(m, b));
    const SetRcl s(u, g, GranuleMode::Partition);

    const oracle::Mask full = (oracle::Mask{1} << m) - 1;
    const std::size_t k = 1 + rng() % 3;
    std::vector<SubsetCase> cases;
    Rational flat = 0, sharp = 0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const oracle::Mask c = rng() & full, e = rng() & full, f = rng() & full;
      cases.push_back({Subset::from_word(m, c), Subset::from_word(m, e), Subset::from_word(m, f)});
      auto lo = [&](oracle::Mask a) { return oracle::classical_lower(blocks, a); };
      auto up = [&](oracle::Mask a) { return oracle::classical_upper(blocks, a); };
      auto card = [&](oracle::Mask a) { return static_cast<long>(oracle::filter_size_by_scan(m, a)); };
      const long cc = card(lo(c) & lo(f)), co = card(up(c) | up(f));
      const long ec = card(lo(e) & lo(f)), eo = card(up(e) | up(f));
      flat += Rational(cc, ec);
      if (eo != ec) {
        sharp += Rational(co - cc) / (eo - ec);
        ++used;
      }
    }
    const auto r = audit(s, cases, SharpMode::SkipDegenerate);
    bool ok = r.flat == 1 - flat / static_cast<long>(k);
    if (used > 0)
      ok = ok && r.sharp && *r.sharp == 1 - sharp / static_cast<long>(used);
    else
      ok = ok && !r.sharp;
    bad += !ok;
  }
  o.require(bad == 0, std::to_string(bad) + " of 200 random audits disagree with enumeration");

  // Worked case by hand: C·F = ∅ (16 supersets), E·F = {3,4} (4), both ⊗ are U (1).
  Universe u{{"1", "2", "3", "4"}};
  const SetRcl s(u, granulation_from_names(u, {{"1", "2"}, {"3"}, {"4"}}), GranuleMode::Partition);
  const std::vector<SubsetCase> worked{{s.parse_subset("{1}"), s.parse_subset("{3,4}"), s.full_set()}};
  const auto r = audit(s, worked);
  const Rational flat = 1 - Rational(16, 4);
  const Rational sharp = 1 - Rational(1 - 16) / (1 - 4);
  o.require(flat == -3 && sharp == -4, "hand derivation");
  o.require(r.flat == flat, "worked ♭ = " + to_string(r.flat));
  o.require(r.sharp && *r.sharp == sharp, "worked ð");
  return o;
}

Outcome enumeration_counts() {
  Outcome o;
  const std::vector<std::size_t> expected{1, 1, 1, 2, 5};
  std::string got;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto c = enumerate_lattices(n).size();
    got += (n > 1 ? ", " : "") + std::to_string(c);
    o.require(c == expected[n - 1], "count at n=" + std::to_string(n));
  }
  o.note("counts " + got);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria{
      {"golden tables", golden_tables},
      {"example diagnosis", example_diagnosis},
      {"theorem suite up to 5 elements", theorem_suite},
      {"lu2 equality refutation", refutation},
      {"claim ledger with attainment", claim_ledger},
      {"classical coincidence", classical_coincidence},
      {"bias arithmetic", bias_arithmetic},
      {"enumeration counts", enumeration_counts},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << "\n";
    for (const auto& n : o.notes) std::cout << "     " << n << "\n";
    failed += !o.pass;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
