#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "fixtures.hpp"
#include "rclkit/cli.hpp"
#include "rclkit/io.hpp"
#include "rclkit/report.hpp"

using namespace rclkit;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("rclkit-test-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write(const std::string& name, const std::string& body) {
  const auto p = scratch() / name;
  std::ofstream(p) << body;
  return p;
}

const std::string kExample = fixtures::data_path("example.json");

}  // namespace

TEST_CASE("lattice round trip is bit-exact") {
  const auto L = fixtures::example_lattice();
  const auto first = dump(lattice_to_json(*L));
  const auto back = lattice_from_json(Json::parse(first));
  CHECK(back == *L);
  CHECK(dump(lattice_to_json(back)) == first);
}

TEST_CASE("structure round trip") {
  const auto s = structure_from_json(read_json_file(kExample));
  const auto text = dump(structure_to_json(s));
  const auto again = structure_from_json(Json::parse(text));
  CHECK(again.lattice() == s.lattice());
  CHECK(again.lower_table() == s.lower_table());
  CHECK(again.upper_table() == s.upper_table());
  CHECK(dump(structure_to_json(again)) == text);

  const auto P = std::make_shared<const FiniteLattice>(FiniteLattice::powerset({"1"}));
  const RclStructure c(P, {0, 1}, {0, 1}, std::vector<Elem>{1, 0});
  const auto cj = structure_from_json(structure_to_json(c));
  REQUIRE(cj.has_complement());
  CHECK(*cj.complement_table() == std::vector<Elem>{1, 0});
}

TEST_CASE("ascii aliases in files") {
  const auto doc = Json::parse(R"({"elements": ["⊥", "m", "⊤"], "order": [["bot", "m"], ["m", "top"]],
    "lower": {"bot": "bot", "m": "bot", "top": "top"}, "upper": {"⊥": "⊥", "m": "top", "⊤": "⊤"}})");
  const auto s = structure_from_json(doc);
  CHECK(s.axioms().is_rcl);
}

TEST_CASE("missing map entries are reported") {
  const auto doc = Json::parse(R"({"elements": ["⊥", "⊤"], "order": [["⊥", "⊤"]],
    "lower": {"⊥": "⊥"}, "upper": {"⊥": "⊥", "⊤": "⊤"}})");
  try {
    structure_from_json(doc);
    FAIL("expected PartialTable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PartialTable);
  }
}

TEST_CASE("set descriptor round trip") {
  const auto doc = Json::parse(R"({"universe": ["1","2","3"], "granules": [["1","2"],["3"]], "mode": "partition",
    "nu": "definite"})");
  const auto s = set_rcl_from_json(doc);
  CHECK(s.nu() == NuSelector::Definite);
  CHECK(dump(set_rcl_to_json(s)) == dump(doc));
  const auto custom = Json::parse(R"({"universe": ["1","2"], "granules": [["1"],["2"]], "mode": "covering",
    "nu": [["1"], "{1,2}"]})");
  const auto c = set_rcl_from_json(custom);
  CHECK(c.nu() == NuSelector::Custom);
  CHECK(set_rcl_from_json(set_rcl_to_json(c)).custom_nu() == c.custom_nu());
}

TEST_CASE("claim result round trip") {
  for (const char* id : {"prop1-lu2eq", "negimpl-IP", "wc-bound", "thm1-laws"}) {
    const auto r = test_claim(id, 4, 1);
    const auto text = dump(claim_result_to_json(r));
    const auto back = claim_result_from_json(Json::parse(text));
    CHECK(dump(claim_result_to_json(back)) == text);
    if (r.witness) {
      const auto reloaded = structure_from_json(Json::parse(text));
      CHECK(reloaded.lower_table() == r.witness->structure.lower_table());
      CHECK(reloaded.has_complement() == r.witness->structure.has_complement());
    }
  }
}

TEST_CASE("validate exit codes") {
  const auto bad = cli({"validate", kExample});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("lu1-idempotence: (⊤)") != std::string::npos);
  CHECK(bad.out.find("(c,a)") != std::string::npos);

  const auto good = write("chain.json", R"({"elements": ["bot", "top"], "order": [["bot", "top"]],
    "lower": {"bot": "bot", "top": "top"}, "upper": {"bot": "bot", "top": "top"}})");
  CHECK(cli({"validate", good.string()}).code == 0);
  const auto md = cli({"check", "--suite", "rcl", good.string()});
  CHECK(md.code == 0);
  CHECK(md.out.find("violations: none") != std::string::npos);

  CHECK(cli({"validate", (scratch() / "absent.json").string()}).code == 2);
  CHECK(cli({"validate"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
}

TEST_CASE("text tables") {
  const auto cca = cli({"table", "--op", "cca", kExample});
  CHECK(cca.code == 0);
  std::istringstream lines(cca.out);
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  CHECK(first == "⊥: ⊥ ⊥ ⊥ ⊥ ⊥ ⊥ ⊥");
  CHECK(display_width(header) == display_width(first));

  const auto neg = cli({"table", "--op", "neg", kExample});
  CHECK(neg.out.find("¬: b ⊥ ⊥ ⊥ ⊥ ⊥ ⊥") != std::string::npos);
  for (const char* op : {"odot", "cross", "imp-neg", "imp-o", "imp-sim", "imp-s", "sim"})
    CHECK(cli({"table", "--op", op, kExample}).code == 0);
  CHECK(cli({"table", "--op", "nope", kExample}).code == 2);
}

TEST_CASE("formats") {
  const auto json = cli({"table", "--op", "oa", "--format", "json", kExample});
  const auto doc = Json::parse(json.out);
  CHECK(doc["rows"]["⊥"][1] == "⊤");
  CHECK(doc["axiom_status"] == "not-rcl");
  const auto bad = cli({"table", "--op", "oa", "--format", "pdf", kExample});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("UnsupportedFormat") != std::string::npos);
  CHECK(cli({"search", "--claim", "thm1-laws", "--max-size", "3", "--format", "text-table"}).code == 2);
  CHECK_THROWS_AS(parse_format("yaml"), Error);
}

TEST_CASE("law suites") {
  for (const char* suite : {"rcl", "aggregation", "negation", "implication", "tarski"}) {
    const auto r = cli({"check", "--suite", suite, "--format", "json", kExample});
    CHECK((r.code == 0 || r.code == 1));
    CHECK_NOTHROW(Json::parse(r.out));
  }
  const auto set = write("set.json", R"({"universe": ["1","2","3"], "granules": [["1","2"],["3"]]})");
  CHECK(cli({"check", "--suite", "sgrcl", set.string()}).code == 0);
  CHECK(cli({"check", "--suite", "sgrcl", "--scope", "all-subsets", set.string()}).code == 1);
  CHECK(cli({"check", "--suite", "sgrcl", kExample}).code == 2);
}

TEST_CASE("bias command") {
  const auto set = write("bias-set.json", R"({"universe": ["1","2","3","4"], "granules": [["1","2"],["3"],["4"]]})");
  const auto config = write("bias.json", R"({"cases": [{"C": "{1}", "E": ["3", "4"], "F": "{1,2,3,4}"}]})");
  const auto r = cli({"bias", "--config", config.string(), "--format", "json", set.string()});
  CHECK(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["flat"]["numerator"] == "-3");
  CHECK(doc["flat"]["denominator"] == "1");
  CHECK(doc["sharp"]["numerator"] == "-4");

  const auto elem = write("bias-elem.json", R"({"cases": [{"C": "a", "E": "b", "F": "top"}]})");
  CHECK(cli({"bias", "--config", elem.string(), kExample}).code == 0);
  const auto empty = write("bias-empty.json", R"({"cases": []})");
  const auto e = cli({"bias", "--config", empty.string(), kExample});
  CHECK(e.code == 2);
  CHECK(e.err.find("EmptyCaseList") != std::string::npos);
}

TEST_CASE("search writes a reloadable result") {
  const auto dir = scratch() / "db";
  const auto r = cli({"search", "--claim", "prop1-lu2eq", "--max-size", "5", "--out", dir.string()});
  CHECK(r.code == 1);
  const auto file = dir / "prop1-lu2eq.json";
  REQUIRE(fs::exists(file));
  const auto v = cli({"validate", "--format", "json", file.string()});
  CHECK(v.code == 1);
  const auto doc = Json::parse(v.out);
  CHECK(doc["is_core"] == true);
  CHECK(cli({"search", "--claim", "thm1-laws", "--max-size", "4"}).code == 0);
  CHECK(cli({"search", "--claim", "nope", "--max-size", "4"}).code == 2);
  const auto again = cli({"search", "--claim", "prop1-lu2eq", "--max-size", "5", "--out", dir.string()});
  CHECK(again.out == r.out);
}

TEST_CASE("ingest and depend") {
  const auto csv = write("t.csv", "id,p,q\nx1,0,1\nx2,0,1\nx3,1,0\nx4,1,1\n");
  const auto r = cli({"ingest", "--csv", csv.string(), "--attrs", "p", "--key", "id"});
  CHECK(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["granules"].size() == 2);
  const auto desc = write("ingested.json", r.out);
  const auto d = cli({"depend", "--x", "{x1,x2,x3}", "--z", "x1,x2,x4", "--format", "json", desc.string()});
  CHECK(d.code == 0);
  const auto dj = Json::parse(d.out);
  CHECK(dj["beta_i"] == "{x1,x2}");
  CHECK(dj["beta_s"] == "{x1,x2}");
  CHECK(cli({"depend", "--x", "{x9}", "--z", "{}", desc.string()}).code == 2);
  CHECK(cli({"ingest", "--csv", csv.string(), "--attrs", "zz"}).code == 2);
}

TEST_CASE("output files are written whole") {
  const auto target = scratch() / "table.txt";
  CHECK(cli({"table", "--op", "cca", "--out", target.string(), kExample}).code == 0);
  std::ifstream in(target);
  std::string first;
  std::getline(in, first);
  CHECK(first.rfind("·", 0) == 0);
  CHECK_FALSE(fs::exists(target.string() + ".tmp"));
}

TEST_CASE("rough objects and claims listing") {
  CHECK(cli({"rough-objects", kExample}).code == 0);
  const auto list = cli({"claims", "--format", "json"});
  CHECK(Json::parse(list.out).size() == claim_registry().size());
}
