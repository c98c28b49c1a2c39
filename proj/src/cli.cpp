#include "rclkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "rclkit/report.hpp"

namespace rclkit {

namespace {

struct Options {
  std::string file;
  std::string format;
  std::string out;
  std::string op;
  std::string suite;
  std::string scope = "granules";
  std::string config;
  bool skip_degenerate = false;
  std::string csv;
  std::string attrs;
  std::string key;
  std::string claim;
  std::size_t max_size = 5;
  unsigned threads = 0;
  std::string x, z, nu, reading = "extremal";
};

RclStructure load_structure(const std::string& path) {
  const auto doc = read_json_file(path);
  if (is_set_rcl_document(doc)) return set_rcl_from_json(doc).materialize();
  return structure_from_json(doc);
}

SetRcl load_set_rcl(const std::string& path) {
  const auto doc = read_json_file(path);
  if (!is_set_rcl_document(doc)) throw Error(ErrorKind::InvalidInput, path + " is not a set descriptor");
  return set_rcl_from_json(doc);
}

void emit(const Options& o, const Payload& p, Format fallback, std::ostream& out) {
  const Format f = o.format.empty() ? fallback : parse_format(o.format);
  const auto text = render(p, f);
  if (o.out.empty()) out << text;
  else write_file_atomic(o.out, text);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const auto s = load_structure(o.file);
  emit(o, axiom_payload(s), Format::Markdown, out);
  return s.axioms().is_rcl ? 0 : 1;
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto s = load_structure(o.file);
  const auto status = axiom_status(s.axioms());
  static const std::vector<std::pair<std::string, AggOp>> aggs{
      {"cca", AggOp::Cca}, {"oa", AggOp::Oa}, {"odot", AggOp::Odot}, {"cross", AggOp::Cross}};
  static const std::vector<std::pair<std::string, ImpKind>> imps{
      {"imp-neg", ImpKind::Neg}, {"imp-o", ImpKind::O}, {"imp-sim", ImpKind::Sim}, {"imp-s", ImpKind::S}};
  for (const auto& [name, op] : aggs)
    if (o.op == name) {
      emit(o, operation_table_payload(operation_table(s, op), agg_op_symbol(op), status), Format::TextTable, out);
      return 0;
    }
  for (const auto& [name, kind] : imps)
    if (o.op == name) {
      emit(o, operation_table_payload(implication_table(s, kind), "⊨", status), Format::TextTable, out);
      return 0;
    }
  if (o.op == "neg" || o.op == "sim") {
    const auto kind = o.op == "neg" ? NegKind::Neg : NegKind::Sim;
    emit(o, unary_table_payload(negation_table(s, kind), o.op == "neg" ? "¬" : "~", status), Format::TextTable, out);
    return 0;
  }
  throw Error(ErrorKind::InvalidInput, "unknown table operation '" + o.op + "'");
}

int cmd_check(const Options& o, std::ostream& out) {
  if (o.suite == "sgrcl") {
    const auto s = load_set_rcl(o.file);
    UnderlapScope scope;
    if (o.scope == "granules") scope = UnderlapScope::Granules;
    else if (o.scope == "all-subsets") scope = UnderlapScope::AllSubsets;
    else throw Error(ErrorKind::InvalidInput, "unknown underlap scope '" + o.scope + "'");
    const auto r = check_sgrcl_axioms(s, scope);
    emit(o, sgrcl_payload(r, s, scope), Format::Markdown, out);
    return r.all() ? 0 : 1;
  }
  const auto s = load_structure(o.file);
  const auto& L = s.lattice();
  const auto status = axiom_status(s.axioms());
  std::vector<std::pair<std::string, LawFlags>> sections;
  if (o.suite == "rcl") {
    sections.emplace_back("rcl axioms", s.axioms());
  } else if (o.suite == "aggregation") {
    sections.emplace_back("cca", check_cca_laws(L, operation_table(s, AggOp::Cca)));
    sections.emplace_back("oa", check_oa_laws(s, operation_table(s, AggOp::Oa)));
  } else if (o.suite == "negation") {
    sections.emplace_back("neg", check_negation_laws(s, negation_table(s, NegKind::Neg)));
    sections.emplace_back("sim", check_negation_laws(s, negation_table(s, NegKind::Sim)));
  } else if (o.suite == "implication") {
    for (auto k : {ImpKind::Neg, ImpKind::O, ImpKind::Sim, ImpKind::S})
      sections.emplace_back(std::string(imp_kind_name(k)), check_implication_laws(L, implication_table(s, k)));
  } else if (o.suite == "tarski") {
    std::vector<std::pair<std::string, TarskiReport>> reports;
    bool all = true;
    for (auto k : {ImpKind::Neg, ImpKind::O, ImpKind::Sim, ImpKind::S}) {
      reports.emplace_back(std::string(imp_kind_name(k)), check_tarski(L, implication_table(s, k)));
      all = all && reports.back().second.is_tarski;
    }
    emit(o, tarski_payload(reports, L), Format::Markdown, out);
    return all ? 0 : 1;
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown law suite '" + o.suite + "'");
  }
  emit(o, laws_payload(sections, L, status), Format::Markdown, out);
  const bool all = std::all_of(sections.begin(), sections.end(), [](const auto& sec) { return sec.second.all(); });
  return all ? 0 : 1;
}

int cmd_rough_objects(const Options& o, std::ostream& out) {
  const auto s = load_structure(o.file);
  emit(o, rough_objects_payload(s, rough_order(s)), Format::Markdown, out);
  return 0;
}

int cmd_bias(const Options& o, std::ostream& out) {
  const auto config = read_json_file(o.config);
  const auto doc = read_json_file(o.file);
  const auto mode = o.skip_degenerate ? SharpMode::SkipDegenerate : SharpMode::Strict;
  BiasReport r;
  if (is_set_rcl_document(doc)) {
    const auto s = set_rcl_from_json(doc);
    r = audit(s, subset_cases_from_json(s, config), mode);
  } else {
    const auto s = structure_from_json(doc);
    r = audit(s, element_cases_from_json(s.lattice(), config), mode);
  }
  emit(o, bias_payload(r), Format::Markdown, out);
  return 0;
}

int cmd_ingest(const Options& o, std::ostream& out) {
  std::ifstream in(o.csv, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + o.csv);
  std::optional<std::string> key;
  if (!o.key.empty()) key = o.key;
  const auto table = InformationTable::from_csv(in, key);
  const auto attrs = split_list(o.attrs);
  const auto g = indiscernibility_partition(table, attrs);
  emit(o, partition_payload(table, attrs, g), Format::Json, out);
  return 0;
}

int cmd_search(const Options& o, std::ostream& out) {
  const auto r = test_claim(o.claim, o.max_size, o.threads);
  const auto p = claim_payload(r);
  if (!o.out.empty()) {
    std::filesystem::create_directories(o.out);
    write_file_atomic(std::filesystem::path(o.out) / (r.claim_id + ".json"), dump(p.json));
  }
  Options to_stdout = o;
  to_stdout.out.clear();
  emit(to_stdout, p, Format::Markdown, out);
  return r.status == ClaimStatus::Counterexample ? 1 : 0;
}

int cmd_claims(const Options& o, std::ostream& out) {
  Payload p;
  p.json = Json::array();
  std::vector<std::vector<std::string>> rows;
  p.markdown = "| claim | space | expectation | statement |\n| --- | --- | --- | --- |\n";
  for (const auto& c : claim_registry()) {
    const std::string exp(expectation_name(c.expectation));
    Json j;
    j["claim"] = c.id;
    j["space"] = std::string(axiom_set_name(c.space));
    j["expectation"] = exp;
    j["max_supported_size"] = c.max_supported_size;
    j["statement"] = c.statement;
    p.json.push_back(std::move(j));
    p.markdown += "| " + c.id + " | " + std::string(axiom_set_name(c.space)) + " | " + exp + " | " + c.statement + " |\n";
  }
  emit(o, p, Format::Markdown, out);
  return 0;
}

int cmd_depend(const Options& o, std::ostream& out) {
  auto s = load_set_rcl(o.file);
  if (o.nu == "lower-definite") s.set_nu(NuSelector::LowerDefinite);
  else if (o.nu == "definite") s.set_nu(NuSelector::Definite);
  else if (!o.nu.empty()) throw Error(ErrorKind::InvalidInput, "unknown ν selector '" + o.nu + "'");
  DependenceReading reading;
  if (o.reading == "extremal") reading = DependenceReading::Extremal;
  else if (o.reading == "literal") reading = DependenceReading::Literal;
  else throw Error(ErrorKind::InvalidInput, "unknown dependence reading '" + o.reading + "'");
  const auto x = s.parse_subset(o.x);
  const auto z = s.parse_subset(o.z);
  emit(o, dependence_payload(s, x, z, rough_dependence(s, x, z, reading)), Format::Markdown, out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rough convenience lattice workbench"};
  app.name("rclkit");
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool needs_file) {
    if (needs_file) sub->add_option("file", o.file, "structure or set descriptor (JSON)")->required();
    sub->add_option("--format", o.format, "json, markdown or text-table");
    sub->add_option("--out", o.out, "write the report to this file");
  };

  auto* validate = app.add_subcommand("validate", "check the approximation axioms");
  add_common(validate, true);

  auto* table = app.add_subcommand("table", "tabulate an operation");
  add_common(table, true);
  table->add_option("--op", o.op, "cca|oa|odot|cross|neg|sim|imp-neg|imp-o|imp-sim|imp-s")->required();

  auto* check = app.add_subcommand("check", "run a law suite");
  add_common(check, true);
  check->add_option("--suite", o.suite, "rcl|aggregation|negation|implication|tarski|sgrcl")->required();
  check->add_option("--scope", o.scope, "underlap range for sgrcl: granules|all-subsets");

  auto* rough = app.add_subcommand("rough-objects", "list rough objects and their order");
  add_common(rough, true);

  auto* bias = app.add_subcommand("bias", "bias audit");
  add_common(bias, true);
  bias->add_option("--config", o.config, "case list (JSON)")->required();
  bias->add_flag("--skip-degenerate", o.skip_degenerate, "average the sharp measure over non-degenerate cases");

  auto* ingest = app.add_subcommand("ingest", "partition an information table");
  add_common(ingest, false);
  ingest->add_option("--csv", o.csv, "CSV file with a header row")->required();
  ingest->add_option("--attrs", o.attrs, "comma-separated attributes")->required();
  ingest->add_option("--key", o.key, "column naming the rows");

  auto* search = app.add_subcommand("search", "exhaustively test a registered claim");
  search->add_option("--claim", o.claim)->required();
  search->add_option("--max-size", o.max_size)->required();
  search->add_option("--out", o.out, "directory for the result document");
  search->add_option("--format", o.format);
  search->add_option("--threads", o.threads, "worker count (default: RCLKIT_THREADS or hardware)");

  auto* claims = app.add_subcommand("claims", "list registered claims");
  add_common(claims, false);

  auto* depend = app.add_subcommand("depend", "rough dependence degrees");
  add_common(depend, true);
  depend->add_option("--x", o.x)->required();
  depend->add_option("--z", o.z)->required();
  depend->add_option("--nu", o.nu, "lower-definite|definite");
  depend->add_option("--reading", o.reading, "extremal|literal");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "rclkit: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*table) return cmd_table(o, out);
    if (*check) return cmd_check(o, out);
    if (*rough) return cmd_rough_objects(o, out);
    if (*bias) return cmd_bias(o, out);
    if (*ingest) return cmd_ingest(o, out);
    if (*search) return cmd_search(o, out);
    if (*claims) return cmd_claims(o, out);
    if (*depend) return cmd_depend(o, out);
  } catch (const Error& e) {
    err << "rclkit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "rclkit: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace rclkit
