#include "rclkit/io.hpp"

#include <fstream>
#include <sstream>

namespace rclkit {

namespace {

const Json& require(const Json& doc, const char* key, const char* what) {
  if (!doc.is_object() || !doc.contains(key))
    throw Error(ErrorKind::InvalidInput, std::string(what) + " is missing \"" + key + "\"");
  return doc.at(key);
}

std::string as_string(const Json& v, const char* what) {
  if (!v.is_string()) throw Error(ErrorKind::InvalidInput, std::string(what) + " must be a string");
  return v.get<std::string>();
}

std::vector<Elem> map_from_json(const FiniteLattice& L, const Json& m, const char* what) {
  if (!m.is_object()) throw Error(ErrorKind::InvalidInput, std::string(what) + " must be an object");
  std::vector<std::optional<Elem>> partial(L.size());
  for (const auto& [k, v] : m.items()) partial[L.find(k)] = L.find(as_string(v, what));
  std::vector<Elem> out;
  out.reserve(L.size());
  for (Elem x = 0; x < L.size(); ++x) {
    if (!partial[x]) throw Error(ErrorKind::PartialTable, std::string(what) + " has no entry for '" + L.name(x) + "'");
    out.push_back(*partial[x]);
  }
  return out;
}

Json map_to_json(const FiniteLattice& L, const std::vector<Elem>& t) {
  Json m = Json::object();
  for (Elem x = 0; x < L.size(); ++x) m[L.name(x)] = L.name(t[x]);
  return m;
}

Subset subset_from_json(const SetRcl& s, const Json& v) {
  if (v.is_string()) return s.parse_subset(v.get<std::string>());
  if (!v.is_array()) throw Error(ErrorKind::InvalidInput, "subset must be a literal string or a list of items");
  Subset out = s.empty_set();
  for (const auto& item : v) {
    const auto name = item.is_string() ? item.get<std::string>() : item.dump();
    const auto idx = s.universe().try_find(name);
    if (!idx) throw Error(ErrorKind::UnknownElement, "'" + name + "' is not in the universe");
    out.set(*idx);
  }
  return out;
}

Json subset_to_json(const SetRcl& s, const Subset& x) {
  Json a = Json::array();
  x.for_each([&](std::size_t i) { a.push_back(s.universe().items[i]); });
  return a;
}

std::vector<std::string> item_names(const Json& v, const char* what) {
  if (!v.is_array()) throw Error(ErrorKind::InvalidInput, std::string(what) + " must be a list");
  std::vector<std::string> out;
  for (const auto& item : v) out.push_back(item.is_string() ? item.get<std::string>() : item.dump());
  return out;
}

const Json& cases_of(const Json& config) {
  const Json& cases = config.is_array() ? config : require(config, "cases", "bias configuration");
  if (!cases.is_array()) throw Error(ErrorKind::InvalidInput, "\"cases\" must be a list");
  if (cases.empty()) throw Error(ErrorKind::EmptyCaseList, "bias configuration lists no cases");
  return cases;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  const auto text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, path.string() + ": " + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + tmp.string());
    out << contents;
    if (!out.flush()) throw Error(ErrorKind::InvalidInput, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorKind::InvalidInput, "cannot move " + tmp.string() + " to " + path.string());
}

FiniteLattice lattice_from_json(const Json& doc) {
  const auto names = item_names(require(doc, "elements", "lattice file"), "\"elements\"");
  std::vector<std::pair<std::string, std::string>> order;
  if (doc.contains("order")) {
    for (const auto& p : doc.at("order")) {
      if (!p.is_array() || p.size() != 2)
        throw Error(ErrorKind::InvalidInput, "order entries must be [x, y] pairs");
      order.emplace_back(as_string(p[0], "order entry"), as_string(p[1], "order entry"));
    }
  }
  return FiniteLattice::build(names, order);
}

Json lattice_to_json(const FiniteLattice& L) {
  Json doc;
  doc["elements"] = L.names();
  Json order = Json::array();
  for (const auto& [x, y] : L.covers()) order.push_back({L.name(x), L.name(y)});
  doc["order"] = std::move(order);
  doc["covers_only"] = true;
  return doc;
}

RclStructure structure_from_json(const Json& doc) {
  if (doc.is_object() && doc.contains("witness")) return structure_from_json(require(doc["witness"], "structure", "witness"));
  auto L = std::make_shared<const FiniteLattice>(lattice_from_json(doc));
  auto lower = map_from_json(*L, require(doc, "lower", "structure file"), "lower");
  auto upper = map_from_json(*L, require(doc, "upper", "structure file"), "upper");
  std::optional<std::vector<Elem>> complement;
  if (doc.contains("complement")) complement = map_from_json(*L, doc["complement"], "complement");
  return RclStructure(L, std::move(lower), std::move(upper), std::move(complement));
}

Json structure_to_json(const RclStructure& s) {
  Json doc = lattice_to_json(s.lattice());
  doc["lower"] = map_to_json(s.lattice(), s.lower_table());
  doc["upper"] = map_to_json(s.lattice(), s.upper_table());
  if (s.has_complement()) doc["complement"] = map_to_json(s.lattice(), *s.complement_table());
  return doc;
}

bool is_set_rcl_document(const Json& doc) { return doc.is_object() && doc.contains("universe"); }

SetRcl set_rcl_from_json(const Json& doc) {
  Universe u{item_names(require(doc, "universe", "set descriptor"), "\"universe\"")};
  std::vector<std::vector<std::string>> granules;
  for (const auto& g : require(doc, "granules", "set descriptor")) granules.push_back(item_names(g, "granule"));
  GranuleMode mode = GranuleMode::Partition;
  if (doc.contains("mode")) {
    const auto m = as_string(doc["mode"], "\"mode\"");
    if (m == "covering") mode = GranuleMode::Covering;
    else if (m != "partition") throw Error(ErrorKind::InvalidInput, "unknown granule mode '" + m + "'");
  }
  auto g = granulation_from_names(u, granules);
  SetRcl s(std::move(u), std::move(g), mode);
  if (doc.contains("nu")) {
    const auto& nu = doc["nu"];
    if (nu.is_array()) {
      std::vector<Subset> family;
      for (const auto& x : nu) family.push_back(subset_from_json(s, x));
      s.set_nu(NuSelector::Custom, std::move(family));
    } else {
      const auto name = as_string(nu, "\"nu\"");
      if (name == "lower-definite") s.set_nu(NuSelector::LowerDefinite);
      else if (name == "definite") s.set_nu(NuSelector::Definite);
      else throw Error(ErrorKind::InvalidInput, "unknown ν selector '" + name + "'");
    }
  }
  return s;
}

Json set_rcl_to_json(const SetRcl& s) {
  Json doc;
  doc["universe"] = s.universe().items;
  Json granules = Json::array();
  for (const auto& g : s.granulation().granules) granules.push_back(subset_to_json(s, g));
  doc["granules"] = std::move(granules);
  doc["mode"] = s.mode() == GranuleMode::Partition ? "partition" : "covering";
  if (s.nu() == NuSelector::Custom) {
    Json family = Json::array();
    for (const auto& x : s.custom_nu()) family.push_back(subset_to_json(s, x));
    doc["nu"] = std::move(family);
  } else {
    doc["nu"] = std::string(nu_selector_name(s.nu()));
  }
  return doc;
}

std::vector<ElementCase> element_cases_from_json(const FiniteLattice& L, const Json& config) {
  std::vector<ElementCase> out;
  for (const auto& c : cases_of(config))
    out.push_back({L.find(as_string(require(c, "C", "case"), "C")), L.find(as_string(require(c, "E", "case"), "E")),
                   L.find(as_string(require(c, "F", "case"), "F"))});
  return out;
}

std::vector<SubsetCase> subset_cases_from_json(const SetRcl& s, const Json& config) {
  std::vector<SubsetCase> out;
  for (const auto& c : cases_of(config))
    out.push_back({subset_from_json(s, require(c, "C", "case")), subset_from_json(s, require(c, "E", "case")),
                   subset_from_json(s, require(c, "F", "case"))});
  return out;
}

Json rational_to_json(const Rational& r) {
  Json j;
  j["numerator"] = boost::multiprecision::numerator(r).str();
  j["denominator"] = boost::multiprecision::denominator(r).str();
  j["value"] = to_string(r);
  return j;
}

Json claim_result_to_json(const ClaimResult& r) {
  Json doc;
  doc["claim"] = r.claim_id;
  doc["statement"] = r.statement;
  doc["space"] = std::string(axiom_set_name(r.space));
  doc["expectation"] = std::string(expectation_name(r.expectation));
  doc["max_size"] = r.max_size;
  doc["effective_max_size"] = r.effective_max_size;
  doc["lattices_checked"] = r.lattices_checked;
  doc["structures_checked"] = r.structures_checked;
  doc["violating_structures"] = r.violating_structures;
  doc["status"] = std::string(claim_status_name(r.status));
  const auto agrees = r.agrees_with_source();
  doc["agrees_with_source"] = agrees ? Json(*agrees) : Json(nullptr);
  if (r.witness) {
    const auto& L = r.witness->structure.lattice();
    const auto& v = r.witness->violation;
    Json w;
    w["law"] = v.law;
    Json tuple = Json::array();
    for (Elem e : v.tuple) tuple.push_back(L.name(e));
    w["tuple"] = std::move(tuple);
    if (!v.attainment.empty()) {
      Json att = Json::object();
      for (const auto& [k, b] : v.attainment) att[k] = b;
      w["attainment"] = std::move(att);
    }
    if (v.alternative_cca) {
      const std::size_t n = L.size();
      Json rows = Json::object();
      for (Elem a = 0; a < n; ++a) {
        Json row = Json::array();
        for (Elem b = 0; b < n; ++b) row.push_back(L.name((*v.alternative_cca)[a * n + b]));
        rows[L.name(a)] = std::move(row);
      }
      w["alternative_cca"] = std::move(rows);
    }
    w["structure"] = structure_to_json(r.witness->structure);
    doc["witness"] = std::move(w);
  }
  if (r.correlation) {
    Json c;
    c["violating_nonattained"] = r.correlation->violating_nonattained;
    c["violating_attained"] = r.correlation->violating_attained;
    c["clean_nonattained"] = r.correlation->clean_nonattained;
    c["clean_attained"] = r.correlation->clean_attained;
    doc["attainment_correlation"] = std::move(c);
  }
  return doc;
}

ClaimResult claim_result_from_json(const Json& doc) {
  ClaimResult r;
  try {
    r.claim_id = doc.at("claim").get<std::string>();
    r.statement = doc.at("statement").get<std::string>();
    r.space = doc.at("space").get<std::string>() == "core" ? AxiomSet::Core : AxiomSet::FullRcl;
    const auto exp = doc.at("expectation").get<std::string>();
    r.expectation = exp == "holds" ? Expectation::Holds
                    : exp == "open" ? Expectation::Open
                                    : Expectation::FailsInGeneral;
    r.max_size = doc.at("max_size").get<std::size_t>();
    r.effective_max_size = doc.at("effective_max_size").get<std::size_t>();
    r.lattices_checked = doc.at("lattices_checked").get<std::size_t>();
    r.structures_checked = doc.at("structures_checked").get<std::size_t>();
    r.violating_structures = doc.at("violating_structures").get<std::size_t>();
    r.status = doc.at("status").get<std::string>() == "counterexample" ? ClaimStatus::Counterexample
                                                                     : ClaimStatus::ConfirmedUpToBound;
    if (doc.contains("witness")) {
      const auto& w = doc["witness"];
      auto s = structure_from_json(w.at("structure"));
      Violation v;
      v.law = w.at("law").get<std::string>();
      for (const auto& e : w.at("tuple")) v.tuple.push_back(s.lattice().find(e.get<std::string>()));
      if (w.contains("attainment"))
        for (const auto& [k, b] : w["attainment"].items()) v.attainment[k] = b.get<bool>();
      if (w.contains("alternative_cca")) {
        const auto& L = s.lattice();
        std::vector<Elem> t(L.size() * L.size());
        for (const auto& [row, vals] : w["alternative_cca"].items()) {
          const Elem a = L.find(row);
          for (Elem b = 0; b < L.size(); ++b) t[a * L.size() + b] = L.find(vals.at(b).get<std::string>());
        }
        v.alternative_cca = std::move(t);
      }
      r.witness = ClaimWitness{std::move(s), std::move(v)};
    }
    if (doc.contains("attainment_correlation")) {
      const auto& c = doc["attainment_correlation"];
      r.correlation = AttainmentCorrelation{c.at("violating_nonattained").get<std::size_t>(),
                                            c.at("violating_attained").get<std::size_t>(),
                                            c.at("clean_nonattained").get<std::size_t>(),
                                            c.at("clean_attained").get<std::size_t>()};
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed claim result: ") + e.what());
  }
  return r;
}

Host host_from_json(const Json& doc) {
  if (is_set_rcl_document(doc)) return set_rcl_from_json(doc);
  return structure_from_json(doc);
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace rclkit
