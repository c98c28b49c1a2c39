#include "rclkit/report.hpp"

#include <algorithm>
#include <sstream>

namespace rclkit {

namespace {

std::string pad(std::string_view s, std::size_t width) {
  std::string out(s);
  out.append(width - std::min(width, display_width(s)), ' ');
  return out;
}

/// Rows of labelled cells; the header's first cell is the corner label.
std::string text_grid(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::size_t label_w = display_width(header[0]);
  std::size_t cell_w = 0;
  for (std::size_t i = 1; i < header.size(); ++i) cell_w = std::max(cell_w, display_width(header[i]));
  for (const auto& r : rows) {
    label_w = std::max(label_w, display_width(r[0]));
    for (std::size_t i = 1; i < r.size(); ++i) cell_w = std::max(cell_w, display_width(r[i]));
  }
  auto line = [&](const std::vector<std::string>& cells, bool colon) {
    std::string out = pad(cells[0] + (colon ? ":" : ""), label_w + 1);
    for (std::size_t i = 1; i < cells.size(); ++i) {
      out += ' ';
      out += i + 1 == cells.size() ? cells[i] : pad(cells[i], cell_w);
    }
    return out + "\n";
  };
  std::string out = line(header, false);
  for (const auto& r : rows) out += line(r, true);
  return out;
}

std::string md_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + c + " |";
  return out + "\n";
}

std::string md_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::string out = md_row(header);
  out += "|";
  for (std::size_t i = 0; i < header.size(); ++i) out += " --- |";
  out += "\n";
  for (const auto& r : rows) out += md_row(r);
  return out;
}

std::string tuple_text(const FiniteLattice& L, const std::vector<Elem>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + L.name(t[i]);
  return out + ")";
}

Json tuple_json(const FiniteLattice& L, const std::vector<Elem>& t) {
  Json a = Json::array();
  for (Elem e : t) a.push_back(L.name(e));
  return a;
}

Json law_json(const LawResult& law, const FiniteLattice& L) {
  Json j;
  j["law"] = law.name;
  j["holds"] = law.holds;
  j["violations"] = law.violations;
  Json w = Json::array();
  for (const auto& t : law.witnesses) w.push_back(tuple_json(L, t));
  j["witnesses"] = std::move(w);
  if (!law.note.empty()) j["note"] = law.note;
  return j;
}

std::string laws_markdown(const LawFlags& flags, const FiniteLattice& L) {
  std::vector<std::vector<std::string>> rows;
  std::string failures;
  for (const auto& law : flags.laws) {
    rows.push_back({law.name, law.holds ? "holds" : "fails", std::to_string(law.violations)});
    if (!law.holds) {
      failures += "- " + law.name + ":";
      for (const auto& t : law.witnesses) failures += " " + tuple_text(L, t);
      if (law.violations > law.witnesses.size())
        failures += " (" + std::to_string(law.violations - law.witnesses.size()) + " more)";
      failures += "\n";
    }
  }
  std::string out = md_table({"law", "status", "violations"}, rows);
  out += failures.empty() ? "\nviolations: none\n" : "\nviolations:\n\n" + failures;
  return out;
}

std::string laws_text(const LawFlags& flags, const FiniteLattice& L) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& law : flags.laws) {
    std::string w;
    for (const auto& t : law.witnesses) w += (w.empty() ? "" : " ") + tuple_text(L, t);
    rows.push_back({law.name, law.holds ? "holds" : "fails", std::to_string(law.violations), w});
  }
  return text_grid({"law", "status", "count", "witnesses"}, rows);
}

std::string subset_list(const SetRcl& s, const std::vector<Subset>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : " ") + s.format_subset(x);
  return out;
}

Json subset_law_json(const SubsetLaw& law, const SetRcl& s) {
  Json j;
  j["law"] = law.name;
  j["holds"] = law.holds;
  j["violations"] = law.violations;
  Json w = Json::array();
  for (const auto& t : law.witnesses) {
    Json tj = Json::array();
    for (const auto& x : t) tj.push_back(s.format_subset(x));
    w.push_back(std::move(tj));
  }
  j["witnesses"] = std::move(w);
  if (!law.note.empty()) j["note"] = law.note;
  return j;
}

}  // namespace

std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "markdown" || name == "md") return Format::Markdown;
  if (name == "text-table" || name == "text") return Format::TextTable;
  throw Error(ErrorKind::UnsupportedFormat, "unknown output format '" + std::string(name) + "'");
}

std::string_view format_name(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Markdown: return "markdown";
    case Format::TextTable: return "text-table";
  }
  return "?";
}

std::string render(const Payload& p, Format f) {
  switch (f) {
    case Format::Json: return dump(p.json);
    case Format::Markdown: return p.markdown;
    case Format::TextTable:
      if (!p.text) throw Error(ErrorKind::UnsupportedFormat, "this result has no text-table form");
      return *p.text;
  }
  return {};
}

Payload axiom_payload(const RclStructure& s) {
  const auto& L = s.lattice();
  const auto& r = s.axioms();
  Payload p;
  p.json["status"] = std::string(axiom_status(r));
  p.json["is_core"] = r.is_core;
  p.json["is_rcl"] = r.is_rcl;
  Json laws = Json::array();
  for (const auto& law : r.laws) laws.push_back(law_json(law, L));
  p.json["axioms"] = std::move(laws);
  p.markdown = "# Axiom check\n\nstatus: " + std::string(axiom_status(r)) + "\n\n" + laws_markdown(r, L);
  p.text = laws_text(r, L);
  return p;
}

Payload operation_table_payload(const OperationTable& t, std::string_view symbol, std::string_view status) {
  const auto& L = *t.lattice;
  Payload p;
  p.json["operation"] = t.kind;
  p.json["symbol"] = std::string(symbol);
  p.json["axiom_status"] = std::string(status);
  p.json["elements"] = L.names();
  Json rows = Json::object();
  std::vector<std::vector<std::string>> grid;
  for (Elem a = 0; a < L.size(); ++a) {
    std::vector<std::string> row{L.name(a)};
    for (Elem b = 0; b < L.size(); ++b) row.push_back(L.name(t.at(a, b)));
    rows[L.name(a)] = std::vector<std::string>(row.begin() + 1, row.end());
    grid.push_back(std::move(row));
  }
  p.json["rows"] = std::move(rows);
  std::vector<std::string> header{std::string(symbol)};
  header.insert(header.end(), L.names().begin(), L.names().end());
  p.text = text_grid(header, grid);
  p.markdown = "# " + t.kind + " table\n\naxiom status: " + std::string(status) + "\n\n" + md_table(header, grid);
  return p;
}

Payload unary_table_payload(const UnaryTable& t, std::string_view symbol, std::string_view status) {
  const auto& L = *t.lattice;
  Payload p;
  p.json["operation"] = t.kind;
  p.json["symbol"] = std::string(symbol);
  p.json["axiom_status"] = std::string(status);
  p.json["elements"] = L.names();
  Json values = Json::object();
  Json attained = Json::object();
  std::vector<std::string> row{std::string(symbol)};
  std::vector<std::string> unattained;
  for (Elem a = 0; a < L.size(); ++a) {
    values[L.name(a)] = L.name(t.at(a));
    row.push_back(L.name(t.at(a)));
    if (!t.attained.empty()) {
      attained[L.name(a)] = static_cast<bool>(t.attained[a]);
      if (!t.attained[a]) unattained.push_back(L.name(a));
    }
  }
  p.json["values"] = std::move(values);
  if (!t.attained.empty()) p.json["attained"] = std::move(attained);
  std::vector<std::string> header{""};
  header.insert(header.end(), L.names().begin(), L.names().end());
  p.text = text_grid(header, {row});
  p.markdown = "# " + t.kind + " table\n\naxiom status: " + std::string(status) + "\n\n" + md_table(header, {row});
  if (!t.attained.empty()) {
    std::string list;
    for (const auto& n : unattained) list += (list.empty() ? "" : ", ") + n;
    p.markdown += "\nextremum outside its defining set at: " + (list.empty() ? std::string("none") : list) + "\n";
  }
  return p;
}

Payload laws_payload(const std::vector<std::pair<std::string, LawFlags>>& sections, const FiniteLattice& L,
                     std::string_view status) {
  Payload p;
  p.json["axiom_status"] = std::string(status);
  Json secs = Json::array();
  std::string text;
  p.markdown = "# Law check\n\naxiom status: " + std::string(status) + "\n";
  for (const auto& [title, flags] : sections) {
    Json sj;
    sj["section"] = title;
    sj["all_hold"] = flags.all();
    Json laws = Json::array();
    for (const auto& law : flags.laws) laws.push_back(law_json(law, L));
    sj["laws"] = std::move(laws);
    secs.push_back(std::move(sj));
    p.markdown += "\n## " + title + "\n\n" + laws_markdown(flags, L);
    text += (text.empty() ? "" : "\n") + title + "\n" + laws_text(flags, L);
  }
  p.json["sections"] = std::move(secs);
  p.text = text;
  return p;
}

Payload tarski_payload(const std::vector<std::pair<std::string, TarskiReport>>& sections, const FiniteLattice& L) {
  Payload p;
  Json secs = Json::array();
  std::string text;
  p.markdown = "# Tarski algebra check\n";
  for (const auto& [title, r] : sections) {
    Json sj;
    sj["section"] = title;
    sj["is_tarski"] = r.is_tarski;
    Json laws = Json::array();
    for (const auto& law : r.laws.laws) laws.push_back(law_json(law, L));
    sj["laws"] = std::move(laws);
    if (r.is_tarski) {
      const std::size_t n = L.size();
      Json order = Json::array();
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          if (r.induced_order[a * n + b]) order.push_back({L.name(a), L.name(b)});
      sj["induced_order"] = std::move(order);
      Json join = Json::object();
      for (Elem a = 0; a < n; ++a) {
        Json row = Json::array();
        for (Elem b = 0; b < n; ++b) row.push_back(L.name(r.induced_join[a * n + b]));
        join[L.name(a)] = std::move(row);
      }
      sj["induced_join"] = std::move(join);
    }
    secs.push_back(std::move(sj));
    p.markdown += "\n## " + title + "\n\nTarski algebra: " + (r.is_tarski ? "yes" : "no") + "\n\n" +
                  laws_markdown(r.laws, L);
    text += (text.empty() ? "" : "\n") + title + "\n" + laws_text(r.laws, L);
  }
  p.json["sections"] = std::move(secs);
  p.text = text;
  return p;
}

Payload sgrcl_payload(const SgrclReport& r, const SetRcl& s, UnderlapScope scope) {
  Payload p;
  p.json["underlap_scope"] = scope == UnderlapScope::Granules ? "granules" : "all-subsets";
  p.json["all_hold"] = r.all();
  p.json["axioms"] = Json::array({subset_law_json(r.wra, s), subset_law_json(r.ls, s), subset_law_json(r.fu, s)});
  std::vector<std::vector<std::string>> rows, md_rows;
  std::string failures;
  for (const auto* law : {&r.wra, &r.ls, &r.fu}) {
    std::string w;
    for (const auto& t : law->witnesses) w += (w.empty() ? "" : " ") + ("(" + subset_list(s, t) + ")");
    rows.push_back({law->name, law->holds ? "holds" : "fails", std::to_string(law->violations), w});
    md_rows.push_back({law->name, law->holds ? "holds" : "fails", std::to_string(law->violations)});
    if (!law->holds) failures += "- " + law->name + ": " + w + "\n";
  }
  p.markdown = "# Granular axiom check\n\n" +
               md_table({"law", "status", "violations"}, md_rows) +
               (failures.empty() ? "\nviolations: none\n" : "\nviolations:\n\n" + failures);
  p.text = text_grid({"law", "status", "count", "witnesses"}, rows);
  return p;
}

Payload rough_objects_payload(const RclStructure& s, const RoughOrderReport& order) {
  const auto& L = s.lattice();
  Payload p;
  p.json["axiom_status"] = std::string(axiom_status(s.axioms()));
  Json objs = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < order.objects.size(); ++i) {
    const auto& o = order.objects[i];
    Json oj;
    oj["lower"] = L.name(*o.lower_end);
    oj["upper"] = L.name(*o.upper_end);
    Json members = Json::array();
    std::string m;
    o.members.for_each([&](std::size_t x) {
      members.push_back(L.name(static_cast<Elem>(x)));
      m += (m.empty() ? "" : " ") + L.name(static_cast<Elem>(x));
    });
    oj["members"] = std::move(members);
    objs.push_back(std::move(oj));
    rows.push_back({std::to_string(i), "(" + L.name(*o.lower_end) + "," + L.name(*o.upper_end) + ")", m});
  }
  p.json["objects"] = std::move(objs);
  const std::size_t k = order.objects.size();
  Json rel = Json::array();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && order.related[i * k + j]) rel.push_back({i, j});
  Json oj;
  oj["below"] = std::move(rel);
  oj["reflexive"] = order.reflexive;
  oj["antisymmetric"] = order.antisymmetric;
  oj["transitive"] = order.transitive;
  oj["least"] = order.least ? Json(*order.least) : Json(nullptr);
  oj["greatest"] = order.greatest ? Json(*order.greatest) : Json(nullptr);
  oj["bottom_pair_least"] = order.bottom_pair_least;
  oj["top_pair_greatest"] = order.top_pair_greatest;
  oj["all_meets_exist"] = order.all_meets_exist;
  oj["all_joins_exist"] = order.all_joins_exist;
  p.json["order"] = std::move(oj);

  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  p.markdown = "# Rough objects\n\naxiom status: " + std::string(axiom_status(s.axioms())) + "\n\n" +
               md_table({"#", "(l, u)", "members"}, rows) + "\npartial order: " +
               yn(order.reflexive && order.antisymmetric && order.transitive) +
               "\nleast: " + (order.least ? std::to_string(*order.least) : "none") +
               "\ngreatest: " + (order.greatest ? std::to_string(*order.greatest) : "none") +
               "\nall meets exist: " + yn(order.all_meets_exist) + "\nall joins exist: " + yn(order.all_joins_exist) +
               "\n";
  p.text = text_grid({"#", "(l,u)", "members"}, rows);
  return p;
}

Payload bias_payload(const BiasReport& r) {
  Payload p;
  p.json["axiom_status"] = r.axiom_status;
  p.json["reading"] = "C, E, F are single carrier elements; set hosts use subsets as elements";
  p.json["flat"] = rational_to_json(r.flat);
  p.json["sharp"] = r.sharp ? rational_to_json(*r.sharp) : Json(nullptr);
  p.json["skip_degenerate"] = r.skip_degenerate;
  p.json["degenerate_cases"] = r.degenerate;
  Json cases = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : r.cases) {
    Json cj;
    cj["index"] = c.index;
    cj["C"] = c.c;
    cj["E"] = c.e;
    cj["F"] = c.f;
    cj["C·F"] = c.c_cca;
    cj["C⊗F"] = c.c_oa;
    cj["E·F"] = c.e_cca;
    cj["E⊗F"] = c.e_oa;
    cj["|F(C·F)|"] = c.card_c_cca.str();
    cj["|F(C⊗F)|"] = c.card_c_oa.str();
    cj["|F(E·F)|"] = c.card_e_cca.str();
    cj["|F(E⊗F)|"] = c.card_e_oa.str();
    cj["sharp_degenerate"] = c.sharp_degenerate();
    cases.push_back(std::move(cj));
    rows.push_back({std::to_string(c.index), c.c, c.e, c.f, c.card_c_cca.str(), c.card_c_oa.str(), c.card_e_cca.str(),
                    c.card_e_oa.str()});
  }
  p.json["cases"] = std::move(cases);
  const std::string sharp = r.sharp ? to_string(*r.sharp) : std::string("undefined (degenerate denominator)");
  p.markdown = "# Bias audit\n\naxiom status: " + r.axiom_status +
               "\n\nreading: C, E, F are single carrier elements\n\n" +
               md_table({"case", "C", "E", "F", "|F(C·F)|", "|F(C⊗F)|", "|F(E·F)|", "|F(E⊗F)|"}, rows) +
               "\n♭ = " + to_string(r.flat) + "\n\nð = " + sharp + "\n";
  if (!r.degenerate.empty()) {
    std::string list;
    for (auto i : r.degenerate) list += (list.empty() ? "" : ", ") + std::to_string(i);
    p.markdown += "\ndegenerate cases: " + list + (r.skip_degenerate ? " (skipped)" : "") + "\n";
  }
  p.text = text_grid({"case", "C", "E", "F", "C·F", "C⊗F", "E·F", "E⊗F"}, rows) + "♭ = " + to_string(r.flat) +
           "\nð = " + sharp + "\n";
  return p;
}

Payload claim_payload(const ClaimResult& r) {
  Payload p;
  p.json = claim_result_to_json(r);
  std::string md = "# Claim " + r.claim_id + "\n\n" + r.statement + "\n\n";
  md += "- space: " + std::string(axiom_set_name(r.space)) + "\n";
  md += "- bound: n ≤ " + std::to_string(r.effective_max_size);
  if (r.effective_max_size < r.max_size) md += " (requested " + std::to_string(r.max_size) + ", capped)";
  md += "\n- lattices: " + std::to_string(r.lattices_checked) + "\n- structures: " +
        std::to_string(r.structures_checked) + "\n- violating structures: " + std::to_string(r.violating_structures) +
        "\n- status: " + std::string(claim_status_name(r.status)) +
        "\n- expectation: " + std::string(expectation_name(r.expectation)) + "\n- agrees with source: " +
        (r.agrees_with_source() ? (*r.agrees_with_source() ? "yes" : "no") : "n/a (open question)") + "\n";
  if (r.witness) {
    const auto& s = r.witness->structure;
    const auto& L = s.lattice();
    const auto& v = r.witness->violation;
    md += "\n## Witness\n\nlaw " + v.law + " at " + tuple_text(L, v.tuple) + "\n\n";
    std::vector<std::vector<std::string>> rows;
    for (Elem x = 0; x < L.size(); ++x) {
      std::vector<std::string> row{L.name(x), L.name(s.lower(x)), L.name(s.upper(x))};
      if (s.has_complement()) row.push_back(L.name(s.complement(x)));
      rows.push_back(std::move(row));
    }
    std::vector<std::string> header{"x", "x^l", "x^u"};
    if (s.has_complement()) header.push_back("x^c");
    md += md_table(header, rows);
    std::string covers;
    for (const auto& [a, b] : L.covers()) covers += (covers.empty() ? "" : ", ") + L.name(a) + "<" + L.name(b);
    md += "\ncovers: " + covers + "\n";
    if (!v.attainment.empty()) {
      md += "\nattainment at the witness:";
      for (const auto& [k, b] : v.attainment) md += " " + k + (b ? " attained" : " not attained") + ";";
      md += "\n";
    }
  }
  if (r.correlation) {
    const auto& c = *r.correlation;
    md += "\n## Attainment correlation\n\n" +
          md_table({"", "all ¬ attained", "some ¬ not attained"},
                   {{"violating", std::to_string(c.violating_attained), std::to_string(c.violating_nonattained)},
                    {"clean", std::to_string(c.clean_attained), std::to_string(c.clean_nonattained)}});
  }
  p.markdown = md;
  return p;
}

Payload partition_payload(const InformationTable& t, const std::vector<std::string>& attributes, const Granulation& g) {
  Payload p;
  p.json["attributes"] = attributes;
  p.json["universe"] = t.row_ids;
  Json blocks = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < g.granules.size(); ++i) {
    Json b = Json::array();
    std::string m;
    g.granules[i].for_each([&](std::size_t r) {
      b.push_back(t.row_ids[r]);
      m += (m.empty() ? "" : " ") + t.row_ids[r];
    });
    blocks.push_back(std::move(b));
    rows.push_back({std::to_string(i + 1), m});
  }
  p.json["granules"] = std::move(blocks);
  p.json["mode"] = "partition";
  p.json["nu"] = "lower-definite";
  p.markdown = "# Indiscernibility partition\n\n" + md_table({"block", "rows"}, rows);
  p.text = text_grid({"block", "rows"}, rows);
  return p;
}

Payload dependence_payload(const SetRcl& s, const Subset& x, const Subset& z, const DependenceResult& d) {
  Payload p;
  const std::string reading = d.reading == DependenceReading::Extremal ? "extremal" : "literal";
  auto opt = [&](const std::optional<Subset>& v) { return v ? Json(s.format_subset(*v)) : Json(nullptr); };
  p.json["x"] = s.format_subset(x);
  p.json["z"] = s.format_subset(z);
  p.json["nu"] = std::string(nu_selector_name(s.nu()));
  p.json["reading"] = reading;
  p.json["common_union"] = s.format_subset(d.common_union);
  p.json["beta_i"] = opt(d.beta_i);
  p.json["beta_i_attained"] = d.beta_i_attained;
  p.json["beta_s"] = opt(d.beta_s);
  p.json["beta_s_attained"] = d.beta_s_attained;
  auto text = [&](const std::optional<Subset>& v) { return v ? s.format_subset(*v) : std::string("none"); };
  std::vector<std::vector<std::string>> rows{
      {"x", s.format_subset(x)},
      {"z", s.format_subset(z)},
      {"common union", s.format_subset(d.common_union)},
      {"β_i", text(d.beta_i) + (d.beta_i && !d.beta_i_attained ? " (not a ν-element)" : "")},
      {"β_s", text(d.beta_s) + (d.beta_s && !d.beta_s_attained ? " (not a ν-element)" : "")}};
  p.markdown = "# Rough dependence\n\nν: " + std::string(nu_selector_name(s.nu())) + ", reading: " + reading +
               "\n\n" + md_table({"quantity", "value"}, rows);
  p.text = text_grid({"quantity", "value"}, rows);
  return p;
}

}  // namespace rclkit
