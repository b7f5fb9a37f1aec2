#include "loopcoprod/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "loopcoprod/expr.hpp"

namespace loopcoprod {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(Errc::BadInput, "malformed JSON document");
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::BadInput, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string group_name(const SpaceSpec& space) {
  return space.infinite() ? "infinite" : space.group->name();
}

json entry_json(const ComponentTable& comp, int d) {
  const LoopEntry& e = comp.entries[d];
  json out;
  out["class_rep"] = "g" + std::to_string(comp.class_rep);
  out["degree"] = d;
  json pieces = json::array();
  for (const auto& p : e.pieces) pieces.push_back(to_string(p));
  out["pieces"] = pieces;
  out["split"] = e.split;
  out["resolved"] = e.resolved ? to_string(e.total) : "associated_graded_only";
  return out;
}

}  // namespace

GroupPtr group_from_json(const std::string& text) {
  json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("name") || !doc.contains("order") ||
      !doc.contains("table"))
    fail(Errc::BadInput, "group document needs name, order and table fields");
  if (!doc["name"].is_string() || !doc["order"].is_number_integer() ||
      !doc["table"].is_array())
    fail(Errc::BadInput, "group document field types are wrong");
  const long long order = doc["order"].get<long long>();
  std::vector<std::vector<int>> table;
  for (const auto& row : doc["table"]) {
    if (!row.is_array()) fail(Errc::BadInput, "group table rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) fail(Errc::BadInput, "group table entries must be integers");
      r.push_back(v.get<int>());
    }
    table.push_back(std::move(r));
  }
  if (order != static_cast<long long>(table.size()))
    fail(Errc::MalformedTable, "declared order " + std::to_string(order) + " but " +
                                   std::to_string(table.size()) + " table rows");
  return FiniteGroup::from_table(doc["name"].get<std::string>(), std::move(table));
}

std::string group_to_json(const FiniteGroup& g) {
  json doc;
  doc["name"] = g.name();
  doc["order"] = g.order();
  doc["table"] = g.table();
  return doc.dump(2) + "\n";
}

GroupPtr load_group_file(const std::string& path) { return group_from_json(read_file(path)); }

GroupPtr group_from_spec(const std::string& spec) {
  if (spec == "trivial") return FiniteGroup::cyclic(1);
  if (spec == "infinite") return nullptr;
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string head = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    if (head == "file") return load_group_file(rest);
    if (head == "cyclic" || head == "quaternion") {
      int m = 0;
      try {
        size_t used = 0;
        m = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(rest);
      } catch (const std::exception&) {
        fail(Errc::BadInput, "bad group parameter '" + rest + "'");
      }
      return head == "cyclic" ? FiniteGroup::cyclic(m) : FiniteGroup::quaternion(m);
    }
  }
  fail(Errc::BadInput,
       "unknown group spec '" + spec + "' (trivial | cyclic:M | quaternion:4M | file:PATH)");
}

MapData map_from_json(const std::string& text) {
  json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("kind") || !doc.contains("source_n"))
    fail(Errc::BadInput, "map document needs kind and source_n fields");
  if (!doc["kind"].is_string() || !doc["source_n"].is_number_integer())
    fail(Errc::BadInput, "map document field types are wrong");
  const std::string kind = doc["kind"].get<std::string>();
  const int n = doc["source_n"].get<int>();
  if (kind == "covering") {
    if (!doc.contains("target_group") || !doc["target_group"].is_string())
      fail(Errc::BadInput, "covering map needs a target_group spec");
    GroupPtr g = group_from_spec(doc["target_group"].get<std::string>());
    if (!g) fail(Errc::BadInput, "covering target must be a finite group");
    return MapData::covering(n, std::move(g));
  }
  if (kind == "sphere_self_map") {
    if (!doc.contains("degree") || !doc["degree"].is_number_integer())
      fail(Errc::BadInput, "self map needs an integer degree");
    return MapData::sphere_self_map(n, doc["degree"].get<long long>());
  }
  fail(Errc::UnsupportedKind, "unknown map kind '" + kind + "'");
}

MapData load_map_file(const std::string& path) { return map_from_json(read_file(path)); }

std::string space_to_json(const SpaceSpec& space) {
  json doc;
  doc["n"] = space.n;
  doc["group"] = group_name(space);
  doc["group_order"] = space.infinite() ? json(nullptr) : json(space.group->order());
  return doc.dump();
}

std::string coproduct_to_json(const LoopClass& a, const TensorClass& t) {
  json doc;
  doc["space"] = json::parse(space_to_json(a.space()));
  doc["element"] = to_string(a);
  doc["coproduct"] = to_string(t);
  json terms = json::array();
  for (const auto& [tt, c] : t.terms()) {
    json term;
    term["coeff"] = c.str();
    term["left"] = to_string(tt.first);
    term["right"] = to_string(tt.second);
    terms.push_back(std::move(term));
  }
  doc["terms"] = terms;
  return doc.dump(2) + "\n";
}

std::string laurent_coproduct_to_json(const std::string& variant, const LaurentClass& a,
                                      const LaurentTensor& t) {
  json doc;
  doc["variant"] = variant;
  doc["element"] = to_string(a);
  doc["coproduct"] = to_string(t);
  json terms = json::array();
  for (const auto& [kk, c] : t) {
    json term;
    term["coeff"] = c.str();
    term["left"] = laurent_monomial_string(kk.first);
    term["right"] = laurent_monomial_string(kk.second);
    terms.push_back(std::move(term));
  }
  doc["terms"] = terms;
  return doc.dump(2) + "\n";
}

std::string graded_to_json(const GradedAbelianGroup& h) {
  json doc;
  json groups = json::array();
  for (int d = 0; d <= h.max_degree(); ++d) {
    const AbelianGroup& g = h.at(d);
    json row;
    row["degree"] = d;
    row["rank"] = g.rank;
    json torsion = json::array();
    for (const auto& t : g.torsion) torsion.push_back(t.str());
    row["torsion"] = torsion;
    row["group"] = to_string(g);
    row["primary"] = to_string_primary(g);
    groups.push_back(std::move(row));
  }
  doc["groups"] = groups;
  doc["max_degree"] = h.max_degree();
  return doc.dump(2) + "\n";
}

std::string loop_table_to_json(const LoopSpaceTable& t) {
  json doc;
  doc["space"] = json::parse(space_to_json(t.space));
  if (!t.note.empty()) doc["note"] = t.note;
  json comps = json::array();
  for (const auto& comp : t.components) {
    json c;
    c["class_rep"] = "g" + std::to_string(comp.class_rep);
    c["class_size"] = comp.class_size;
    c["centralizer_order"] = comp.centralizer->order();
    json entries = json::array();
    for (int d = 0; d < static_cast<int>(comp.entries.size()); ++d)
      entries.push_back(entry_json(comp, d));
    c["entries"] = entries;
    comps.push_back(std::move(c));
  }
  doc["components"] = comps;
  json totals = json::array();
  for (int d = 0; d < static_cast<int>(t.totals.size()); ++d) {
    json row;
    row["degree"] = d;
    row["total"] = t.total_known[d] ? to_string(t.totals[d]) : "associated_graded_only";
    totals.push_back(std::move(row));
  }
  doc["totals"] = totals;
  return doc.dump(2) + "\n";
}

std::string graded_to_markdown(const GradedAbelianGroup& h) {
  std::ostringstream out;
  out << "| degree | group | primary |\n|---|---|---|\n";
  for (int d = 0; d <= h.max_degree(); ++d)
    out << "| " << d << " | " << to_string(h.at(d)) << " | " << to_string_primary(h.at(d))
        << " |\n";
  return out.str();
}

std::string loop_table_to_markdown(const LoopSpaceTable& t) {
  std::ostringstream out;
  out << "free loop space of S^" << t.space.n << " / " << group_name(t.space) << "\n";
  if (!t.note.empty()) out << "\nnote: " << t.note << "\n";
  for (const auto& comp : t.components) {
    out << "\ncomponent [g" << comp.class_rep << "] (class size " << comp.class_size
        << ", centralizer order " << comp.centralizer->order() << ")\n";
    out << "| degree | pieces | entry |\n|---|---|---|\n";
    for (int d = 0; d < static_cast<int>(comp.entries.size()); ++d) {
      const LoopEntry& e = comp.entries[d];
      out << "| " << d << " | ";
      for (size_t i = 0; i < e.pieces.size(); ++i)
        out << (i ? ", " : "") << to_string(e.pieces[i]);
      out << " | " << (e.resolved ? to_string(e.total) : "associated graded only") << " |\n";
    }
  }
  out << "\ntotals\n| degree | group |\n|---|---|\n";
  for (int d = 0; d < static_cast<int>(t.totals.size()); ++d)
    out << "| " << d << " | "
        << (t.total_known[d] ? to_string(t.totals[d]) : "associated graded only") << " |\n";
  return out.str();
}

}  // namespace loopcoprod
