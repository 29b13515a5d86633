#include "schur/json_io.hpp"

namespace schur {

using nlohmann::json;

json config_to_json(const RunConfig& cfg) {
  return json{{"size_cap", cfg.size_cap},
              {"class_cap", cfg.class_cap},
              {"max_results", cfg.max_results},
              {"tol", cfg.tol},
              {"seed", cfg.seed}};
}

json group_to_json(const Group& g) {
  json table = json::array();
  for (int r = 0; r < g.order(); ++r) {
    json row = json::array();
    for (int c = 0; c < g.order(); ++c) row.push_back(g.mul(r, c));
    table.push_back(std::move(row));
  }
  json doc{{"order", g.order()}, {"table", std::move(table)}};
  if (!g.names().empty()) doc["names"] = g.names();
  if (!g.family().empty()) doc["family"] = g.family();
  return doc;
}

Group group_from_json(const json& doc) {
  if (!doc.contains("table")) throw std::invalid_argument("group document lacks \"table\"");
  std::vector<std::vector<int>> table = doc.at("table").get<std::vector<std::vector<int>>>();
  const int n = static_cast<int>(table.size());
  if (doc.contains("order") && doc.at("order").get<int>() != n)
    throw std::invalid_argument("declared order does not match table size");
  std::vector<std::string> names;
  if (doc.contains("names")) names = doc.at("names").get<std::vector<std::string>>();
  std::string family = doc.value("family", "");

  // Locate the identity; reject tables without one.
  int e = -1;
  for (int cand = 0; cand < n && e < 0; ++cand) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      if (table[cand][x] != x || table[x][cand] != x) ok = false;
    if (ok) e = cand;
  }
  if (e < 0) throw std::invalid_argument("table has no identity element");
  if (e != 0) {
    // Relabel by the transposition (0 e); a Cayley isomorphism.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    perm[0] = e;
    perm[e] = 0;
    std::vector<std::vector<int>> relabeled(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) relabeled[perm[a]][perm[b]] = perm[table[a][b]];
    table = std::move(relabeled);
    if (!names.empty()) {
      std::swap(names[0], names[e]);
    }
  }
  return Group(std::move(table), std::move(names), std::move(family));
}

json sring_to_json(const SRing& a, bool include_group) {
  json sets = json::array();
  for (const auto& b : a.basic_sets()) sets.push_back(b.elems());
  json doc{{"basic_sets", std::move(sets)},
           {"central", a.is_central()},
           {"rank", a.rank()}};
  if (include_group) doc["group"] = group_to_json(a.group());
  return doc;
}

std::vector<ElementSet> partition_from_json(const json& doc) {
  const json& arr = doc.is_array() ? doc : doc.at("basic_sets");
  std::vector<ElementSet> parts;
  for (const auto& item : arr) parts.emplace_back(item.get<std::vector<int>>());
  return parts;
}

json ring_element_to_json(const GroupRingElement& xi) {
  json coeffs = json::object();
  for (int x = 0; x < xi.group().order(); ++x)
    if (xi.coeff(x) != 0) coeffs[std::to_string(x)] = xi.coeff(x).str();
  return json{{"coeffs", std::move(coeffs)}};
}

GroupRingElement ring_element_from_json(const Group& g, const json& doc) {
  std::vector<BigInt> coeffs(g.order());
  for (const auto& [key, value] : doc.at("coeffs").items()) {
    int idx = std::stoi(key);
    if (idx < 0 || idx >= g.order()) throw std::invalid_argument("coefficient index out of range");
    coeffs[idx] = BigInt(value.get<std::string>());
  }
  return GroupRingElement(g, std::move(coeffs));
}

json subgroup_to_json(const Subgroup& h) {
  return json{{"members", h.members.elems()}, {"normal", h.is_normal}};
}

json diagnosis_to_json(const Diagnosis& d, const RunConfig& cfg, long long elapsed_ms) {
  json witnesses = json::array();
  for (const auto& w : d.witness_srings) witnesses.push_back(sring_to_json(w));
  for (const auto& w : d.witness_sets) witnesses.push_back(json{{"set", w.elems()}});
  json doc{{"check", d.check},
           {"subject", d.subject},
           {"verdict", verdict_name(d.verdict)},
           {"notes", d.notes},
           {"witnesses", std::move(witnesses)},
           {"config", config_to_json(cfg)},
           {"schema_version", kSchemaVersion}};
  if (cfg.timings && elapsed_ms >= 0) doc["elapsed_ms"] = elapsed_ms;
  return doc;
}

json character_table_to_json(const CharacterTable& t, bool rational, const RunConfig& cfg) {
  json rows = json::array();
  for (const auto& row : t.values) {
    json r = json::array();
    for (const auto& v : row) r.push_back(json{{"re", v.real()}, {"im", v.imag()}});
    rows.push_back(std::move(r));
  }
  return json{{"rank", t.rank},
              {"values", std::move(rows)},
              {"residual", t.residual},
              {"rational", rational},
              {"config", config_to_json(cfg)},
              {"schema_version", kSchemaVersion}};
}

json enumeration_report(const std::string& subject, const std::vector<SRing>& rings,
                        bool dump, const RunConfig& cfg) {
  json ranks = json::array();
  for (const auto& a : rings) ranks.push_back(a.rank());
  json doc{{"group", subject},
           {"count", rings.size()},
           {"ranks", std::move(ranks)},
           {"config", config_to_json(cfg)},
           {"schema_version", kSchemaVersion}};
  if (dump) {
    json srings = json::array();
    for (const auto& a : rings) srings.push_back(sring_to_json(a));
    doc["srings"] = std::move(srings);
  }
  return doc;
}

}  // namespace schur
