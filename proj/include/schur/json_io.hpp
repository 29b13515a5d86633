#pragma once

#include <string>

#include <json.hpp>

#include "schur/group_ring.hpp"
#include "schur/rationality.hpp"
#include "schur/sring.hpp"
#include "schur/verifiers.hpp"

namespace schur {

inline constexpr int kSchemaVersion = 1;

/// Everything that influences a run, echoed into every report.
struct RunConfig {
  int size_cap = kDefaultSizeCap;
  int class_cap = 14;
  long long max_results = 1000000;
  double tol = 1e-8;
  unsigned long long seed = 42;
  bool timings = false;  // off by default so reruns are byte-identical
};

nlohmann::json config_to_json(const RunConfig& cfg);

nlohmann::json group_to_json(const Group& g);
/// Reads { "order", "table", "names"?, "family"? }. If the table's identity
/// is not element 0 the group is relabeled by the swap taking it there.
Group group_from_json(const nlohmann::json& doc);

nlohmann::json sring_to_json(const SRing& a, bool include_group = false);
/// A partition as [[int]] or an object with a "basic_sets" member.
std::vector<ElementSet> partition_from_json(const nlohmann::json& doc);

/// Sparse { "coeffs": { "<index>": "<decimal string>" } }.
nlohmann::json ring_element_to_json(const GroupRingElement& xi);
GroupRingElement ring_element_from_json(const Group& g, const nlohmann::json& doc);

nlohmann::json subgroup_to_json(const Subgroup& h);
nlohmann::json diagnosis_to_json(const Diagnosis& d, const RunConfig& cfg,
                                 long long elapsed_ms = -1);
nlohmann::json character_table_to_json(const CharacterTable& t, bool rational,
                                       const RunConfig& cfg);
nlohmann::json enumeration_report(const std::string& subject, const std::vector<SRing>& rings,
                                  bool dump, const RunConfig& cfg);

}  // namespace schur
