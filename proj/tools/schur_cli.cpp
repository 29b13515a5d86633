// Command-line front end: group construction, S-ring inspection, central
// S-ring enumeration, theorem suites and the generalized B-group diagnostic.
//
// Exit codes: 0 success, 1 usage error, 2 validation/construction error,
// 3 theorem refutation (fatal regression in a verify suite).

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "schur/corpus.hpp"
#include "schur/json_io.hpp"
#include "schur/verifiers.hpp"

using namespace schur;
using nlohmann::json;

namespace {

struct GroupChoice {
  std::string spec;        // compact spec string (also set by the shorthand flags)
  std::string corpus;      // corpus name like D18
  std::vector<std::string> product;  // two specs
};

std::shared_ptr<Group> resolve_spec(const std::string& spec, int size_cap);

std::shared_ptr<Group> resolve_product(const std::string& left, const std::string& right,
                                       int size_cap) {
  auto g1 = resolve_spec(left, size_cap);
  auto g2 = resolve_spec(right, size_cap);
  return std::make_shared<Group>(direct_product(*g1, *g2, size_cap));
}

std::shared_ptr<Group> resolve_spec(const std::string& spec, int size_cap) {
  auto num = [&spec](size_t pos) { return std::stoi(spec.substr(pos)); };
  if (spec.rfind("cyclic:", 0) == 0) return std::make_shared<Group>(build_cyclic(num(7)));
  if (spec.rfind("dihedral:", 0) == 0) return std::make_shared<Group>(build_dihedral(num(9)));
  if (spec.rfind("extraspecial:", 0) == 0)
    return std::make_shared<Group>(build_extraspecial(num(13)));
  if (spec.rfind("frobenius:", 0) == 0) {
    size_t colon = spec.find(':', 10);
    if (colon == std::string::npos)
      throw std::invalid_argument("frobenius spec needs p and q, e.g. frobenius:7:3");
    return std::make_shared<Group>(
        build_frobenius(std::stoi(spec.substr(10, colon - 10)), std::stoi(spec.substr(colon + 1))));
  }
  if (spec.rfind("symmetric:", 0) == 0) return std::make_shared<Group>(build_symmetric(num(10)));
  if (spec.rfind("alternating:", 0) == 0)
    return std::make_shared<Group>(build_alternating(num(12)));
  if (spec == "quaternion" || spec == "quaternion:8")
    return std::make_shared<Group>(build_quaternion());
  if (spec.rfind("perm:", 0) == 0) {
    std::vector<Perm> gens;
    std::string body = spec.substr(5);
    size_t start = 0;
    while (start <= body.size()) {
      size_t sep = body.find(';', start);
      std::string one = body.substr(start, sep == std::string::npos ? sep : sep - start);
      if (!one.empty()) gens.push_back(parse_cycles(one));
      if (sep == std::string::npos) break;
      start = sep + 1;
    }
    return std::make_shared<Group>(from_permutation_generators(gens, size_cap));
  }
  if (spec.rfind("file:", 0) == 0) {
    std::ifstream in(spec.substr(5));
    if (!in) throw std::invalid_argument("cannot open " + spec.substr(5));
    json doc = json::parse(in);
    return std::make_shared<Group>(group_from_json(doc));
  }
  if (spec.rfind("product:", 0) == 0) {
    std::string body = spec.substr(8);
    size_t star = body.find('*');
    if (star == std::string::npos)
      throw std::invalid_argument("product spec needs two factors separated by '*'");
    return resolve_product(body.substr(0, star), body.substr(star + 1), size_cap);
  }
  if (auto g = corpus_group(spec)) return g;
  throw std::invalid_argument("unknown group spec: " + spec);
}

std::shared_ptr<Group> resolve_group(const GroupChoice& choice, int size_cap) {
  if (!choice.product.empty()) {
    if (choice.product.size() != 2)
      throw std::invalid_argument("--product needs exactly two group specs");
    return resolve_product(choice.product[0], choice.product[1], size_cap);
  }
  if (!choice.corpus.empty()) {
    if (auto g = corpus_group(choice.corpus)) return g;
    throw std::invalid_argument("unknown corpus group: " + choice.corpus);
  }
  if (!choice.spec.empty()) return resolve_spec(choice.spec, size_cap);
  throw std::invalid_argument("no group given (use --group or one of the family flags)");
}

void add_group_flags(CLI::App* cmd, GroupChoice& choice) {
  cmd->add_option("--group", choice.spec,
                  "group spec: cyclic:N, dihedral:2M, extraspecial:P, frobenius:P:Q, "
                  "symmetric:K, alternating:K, quaternion, perm:(..);(..), file:PATH, "
                  "product:SPEC*SPEC, or a corpus name (Z6, D18, Q8, A5, ...)");
  cmd->add_option_function<int>(
      "--cyclic", [&choice](int n) { choice.spec = "cyclic:" + std::to_string(n); });
  cmd->add_option_function<int>(
      "--dihedral", [&choice](int n) { choice.spec = "dihedral:" + std::to_string(n); });
  cmd->add_option_function<int>(
      "--extraspecial", [&choice](int p) { choice.spec = "extraspecial:" + std::to_string(p); });
  cmd->add_option_function<std::vector<int>>(
         "--frobenius",
         [&choice](const std::vector<int>& pq) {
           choice.spec = "frobenius:" + std::to_string(pq.at(0)) + ":" + std::to_string(pq.at(1));
         })
      ->expected(2);
  cmd->add_option_function<std::string>(
      "--perm", [&choice](const std::string& p) { choice.spec = "perm:" + p; });
  cmd->add_option_function<std::string>(
      "--file", [&choice](const std::string& p) { choice.spec = "file:" + p; });
  cmd->add_option("--product", choice.product, "two group specs to multiply")->expected(2);
}

std::string subject_name(const GroupChoice& choice, const Group& g) {
  if (!choice.corpus.empty()) return choice.corpus;
  if (!g.family().empty()) return g.family();
  if (!choice.spec.empty()) return choice.spec;
  return "order-" + std::to_string(g.order());
}

// ---- output ----

bool render_inline(const json& doc) {
  if (!doc.is_structured()) return true;
  if (doc.is_object()) return false;
  for (const auto& item : doc)
    if (!item.is_primitive()) return false;  // arrays of scalars print inline
  return true;
}

void render_text(const json& doc, std::ostream& os, int indent = 0) {
  std::string pad(indent, ' ');
  if (doc.is_object()) {
    for (const auto& [key, value] : doc.items()) {
      if (render_inline(value)) {
        os << pad << key << ": " << value.dump() << "\n";
      } else {
        os << pad << key << ":\n";
        render_text(value, os, indent + 2);
      }
    }
  } else if (doc.is_array()) {
    for (const auto& item : doc) {
      if (render_inline(item)) {
        os << pad << "- " << item.dump() << "\n";
      } else {
        os << pad << "-\n";
        render_text(item, os, indent + 2);
      }
    }
  } else {
    os << pad << doc.dump() << "\n";
  }
}

struct Output {
  std::string format = "json";
  std::string path;

  void emit(const json& doc) const {
    std::ostringstream buf;
    if (format == "text")
      render_text(doc, buf);
    else
      buf << doc.dump() << "\n";
    if (path.empty()) {
      std::cout << buf.str();
    } else {
      std::ofstream out(path, std::ios::app);
      out << buf.str();
    }
  }
};

// ---- suites ----

Diagnosis multiplier_suite(const Group& g, const std::string& name, const EnumLimits& limits) {
  Diagnosis d;
  d.check = "multiplier-theorem";
  d.subject = name;
  std::vector<SRing> rings;
  try {
    rings = enumerate_central_srings(g, limits);
  } catch (const ClassCountExceeded& e) {
    d.notes = e.what();
    return d;
  }
  long long triples = 0;
  for (const auto& a : rings)
    for (long long m : coprime_residues(g.order()))
      triples += verify_automorphism(a, m).triples_checked;  // throws TheoremViolation on failure
  d.verdict = Verdict::Confirmed;
  d.notes = std::to_string(rings.size()) + " central S-ring(s), " + std::to_string(triples) +
            " structure-constant triples checked";
  return d;
}

Diagnosis rationality_suite(const Group& g, const std::string& name, const EnumLimits& limits,
                            double tol, unsigned long long seed) {
  Diagnosis d;
  d.check = "rationality-criteria";
  d.subject = name;
  std::vector<SRing> rings;
  try {
    rings = enumerate_central_srings(g, limits);
  } catch (const ClassCountExceeded& e) {
    d.notes = e.what();
    return d;
  }
  d.verdict = Verdict::Confirmed;
  for (const auto& a : rings) {
    bool def = is_rational(a);
    bool num = is_rational_numeric(a, tol, seed);
    if (def != num) {
      d.verdict = Verdict::Refuted;
      d.witness_srings.push_back(a);
      d.notes = "definition-level and character-level rationality disagree";
      return d;
    }
    if (is_primitive(a) != is_primitive(rational_closure(a).closed)) {
      d.verdict = Verdict::Refuted;
      d.witness_srings.push_back(a);
      d.notes = "primitivity does not transfer to the rational closure";
      return d;
    }
  }
  d.notes = std::to_string(rings.size()) + " central S-ring(s); rationality criteria and "
            "closure primitivity agree on all";
  return d;
}

std::vector<Diagnosis> lemma_suite(const Group& g, const std::string& name) {
  std::vector<Diagnosis> out;
  for (int p : {2, 3, 5, 7, 11, 13}) {
    for (int i = 0; i < g.num_classes(); ++i) {
      Diagnosis d = check_multiplier_congruence(g, i, p);
      d.subject = name + "/class-" + std::to_string(i) + "/p-" + std::to_string(p);
      out.push_back(std::move(d));
    }
    if (g.order() % p == 0) {
      Diagnosis c = check_centralizer_congruence(g, p);
      c.subject = name + "/p-" + std::to_string(p);
      out.push_back(std::move(c));
      Diagnosis h = check_coset_lemma(g, p);
      h.subject = name + "/p-" + std::to_string(p);
      out.push_back(std::move(h));
    }
  }
  return out;
}

int run_verify(const std::string& suite, const std::vector<NamedGroup>& subjects,
               const Output& out, const RunConfig& cfg) {
  EnumLimits limits{cfg.class_cap, cfg.max_results};
  bool refuted = false;
  auto emit = [&](Diagnosis d) {
    refuted = refuted || d.verdict == Verdict::Refuted;
    out.emit(diagnosis_to_json(d, cfg));
  };
  for (const auto& ng : subjects) {
    const Group& g = *ng.group;
    try {
      if (suite == "multiplier" || suite == "all") emit(multiplier_suite(g, ng.name, limits));
      if (suite == "wielandt" || suite == "all") {
        Diagnosis d = wielandt_central_check(g, limits);
        d.subject = ng.name;
        emit(std::move(d));
      }
      if (suite == "camina" || suite == "all") {
        Diagnosis d = camina_b_group_check(g, limits);
        d.subject = ng.name;
        emit(std::move(d));
      }
      if (suite == "separating" || suite == "all") {
        try {
          for (const auto& a : enumerate_central_srings(g, limits)) {
            Diagnosis d = separating_subgroup_bulk(a);
            d.subject = ng.name + "/rank-" + std::to_string(a.rank());
            emit(std::move(d));
          }
        } catch (const ClassCountExceeded& e) {
          Diagnosis d;
          d.check = "separating-subgroup-bulk";
          d.subject = ng.name;
          d.notes = e.what();
          emit(std::move(d));
        }
      }
      if (suite == "rationality" || suite == "all")
        emit(rationality_suite(g, ng.name, limits, cfg.tol, cfg.seed));
      if (suite == "lemmas" || suite == "all")
        for (auto& d : lemma_suite(g, ng.name)) emit(std::move(d));
    } catch (const TheoremViolation& e) {
      Diagnosis d;
      d.check = suite;
      d.subject = ng.name;
      d.verdict = Verdict::Refuted;
      d.notes = e.what();
      emit(std::move(d));
    }
  }
  return refuted ? 3 : 0;
}

json group_report(const Group& g, const std::string& name, const RunConfig& cfg) {
  json classes = json::array();
  for (const auto& c : g.classes().classes) classes.push_back(c.elems());
  json sylow = json::array();
  for (int p = 2; p <= g.order(); ++p) {
    if (!is_prime(p) || g.order() % p != 0) continue;
    json entry{{"p", p}};
    if (auto s = normal_sylow_subgroup(g, p)) {
      entry["normal_sylow"] = s->members.elems();
      entry["cyclic"] = is_cyclic(g, *s);
    } else {
      entry["normal_sylow"] = nullptr;
    }
    sylow.push_back(std::move(entry));
  }
  json normals = json::array();
  for (const auto& h : normal_subgroups(g)) normals.push_back(h.members.elems());
  json camina = json::array();
  for (const auto& pair : camina_pairs(g)) camina.push_back(pair.h.members.elems());
  return json{{"group", name},
              {"order", g.order()},
              {"abelian", g.is_abelian()},
              {"classes", std::move(classes)},
              {"center", center(g).members.elems()},
              {"normal_subgroups", std::move(normals)},
              {"sylow", std::move(sylow)},
              {"camina_pairs", std::move(camina)},
              {"config", config_to_json(cfg)},
              {"schema_version", kSchemaVersion}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Schur-ring computations over finite groups"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  Output out;
  app.add_option("--format", out.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--out", out.path, "write output to a file (appends)");
  app.add_option("--tol", cfg.tol, "rationality tolerance")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for the character eigen-solver")
      ->capture_default_str();
  app.add_option("--class-cap,--limits.class-cap", cfg.class_cap,
                 "max conjugacy classes for enumeration")
      ->capture_default_str();
  app.add_option("--size-cap", cfg.size_cap, "max group order for construction")
      ->capture_default_str();
  app.add_option("--max-results", cfg.max_results, "enumeration result cap")
      ->capture_default_str();
  app.add_flag("--timings", cfg.timings, "include elapsed_ms in reports");

  GroupChoice choice;

  CLI::App* cmd_group = app.add_subcommand("group", "build a group and print its structure");
  add_group_flags(cmd_group, choice);

  CLI::App* cmd_sring = app.add_subcommand("sring", "validate an S-ring over a group");
  add_group_flags(cmd_sring, choice);
  bool want_class_algebra = false, want_trivial = false, want_constants = false;
  std::string partition_path;
  cmd_sring->add_flag("--class-algebra", want_class_algebra, "use the conjugacy classes");
  cmd_sring->add_flag("--trivial", want_trivial, "use {e} | G#");
  cmd_sring->add_option("--partition", partition_path, "JSON file with basic sets [[int]]");
  cmd_sring->add_flag("--constants", want_constants, "include structure constants");

  CLI::App* cmd_enum = app.add_subcommand("enumerate", "enumerate all central S-rings");
  add_group_flags(cmd_enum, choice);
  bool dump = false;
  cmd_enum->add_flag("--dump", dump, "include every S-ring in the report");

  CLI::App* cmd_verify = app.add_subcommand("verify", "run a theorem suite (JSON lines)");
  add_group_flags(cmd_verify, choice);
  std::string suite, corpus;
  cmd_verify->add_option("suite", suite, "multiplier|wielandt|camina|separating|rationality|lemmas|all")
      ->required()
      ->check(CLI::IsMember({"multiplier", "wielandt", "camina", "separating", "rationality",
                             "lemmas", "all"}));
  cmd_verify->add_option("--corpus", corpus, "run over the built-in corpus")
      ->check(CLI::IsMember({"builtin"}));

  CLI::App* cmd_diag = app.add_subcommand("diagnose", "generalized B-group verdict");
  add_group_flags(cmd_diag, choice);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_group->parsed()) {
      auto g = resolve_group(choice, cfg.size_cap);
      out.emit(group_report(*g, subject_name(choice, *g), cfg));
      return 0;
    }
    if (cmd_sring->parsed()) {
      auto g = resolve_group(choice, cfg.size_cap);
      SRing a = [&] {
        if (want_trivial) return SRing::trivial(*g);
        if (!partition_path.empty()) {
          std::ifstream in(partition_path);
          if (!in) throw std::invalid_argument("cannot open " + partition_path);
          return SRing::from_partition(*g, partition_from_json(json::parse(in)));
        }
        return SRing::class_algebra(*g);  // also the --class-algebra default
      }();
      json doc = sring_to_json(a);
      doc["valid"] = true;
      doc["group"] = subject_name(choice, *g);
      doc["primitive"] = is_primitive(a);
      if (want_constants) {
        json c = json::array();
        for (int x = 0; x < a.rank(); ++x)
          for (int y = 0; y < a.rank(); ++y)
            for (int z = 0; z < a.rank(); ++z)
              if (a.constants().c(x, y, z) != 0)
                c.push_back(json::array({x, y, z, a.constants().c(x, y, z)}));
        doc["constants"] = std::move(c);
      }
      doc["config"] = config_to_json(cfg);
      doc["schema_version"] = kSchemaVersion;
      out.emit(doc);
      return 0;
    }
    if (cmd_enum->parsed()) {
      auto g = resolve_group(choice, cfg.size_cap);
      EnumLimits limits{cfg.class_cap, cfg.max_results};
      auto rings = enumerate_central_srings(*g, limits);
      out.emit(enumeration_report(subject_name(choice, *g), rings, dump, cfg));
      return 0;
    }
    if (cmd_verify->parsed()) {
      std::vector<NamedGroup> subjects;
      if (!corpus.empty()) {
        subjects = builtin_corpus();
      } else {
        auto g = resolve_group(choice, cfg.size_cap);
        subjects.push_back({subject_name(choice, *g), g});
      }
      return run_verify(suite, subjects, out, cfg);
    }
    if (cmd_diag->parsed()) {
      auto g = resolve_group(choice, cfg.size_cap);
      EnumLimits limits{cfg.class_cap, cfg.max_results};
      Diagnosis d = generalized_b_group_diagnostic(*g, limits);
      d.subject = subject_name(choice, *g);
      out.emit(diagnosis_to_json(d, cfg));
      return 0;
    }
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 3;
  } catch (const SRingError& e) {
    json err{{"valid", false}, {"error", e.what()}, {"schema_version", kSchemaVersion}};
    switch (e.kind()) {
      case SRingError::Kind::NotPartition: err["axiom"] = "partition"; break;
      case SRingError::Kind::S1Violation: err["axiom"] = "S1"; break;
      case SRingError::Kind::S2Violation: err["axiom"] = "S2"; break;
      case SRingError::Kind::S3Violation: err["axiom"] = "S3"; break;
    }
    out.emit(err);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
