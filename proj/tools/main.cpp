// ringtop — classify finite ring topologies, query generalized open-set
// operators, verify the identity catalog, and search small structure spaces.
//
// Exit codes: 0 success / all checks passed; 1 verification failure or goal
// unsatisfied under --expect-found; 2 input or usage error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <sstream>

#include "ringtop/document.hpp"
#include "ringtop/explorer.hpp"

using namespace ringtop;
using nlohmann::json;

namespace {

struct GlobalOptions {
  bool json_output = false;
  DeltaClosureMode mode = DeltaClosureMode::Standard;
  int max_n = 12;
  unsigned threads = 0;
};

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  auto flush = [&] {
    std::size_t begin = current.find_first_not_of(" \t");
    if (begin == std::string::npos) {
      current.clear();
      return;
    }
    std::size_t end = current.find_last_not_of(" \t");
    out.push_back(current.substr(begin, end - begin + 1));
    current.clear();
  };
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      flush();
      continue;
    }
    current.push_back(ch);
  }
  flush();
  return out;
}

LoadedStructure load_checked(const std::string& path, const GlobalOptions& global) {
  LoadedStructure loaded = load_structure_file(path);
  const int n = loaded.structure.ground().size();
  if (n > global.max_n) {
    throw InputError("carrier has " + std::to_string(n) +
                     " elements; operator sweeps are capped at " +
                     std::to_string(global.max_n) + " (raise with --max-n)");
  }
  return loaded;
}

json labels_json(const GroundSet& ground, Mask m) {
  json out = json::array();
  for (int i = 0; i < ground.size(); ++i) {
    if (mask_contains(m, i)) out.push_back(ground.label(i));
  }
  return out;
}

std::string witness_text(const GroundSet& ground, const Witness& witness) {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (const auto& [name, value] : witness.points) {
    if (!first) out << ", ";
    out << name << '=' << ground.label(value);
    first = false;
  }
  for (const auto& [name, value] : witness.sets) {
    if (!first) out << ", ";
    out << name << '=' << format_mask(ground, value);
    first = false;
  }
  out << ')';
  return out.str();
}

json witness_json(const GroundSet& ground, const Witness& witness) {
  json points = json::object();
  for (const auto& [name, value] : witness.points) points[name] = ground.label(value);
  json sets = json::object();
  for (const auto& [name, value] : witness.sets) sets[name] = labels_json(ground, value);
  return json{{"points", std::move(points)}, {"sets", std::move(sets)}};
}

json report_json(const GroundSet& ground, const CheckReport& report) {
  json out{{"id", report.id},
           {"status", std::string(to_string(report.status))},
           {"kind", std::string(to_string(report.kind))},
           {"delta_mode", std::string(to_string(report.mode))}};
  if (!report.variant.empty()) out["variant"] = report.variant;
  if (!report.note.empty()) out["note"] = report.note;
  out["witness"] =
      report.witness ? witness_json(ground, *report.witness) : json(nullptr);
  return out;
}

std::string report_suffix(const GroundSet& ground, const CheckReport& report) {
  std::ostringstream out;
  if (!report.variant.empty()) out << " [" << report.variant << "]";
  if (report.witness) out << "  witness " << witness_text(ground, *report.witness);
  if (!report.note.empty()) out << "  (" << report.note << ")";
  return out.str();
}

void emit(const GlobalOptions& global, const json& document, const std::string& text) {
  if (global.json_output) {
    std::cout << document.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

std::string mode_header(const GlobalOptions& global) {
  return "delta-mode: " + std::string(to_string(global.mode)) + "\n";
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

int cmd_classify(const std::string& path, const std::vector<std::string>& kind_names,
                 const GlobalOptions& global) {
  LoadedStructure loaded = load_checked(path, global);
  const GroundSet& ground = loaded.structure.ground();

  std::vector<FamilyKind> kinds;
  for (const std::string& name : kind_names) {
    auto kind = parse_family_kind(name);
    if (!kind || (*kind != FamilyKind::Open && *kind != FamilyKind::Beta &&
                  *kind != FamilyKind::EStar)) {
      throw InputError("classification kinds are open, beta, estar; got \"" + name + "\"");
    }
    kinds.push_back(*kind);
  }

  Classification classification = classify(loaded.structure, global.mode);

  json out{{"command", "classify"},
           {"delta_mode", std::string(to_string(global.mode))},
           {"structure", json{{"name", loaded.structure.ring.name()},
                              {"elements", ground.labels()}}}};
  json kinds_json = json::array();
  std::ostringstream text;
  text << mode_header(global);
  text << "structure: " << loaded.structure.ring.name() << " (" << ground.size()
       << " elements)\n";
  for (FamilyKind kind : kinds) {
    const KindClassification& result = classification.result(kind);
    text << to_string(kind) << ": " << (result.satisfied ? "YES" : "no") << '\n';
    json conditions = json::array();
    for (const CheckReport& report : result.conditions) {
      text << "  " << report.id << ": " << to_string(report.status)
           << report_suffix(ground, report) << '\n';
      conditions.push_back(report_json(ground, report));
    }
    kinds_json.push_back(json{{"kind", std::string(to_string(kind))},
                              {"satisfied", result.satisfied},
                              {"conditions", std::move(conditions)}});
  }
  out["kinds"] = std::move(kinds_json);
  emit(global, out, text.str());
  return 0;
}

// ---------------------------------------------------------------------------
// op
// ---------------------------------------------------------------------------

int cmd_op(const std::string& path, const std::string& op_name,
           const std::string& set_text, const std::string& kind_name,
           const GlobalOptions& global) {
  LoadedStructure loaded = load_checked(path, global);
  const GroundSet& ground = loaded.structure.ground();
  Mask input = mask_from_labels(ground, split_labels(set_text));
  OperatorTable ops(loaded.structure.topology, global.mode);

  auto generic_kind = [&kind_name]() {
    auto kind = parse_family_kind(kind_name);
    if (!kind) {
      throw InputError(kind_name.empty()
                           ? std::string("--kind is required for gen-int/gen-cl")
                           : "unknown family kind \"" + kind_name + "\"");
    }
    return *kind;
  };

  Mask result = 0;
  if (op_name == "cl") {
    result = ops.closure(input);
  } else if (op_name == "int") {
    result = ops.interior(input);
  } else if (op_name == "delta-int") {
    result = ops.delta_interior(input);
  } else if (op_name == "delta-cl") {
    result = ops.delta_closure(input);
  } else if (op_name == "e*-int") {
    result = ops.gen_interior(FamilyKind::EStar, input);
  } else if (op_name == "e*-cl") {
    result = ops.gen_closure(FamilyKind::EStar, input);
  } else if (op_name == "gen-int") {
    result = ops.gen_interior(generic_kind(), input);
  } else if (op_name == "gen-cl") {
    result = ops.gen_closure(generic_kind(), input);
  } else {
    throw InputError("unknown operator \"" + op_name +
                     "\" (cl, int, delta-int, delta-cl, e*-int, e*-cl, gen-int, gen-cl)");
  }

  json out{{"command", "op"},
           {"op", op_name},
           {"delta_mode", std::string(to_string(global.mode))},
           {"input", labels_json(ground, input)},
           {"result", labels_json(ground, result)}};
  if (!kind_name.empty()) out["kind"] = kind_name;
  emit(global, out, mode_header(global) + format_mask(ground, result) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// families
// ---------------------------------------------------------------------------

int cmd_families(const std::string& path, const std::string& kind_name,
                 const GlobalOptions& global) {
  auto kind = parse_family_kind(kind_name);
  if (!kind) throw InputError("unknown family kind \"" + kind_name + "\"");
  LoadedStructure loaded = load_checked(path, global);
  const GroundSet& ground = loaded.structure.ground();
  OperatorTable ops(loaded.structure.topology, global.mode);
  const std::vector<Mask>& members = ops.family(*kind);

  std::ostringstream text;
  text << mode_header(global);
  text << "family " << kind_name << ": " << members.size() << " sets\n";
  json sets = json::array();
  for (Mask member : members) {
    text << format_mask(ground, member) << '\n';
    sets.push_back(labels_json(ground, member));
  }
  json out{{"command", "families"},
           {"kind", kind_name},
           {"delta_mode", std::string(to_string(global.mode))},
           {"count", members.size()},
           {"sets", std::move(sets)}};
  emit(global, out, text.str());
  return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(const std::string& path, const std::string& checks,
               const std::string& variant_name, const GlobalOptions& global) {
  auto selection = parse_variant_selection(variant_name);
  if (!selection) {
    throw InputError("--variant must be as-stated, as-proved or both");
  }
  LoadedStructure loaded = load_checked(path, global);
  const GroundSet& ground = loaded.structure.ground();

  RunOptions options;
  options.mode = global.mode;
  if (loaded.hom) options.hom = &*loaded.hom;

  std::vector<CheckReport> reports;
  if (checks == "all") {
    reports = run_all(loaded.structure, *selection, options);
  } else {
    for (const std::string& id : split_labels(checks)) {
      if (find_theorem(id) == nullptr) {
        throw InputError("unknown check id \"" + id + "\"");
      }
      const bool divergent = find_theorem(id)->divergent;
      if (divergent && *selection == VariantSelection::Both) {
        reports.push_back(run_check(id, loaded.structure, Variant::AsStated, options));
        reports.push_back(run_check(id, loaded.structure, Variant::AsProved, options));
      } else {
        Variant variant = *selection == VariantSelection::AsStated ? Variant::AsStated
                                                                   : Variant::AsProved;
        reports.push_back(run_check(id, loaded.structure, variant, options));
      }
    }
  }

  SuiteSummary summary = summarize(reports);
  auto is_divergence = [&reports](const CheckReport& report) {
    if (report.status != CheckStatus::Fail || report.variant != "as-stated") return false;
    for (const CheckReport& sibling : reports) {
      if (sibling.id == report.id && sibling.variant == "as-proved" &&
          sibling.status == CheckStatus::Pass) {
        return true;
      }
    }
    return false;
  };

  std::ostringstream text;
  text << mode_header(global);
  json reports_json = json::array();
  for (const CheckReport& report : reports) {
    std::string tag;
    switch (report.status) {
      case CheckStatus::Pass: tag = "PASS"; break;
      case CheckStatus::Fail: tag = is_divergence(report) ? "DIVERGENCE" : "FAIL"; break;
      case CheckStatus::HypothesisNotSatisfied: tag = "HYP "; break;
    }
    text << tag << "  " << report.id << report_suffix(ground, report) << '\n';
    json entry = report_json(ground, report);
    if (is_divergence(report)) entry["counted_as"] = "divergence";
    reports_json.push_back(std::move(entry));
  }
  text << "summary: " << summary.passed << " passed, " << summary.failed << " failed, "
       << summary.hypothesis_not_satisfied << " hypothesis-not-satisfied, "
       << summary.divergences << " divergence(s)\n";

  json out{{"command", "verify"},
           {"delta_mode", std::string(to_string(global.mode))},
           {"variant", variant_name},
           {"structure", json{{"name", loaded.structure.ring.name()},
                              {"elements", ground.labels()}}},
           {"reports", std::move(reports_json)},
           {"summary", json{{"passed", summary.passed},
                            {"failed", summary.failed},
                            {"hypothesis_not_satisfied", summary.hypothesis_not_satisfied},
                            {"divergences", summary.divergences}}}};
  emit(global, out, text.str());
  return summary.failed > 0 ? 1 : 0;
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

int cmd_search(const std::string& goal_text, int max_points, int max_order,
               bool brute_rings, bool expect_found, const GlobalOptions& global) {
  SearchGoal goal = SearchGoal::parse(goal_text);
  SearchOptions options;
  options.max_points = max_points;
  options.max_order = max_order;
  options.brute_force_rings = brute_rings;
  options.mode = global.mode;
  options.threads = global.threads;

  std::vector<SearchHit> hits = search(goal, options);

  std::ostringstream text;
  text << mode_header(global);
  text << "goal: " << goal.describe() << "\n";
  text << "hits: " << hits.size() << "\n";
  json hits_json = json::array();
  for (const SearchHit& hit : hits) {
    const GroundSet& ground = hit.structure.ground();
    text << "- ring " << hit.structure.ring.name() << ", opens {";
    bool first = true;
    for (Mask open : hit.structure.topology.opens()) {
      if (!first) text << ", ";
      text << format_mask(ground, open);
      first = false;
    }
    text << "}\n";
    json hit_json{{"structure",
                   structure_document(LoadedStructure{hit.structure, std::nullopt})}};
    json kinds = json::array();
    for (const KindClassification& result : hit.classification.kinds) {
      text << "    " << to_string(result.kind) << ": "
           << (result.satisfied ? "yes" : "no");
      for (const CheckReport& report : result.conditions) {
        if (report.status == CheckStatus::Fail && report.witness) {
          text << " (" << report.id << " fails at "
               << witness_text(ground, *report.witness) << ")";
          break;
        }
      }
      text << '\n';
      json conditions = json::array();
      for (const CheckReport& report : result.conditions) {
        conditions.push_back(report_json(ground, report));
      }
      kinds.push_back(json{{"kind", std::string(to_string(result.kind))},
                           {"satisfied", result.satisfied},
                           {"conditions", std::move(conditions)}});
    }
    hit_json["classification"] = std::move(kinds);
    if (hit.report) {
      text << "    " << hit.report->id << ": "
           << (hit.report->witness ? "witness " + witness_text(ground, *hit.report->witness)
                                   : std::string("no witness"))
           << '\n';
      hit_json["report"] = report_json(ground, *hit.report);
    }
    hits_json.push_back(std::move(hit_json));
  }

  json out{{"command", "search"},
           {"goal", goal.describe()},
           {"delta_mode", std::string(to_string(global.mode))},
           {"max_points", max_points},
           {"max_order", max_order},
           {"hit_count", hits.size()},
           {"hits", std::move(hits_json)}};
  emit(global, out, text.str());
  return (expect_found && hits.empty()) ? 1 : 0;
}

// ---------------------------------------------------------------------------
// enumerate-topologies
// ---------------------------------------------------------------------------

int cmd_enumerate(int n, bool count_only, const GlobalOptions& global) {
  if (count_only) {
    std::size_t count = count_topologies(n);
    emit(global,
         json{{"command", "enumerate-topologies"}, {"n", n}, {"count", count}},
         std::to_string(count) + "\n");
    return 0;
  }
  std::vector<Topology> topologies = enumerate_topologies(n);
  std::ostringstream text;
  json list = json::array();
  for (const Topology& t : topologies) {
    bool first = true;
    text << '{';
    json opens = json::array();
    for (Mask open : t.opens()) {
      if (!first) text << ", ";
      text << format_mask(t.ground(), open);
      opens.push_back(labels_json(t.ground(), open));
      first = false;
    }
    text << "}\n";
    list.push_back(std::move(opens));
  }
  json out{{"command", "enumerate-topologies"},
           {"n", n},
           {"count", topologies.size()},
           {"topologies", std::move(list)}};
  emit(global, out, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification and exploration engine for generalized "
               "topological-ring structures on finite carriers"};
  app.require_subcommand(1);

  GlobalOptions global;
  std::string mode_name = "standard";
  app.add_flag("--json", global.json_output, "machine-readable output");
  app.add_option("--delta-mode", mode_name, "standard | paper-literal")
      ->capture_default_str();
  app.add_option("--max-n", global.max_n, "carrier size cap for operator sweeps")
      ->capture_default_str();
  app.add_option("--threads", global.threads, "worker threads for search (0 = auto)");

  std::string file;
  std::vector<std::string> kind_names{"open", "beta", "estar"};
  auto* classify_cmd = app.add_subcommand("classify", "classify a structure document");
  classify_cmd->add_option("file", file, "structure document")->required();
  classify_cmd->add_option("--kinds", kind_names, "family kinds to classify")
      ->delimiter(',');

  std::string op_name;
  std::string set_text;
  std::string kind_name;
  auto* op_cmd = app.add_subcommand("op", "evaluate an operator on a subset");
  op_cmd->add_option("file", file, "structure document")->required();
  op_cmd->add_option("--op", op_name, "cl | int | delta-int | delta-cl | e*-int | e*-cl | gen-int | gen-cl")
      ->required();
  op_cmd->add_option("--set", set_text, "comma-separated element labels (empty = ∅)");
  op_cmd->add_option("--kind", kind_name, "family kind for gen-int/gen-cl");

  std::string families_kind;
  auto* families_cmd = app.add_subcommand("families", "list a generalized open family");
  families_cmd->add_option("file", file, "structure document")->required();
  families_cmd->add_option("--kind", families_kind, "family kind")->required();

  std::string checks = "all";
  std::string variant_name = "both";
  auto* verify_cmd = app.add_subcommand("verify", "run the identity catalog");
  verify_cmd->add_option("file", file, "structure document")->required();
  verify_cmd->add_option("--checks", checks, "all or comma-separated check ids")
      ->capture_default_str();
  verify_cmd->add_option("--variant", variant_name, "as-stated | as-proved | both")
      ->capture_default_str();

  std::string goal_text;
  int max_points = 4;
  int max_order = 4;
  bool brute_rings = false;
  bool expect_found = false;
  auto* search_cmd = app.add_subcommand("search", "sweep the (ring × topology) grid");
  search_cmd->add_option("--goal", goal_text, "separating:K1,K2 | converse:ID | census")
      ->required();
  search_cmd->add_option("--max-points", max_points, "carrier size cap (≤ 4)")
      ->capture_default_str();
  search_cmd->add_option("--max-order", max_order, "ring order cap")
      ->capture_default_str();
  search_cmd->add_flag("--brute-rings", brute_rings,
                       "add brute-force ring enumeration to the pool");
  search_cmd->add_flag("--expect-found", expect_found, "exit 1 when no hit is found");

  int enum_n = 0;
  bool count_only = false;
  auto* enum_cmd = app.add_subcommand("enumerate-topologies", "list all topologies on n points");
  enum_cmd->add_option("--n", enum_n, "carrier size (1..4)")->required();
  enum_cmd->add_flag("--count-only", count_only, "print only the count");

  // Let the global flags appear after the subcommand as well.
  for (CLI::App* sub : {classify_cmd, op_cmd, families_cmd, verify_cmd, search_cmd,
                        static_cast<CLI::App*>(enum_cmd)}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    int code = app.exit(error);
    return code == 0 ? 0 : 2;
  }

  try {
    auto mode = parse_delta_mode(mode_name);
    if (!mode) throw InputError("--delta-mode must be standard or paper-literal");
    global.mode = *mode;
    if (global.max_n < 1 || global.max_n > kMaxCarrier) {
      throw InputError("--max-n must be between 1 and 16");
    }

    if (classify_cmd->parsed()) return cmd_classify(file, kind_names, global);
    if (op_cmd->parsed()) return cmd_op(file, op_name, set_text, kind_name, global);
    if (families_cmd->parsed()) return cmd_families(file, families_kind, global);
    if (verify_cmd->parsed()) return cmd_verify(file, checks, variant_name, global);
    if (search_cmd->parsed()) {
      return cmd_search(goal_text, max_points, max_order, brute_rings, expect_found,
                        global);
    }
    if (enum_cmd->parsed()) return cmd_enumerate(enum_n, count_only, global);
  } catch (const InputError& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 2;
  }
  return 0;
}
