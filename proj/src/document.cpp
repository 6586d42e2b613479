#include "ringtop/document.hpp"

#include <fstream>

namespace ringtop {

namespace {

using nlohmann::json;

const json& require_key(const json& document, const char* key) {
  auto it = document.find(key);
  if (it == document.end()) {
    throw InputError(std::string("document is missing \"") + key + "\"");
  }
  return *it;
}

std::vector<std::string> string_list(const json& node, const char* what) {
  if (!node.is_array()) throw InputError(std::string(what) + " must be a list");
  std::vector<std::string> out;
  for (const auto& item : node) {
    if (!item.is_string()) {
      throw InputError(std::string(what) + " must contain only strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<Mask> mask_list(const GroundSet& ground, const json& node, const char* what) {
  if (!node.is_array()) throw InputError(std::string(what) + " must be a list of label lists");
  std::vector<Mask> out;
  for (const auto& item : node) {
    out.push_back(mask_from_labels(ground, string_list(item, what)));
  }
  return out;
}

std::vector<std::vector<int>> label_table(const GroundSet& ground, const json& node,
                                          const char* what) {
  if (!node.is_array()) throw InputError(std::string(what) + " must be a table of labels");
  std::vector<std::vector<int>> table;
  for (const auto& row_node : node) {
    std::vector<int> row;
    for (const auto& label : string_list(row_node, what)) {
      int idx = ground.index_of(label);
      if (idx < 0) {
        throw InputError(std::string(what) + " table uses unknown label \"" + label + "\"");
      }
      row.push_back(idx);
    }
    table.push_back(std::move(row));
  }
  return table;
}

void reject_unknown_keys(const json& document, std::initializer_list<const char*> known) {
  for (auto it = document.begin(); it != document.end(); ++it) {
    bool ok = false;
    for (const char* key : known) {
      if (it.key() == key) {
        ok = true;
        break;
      }
    }
    if (!ok) throw InputError("unknown document key \"" + it.key() + "\"");
  }
}

TopoRingStructure load_structure_only(const json& document, bool allow_hom);

HomSection load_hom(const GroundSet& source_ground, const json& node) {
  if (!node.is_object()) throw InputError("hom section must be an object");
  reject_unknown_keys(node, {"target", "map"});
  TopoRingStructure target = load_structure_only(require_key(node, "target"), false);

  const json& map_node = require_key(node, "map");
  if (!map_node.is_object()) throw InputError("hom map must be an object of label pairs");
  std::vector<int> map(static_cast<std::size_t>(source_ground.size()), -1);
  for (auto it = map_node.begin(); it != map_node.end(); ++it) {
    int from = source_ground.index_of(it.key());
    if (from < 0) throw InputError("hom map uses unknown source label \"" + it.key() + "\"");
    if (!it->is_string()) throw InputError("hom map values must be labels");
    int to = target.ground().index_of(it->get<std::string>());
    if (to < 0) {
      throw InputError("hom map uses unknown target label \"" + it->get<std::string>() + "\"");
    }
    map[static_cast<std::size_t>(from)] = to;
  }
  for (int x = 0; x < source_ground.size(); ++x) {
    if (map[static_cast<std::size_t>(x)] < 0) {
      throw InputError("hom map is missing source label \"" + source_ground.label(x) + "\"");
    }
  }
  return HomSection{std::move(target), std::move(map)};
}

TopoRingStructure load_structure_only(const json& document, bool allow_hom) {
  if (!document.is_object()) throw InputError("structure document must be a JSON object");
  if (allow_hom) {
    reject_unknown_keys(document, {"name", "elements", "open_sets", "subbasis", "add", "mul", "hom"});
  } else {
    reject_unknown_keys(document, {"name", "elements", "open_sets", "subbasis", "add", "mul"});
  }

  GroundSet ground(string_list(require_key(document, "elements"), "elements"));

  const bool has_opens = document.contains("open_sets");
  const bool has_subbasis = document.contains("subbasis");
  if (has_opens == has_subbasis) {
    throw InputError("exactly one of open_sets and subbasis must be present");
  }
  Topology topology =
      has_opens
          ? Topology::from_open_sets(ground, mask_list(ground, document["open_sets"], "open_sets"))
          : Topology::generate(ground, mask_list(ground, document["subbasis"], "subbasis"));

  std::string name;
  if (auto it = document.find("name"); it != document.end()) {
    if (!it->is_string()) throw InputError("name must be a string");
    name = it->get<std::string>();
  }
  FiniteRing ring = FiniteRing::validate(
      ground, label_table(ground, require_key(document, "add"), "add"),
      label_table(ground, require_key(document, "mul"), "mul"), std::move(name));

  return TopoRingStructure::make(std::move(ring), std::move(topology));
}

json ground_labels_json(const GroundSet& ground, Mask m) {
  json out = json::array();
  for (int i = 0; i < ground.size(); ++i) {
    if (mask_contains(m, i)) out.push_back(ground.label(i));
  }
  return out;
}

json table_json(const FiniteRing& ring, bool multiplicative) {
  json rows = json::array();
  for (int x = 0; x < ring.size(); ++x) {
    json row = json::array();
    for (int y = 0; y < ring.size(); ++y) {
      int value = multiplicative ? ring.mul(x, y) : ring.add(x, y);
      row.push_back(ring.ground().label(value));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json structure_only_document(const TopoRingStructure& structure) {
  const GroundSet& ground = structure.ground();
  json document;
  if (!structure.ring.name().empty()) document["name"] = structure.ring.name();
  document["elements"] = ground.labels();
  json opens = json::array();
  for (Mask open : structure.topology.opens()) {
    opens.push_back(ground_labels_json(ground, open));
  }
  document["open_sets"] = std::move(opens);
  document["add"] = table_json(structure.ring, false);
  document["mul"] = table_json(structure.ring, true);
  return document;
}

}  // namespace

LoadedStructure load_structure_document(const nlohmann::json& document) {
  LoadedStructure loaded{load_structure_only(document, true), std::nullopt};
  if (auto it = document.find("hom"); it != document.end()) {
    loaded.hom = load_hom(loaded.structure.ground(), *it);
  }
  return loaded;
}

LoadedStructure load_structure_file(const std::string& path) {
  std::ifstream input(path);
  if (!input) throw InputError("cannot open \"" + path + "\"");
  json document;
  try {
    input >> document;
  } catch (const json::parse_error& error) {
    throw InputError("invalid JSON in \"" + path + "\": " + error.what());
  }
  return load_structure_document(document);
}

nlohmann::json structure_document(const LoadedStructure& loaded) {
  json document = structure_only_document(loaded.structure);
  if (loaded.hom) {
    json hom;
    hom["target"] = structure_only_document(loaded.hom->target);
    json map;
    const GroundSet& source = loaded.structure.ground();
    const GroundSet& target = loaded.hom->target.ground();
    for (int x = 0; x < source.size(); ++x) {
      map[source.label(x)] = target.label(loaded.hom->map[static_cast<std::size_t>(x)]);
    }
    hom["map"] = std::move(map);
    document["hom"] = std::move(hom);
  }
  return document;
}

}  // namespace ringtop
