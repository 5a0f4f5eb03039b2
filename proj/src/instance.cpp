#include "submax/instance.hpp"

#include <fstream>
#include <unordered_map>

namespace submax {

using nlohmann::json;

namespace {

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
  throw SchemaError("instance." + where + ": " + what);
}

const json& require(const json& j, const char* field, const std::string& where) {
  auto it = j.find(field);
  if (it == j.end()) schema_fail(where, std::string("missing field '") + field + "'");
  return *it;
}

long require_weight(const json& j, const std::string& where) {
  if (!j.is_number_integer()) schema_fail(where, "weights must be integers");
  long w = j.get<long>();
  if (w < 0) schema_fail(where, "weights must be >= 0");
  return w;
}

}  // namespace

int Instance::element_id(const std::string& el) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == el) return static_cast<int>(i);
  schema_fail("elements", "unknown element '" + el + "'");
}

std::vector<std::string> Instance::names_of(const SubsetMask& s) const {
  std::vector<std::string> out;
  s.for_each([&](ElementId u) {
    if (u < elements.size()) out.push_back(elements[u]);
  });
  return out;
}

ValueOracle Instance::build_objective() const {
  switch (objective.type) {
    case ObjectiveSpec::Type::Coverage:
      return make_coverage(objective.covers, objective.item_weights);
    case ObjectiveSpec::Type::Cut:
      return make_cut(objective.edges);
    case ObjectiveSpec::Type::Modular:
      return make_modular(objective.weights);
  }
  schema_fail("objective", "unknown objective type");
}

IndependenceOracle Instance::build_matroid() const {
  switch (matroid.type) {
    case MatroidSpec::Type::Uniform:
      return make_uniform(n(), matroid.k);
    case MatroidSpec::Type::Partition:
      return make_partition(n(), matroid.parts);
    case MatroidSpec::Type::Graphic:
      return make_graphic(n(), matroid.edge_endpoints,
                          static_cast<int>(matroid.vertex_names.size()));
  }
  schema_fail("matroid", "unknown matroid type");
}

Instance Instance::from_json(const json& j) {
  Instance inst;
  if (!j.is_object()) schema_fail("", "top level must be a JSON object");
  if (j.contains("name")) {
    if (!j["name"].is_string()) schema_fail("name", "must be a string");
    inst.name = j["name"].get<std::string>();
  }

  const json& els = require(j, "elements", "");
  if (!els.is_array() || els.empty()) schema_fail("elements", "must be a non-empty array");
  for (const json& e : els) {
    if (!e.is_string()) schema_fail("elements", "entries must be strings");
    inst.elements.push_back(e.get<std::string>());
  }
  if (inst.n() > SubsetMask::kMaxElements)
    schema_fail("elements", "more than 128 elements");
  for (size_t i = 0; i < inst.elements.size(); ++i)
    for (size_t k = i + 1; k < inst.elements.size(); ++k)
      if (inst.elements[i] == inst.elements[k])
        schema_fail("elements", "duplicate element '" + inst.elements[i] + "'");

  // Objective.
  const json& obj = require(j, "objective", "");
  const std::string otype = require(obj, "type", "objective").get<std::string>();
  if (otype == "coverage") {
    inst.objective.type = ObjectiveSpec::Type::Coverage;
    const json& items = require(obj, "items", "objective");
    if (!items.is_object()) schema_fail("objective.items", "must be an object item->weight");
    std::unordered_map<std::string, ElementId> item_ids;
    for (const auto& [item, w] : items.items()) {
      item_ids[item] = static_cast<ElementId>(inst.objective.item_names.size());
      inst.objective.item_names.push_back(item);
      inst.objective.item_weights.push_back(require_weight(w, "objective.items"));
    }
    if (inst.objective.item_names.size() > SubsetMask::kMaxElements)
      schema_fail("objective.items", "more than 128 items");
    inst.objective.covers.assign(static_cast<size_t>(inst.n()), SubsetMask{});
    const json& covers = require(obj, "covers", "objective");
    if (!covers.is_object()) schema_fail("objective.covers", "must be an object");
    for (const auto& [el, list] : covers.items()) {
      const int u = inst.element_id(el);
      if (!list.is_array()) schema_fail("objective.covers", "'" + el + "' must be an array");
      for (const json& item : list) {
        auto it = item_ids.find(item.get<std::string>());
        if (it == item_ids.end())
          schema_fail("objective.covers", "unknown item '" + item.get<std::string>() + "'");
        inst.objective.covers[static_cast<size_t>(u)].set(it->second);
      }
    }
  } else if (otype == "cut") {
    inst.objective.type = ObjectiveSpec::Type::Cut;
    const json& edges = require(obj, "edges", "objective");
    if (!edges.is_array()) schema_fail("objective.edges", "must be an array");
    for (const json& e : edges) {
      if (!e.is_array() || e.size() != 3)
        schema_fail("objective.edges", "each edge must be [a, b, weight]");
      const int a = inst.element_id(e[0].get<std::string>());
      const int b = inst.element_id(e[1].get<std::string>());
      if (a == b) schema_fail("objective.edges", "self edges are not allowed");
      inst.objective.edges.push_back({static_cast<ElementId>(a), static_cast<ElementId>(b),
                                      require_weight(e[2], "objective.edges")});
    }
  } else if (otype == "modular") {
    inst.objective.type = ObjectiveSpec::Type::Modular;
    inst.objective.weights.assign(static_cast<size_t>(inst.n()), 0);
    const json& weights = require(obj, "weights", "objective");
    if (!weights.is_object()) schema_fail("objective.weights", "must be an object");
    for (const auto& [el, w] : weights.items())
      inst.objective.weights[static_cast<size_t>(inst.element_id(el))] =
          require_weight(w, "objective.weights");
  } else {
    schema_fail("objective.type", "unknown type '" + otype + "'");
  }

  // Matroid.
  const json& mat = require(j, "matroid", "");
  const std::string mtype = require(mat, "type", "matroid").get<std::string>();
  if (mtype == "uniform") {
    inst.matroid.type = MatroidSpec::Type::Uniform;
    const json& k = require(mat, "k", "matroid");
    if (!k.is_number_integer() || k.get<long>() < 0)
      schema_fail("matroid.k", "must be an integer >= 0");
    inst.matroid.k = k.get<int>();
  } else if (mtype == "partition") {
    inst.matroid.type = MatroidSpec::Type::Partition;
    const json& parts = require(mat, "parts", "matroid");
    if (!parts.is_array()) schema_fail("matroid.parts", "must be an array");
    SubsetMask seen;
    for (const json& p : parts) {
      const json& pels = require(p, "elements", "matroid.parts");
      const json& cap = require(p, "capacity", "matroid.parts");
      if (!cap.is_number_integer() || cap.get<long>() < 0)
        schema_fail("matroid.parts", "capacity must be an integer >= 0");
      SubsetMask mask;
      for (const json& el : pels) mask.set(static_cast<ElementId>(inst.element_id(el)));
      if (seen.intersects(mask)) schema_fail("matroid.parts", "parts overlap");
      seen |= mask;
      inst.matroid.parts.emplace_back(mask, cap.get<int>());
    }
    if (seen != SubsetMask::first_n(inst.n()))
      schema_fail("matroid.parts", "parts must cover every element exactly once");
  } else if (mtype == "graphic") {
    inst.matroid.type = MatroidSpec::Type::Graphic;
    const json& edges = require(mat, "edges", "matroid");
    if (!edges.is_object()) schema_fail("matroid.edges", "must map element -> [u, v]");
    std::unordered_map<std::string, int> vertex_ids;
    auto vid = [&](const std::string& v) {
      auto it = vertex_ids.find(v);
      if (it != vertex_ids.end()) return it->second;
      int id = static_cast<int>(inst.matroid.vertex_names.size());
      vertex_ids[v] = id;
      inst.matroid.vertex_names.push_back(v);
      return id;
    };
    inst.matroid.edge_endpoints.assign(static_cast<size_t>(inst.n()), {0, 0});
    std::vector<bool> covered(static_cast<size_t>(inst.n()), false);
    for (const auto& [el, ends] : edges.items()) {
      const int u = inst.element_id(el);
      if (!ends.is_array() || ends.size() != 2)
        schema_fail("matroid.edges", "'" + el + "' must be a vertex pair");
      inst.matroid.edge_endpoints[static_cast<size_t>(u)] = {
          vid(ends[0].get<std::string>()), vid(ends[1].get<std::string>())};
      covered[static_cast<size_t>(u)] = true;
    }
    for (int u = 0; u < inst.n(); ++u)
      if (!covered[static_cast<size_t>(u)])
        schema_fail("matroid.edges", "element '" + inst.elements[static_cast<size_t>(u)] +
                                         "' has no edge");
  } else {
    schema_fail("matroid.type", "unknown type '" + mtype + "'");
  }

  return inst;
}

Instance Instance::from_string(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw SchemaError("instance: invalid JSON");
  return from_json(j);
}

Instance Instance::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("instance: cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return from_string(text);
}

json Instance::to_json() const {
  json j;
  if (!name.empty()) j["name"] = name;
  j["elements"] = elements;
  json obj;
  switch (objective.type) {
    case ObjectiveSpec::Type::Coverage: {
      obj["type"] = "coverage";
      json items = json::object();
      for (size_t i = 0; i < objective.item_names.size(); ++i)
        items[objective.item_names[i]] = objective.item_weights[i];
      obj["items"] = items;
      json covers = json::object();
      for (int u = 0; u < n(); ++u) {
        json list = json::array();
        objective.covers[static_cast<size_t>(u)].for_each(
            [&](ElementId item) { list.push_back(objective.item_names[item]); });
        covers[elements[static_cast<size_t>(u)]] = list;
      }
      obj["covers"] = covers;
      break;
    }
    case ObjectiveSpec::Type::Cut: {
      obj["type"] = "cut";
      json edges = json::array();
      for (const CutEdge& e : objective.edges)
        edges.push_back(json::array({elements[e.a], elements[e.b], e.w}));
      obj["edges"] = edges;
      break;
    }
    case ObjectiveSpec::Type::Modular: {
      obj["type"] = "modular";
      json weights = json::object();
      for (int u = 0; u < n(); ++u)
        weights[elements[static_cast<size_t>(u)]] = objective.weights[static_cast<size_t>(u)];
      obj["weights"] = weights;
      break;
    }
  }
  j["objective"] = obj;
  json mat;
  switch (matroid.type) {
    case MatroidSpec::Type::Uniform:
      mat["type"] = "uniform";
      mat["k"] = matroid.k;
      break;
    case MatroidSpec::Type::Partition: {
      mat["type"] = "partition";
      json parts = json::array();
      for (const auto& [mask, cap] : matroid.parts) {
        json p;
        json list = json::array();
        mask.for_each([&](ElementId u) { list.push_back(elements[u]); });
        p["elements"] = list;
        p["capacity"] = cap;
        parts.push_back(p);
      }
      mat["parts"] = parts;
      break;
    }
    case MatroidSpec::Type::Graphic: {
      mat["type"] = "graphic";
      json edges = json::object();
      for (int u = 0; u < n(); ++u) {
        const auto& [a, b] = matroid.edge_endpoints[static_cast<size_t>(u)];
        edges[elements[static_cast<size_t>(u)]] =
            json::array({matroid.vertex_names[static_cast<size_t>(a)],
                         matroid.vertex_names[static_cast<size_t>(b)]});
      }
      mat["edges"] = edges;
      break;
    }
  }
  j["matroid"] = mat;
  return j;
}

}  // namespace submax
