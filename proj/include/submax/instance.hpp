#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "submax/matroids.hpp"

namespace submax {

// A problem instance as loaded from JSON: named elements, one objective
// family, one matroid family. Element ids are positions in `elements`.
struct ObjectiveSpec {
  enum class Type { Coverage, Cut, Modular };
  Type type = Type::Modular;

  // coverage
  std::vector<std::string> item_names;
  std::vector<long> item_weights;
  std::vector<SubsetMask> covers;  // per element, over item indices

  // cut
  std::vector<CutEdge> edges;

  // modular
  std::vector<long> weights;
};

struct MatroidSpec {
  enum class Type { Uniform, Partition, Graphic };
  Type type = Type::Uniform;

  int k = 0;                                        // uniform
  std::vector<std::pair<SubsetMask, int>> parts;    // partition
  std::vector<std::string> vertex_names;            // graphic
  std::vector<std::pair<int, int>> edge_endpoints;  // graphic, per element
};

struct Instance {
  std::string name;
  std::vector<std::string> elements;
  ObjectiveSpec objective;
  MatroidSpec matroid;

  int n() const { return static_cast<int>(elements.size()); }
  bool monotone() const { return objective.type != ObjectiveSpec::Type::Cut; }

  ValueOracle build_objective() const;
  IndependenceOracle build_matroid() const;

  int element_id(const std::string& name) const;  // SchemaError if unknown
  std::vector<std::string> names_of(const SubsetMask& s) const;

  static Instance from_json(const nlohmann::json& j);
  static Instance from_string(const std::string& text);
  static Instance from_file(const std::string& path);
  nlohmann::json to_json() const;
};

}  // namespace submax
