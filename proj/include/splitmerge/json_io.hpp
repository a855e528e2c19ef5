#pragma once

#include <json.hpp>

#include "splitmerge/partitions.hpp"

namespace splitmerge {

// Integer partitions serialize to plain JSON arrays of parts.
inline void to_json(nlohmann::json& j, const IntegerPartition& p) {
  j = p.parts();
}

inline void from_json(const nlohmann::json& j, IntegerPartition& p) {
  p = IntegerPartition(j.get<std::vector<int>>());
}

// Continuous partitions carry their dust explicitly.
inline void to_json(nlohmann::json& j, const ContinuousPartition& p) {
  j = nlohmann::json{{"parts", p.parts()}, {"dust", p.dust()}};
}

inline ContinuousPartition continuous_partition_from_json(
    const nlohmann::json& j) {
  if (j.is_array())
    return ContinuousPartition(j.get<std::vector<double>>());
  return ContinuousPartition(j.at("parts").get<std::vector<double>>(),
                             j.value("dust", 0.0));
}

inline void to_json(nlohmann::json& j, const CylinderSet& c) {
  j = nlohmann::json{{"a", c.a()}, {"b", c.b()}};
}

inline CylinderSet cylinder_from_json(const nlohmann::json& j) {
  return CylinderSet(j.at("a").get<std::vector<double>>(),
                     j.at("b").get<std::vector<double>>());
}

}  // namespace splitmerge
