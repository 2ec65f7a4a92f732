#pragma once

#include <string>

#include <json.hpp>

#include "oran/feasibility.hpp"
#include "oran/topology.hpp"

namespace oran {

nlohmann::json topology_to_json(const Topology& topo);

/// Throws SchemaError on malformed or inconsistent documents.
Topology topology_from_json(const nlohmann::json& j);

Topology load_topology(const std::string& path);

/// RU -> site map plus the derived per-RU shares and OPEX.
nlohmann::json assignment_to_json(const Topology& topo, const Demands& dem,
                                  const CostModel& cost, const Assignment& asg,
                                  Sharing sharing = Sharing::Proportional);

}  // namespace oran
