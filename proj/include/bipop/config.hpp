#pragma once

#include <cstddef>
#include <string>

#include "json.hpp"

#include "bipop/spectra.hpp"

namespace bipop {

/// Hard defaults; exceeding any cap needs an explicit override.
struct Caps {
  int orderly_max_order = 10;      // edge-extension generation (outerplanar families)
  int all_graphs_max_order = 7;    // unrestricted families
  int dissection_max_order = 20;   // quadrangulation census
  int structured_max_order = 12;   // composition generator for maximal graphs
  int floor_max_order = kFloorMaxOrder;
  std::size_t max_results = 5000000;
};

struct Config {
  Tolerances tolerances;
  Caps caps;
  int threads = 0;  // 0: hardware concurrency
};

/// Keys: "tolerances" {residual, slack, strict_margin, certificate,
/// max_sweeps, max_iterations}, "caps" {orderly_max_order,
/// all_graphs_max_order, dissection_max_order, structured_max_order,
/// floor_max_order, max_results}, "threads". Unknown keys are rejected.
Config config_from_json(const nlohmann::json& j);
Config load_config_file(const std::string& path);
nlohmann::json config_to_json(const Config& c);

int resolve_threads(const Config& c);

}  // namespace bipop
