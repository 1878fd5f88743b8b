#include "bipop/config.hpp"

#include <fstream>
#include <sstream>
#include <thread>

namespace bipop {

namespace {

template <class T>
void read_field(const nlohmann::json& obj, const char* key, T& out, const std::string& ctx) {
  if (!obj.contains(key)) return;
  const auto& v = obj.at(key);
  if constexpr (std::is_floating_point_v<T>) {
    if (!v.is_number()) fail(ErrorCode::parse_error, "config: " + ctx + key + " must be a number");
    out = v.get<T>();
    if (!(out > 0)) fail(ErrorCode::parse_error, "config: " + ctx + key + " must be positive");
  } else {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      fail(ErrorCode::parse_error, "config: " + ctx + key + " must be a nonnegative integer");
    }
    out = v.get<T>();
  }
}

void reject_unknown(const nlohmann::json& obj, std::initializer_list<const char*> keys,
                    const std::string& ctx) {
  if (!obj.is_object()) fail(ErrorCode::parse_error, "config: " + ctx + " must be an object");
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) fail(ErrorCode::parse_error, "config: unknown key " + ctx + k);
  }
}

}  // namespace

Config config_from_json(const nlohmann::json& j) {
  Config c;
  reject_unknown(j, {"tolerances", "caps", "threads"}, "");
  if (j.contains("tolerances")) {
    const auto& t = j.at("tolerances");
    reject_unknown(t, {"residual", "slack", "strict_margin", "certificate", "max_sweeps",
                       "max_iterations"},
                   "tolerances.");
    read_field(t, "residual", c.tolerances.residual, "tolerances.");
    read_field(t, "slack", c.tolerances.slack, "tolerances.");
    read_field(t, "strict_margin", c.tolerances.strict_margin, "tolerances.");
    read_field(t, "certificate", c.tolerances.certificate, "tolerances.");
    read_field(t, "max_sweeps", c.tolerances.max_sweeps, "tolerances.");
    read_field(t, "max_iterations", c.tolerances.max_iterations, "tolerances.");
  }
  if (j.contains("caps")) {
    const auto& k = j.at("caps");
    reject_unknown(k, {"orderly_max_order", "all_graphs_max_order", "dissection_max_order",
                       "structured_max_order", "floor_max_order", "max_results"},
                   "caps.");
    read_field(k, "orderly_max_order", c.caps.orderly_max_order, "caps.");
    read_field(k, "all_graphs_max_order", c.caps.all_graphs_max_order, "caps.");
    read_field(k, "dissection_max_order", c.caps.dissection_max_order, "caps.");
    read_field(k, "structured_max_order", c.caps.structured_max_order, "caps.");
    read_field(k, "floor_max_order", c.caps.floor_max_order, "caps.");
    read_field(k, "max_results", c.caps.max_results, "caps.");
  }
  read_field(j, "threads", c.threads, "");
  return c;
}

Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io_error, "config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return config_from_json(nlohmann::json::parse(ss.str()));
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::parse_error, std::string("config: ") + ex.what());
  }
}

nlohmann::json config_to_json(const Config& c) {
  const auto& t = c.tolerances;
  const auto& k = c.caps;
  return {{"tolerances",
           {{"residual", t.residual},
            {"slack", t.slack},
            {"strict_margin", t.strict_margin},
            {"certificate", t.certificate},
            {"max_sweeps", t.max_sweeps},
            {"max_iterations", t.max_iterations}}},
          {"caps",
           {{"orderly_max_order", k.orderly_max_order},
            {"all_graphs_max_order", k.all_graphs_max_order},
            {"dissection_max_order", k.dissection_max_order},
            {"structured_max_order", k.structured_max_order},
            {"floor_max_order", k.floor_max_order},
            {"max_results", k.max_results}}},
          {"threads", c.threads}};
}

int resolve_threads(const Config& c) {
  if (c.threads > 0) return c.threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace bipop
