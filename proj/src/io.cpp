#include "bipop/io.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace bipop {

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    fail(ErrorCode::parse_error, "graph JSON needs keys \"n\" and \"edges\"");
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "n" && key != "edges") fail(ErrorCode::parse_error, "graph JSON: unknown key " + key);
  }
  if (!j["n"].is_number_integer()) fail(ErrorCode::parse_error, "graph JSON: n must be an integer");
  if (!j["edges"].is_array()) fail(ErrorCode::parse_error, "graph JSON: edges must be an array");
  const int n = j["n"].get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      fail(ErrorCode::parse_error, "graph JSON: each edge must be a pair of integers");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return make_graph(n, edges);
}

std::string graph_to_json_string(const Graph& g) { return graph_to_json(g).dump(); }

Graph graph_from_json_string(const std::string& s) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(s);
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::parse_error, std::string("graph JSON: ") + ex.what());
  }
  return graph_from_json(j);
}

std::string graph_to_dot(const Graph& g, const std::optional<OpEmbedding>& e) {
  std::ostringstream out;
  out << "graph G {\n";
  if (e) {
    const int k = e->order();
    out << "  layout=neato;\n";
    for (int i = 0; i < k; ++i) {
      const double angle = 2.0 * std::numbers::pi * i / k;
      out << "  " << e->outer[i] << " [pos=\"" << std::round(1000 * std::cos(angle)) / 100 << ","
          << std::round(1000 * std::sin(angle)) / 100 << "!\"];\n";
    }
  } else {
    for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string graph_to_graph6(const Graph& g) {
  const int n = g.order();
  require(n <= kGraph6MaxOrder, ErrorCode::cap_exceeded, "graph6: order exceeds 62");
  std::string s(1, static_cast<char>(63 + n));
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        s.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  }
  if (filled) s.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return s;
}

Graph graph_from_graph6(const std::string& raw) {
  std::string s = raw;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) fail(ErrorCode::parse_error, "graph6: empty string");
  const int n = static_cast<unsigned char>(s[0]) - 63;
  if (n < 1 || n > kGraph6MaxOrder) fail(ErrorCode::parse_error, "graph6: order outside [1, 62]");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (s.size() != 1 + (bits + 5) / 6) fail(ErrorCode::parse_error, "graph6: wrong length");
  GraphBuilder b(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(s[1 + k / 6]) - 63;
      if (byte < 0 || byte > 63) fail(ErrorCode::parse_error, "graph6: byte out of range");
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  return b.build();
}

}  // namespace bipop
