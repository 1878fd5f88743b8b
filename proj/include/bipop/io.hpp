#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bipop/embedding.hpp"
#include "bipop/graph.hpp"

namespace bipop {

/// {"n": int, "edges": [[u, v], ...]}, 0-based, edges sorted with u < v.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Compact single-line form; graph_from_json_string(graph_to_json_string(g)) == g
/// and the string is a fixed point of the round trip.
std::string graph_to_json_string(const Graph& g);
Graph graph_from_json_string(const std::string& s);

/// Graphviz DOT. With an embedding, vertices get polygon position hints.
std::string graph_to_dot(const Graph& g, const std::optional<OpEmbedding>& e = std::nullopt);

/// graph6: byte 63+n, then the upper triangle column by column (x(0,1),
/// x(0,2), x(1,2), ...) packed 6 bits per byte, each byte offset by 63.
inline constexpr int kGraph6MaxOrder = 62;
std::string graph_to_graph6(const Graph& g);
Graph graph_from_graph6(const std::string& s);

}  // namespace bipop
