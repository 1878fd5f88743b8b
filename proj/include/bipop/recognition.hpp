#pragma once

#include <map>
#include <vector>

#include "bipop/graph.hpp"

namespace bipop {

enum class MinorTarget { K4, K23 };

inline constexpr int kMinorMaxOrder = 12;

/// Contraction search with degree-based stripping; n <= kMinorMaxOrder.
bool has_minor(const Graph& g, MinorTarget target);

bool is_outerplanar_minor(const Graph& g);    // n <= kMinorMaxOrder
bool is_outerplanar_peeling(const Graph& g);  // any n, block by block

/// Runs both recognizers when n <= kMinorMaxOrder and throws
/// invariant_violation if they disagree.
bool is_outerplanar(const Graph& g);

bool is_bipartite(const Graph& g);
bool is_bip_outerplanar(const Graph& g);  // peeling route

/// Add-every-non-edge oracle. Requires g bipartite and outerplanar.
bool is_maximal_bip_outerplanar(const Graph& g);

/// Every inner face of the embedding is a 4-cycle. Requires g 2-connected,
/// bipartite and outerplanar.
bool is_maximal_2conn_structural(const Graph& g);

/// Requires uv to be an edge of an outerplanar g.
bool ebo_adjacent(const Graph& g, int u, int v);

/// All EBO-adjacent pairs (u < v) of an outerplanar graph, sorted.
std::vector<Edge> ebo_edges(const Graph& g);

enum class StructureKind { star, single_block, composite };
const char* to_string(StructureKind k) noexcept;

struct MaximalStructure {
  StructureKind kind = StructureKind::star;
  std::vector<std::vector<int>> blocks;  // vertex lists of the 2-connected blocks
  std::vector<int> cut_vertices;         // cut vertices of the pendant-free core
  std::map<int, int> pendant_roots;      // root -> number of pendant edges
  std::vector<Edge> ebo_pairs;           // EBO-adjacent pairs of the host
};

/// Decomposition of any bipartite outerplanar graph against the structural
/// characterization, with each clause evaluated separately.
struct StructureCheck {
  bool is_star = false;
  bool core_connected = false;   // removing degree-1 vertices leaves a connected graph
  bool blocks_ok = false;        // every core block is 2-connected with quadrilateral faces
  bool cuts_nebo = false;        // no two cut vertices EBO-adjacent
  bool roots_off_cuts = false;   // no pendant root EBO-adjacent to a cut vertex
  bool roots_nebo = false;       // pendant roots pairwise NEBO-adjacent
  MaximalStructure structure;

  bool predicts_maximal() const {
    return is_star || (core_connected && blocks_ok && cuts_nebo && roots_off_cuts && roots_nebo);
  }
};
StructureCheck analyze_structure(const Graph& g);

/// Requires is_maximal_bip_outerplanar(g). A clause failing on such an input
/// raises invariant_violation.
MaximalStructure structural_decompose(const Graph& g);

bool is_star(const Graph& g);

}  // namespace bipop
