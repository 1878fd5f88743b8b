#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bipop/graph.hpp"

namespace bipop {

/// Outerplane embedding of a 2-connected outerplanar graph. `outer` is the
/// unique Hamilton cycle, normalized to start at its lowest vertex with the
/// smaller cycle neighbour second. `chords` holds the remaining edges as
/// (u, v) with u < v, sorted. `faces` holds inner faces only; the outer face is
/// added by face_count().
struct OpEmbedding {
  std::vector<int> outer;
  std::vector<Edge> chords;
  std::vector<std::vector<int>> faces;

  int order() const { return static_cast<int>(outer.size()); }
  int size() const { return order() + static_cast<int>(chords.size()); }
  int face_count() const { return static_cast<int>(faces.size()) + 1; }
};

/// Hamilton cycle of the 2-connected subgraph induced on `block`, found by
/// degree-2 peeling. Absent when that subgraph is not outerplanar. The block
/// must induce a 2-connected graph on at least 3 vertices.
std::optional<std::vector<int>> outer_cycle(const Graph& g, VertexSet block);
std::optional<std::vector<int>> outer_cycle(const Graph& g);

/// Chords given as index pairs on a polygon 0..n-1.
bool chords_noncrossing(int n, std::span<const Edge> chords);

/// Inner faces of a polygon 0..n-1 dissected by non-crossing chords, as index
/// cycles. Exactly chords.size() + 1 faces.
std::vector<std::vector<int>> polygon_faces(int n, std::span<const Edge> chords);

OpEmbedding embed(const Graph& g);
std::vector<std::vector<int>> inner_faces(const OpEmbedding& e);
bool all_faces_quad(const OpEmbedding& e);
bool euler_check(const OpEmbedding& e);  // n + faces (outer included) - m == 2

/// Exact isomorphism code of a 2-connected outerplanar graph: minimum over the
/// 2n dihedral images of the outer cycle of the sorted chord index list.
std::vector<std::uint8_t> outerplanar_code(const Graph& g);
std::vector<std::uint8_t> dissection_code(int n, std::span<const Edge> chords);

}  // namespace bipop
