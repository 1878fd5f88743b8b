#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bipop/error.hpp"

namespace bipop {

using Edge = std::pair<int, int>;
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

inline VertexSet all_vertices(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

// Iterate the set bits of a vertex set: for_each_vertex(mask, [](int v) {...}).
template <class F>
void for_each_vertex(VertexSet mask, F&& f) {
  while (mask) {
    const int v = std::countr_zero(mask);
    mask &= mask - 1;
    f(v);
  }
}

/// Simple undirected graph on at most 64 vertices. Row v of the adjacency
/// matrix is the neighbour bitset of v. Values are immutable; use
/// GraphBuilder or the with_/without_ helpers to derive new graphs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const noexcept { return n_; }
  int size() const noexcept;  // edge count

  bool has_edge(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }
  VertexSet neighbors(int v) const noexcept { return adj_[v]; }
  int degree(int v) const noexcept { return std::popcount(adj_[v]); }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;  // sorted descending

  /// uv must be a non-edge (with_edge) or an edge (without_edge).
  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept;

 private:
  friend class GraphBuilder;

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

/// Mutable staging area; confined to one thread, then frozen with build().
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  int order() const noexcept { return g_.n_; }
  bool has_edge(int u, int v) const noexcept { return g_.has_edge(u, v); }

  GraphBuilder& add_edge(int u, int v);  // duplicate edges collapse
  GraphBuilder& remove_edge(int u, int v);
  int add_vertex();

  Graph build() const { return g_; }

 private:
  void check_pair(int u, int v) const;

  Graph g_;
};

Graph make_graph(int n, std::span<const Edge> edges);
Graph make_graph(int n, std::initializer_list<Edge> edges);

struct BlockTree {
  std::vector<std::vector<int>> blocks;    // sorted vertex lists, sorted by first vertex
  std::vector<int> cut_vertices;           // ascending
  std::vector<std::vector<int>> incidence;  // block index -> cut vertices inside it
};

struct Bipartition {
  std::vector<int> side;  // 0 or 1 per vertex; component minimum vertex gets side 0
};

bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);  // each sorted, ordered by min vertex
std::optional<Bipartition> bipartition(const Graph& g);
BlockTree block_tree(const Graph& g);  // requires connected g
bool is_2connected(const Graph& g);

/// Blocks of every component as vertex masks (isolated vertices give
/// singleton blocks) plus the mask of all cut vertices. Any graph.
struct BlockMasks {
  std::vector<VertexSet> blocks;
  VertexSet cuts = 0;
};
BlockMasks block_masks(const Graph& g);

/// Disjoint union with joint_g[i] identified with joint_h[i]. The vertices of
/// g keep their labels; non-joint vertices of h follow in ascending order.
Graph k_sum(const Graph& g, const Graph& h, std::span<const int> joint_g,
            std::span<const int> joint_h);

/// Subgraph induced on `vertices`, relabelled so vertices[i] becomes i.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// perm[old] = new.
Graph relabel(const Graph& g, std::span<const int> perm);

bool is_clique(const Graph& g, std::span<const int> vertices);

// ---------------------------------------------------------------------------
// Isomorphism

inline constexpr int kCanonicalMaxOrder = 12;

struct CanonicalForm {
  std::vector<std::uint8_t> code;  // [n, packed upper-triangle bits, column-major]
  std::vector<int> order;          // order[position] = original vertex
};

/// Lexicographically minimal upper-triangle bit string over relabelings that
/// respect the colour-refinement classes. Exact; n <= kCanonicalMaxOrder.
CanonicalForm canonical_form(const Graph& g);
std::vector<std::uint8_t> canonical_code(const Graph& g);

/// Isomorphism invariant, NOT a certificate: degree sequence plus sorted
/// spectrum rounded to the comparison tolerance.
struct Fingerprint {
  std::vector<int> degrees;
  std::vector<double> spectrum;
};
Fingerprint fingerprint(const Graph& g);
bool fingerprints_match(const Fingerprint& a, const Fingerprint& b, double tol = 1e-8);

struct IsoVerdict {
  bool isomorphic = false;
  bool exact = false;  // false when only the fingerprint could be compared
};
IsoVerdict isomorphic(const Graph& a, const Graph& b);

}  // namespace bipop
