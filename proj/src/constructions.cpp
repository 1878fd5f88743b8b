#include "bipop/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "bipop/embedding.hpp"

namespace bipop {

namespace {

// Figure vertex numbering starts at 1.
Graph from_one_based(int n, std::initializer_list<Edge> edges) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u - 1, v - 1);
  return b.build();
}

void check_order(int n, int lo, const char* what) {
  require(n >= lo && n <= kMaxVertices, ErrorCode::invalid_argument,
          std::string(what) + ": order " + std::to_string(n) + " outside [" +
              std::to_string(lo) + ", 64]");
}

}  // namespace

Graph star(int n) {
  check_order(n, 1, "star");
  GraphBuilder b(n);
  for (int v = 1; v < n; ++v) b.add_edge(0, v);
  return b.build();
}

Graph cycle(int n) {
  check_order(n, 3, "cycle");
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

Graph path(int n) {
  check_order(n, 1, "path");
  GraphBuilder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

Graph complete(int n) {
  check_order(n, 1, "complete");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return b.build();
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, ErrorCode::invalid_argument, "complete_bipartite: empty part");
  check_order(a + b, 2, "complete_bipartite");
  GraphBuilder g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  }
  return g.build();
}

Graph ladder(int n) {
  check_order(n, 4, "ladder");
  require(n % 2 == 0, ErrorCode::invalid_argument, "ladder: order must be even");
  const int k = n / 2;
  GraphBuilder b(n);
  for (int i = 0; i < k; ++i) {
    b.add_edge(i, k + i);
    if (i + 1 < k) {
      b.add_edge(i, i + 1);
      b.add_edge(k + i, k + i + 1);
    }
  }
  return b.build();
}

Graph quad_book(int s) {
  require(s >= 1 && 2 * s + 2 <= kMaxVertices, ErrorCode::invalid_argument,
          "quad_book: s outside [1, 31]");
  GraphBuilder b(2 * s + 2);
  b.add_edge(0, 1);
  for (int j = 1; j <= s; ++j) {
    b.add_edge(1, 2 * j);
    b.add_edge(2 * j, 2 * j + 1);
    b.add_edge(2 * j + 1, 0);
  }
  return b.build();
}

Graph g1(int n, int s, bool unchecked) {
  if (!unchecked) {
    require(s >= 1 && s <= 4, ErrorCode::invalid_argument, "g1: s outside [1, 4]");
  }
  require(s >= 1, ErrorCode::invalid_argument, "g1: s must be positive");
  require(n >= 2 * s + 2, ErrorCode::invalid_argument, "g1: needs n >= 2s+2");
  check_order(n, 4, "g1");
  GraphBuilder b(n);
  const Graph book = quad_book(s);
  for (const auto& [u, v] : book.edges()) b.add_edge(u, v);
  for (int i = 2 * s + 2; i < n; ++i) b.add_edge(0, i);
  return b.build();
}

Graph g2(int n, int s, bool unchecked) {
  if (!unchecked) {
    require(s >= 1 && s <= 8, ErrorCode::invalid_argument, "g2: s outside [1, 8]");
  }
  require(s >= 1, ErrorCode::invalid_argument, "g2: s must be positive");
  require(n >= s + 2, ErrorCode::invalid_argument, "g2: needs n >= s+2");
  check_order(n, 3, "g2");
  GraphBuilder b(n);
  for (int i = 2; i <= s + 1; ++i) {
    b.add_edge(0, i);
    b.add_edge(i, 1);
  }
  for (int i = s + 2; i < n; ++i) b.add_edge(0, i);
  return b.build();
}

Graph h_case(int i) {
  switch (i) {
    case 1:
      return from_one_based(10, {{1, 3}, {3, 5}, {5, 7}, {7, 9}, {2, 4}, {4, 6}, {6, 8},
                                 {8, 10}, {1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}});
    case 2:
      return from_one_based(10, {{1, 2}, {1, 3}, {3, 5}, {5, 7}, {2, 4}, {4, 6}, {6, 8},
                                 {7, 8}, {3, 4}, {5, 6}, {9, 10}, {6, 9}, {8, 10}});
    case 3:
      return from_one_based(10, {{1, 2}, {1, 3}, {3, 5}, {5, 7}, {2, 4}, {4, 6}, {6, 8},
                                 {7, 8}, {3, 4}, {5, 6}, {9, 10}, {4, 9}, {6, 10}});
    case 4:
      return from_one_based(10, {{1, 3}, {3, 5}, {2, 4}, {4, 6}, {1, 2}, {5, 6}, {3, 4},
                                 {8, 9}, {9, 10}, {4, 8}, {6, 7}, {7, 10}, {6, 9}});
    case 5:
      return from_one_based(10, {{1, 2}, {5, 6}, {3, 4}, {8, 7}, {4, 8}, {6, 7}, {2, 4},
                                 {4, 6}, {4, 10}, {10, 9}, {8, 9}, {1, 3}, {3, 5}});
    default:
      fail(ErrorCode::invalid_argument, "h_case: index " + std::to_string(i) + " outside [1, 5]");
  }
}

Graph q_graph() {
  return from_one_based(8, {{3, 4}, {4, 1}, {1, 2}, {2, 3}, {2, 5}, {5, 6}, {6, 1}, {1, 8},
                            {8, 7}, {7, 2}});
}

Graph attach_pendants(const Graph& g, int root, int eps) {
  require(root >= 0 && root < g.order(), ErrorCode::invalid_argument,
          "attach_pendants: root outside graph");
  require(eps >= 0, ErrorCode::invalid_argument, "attach_pendants: negative count");
  require(g.order() + eps <= kMaxVertices, ErrorCode::cap_exceeded,
          "attach_pendants: result exceeds 64 vertices");
  GraphBuilder b(g);
  for (int i = 0; i < eps; ++i) b.add_edge(root, b.add_vertex());
  return b.build();
}

Graph edge_rotation(const Graph& g, int u, int v, std::span<const int> targets) {
  const int n = g.order();
  require(u >= 0 && u < n && v >= 0 && v < n && u != v, ErrorCode::invalid_argument,
          "edge_rotation: bad u or v");
  require(is_connected(g), ErrorCode::precondition_failed, "edge_rotation: graph not connected");
  const VertexSet allowed = g.neighbors(v) & ~g.neighbors(u) & ~bit(u);
  VertexSet seen = 0;
  GraphBuilder b(g);
  for (int t : targets) {
    require(t >= 0 && t < n && ((allowed >> t) & 1U) && !((seen >> t) & 1U),
            ErrorCode::invalid_argument,
            "edge_rotation: target " + std::to_string(t) + " not in N(v) \\ N[u]");
    seen |= bit(t);
    b.remove_edge(v, t);
    b.add_edge(u, t);
  }
  Graph out = b.build();
  require(is_connected(out), ErrorCode::precondition_failed,
          "edge_rotation: rotation disconnects the graph");
  return out;
}

Graph surgery(const Graph& g, std::span<const Edge> remove, std::span<const Edge> add) {
  GraphBuilder b(g);
  for (const auto& [x, y] : remove) {
    require(x >= 0 && y >= 0 && x < g.order() && y < g.order() && b.has_edge(x, y),
            ErrorCode::invalid_argument, "surgery: removed edge is absent");
    b.remove_edge(x, y);
  }
  for (const auto& [x, y] : add) {
    require(x >= 0 && y >= 0 && x < g.order() && y < g.order() && x != y && !b.has_edge(x, y),
            ErrorCode::invalid_argument, "surgery: added edge already present");
    b.add_edge(x, y);
  }
  return b.build();
}

Graph quadrangulation(int outer_n, std::span<const Edge> chord_plan) {
  require(outer_n >= 4 && outer_n <= kMaxVertices && outer_n % 2 == 0,
          ErrorCode::invalid_argument, "quadrangulation: outer order must be even in [4, 64]");
  GraphBuilder b(outer_n);
  for (int i = 0; i < outer_n; ++i) b.add_edge(i, (i + 1) % outer_n);
  for (const auto& [x, y] : chord_plan) {
    const int d = std::abs(x - y);
    require(x >= 0 && y >= 0 && x < outer_n && y < outer_n && d > 1 && d < outer_n - 1,
            ErrorCode::invalid_argument, "quadrangulation: chord is not a diagonal");
    require(!b.has_edge(x, y), ErrorCode::invalid_argument, "quadrangulation: repeated chord");
    b.add_edge(x, y);
  }
  require(chords_noncrossing(outer_n, chord_plan), ErrorCode::invalid_argument,
          "quadrangulation: chords cross");
  for (const auto& f : polygon_faces(outer_n, chord_plan)) {
    require(f.size() == 4, ErrorCode::invalid_argument,
            "quadrangulation: plan leaves a face of length " + std::to_string(f.size()));
  }
  return b.build();
}

std::vector<Edge> fan_plan(int outer_n) {
  std::vector<Edge> plan;
  for (int j = 3; j <= outer_n - 3; j += 2) plan.emplace_back(0, j);
  return plan;
}

}  // namespace bipop
