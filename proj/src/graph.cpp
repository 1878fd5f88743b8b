#include "bipop/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace bipop {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::precondition_failed: return "precondition_failed";
    case ErrorCode::cap_exceeded: return "cap_exceeded";
    case ErrorCode::not_converged: return "not_converged";
    case ErrorCode::invariant_violation: return "invariant_violation";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::io_error: return "io_error";
  }
  return "unknown";
}

Graph::Graph(int n) : n_(n) {
  require(n >= 0 && n <= kMaxVertices, ErrorCode::invalid_argument,
          "vertex count " + std::to_string(n) + " outside [0, 64]");
}

int Graph::size() const noexcept {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for_each_vertex(adj_[u] & ~all_vertices(u + 1), [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

Graph Graph::with_edge(int u, int v) const {
  require(u >= 0 && v >= 0 && u < n_ && v < n_ && !has_edge(u, v), ErrorCode::invalid_argument,
          "with_edge: uv is already an edge or out of range");
  return GraphBuilder(*this).add_edge(u, v).build();
}

Graph Graph::without_edge(int u, int v) const {
  require(u >= 0 && v >= 0 && u < n_ && v < n_ && has_edge(u, v), ErrorCode::invalid_argument,
          "without_edge: uv is not an edge");
  return GraphBuilder(*this).remove_edge(u, v).build();
}

bool operator==(const Graph& a, const Graph& b) noexcept {
  if (a.n_ != b.n_) return false;
  return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}
GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

void GraphBuilder::check_pair(int u, int v) const {
  const int n = g_.n_;
  if (u < 0 || u >= n || v < 0 || v >= n) {
    fail(ErrorCode::invalid_argument, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                          ") has a vertex outside [0," + std::to_string(n) + ")");
  }
  if (u == v) fail(ErrorCode::invalid_argument, "loop at vertex " + std::to_string(u));
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  check_pair(u, v);
  g_.adj_[u] |= bit(v);
  g_.adj_[v] |= bit(u);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v) {
  check_pair(u, v);
  g_.adj_[u] &= ~bit(v);
  g_.adj_[v] &= ~bit(u);
  return *this;
}

int GraphBuilder::add_vertex() {
  require(g_.n_ < kMaxVertices, ErrorCode::cap_exceeded, "graph already has 64 vertices");
  return g_.n_++;
}

Graph make_graph(int n, std::span<const Edge> edges) {
  require(n >= 1 && n <= kMaxVertices, ErrorCode::invalid_argument,
          "vertex count " + std::to_string(n) + " outside [1, 64]");
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

Graph make_graph(int n, std::initializer_list<Edge> edges) {
  return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> out;
  VertexSet unseen = all_vertices(g.order());
  while (unseen) {
    const int s = std::countr_zero(unseen);
    VertexSet comp = bit(s);
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
      frontier = next & ~comp;
      comp |= next;
    }
    unseen &= ~comp;
    std::vector<int> vs;
    for_each_vertex(comp, [&](int v) { vs.push_back(v); });
    out.push_back(std::move(vs));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() > 0 && components(g).size() == 1; }

std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.order();
  Bipartition bp;
  bp.side.assign(n, -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (bp.side[s] != -1) continue;
    bp.side[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      bool clash = false;
      for_each_vertex(g.neighbors(v), [&](int u) {
        if (bp.side[u] == -1) {
          bp.side[u] = 1 - bp.side[v];
          queue.push_back(u);
        } else if (bp.side[u] == bp.side[v]) {
          clash = true;
        }
      });
      if (clash) return std::nullopt;
    }
  }
  return bp;
}

namespace {

// Hopcroft-Tarjan biconnected components with an explicit edge stack.
struct BlockFinder {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<Edge> stack;
  std::vector<VertexSet> blocks;
  VertexSet cuts = 0;
  int timer = 0;

  explicit BlockFinder(const Graph& graph)
      : g(graph), disc(graph.order(), -1), low(graph.order(), 0) {}

  void dfs(int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for_each_vertex(g.neighbors(v), [&](int u) {
      if (disc[u] == -1) {
        ++children;
        stack.emplace_back(v, u);
        dfs(u, v);
        low[v] = std::min(low[v], low[u]);
        if (low[u] >= disc[v]) {
          if (parent != -1 || children > 1) cuts |= bit(v);
          VertexSet block = 0;
          while (true) {
            const Edge e = stack.back();
            stack.pop_back();
            block |= bit(e.first) | bit(e.second);
            if (e == Edge{v, u}) break;
          }
          blocks.push_back(block);
        }
      } else if (u != parent && disc[u] < disc[v]) {
        stack.emplace_back(v, u);
        low[v] = std::min(low[v], disc[u]);
      }
    });
  }
};

}  // namespace

BlockTree block_tree(const Graph& g) {
  require(is_connected(g), ErrorCode::precondition_failed, "block_tree: graph is not connected");
  BlockTree bt;
  if (g.order() == 1) {
    bt.blocks.push_back({0});
    bt.incidence.emplace_back();
    return bt;
  }
  BlockFinder f(g);
  f.dfs(0, -1);
  std::vector<std::vector<int>> blocks;
  for (VertexSet b : f.blocks) {
    std::vector<int> vs;
    for_each_vertex(b, [&](int v) { vs.push_back(v); });
    blocks.push_back(std::move(vs));
  }
  std::sort(blocks.begin(), blocks.end());
  bt.blocks = std::move(blocks);
  for_each_vertex(f.cuts, [&](int v) { bt.cut_vertices.push_back(v); });
  for (const auto& b : bt.blocks) {
    std::vector<int> inc;
    for (int v : b) {
      if ((f.cuts >> v) & 1U) inc.push_back(v);
    }
    bt.incidence.push_back(std::move(inc));
  }
  return bt;
}

BlockMasks block_masks(const Graph& g) {
  BlockMasks out;
  BlockFinder f(g);
  for (int v = 0; v < g.order(); ++v) {
    if (f.disc[v] != -1) continue;
    if (g.degree(v) == 0) {
      out.blocks.push_back(bit(v));
      f.disc[v] = f.timer++;
      continue;
    }
    f.dfs(v, -1);
  }
  out.blocks.insert(out.blocks.end(), f.blocks.begin(), f.blocks.end());
  std::sort(out.blocks.begin(), out.blocks.end());
  out.cuts = f.cuts;
  return out;
}

bool is_2connected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  return block_tree(g).cut_vertices.empty();
}

bool is_clique(const Graph& g, std::span<const int> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || !g.has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

Graph k_sum(const Graph& g, const Graph& h, std::span<const int> joint_g,
            std::span<const int> joint_h) {
  require(joint_g.size() == joint_h.size(), ErrorCode::invalid_argument,
          "k_sum: joints have different sizes");
  require(!joint_g.empty(), ErrorCode::invalid_argument, "k_sum: empty joint");
  for (int v : joint_g) {
    require(v >= 0 && v < g.order(), ErrorCode::invalid_argument, "k_sum: joint vertex outside g");
  }
  for (int v : joint_h) {
    require(v >= 0 && v < h.order(), ErrorCode::invalid_argument, "k_sum: joint vertex outside h");
  }
  require(is_clique(g, joint_g), ErrorCode::invalid_argument, "k_sum: joint is not a clique in g");
  require(is_clique(h, joint_h), ErrorCode::invalid_argument, "k_sum: joint is not a clique in h");

  const int k = static_cast<int>(joint_g.size());
  const int n = g.order() + h.order() - k;
  require(n <= kMaxVertices, ErrorCode::cap_exceeded, "k_sum: result exceeds 64 vertices");

  std::vector<int> map_h(h.order(), -1);
  for (int i = 0; i < k; ++i) map_h[joint_h[i]] = joint_g[i];
  int next = g.order();
  for (int v = 0; v < h.order(); ++v) {
    if (map_h[v] == -1) map_h[v] = next++;
  }
  GraphBuilder b(n);
  for (const auto& [u, v] : g.edges()) b.add_edge(u, v);
  for (const auto& [u, v] : h.edges()) b.add_edge(map_h[u], map_h[v]);
  return b.build();
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (g.has_edge(vertices[i], vertices[j])) b.add_edge(i, j);
    }
  }
  return b.build();
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  require(static_cast<int>(perm.size()) == g.order(), ErrorCode::invalid_argument,
          "relabel: permutation has wrong length");
  VertexSet seen = 0;
  for (int p : perm) {
    require(p >= 0 && p < g.order() && !((seen >> p) & 1U), ErrorCode::invalid_argument,
            "relabel: not a permutation");
    seen |= bit(p);
  }
  GraphBuilder b(g.order());
  for (const auto& [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return b.build();
}

}  // namespace bipop
