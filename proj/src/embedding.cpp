#include "bipop/embedding.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace bipop {

namespace {

struct Peel {
  int v, a, b;
};

std::vector<int> normalize_cycle(std::vector<int> cyc) {
  const auto lo = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), lo, cyc.end());
  if (cyc.size() > 2 && cyc.back() < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
  return cyc;
}

}  // namespace

std::optional<std::vector<int>> outer_cycle(const Graph& g, VertexSet block) {
  const int k = std::popcount(block);
  if (k < 3) return std::nullopt;

  std::array<VertexSet, kMaxVertices> adj{};
  for_each_vertex(block, [&](int v) { adj[v] = g.neighbors(v) & block; });

  // Suppress degree-2 vertices down to a triangle. Each step keeps the graph
  // 2-connected, and outerplanar when the input was.
  std::vector<Peel> peels;
  VertexSet alive = block;
  while (std::popcount(alive) > 3) {
    int v = -1;
    for_each_vertex(alive, [&](int w) {
      if (v == -1 && std::popcount(adj[w]) == 2) v = w;
    });
    if (v == -1) return std::nullopt;
    const int a = std::countr_zero(adj[v]);
    const int b = 63 - std::countl_zero(adj[v]);
    peels.push_back({v, a, b});
    adj[a] = (adj[a] & ~bit(v)) | bit(b);
    adj[b] = (adj[b] & ~bit(v)) | bit(a);
    adj[v] = 0;
    alive &= ~bit(v);
  }

  std::vector<int> cyc;
  for_each_vertex(alive, [&](int w) { cyc.push_back(w); });
  for (auto it = peels.rbegin(); it != peels.rend(); ++it) {
    const auto pa = std::find(cyc.begin(), cyc.end(), it->a) - cyc.begin();
    const auto pb = std::find(cyc.begin(), cyc.end(), it->b) - cyc.begin();
    const auto len = static_cast<std::ptrdiff_t>(cyc.size());
    if ((pa + 1) % len == pb) {
      cyc.insert(cyc.begin() + pa + 1, it->v);
    } else if ((pb + 1) % len == pa) {
      cyc.insert(cyc.begin() + pb + 1, it->v);
    } else {
      return std::nullopt;
    }
  }

  for (int i = 0; i < k; ++i) {
    if (!g.has_edge(cyc[i], cyc[(i + 1) % k])) return std::nullopt;
  }
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < k; ++i) pos[cyc[i]] = i;
  std::vector<Edge> chords;
  for (int i = 0; i < k; ++i) {
    for_each_vertex(g.neighbors(cyc[i]) & block, [&](int w) {
      const int j = pos[w];
      if (j > i + 1 && !(i == 0 && j == k - 1)) chords.emplace_back(i, j);
    });
  }
  if (!chords_noncrossing(k, chords)) return std::nullopt;
  return normalize_cycle(std::move(cyc));
}

std::optional<std::vector<int>> outer_cycle(const Graph& g) {
  return outer_cycle(g, all_vertices(g.order()));
}

bool chords_noncrossing(int n, std::span<const Edge> chords) {
  for (std::size_t x = 0; x < chords.size(); ++x) {
    auto [a, b] = chords[x];
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= n) return false;
    for (std::size_t y = x + 1; y < chords.size(); ++y) {
      auto [c, d] = chords[y];
      if (c > d) std::swap(c, d);
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> polygon_faces(int n, std::span<const Edge> chords) {
  // partners[i]: chord endpoints j > i, searched largest first
  std::vector<std::vector<int>> partners(n);
  for (auto [a, b] : chords) {
    if (a > b) std::swap(a, b);
    partners[a].push_back(b);
  }
  for (auto& p : partners) std::sort(p.begin(), p.end(), std::greater<>());

  std::vector<std::vector<int>> faces;
  std::vector<Edge> todo{{0, n - 1}};
  while (!todo.empty()) {
    const auto [lo, hi] = todo.back();
    todo.pop_back();
    std::vector<int> face{lo};
    int k = lo;
    while (k != hi) {
      int next = k + 1;
      for (int p : partners[k]) {
        if (p <= hi && !(k == lo && p == hi)) {
          next = p;
          break;
        }
      }
      if (next != k + 1) todo.emplace_back(k, next);
      k = next;
      face.push_back(k);
    }
    faces.push_back(std::move(face));
  }
  std::sort(faces.begin(), faces.end());
  return faces;
}

OpEmbedding embed(const Graph& g) {
  require(g.order() >= 3, ErrorCode::precondition_failed, "embed: needs at least 3 vertices");
  require(is_2connected(g), ErrorCode::precondition_failed, "embed: graph is not 2-connected");
  auto cyc = outer_cycle(g);
  require(cyc.has_value(), ErrorCode::precondition_failed, "embed: graph is not outerplanar");

  OpEmbedding e;
  e.outer = std::move(*cyc);
  const int n = g.order();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[e.outer[i]] = i;
  std::vector<Edge> index_chords;
  for (const auto& [u, v] : g.edges()) {
    const int d = std::abs(pos[u] - pos[v]);
    if (d != 1 && d != n - 1) {
      e.chords.emplace_back(u, v);
      index_chords.emplace_back(std::min(pos[u], pos[v]), std::max(pos[u], pos[v]));
    }
  }
  for (auto& f : polygon_faces(n, index_chords)) {
    for (int& i : f) i = e.outer[i];
    e.faces.push_back(std::move(f));
  }
  return e;
}

std::vector<std::vector<int>> inner_faces(const OpEmbedding& e) { return e.faces; }

bool all_faces_quad(const OpEmbedding& e) {
  return std::all_of(e.faces.begin(), e.faces.end(),
                     [](const std::vector<int>& f) { return f.size() == 4; });
}

bool euler_check(const OpEmbedding& e) { return e.order() + e.face_count() - e.size() == 2; }

std::vector<std::uint8_t> dissection_code(int n, std::span<const Edge> chords) {
  std::vector<Edge> best;
  bool have = false;
  std::vector<Edge> img(chords.size());
  for (int refl = 0; refl < 2; ++refl) {
    for (int r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < chords.size(); ++c) {
        auto map = [&](int i) { return refl ? ((r - i) % n + n) % n : (i + r) % n; };
        int a = map(chords[c].first), b = map(chords[c].second);
        if (a > b) std::swap(a, b);
        img[c] = {a, b};
      }
      std::sort(img.begin(), img.end());
      if (!have || img < best) {
        best = img;
        have = true;
      }
    }
  }
  std::vector<std::uint8_t> code{static_cast<std::uint8_t>(n)};
  for (const auto& [a, b] : best) {
    code.push_back(static_cast<std::uint8_t>(a));
    code.push_back(static_cast<std::uint8_t>(b));
  }
  return code;
}

std::vector<std::uint8_t> outerplanar_code(const Graph& g) {
  require(is_2connected(g), ErrorCode::precondition_failed,
          "outerplanar_code: graph is not 2-connected");
  auto cyc = outer_cycle(g);
  require(cyc.has_value(), ErrorCode::precondition_failed,
          "outerplanar_code: graph is not outerplanar");
  const int n = g.order();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[(*cyc)[i]] = i;
  std::vector<Edge> chords;
  for (const auto& [u, v] : g.edges()) {
    const int d = std::abs(pos[u] - pos[v]);
    if (d != 1 && d != n - 1) chords.emplace_back(pos[u], pos[v]);
  }
  return dissection_code(n, chords);
}

}  // namespace bipop
