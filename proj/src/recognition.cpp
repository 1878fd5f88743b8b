#include "bipop/recognition.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "bipop/embedding.hpp"

namespace bipop {

namespace {

Graph delete_vertex(const Graph& g, int v) {
  GraphBuilder b(g.order() - 1);
  auto map = [v](int w) { return w < v ? w : w - 1; };
  for (const auto& [x, y] : g.edges()) {
    if (x != v && y != v) b.add_edge(map(x), map(y));
  }
  return b.build();
}

// Merge v into u.
Graph contract(const Graph& g, int u, int v) {
  GraphBuilder b(g);
  for_each_vertex(g.neighbors(v) & ~bit(u), [&](int w) { b.add_edge(u, w); });
  return delete_vertex(b.build(), v);
}

// Both targets have maximum degree 3, so minor containment equals topological
// containment and vertices of degree <= 1 can always be deleted. K4 has no
// degree-2 branch vertices, so for it degree-2 vertices are suppressed too;
// the middle vertices of K2,3 have degree 2, so for K2,3 they stay.
Graph reduce(Graph g, bool suppress) {
  bool changed = true;
  while (changed && g.order() > 0) {
    changed = false;
    for (int v = 0; v < g.order(); ++v) {
      const int d = g.degree(v);
      if (d <= 1) {
        g = delete_vertex(g, v);
        changed = true;
        break;
      }
      if (d == 2 && suppress) {
        const int a = std::countr_zero(g.neighbors(v));
        const int b = 63 - std::countl_zero(g.neighbors(v));
        g = delete_vertex(g.has_edge(a, b) ? g : g.with_edge(a, b), v);
        changed = true;
        break;
      }
    }
  }
  return g;
}

bool has_k4_subgraph(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    const VertexSet na = g.neighbors(a) & ~all_vertices(a + 1);
    bool found = false;
    for_each_vertex(na, [&](int b) {
      const VertexSet nab = na & g.neighbors(b) & ~all_vertices(b + 1);
      for_each_vertex(nab, [&](int c) {
        if (nab & g.neighbors(c)) found = true;
      });
    });
    if (found) return true;
  }
  return false;
}

bool has_k23_subgraph(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (std::popcount(g.neighbors(a) & g.neighbors(b)) >= 3) return true;
    }
  }
  return false;
}

struct MinorSearch {
  MinorTarget target;
  std::unordered_set<std::string>& failed;

  bool run(Graph g) {
    g = reduce(std::move(g), target == MinorTarget::K4);
    const int n = g.order();
    if (n < (target == MinorTarget::K4 ? 4 : 5)) return false;
    if (target == MinorTarget::K4 ? has_k4_subgraph(g) : has_k23_subgraph(g)) return true;

    const auto code = canonical_code(g);
    std::string key(code.begin(), code.end());
    if (failed.count(key)) return false;

    auto edges = g.edges();
    std::stable_sort(edges.begin(), edges.end(), [&](const Edge& x, const Edge& y) {
      return g.degree(x.first) + g.degree(x.second) < g.degree(y.first) + g.degree(y.second);
    });
    for (const auto& [u, v] : edges) {
      if (run(contract(g, u, v))) return true;
    }
    if (failed.size() > 200000) failed.clear();
    failed.insert(std::move(key));
    return false;
  }
};

std::unordered_set<std::string>& minor_memo(MinorTarget t) {
  thread_local std::unordered_set<std::string> k4, k23;
  return t == MinorTarget::K4 ? k4 : k23;
}

std::vector<int> mask_to_list(VertexSet m) {
  std::vector<int> out;
  for_each_vertex(m, [&](int v) { out.push_back(v); });
  return out;
}

}  // namespace

bool has_minor(const Graph& g, MinorTarget target) {
  require(g.order() <= kMinorMaxOrder, ErrorCode::cap_exceeded,
          "has_minor: order " + std::to_string(g.order()) + " exceeds " +
              std::to_string(kMinorMaxOrder));
  MinorSearch s{target, minor_memo(target)};
  return s.run(g);
}

bool is_outerplanar_minor(const Graph& g) {
  return !has_minor(g, MinorTarget::K4) && !has_minor(g, MinorTarget::K23);
}

bool is_outerplanar_peeling(const Graph& g) {
  if (g.size() > 2 * g.order() - 3 && g.order() >= 2) return false;
  for (VertexSet b : block_masks(g).blocks) {
    if (std::popcount(b) >= 3 && !outer_cycle(g, b)) return false;
  }
  return true;
}

bool is_outerplanar(const Graph& g) {
  const bool peel = is_outerplanar_peeling(g);
  if (g.order() <= kMinorMaxOrder) {
    const bool minor = is_outerplanar_minor(g);
    require(peel == minor, ErrorCode::invariant_violation,
            "outerplanarity recognizers disagree (peeling " + std::to_string(peel) +
                ", minor " + std::to_string(minor) + ")");
  }
  return peel;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

bool is_bip_outerplanar(const Graph& g) { return is_bipartite(g) && is_outerplanar_peeling(g); }

bool is_maximal_bip_outerplanar(const Graph& g) {
  const auto bp = bipartition(g);
  require(bp.has_value(), ErrorCode::precondition_failed,
          "is_maximal_bip_outerplanar: graph is not bipartite");
  require(is_outerplanar_peeling(g), ErrorCode::precondition_failed,
          "is_maximal_bip_outerplanar: graph is not outerplanar");
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      const Graph h = g.with_edge(u, v);
      // same side of one component closes an odd cycle; otherwise recheck
      if (bp->side[u] == bp->side[v] && !is_bipartite(h)) continue;
      if (is_outerplanar_peeling(h)) return false;
    }
  }
  return true;
}

bool is_maximal_2conn_structural(const Graph& g) {
  require(is_2connected(g), ErrorCode::precondition_failed,
          "is_maximal_2conn_structural: graph is not 2-connected");
  require(is_bipartite(g), ErrorCode::precondition_failed,
          "is_maximal_2conn_structural: graph is not bipartite");
  return all_faces_quad(embed(g));
}

std::vector<Edge> ebo_edges(const Graph& g) {
  std::vector<Edge> out;
  for (VertexSet b : block_masks(g).blocks) {
    const int k = std::popcount(b);
    if (k == 2) {
      out.emplace_back(std::countr_zero(b), 63 - std::countl_zero(b));
    } else if (k >= 3) {
      const auto cyc = outer_cycle(g, b);
      require(cyc.has_value(), ErrorCode::precondition_failed, "ebo: graph is not outerplanar");
      for (int i = 0; i < k; ++i) {
        const int x = (*cyc)[i], y = (*cyc)[(i + 1) % k];
        out.emplace_back(std::min(x, y), std::max(x, y));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool ebo_adjacent(const Graph& g, int u, int v) {
  require(u >= 0 && v >= 0 && u < g.order() && v < g.order() && g.has_edge(u, v),
          ErrorCode::invalid_argument, "ebo_adjacent: uv is not an edge");
  for (VertexSet b : block_masks(g).blocks) {
    if (!((b >> u) & 1U) || !((b >> v) & 1U)) continue;
    const int k = std::popcount(b);
    if (k == 2) return true;
    const auto cyc = outer_cycle(g, b);
    require(cyc.has_value(), ErrorCode::precondition_failed, "ebo: graph is not outerplanar");
    for (int i = 0; i < k; ++i) {
      const int x = (*cyc)[i], y = (*cyc)[(i + 1) % k];
      if ((x == u && y == v) || (x == v && y == u)) return true;
    }
    return false;
  }
  return false;
}

const char* to_string(StructureKind k) noexcept {
  switch (k) {
    case StructureKind::star: return "star";
    case StructureKind::single_block: return "single_block";
    case StructureKind::composite: return "composite";
  }
  return "unknown";
}

bool is_star(const Graph& g) {
  const int n = g.order();
  if (n == 1) return true;
  if (g.size() != n - 1) return false;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) return true;
  }
  return false;
}

StructureCheck analyze_structure(const Graph& g) {
  require(is_bip_outerplanar(g), ErrorCode::precondition_failed,
          "analyze_structure: graph is not bipartite outerplanar");
  StructureCheck c;
  c.structure.ebo_pairs = ebo_edges(g);
  if (is_star(g)) {
    c.is_star = true;
    c.structure.kind = StructureKind::star;
    return c;
  }
  const int n = g.order();
  VertexSet pendants = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 1) pendants |= bit(v);
  }
  const VertexSet core_mask = all_vertices(n) & ~pendants;
  const std::vector<int> core_list = mask_to_list(core_mask);
  bool roots_in_core = true;
  for_each_vertex(pendants, [&](int p) {
    const int r = std::countr_zero(g.neighbors(p));
    if (!((core_mask >> r) & 1U)) roots_in_core = false;
    ++c.structure.pendant_roots[r];
  });
  if (core_list.empty() || !roots_in_core) return c;
  const Graph core = induced_subgraph(g, core_list);
  if (!is_connected(core)) return c;
  c.core_connected = true;

  const BlockMasks bm = block_masks(core);
  c.blocks_ok = true;
  for (VertexSet b : bm.blocks) {
    std::vector<int> verts;
    for_each_vertex(b, [&](int i) { verts.push_back(core_list[i]); });
    if (verts.size() < 4 || !all_faces_quad(embed(induced_subgraph(core, mask_to_list(b))))) {
      c.blocks_ok = false;
    }
    c.structure.blocks.push_back(std::move(verts));
  }
  VertexSet cuts = 0;
  for_each_vertex(bm.cuts, [&](int i) {
    cuts |= bit(core_list[i]);
    c.structure.cut_vertices.push_back(core_list[i]);
  });
  c.structure.kind =
      bm.blocks.size() == 1 ? StructureKind::single_block : StructureKind::composite;
  if (!c.blocks_ok) return c;

  VertexSet roots = 0;
  for (const auto& [r, cnt] : c.structure.pendant_roots) roots |= bit(r);
  c.cuts_nebo = c.roots_off_cuts = c.roots_nebo = true;
  for (const auto& [x, y] : c.structure.ebo_pairs) {
    const bool cx = (cuts >> x) & 1U, cy = (cuts >> y) & 1U;
    const bool rx = (roots >> x) & 1U, ry = (roots >> y) & 1U;
    if (cx && cy) c.cuts_nebo = false;
    if ((rx && cy) || (ry && cx)) c.roots_off_cuts = false;
    if (rx && ry) c.roots_nebo = false;
  }
  return c;
}

MaximalStructure structural_decompose(const Graph& g) {
  require(is_bip_outerplanar(g) && is_maximal_bip_outerplanar(g), ErrorCode::precondition_failed,
          "structural_decompose: graph is not maximal bipartite outerplanar");
  StructureCheck c = analyze_structure(g);
  if (c.is_star) return c.structure;
  auto violated = [](const char* what) {
    fail(ErrorCode::invariant_violation, std::string("maximal graph violates structure: ") + what);
  };
  if (!c.core_connected) violated("pendant-free core is not connected");
  if (!c.blocks_ok) violated("a core block is not a quadrangulated 2-connected graph");
  if (!c.cuts_nebo) violated("two cut vertices are EBO-adjacent");
  if (!c.roots_off_cuts) violated("a pendant root is EBO-adjacent to a cut vertex");
  if (!c.roots_nebo) violated("two pendant roots are EBO-adjacent");
  return c.structure;
}

}  // namespace bipop
