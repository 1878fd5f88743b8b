#include "bipop/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "bipop/constructions.hpp"
#include "bipop/embedding.hpp"
#include "bipop/recognition.hpp"
#include "bipop/spectra.hpp"

namespace bipop {

namespace {

using Code = std::string;

Code code_of(const Graph& g) {
  const auto c = canonical_code(g);
  return Code(c.begin(), c.end());
}

// Runs body(i) for i in [0, count) on `threads` workers.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
  threads = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < count; i = next++) body(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// The edge between canonical positions (i, j) with the largest (j, i).
Edge canonical_last_edge(const Graph& g, const CanonicalForm& cf) {
  const int n = g.order();
  for (int j = n - 1; j >= 1; --j) {
    for (int i = j - 1; i >= 0; --i) {
      if (g.has_edge(cf.order[i], cf.order[j])) return {cf.order[i], cf.order[j]};
    }
  }
  return {-1, -1};
}

bool same_degree_pair(const Graph& g, Edge a, Edge b) {
  auto key = [&](Edge e) {
    const int x = g.degree(e.first), y = g.degree(e.second);
    return std::make_pair(std::min(x, y), std::max(x, y));
  };
  return key(a) == key(b);
}

// Orderly edge-extension over an edge-deletion-closed property. Returns one
// representative per isomorphism class, sorted by (size, code).
std::vector<Graph> orderly(int n, const std::function<bool(const Graph&)>& property, int threads) {
  std::vector<std::pair<Code, Graph>> all;
  std::vector<Graph> level{Graph(n)};
  all.emplace_back(code_of(level[0]), level[0]);
  while (!level.empty()) {
    std::vector<std::unordered_map<Code, Graph>> found(level.size());
    parallel_for(level.size(), threads, [&](std::size_t idx) {
      const Graph& parent = level[idx];
      auto& local = found[idx];
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (parent.has_edge(u, v)) continue;
          const Graph child = parent.with_edge(u, v);
          if (!property(child)) continue;
          const CanonicalForm cf = canonical_form(child);
          const Edge last = canonical_last_edge(child, cf);
          const Edge added{u, v};
          bool accept = last == added || Edge{last.second, last.first} == added;
          if (!accept && same_degree_pair(child, last, added)) {
            accept = canonical_code(parent) ==
                     canonical_code(child.without_edge(last.first, last.second));
          }
          if (accept) local.emplace(Code(cf.code.begin(), cf.code.end()), child);
        }
      }
    });
    std::unordered_map<Code, Graph> merged;
    for (auto& f : found) merged.merge(f);
    std::vector<std::pair<Code, Graph>> next(merged.begin(), merged.end());
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [c, g] : next) {
      level.push_back(g);
      all.emplace_back(std::move(c), std::move(g));
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    return a.first < b.first;
  });
  std::vector<Graph> out;
  out.reserve(all.size());
  for (auto& [c, g] : all) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> sort_by_code(std::vector<Graph> gs) {
  std::vector<std::pair<Code, Graph>> keyed;
  keyed.reserve(gs.size());
  for (auto& g : gs) keyed.emplace_back(code_of(g), std::move(g));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    return a.first < b.first;
  });
  std::vector<Graph> out;
  for (auto& [c, g] : keyed) out.push_back(std::move(g));
  return out;
}

void check_cap(int n, int cap, const char* what) {
  require(n >= 1, ErrorCode::invalid_argument, std::string(what) + ": order must be positive");
  require(n <= cap, ErrorCode::cap_exceeded,
          std::string(what) + ": order " + std::to_string(n) + " exceeds cap " +
              std::to_string(cap) + " (raise it in the config to override)");
}

// Dissections of the polygon 0..k-1, memoized by k.
const std::vector<std::vector<Edge>>& dissections_of(int k) {
  thread_local std::map<int, std::vector<std::vector<Edge>>> memo;
  auto it = memo.find(k);
  if (it != memo.end()) return it->second;
  std::vector<std::vector<Edge>> out;
  if (k == 2) {
    out.emplace_back();
  } else if (k == 4) {
    out.emplace_back();
  } else if (k >= 6 && k % 2 == 0) {
    // the quadrilateral on the side (0, k-1) is (0, a, b, k-1)
    for (int a = 1; a < k - 2; a += 2) {
      for (int b = a + 1; b < k - 1; b += 2) {
        const auto& left = dissections_of(a + 1);
        const auto& mid = dissections_of(b - a + 1);
        const auto& right = dissections_of(k - b);
        for (const auto& l : left) {
          for (const auto& m : mid) {
            for (const auto& r : right) {
              std::vector<Edge> plan;
              if (a > 1) plan.emplace_back(0, a);
              if (b - a > 1) plan.emplace_back(a, b);
              if (k - 1 - b > 1) plan.emplace_back(b, k - 1);
              for (const auto& [x, y] : l) plan.emplace_back(x, y);
              for (const auto& [x, y] : m) plan.emplace_back(x + a, y + a);
              for (const auto& [x, y] : r) plan.emplace_back(x + b, y + b);
              std::sort(plan.begin(), plan.end());
              out.push_back(std::move(plan));
            }
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
  }
  return memo.emplace(k, std::move(out)).first->second;
}

Graph graph_of_plan(int n, const std::vector<Edge>& plan) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  for (const auto& [x, y] : plan) b.add_edge(x, y);
  return b.build();
}

bool pendant_free_cut_check(const Graph& g) {
  const BlockMasks bm = block_masks(g);
  for (const auto& [x, y] : ebo_edges(g)) {
    if (((bm.cuts >> x) & 1U) && ((bm.cuts >> y) & 1U)) return false;
  }
  return true;
}

// All ways to write p as an ordered sum of k positive parts.
void compositions(int p, int k, std::vector<int>& cur, const std::function<void()>& emit) {
  if (k == 0) {
    if (p == 0) emit();
    return;
  }
  for (int first = 1; first <= p - (k - 1); ++first) {
    cur.push_back(first);
    compositions(p - first, k - 1, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

const char* to_string(Family f) noexcept {
  switch (f) {
    case Family::all: return "all";
    case Family::all_connected: return "all_connected";
    case Family::all_connected_outerplanar: return "all_connected_outerplanar";
    case Family::bipartite_outerplanar: return "bipartite_outerplanar";
    case Family::connected_bipartite_outerplanar: return "connected_bipartite_outerplanar";
    case Family::maximal_bip_outerplanar: return "maximal_bip_outerplanar";
    case Family::maximal_2conn_bip_outerplanar: return "maximal_2conn_bip_outerplanar";
  }
  return "unknown";
}

std::optional<Family> family_from_string(std::string_view s) {
  std::string t(s);
  std::replace(t.begin(), t.end(), '-', '_');
  static const std::map<std::string, Family> names = {
      {"all", Family::all},
      {"all_connected", Family::all_connected},
      {"connected", Family::all_connected},
      {"all_connected_outerplanar", Family::all_connected_outerplanar},
      {"outerplanar", Family::all_connected_outerplanar},
      {"bipartite_outerplanar", Family::bipartite_outerplanar},
      {"bip_outerplanar", Family::bipartite_outerplanar},
      {"connected_bipartite_outerplanar", Family::connected_bipartite_outerplanar},
      {"connected_bip_outerplanar", Family::connected_bipartite_outerplanar},
      {"maximal_bip_outerplanar", Family::maximal_bip_outerplanar},
      {"maximal", Family::maximal_bip_outerplanar},
      {"maximal_2conn_bip_outerplanar", Family::maximal_2conn_bip_outerplanar},
      {"maximal2conn", Family::maximal_2conn_bip_outerplanar},
      {"quadrangulation", Family::maximal_2conn_bip_outerplanar},
  };
  auto it = names.find(t);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

bool in_family(const Graph& g, Family f) {
  switch (f) {
    case Family::all: return true;
    case Family::all_connected: return is_connected(g);
    case Family::all_connected_outerplanar: return is_connected(g) && is_outerplanar_peeling(g);
    case Family::bipartite_outerplanar: return is_bip_outerplanar(g);
    case Family::connected_bipartite_outerplanar: return is_connected(g) && is_bip_outerplanar(g);
    case Family::maximal_bip_outerplanar:
      return is_bip_outerplanar(g) && is_maximal_bip_outerplanar(g);
    case Family::maximal_2conn_bip_outerplanar:
      return is_2connected(g) && is_bip_outerplanar(g) && is_maximal_2conn_structural(g);
  }
  return false;
}

std::vector<std::vector<Edge>> labeled_dissections(int n) {
  require(n >= 4 && n % 2 == 0 && n <= kMaxVertices, ErrorCode::invalid_argument,
          "labeled_dissections: polygon order must be even in [4, 64]");
  return dissections_of(n);
}

std::size_t labeled_dissection_count(int n) { return labeled_dissections(n).size(); }

std::vector<std::vector<Edge>> dissection_classes(int n) {
  std::map<std::vector<std::uint8_t>, std::vector<Edge>> classes;
  for (const auto& plan : labeled_dissections(n)) {
    auto code = dissection_code(n, plan);
    classes.emplace(std::move(code), plan);
  }
  std::vector<std::vector<Edge>> out;
  for (auto& [c, p] : classes) out.push_back(std::move(p));
  return out;
}

EnumResult enumerate(const EnumSpec& spec, const Config& cfg) {
  const int n = spec.order;
  const int threads = resolve_threads(cfg);
  const std::size_t cap = spec.cap ? spec.cap : cfg.caps.max_results;
  require(spec.iso_reduce || spec.family == Family::maximal_2conn_bip_outerplanar,
          ErrorCode::invalid_argument,
          "enumerate: iso_reduce = false is only supported for the quadrangulation family");
  EnumResult res;
  std::vector<Graph> gs;
  switch (spec.family) {
    case Family::all:
    case Family::all_connected:
      check_cap(n, cfg.caps.all_graphs_max_order, "enumerate");
      gs = orderly(n, [](const Graph&) { return true; }, threads);
      break;
    case Family::all_connected_outerplanar:
      check_cap(n, cfg.caps.orderly_max_order, "enumerate");
      gs = orderly(n, is_outerplanar_peeling, threads);
      break;
    case Family::bipartite_outerplanar:
    case Family::connected_bipartite_outerplanar:
    case Family::maximal_bip_outerplanar:
      check_cap(n, cfg.caps.orderly_max_order, "enumerate");
      gs = orderly(n, is_bip_outerplanar, threads);
      break;
    case Family::maximal_2conn_bip_outerplanar: {
      check_cap(n, cfg.caps.dissection_max_order, "enumerate");
      if (n % 2 == 1 || n < 4) return res;
      const auto plans = spec.iso_reduce ? dissection_classes(n) : labeled_dissections(n);
      for (const auto& p : plans) {
        if (res.graphs.size() >= cap) {
          res.truncated = true;
          break;
        }
        res.graphs.push_back(graph_of_plan(n, p));
      }
      return res;
    }
  }
  for (auto& g : gs) {
    bool keep = true;
    switch (spec.family) {
      case Family::all_connected:
      case Family::all_connected_outerplanar:
      case Family::connected_bipartite_outerplanar:
        keep = is_connected(g);
        break;
      case Family::maximal_bip_outerplanar: keep = is_maximal_bip_outerplanar(g); break;
      default: break;
    }
    if (!keep) continue;
    if (res.graphs.size() >= cap) {
      res.truncated = true;
      break;
    }
    res.graphs.push_back(std::move(g));
  }
  return res;
}

EnumResult maximal_structured(int n, const Config& cfg) {
  check_cap(n, std::min(cfg.caps.structured_max_order, kCanonicalMaxOrder), "maximal_structured");
  std::unordered_map<Code, Graph> out;
  const Graph s = star(n);
  out.emplace(code_of(s), s);

  std::vector<std::vector<Graph>> blocks(n + 1);
  for (int k = 4; k <= n; k += 2) {
    for (const auto& p : dissection_classes(k)) blocks[k].push_back(graph_of_plan(k, p));
  }

  // cores[h]: 1-sums of quadrangulations of order h with no two cut vertices
  // EBO-adjacent. Leaf-block removal preserves that clause, so growing one
  // block at a time reaches every core.
  std::vector<std::unordered_map<Code, Graph>> cores(n + 1);
  for (int k = 4; k <= n; k += 2) {
    for (const auto& b : blocks[k]) cores[k].emplace(code_of(b), b);
  }
  for (int h = 4; h <= n; ++h) {
    for (const auto& [code, core] : cores[h]) {
      for (int k = 4; h + k - 1 <= n; k += 2) {
        for (const auto& b : blocks[k]) {
          for (int x = 0; x < h; ++x) {
            for (int y = 0; y < k; ++y) {
              const int jx[] = {x}, jy[] = {y};
              Graph j = k_sum(core, b, jx, jy);
              if (!pendant_free_cut_check(j)) continue;
              cores[h + k - 1].emplace(code_of(j), std::move(j));
            }
          }
        }
      }
    }
  }

  for (int h = 4; h <= n; ++h) {
    const int p = n - h;
    for (const auto& [code, core] : cores[h]) {
      if (p == 0) {
        out.emplace(code, core);
        continue;
      }
      const BlockMasks bm = block_masks(core);
      const auto ebo = ebo_edges(core);
      std::vector<VertexSet> ebo_nb(h, 0);
      for (const auto& [x, y] : ebo) {
        ebo_nb[x] |= bit(y);
        ebo_nb[y] |= bit(x);
      }
      std::vector<int> allowed;
      for (int v = 0; v < h; ++v) {
        if (!(ebo_nb[v] & bm.cuts)) allowed.push_back(v);
      }
      const int a = static_cast<int>(allowed.size());
      for (std::uint32_t sub = 1; sub < (1U << a); ++sub) {
        std::vector<int> roots;
        VertexSet rmask = 0;
        for (int i = 0; i < a; ++i) {
          if ((sub >> i) & 1U) {
            roots.push_back(allowed[i]);
            rmask |= bit(allowed[i]);
          }
        }
        const int r = static_cast<int>(roots.size());
        if (r > p) continue;
        bool nebo = true;
        for (int v : roots) nebo = nebo && !(ebo_nb[v] & rmask);
        if (!nebo) continue;
        std::vector<int> parts;
        compositions(p, r, parts, [&] {
          Graph g = core;
          for (int i = 0; i < r; ++i) g = attach_pendants(g, roots[i], parts[i]);
          out.emplace(code_of(g), std::move(g));
        });
      }
    }
  }

  std::vector<Graph> gs;
  for (auto& [c, g] : out) gs.push_back(std::move(g));
  EnumResult res;
  res.graphs = sort_by_code(std::move(gs));
  return res;
}

int edge_bound_twice(int n) {
  require(n >= 1, ErrorCode::invalid_argument, "edge_bound: order must be positive");
  if (n == 1) return 0;
  if (n == 2) return 2;
  return n % 2 == 0 ? 3 * n - 4 : 3 * n - 5;
}

bool edge_equality_structure(const Graph& g, bool k2_is_factor) {
  const int n = g.order();
  if (n == 1) return true;
  if (n == 2) return g.size() == 1;
  if (!is_connected(g) || !is_bip_outerplanar(g)) return false;
  if (n % 2 == 0) return is_2connected(g) && is_maximal_2conn_structural(g);
  const BlockTree bt = block_tree(g);
  if (bt.cut_vertices.size() != 1 || bt.blocks.size() != 2) return false;
  for (const auto& b : bt.blocks) {
    if (b.size() % 2 == 1) return false;
    if (b.size() == 2) {
      if (!k2_is_factor) return false;
      continue;
    }
    const Graph h = induced_subgraph(g, b);
    if (!is_maximal_2conn_structural(h)) return false;
  }
  return true;
}

const char* to_string(Objective o) noexcept {
  return o == Objective::max_rho ? "max_rho" : "min_lambda";
}

ScanReport extremal_scan(const EnumSpec& spec, Objective objective, const Config& cfg,
                         std::size_t table_size) {
  const EnumResult er = enumerate(spec, cfg);
  ScanReport rep;
  rep.spec = spec;
  rep.objective = objective;
  rep.count = er.graphs.size();
  rep.truncated = er.truncated;
  const int n = spec.order;
  std::vector<double> values(er.graphs.size());
  parallel_for(er.graphs.size(), resolve_threads(cfg), [&](std::size_t i) {
    values[i] = objective == Objective::max_rho
                    ? spectral_radius(er.graphs[i], cfg.tolerances).value
                    : least_eigenvalue(er.graphs[i], cfg.tolerances).value;
  });
  const double sign = objective == Objective::max_rho ? 1.0 : -1.0;
  if (!values.empty()) {
    rep.best = values[0];
    for (double v : values) {
      if (sign * v > sign * rep.best) rep.best = v;
    }
  }
  const int bound2 = edge_bound_twice(n);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::abs(values[i] - rep.best) <= cfg.tolerances.slack) {
      rep.winners.push_back(er.graphs[i]);
      rep.winner_edge_most.push_back(2 * er.graphs[i].size() == bound2);
    }
  }
  const Graph s = star(n);
  rep.star_in_family = in_family(s, spec.family);
  rep.star_value = sign * std::sqrt(n - 1.0);
  rep.star_attains = rep.star_in_family && std::abs(rep.star_value - rep.best) <= cfg.tolerances.slack;
  if (table_size) {
    std::vector<std::size_t> idx(values.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return sign * values[a] > sign * values[b]; });
    for (std::size_t i = 0; i < idx.size() && i < table_size; ++i) {
      rep.table.emplace_back(er.graphs[idx[i]], values[idx[i]]);
    }
  }
  return rep;
}

CensusReport census_edge_counts(const EnumSpec& spec, const Config& cfg) {
  require(spec.family == Family::bipartite_outerplanar ||
              spec.family == Family::connected_bipartite_outerplanar ||
              spec.family == Family::maximal_bip_outerplanar ||
              spec.family == Family::maximal_2conn_bip_outerplanar,
          ErrorCode::invalid_argument, "census: family must be a bipartite outerplanar family");
  CensusReport rep;
  rep.order = spec.order;
  rep.bound_twice = edge_bound_twice(spec.order);
  const EnumResult er = enumerate(spec, cfg);
  rep.truncated = er.truncated;
  for (const auto& g : er.graphs) {
    const int m = g.size();
    ++rep.histogram[m];
    ++rep.total;
    rep.max_m = std::max(rep.max_m, m);
    if (2 * m > rep.bound_twice) ++rep.violations;
    const bool eq = 2 * m == rep.bound_twice;
    if (eq) ++rep.equality;
    if (eq != edge_equality_structure(g, true)) ++rep.mismatches;
    if (eq != edge_equality_structure(g, false)) ++rep.literal_mismatches;
  }
  return rep;
}

}  // namespace bipop
