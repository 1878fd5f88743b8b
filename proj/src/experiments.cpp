#include "bipop/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "bipop/constructions.hpp"
#include "bipop/embedding.hpp"
#include "bipop/enumeration.hpp"
#include "bipop/io.hpp"
#include "bipop/recognition.hpp"
#include "bipop/spectra.hpp"

namespace bipop {

namespace {

using nlohmann::json;

struct Run {
  std::size_t checked = 0;
  std::size_t violations = 0;
  json details = json::object();
  json failures = json::array();  // first few failing instances

  void check(bool ok, const std::function<json()>& describe) {
    ++checked;
    if (ok) return;
    ++violations;
    if (failures.size() < 20) failures.push_back(describe());
  }
};

int pick(int value, int fallback) { return value < 0 ? fallback : value; }

std::vector<Graph> census(int n, const Config& cfg) {
  return enumerate({n, Family::maximal_2conn_bip_outerplanar, true, 0}, cfg).graphs;
}

double rho(const Graph& g, const Config& cfg) { return spectral_radius(g, cfg.tolerances).value; }

// Star spectra and the small-order extremal scans.
void star_extremal(Run& run, const SuiteParams& p, const Config& cfg) {
  const int lo = pick(p.n_lo, 2), hi = pick(p.n_hi, 64);
  const double slack = cfg.tolerances.slack;
  double worst = 0;
  for (int n = std::max(lo, 2); n <= hi; ++n) {
    const Graph s = star(n);
    const double r = rho(s, cfg), l = least_eigenvalue(s, cfg.tolerances).value;
    const double want = std::sqrt(n - 1.0);
    worst = std::max({worst, std::abs(r - want), std::abs(l + want)});
    run.check(std::abs(r - want) <= slack && std::abs(l + want) <= slack,
              [&] { return json{{"n", n}, {"rho", r}, {"lambda", l}, {"expected", want}}; });
  }
  run.details["star_max_error"] = worst;

  // Reported, not asserted: who wins below the paper's range.
  json scans = json::array();
  const int scan_hi = std::min(hi, 8);
  for (int n = 1; n <= scan_hi; ++n) {
    for (auto [family, objective] :
         {std::pair{Family::bipartite_outerplanar, Objective::max_rho},
          std::pair{Family::all_connected_outerplanar, Objective::min_lambda}}) {
      const ScanReport rep = extremal_scan({n, family, true, 0}, objective, cfg);
      json winners = json::array();
      for (std::size_t i = 0; i < rep.winners.size(); ++i) {
        winners.push_back({{"graph", graph_to_json(rep.winners[i])},
                           {"edge_most", static_cast<bool>(rep.winner_edge_most[i])},
                           {"is_star", is_star(rep.winners[i])}});
      }
      scans.push_back({{"n", n},
                       {"family", to_string(family)},
                       {"objective", to_string(objective)},
                       {"count", rep.count},
                       {"best", rep.best},
                       {"star_value", rep.star_value},
                       {"star_attains", rep.star_attains},
                       {"winners", winners}});
    }
  }
  run.details["scans"] = scans;
}

void quadbook(Run& run, const SuiteParams& p, const Config& cfg) {
  const int lo = pick(p.n_lo, 1), hi = pick(p.n_hi, 8);
  for (int s = std::max(lo, 1); s <= hi; ++s) {
    const double r = rho(quad_book(s), cfg), want = 1 + std::sqrt(static_cast<double>(s));
    run.check(std::abs(r - want) <= cfg.tolerances.slack,
              [&] { return json{{"s", s}, {"rho", r}, {"expected", want}}; });
  }
}

// Face test against the add-every-non-edge oracle on the quadrangulation
// census, on every one-chord deletion of it, and on all 2-connected bipartite
// outerplanar graphs the orderly generator reaches.
void maximality(Run& run, const SuiteParams& p, const Config& cfg) {
  const int lo = pick(p.n_lo, 4), hi = pick(p.n_hi, 14);
  json per_n = json::object();
  for (int n = std::max(lo, 4) + (std::max(lo, 4) % 2); n <= hi; n += 2) {
    std::size_t graphs = 0;
    auto compare = [&](const Graph& g) {
      ++graphs;
      const bool structural = is_maximal_2conn_structural(g);
      const bool oracle = is_maximal_bip_outerplanar(g);
      run.check(structural == oracle, [&] {
        return json{{"graph", graph_to_json(g)}, {"structural", structural}, {"oracle", oracle}};
      });
    };
    for (const Graph& q : census(n, cfg)) {
      compare(q);
      const auto emb = embed(q);
      for (const auto& [a, b] : emb.chords) compare(q.without_edge(a, b));
    }
    if (n <= cfg.caps.orderly_max_order && n <= 10) {
      for (const Graph& g : enumerate({n, Family::bipartite_outerplanar, true, 0}, cfg).graphs) {
        if (is_2connected(g)) compare(g);
      }
    }
    per_n[std::to_string(n)] = graphs;
  }
  run.details["graphs_per_order"] = per_n;
}

void edgecount(Run& run, const SuiteParams& p, const Config& cfg) {
  const int lo = pick(p.n_lo, 1), hi = pick(p.n_hi, 8);
  json rows = json::array();
  for (int n = std::max(lo, 1); n <= hi; ++n) {
    const CensusReport rep = census_edge_counts({n, Family::bipartite_outerplanar, true, 0}, cfg);
    json hist = json::object();
    for (const auto& [m, c] : rep.histogram) hist[std::to_string(m)] = c;
    rows.push_back({{"n", n},
                    {"total", rep.total},
                    {"max_m", rep.max_m},
                    {"bound_twice", rep.bound_twice},
                    {"equality", rep.equality},
                    {"violations", rep.violations},
                    {"mismatches", rep.mismatches},
                    {"mismatches_without_k2_factor", rep.literal_mismatches},
                    {"histogram", hist}});
    run.check(rep.violations == 0 && rep.mismatches == 0 && !rep.truncated &&
                  2 * rep.max_m == rep.bound_twice,
              [&] { return rows.back(); });
  }
  run.details["orders"] = rows;
}

void census5(Run& run, const SuiteParams&, const Config& cfg) {
  const std::vector<Graph> classes = census(10, cfg);
  run.details["classes"] = classes.size();
  run.check(classes.size() == 5, [&] { return json{{"classes", classes.size()}}; });
  std::vector<bool> used(classes.size(), false);
  json matches = json::array();
  for (int i = 1; i <= 5; ++i) {
    const Graph h = h_case(i);
    int hit = -1;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (!used[c] && isomorphic(h, classes[c]).isomorphic) {
        hit = static_cast<int>(c);
        used[c] = true;
        break;
      }
    }
    matches.push_back({{"h", i}, {"class", hit}});
    run.check(hit >= 0, [&] { return json{{"unmatched_fixture", i}}; });
  }
  run.details["matches"] = matches;
}

void rowsum(Run& run, const SuiteParams& p, const Config& cfg) {
  const int lo = pick(p.n_lo, 4), hi = pick(p.n_hi, 16);
  json per_n = json::object();
  for (int n = std::max(lo, 4) + (std::max(lo, 4) % 2); n <= hi; n += 2) {
    const auto graphs = census(n, cfg);
    per_n[std::to_string(n)] = graphs.size();
    for (const Graph& g : graphs) {
      const RowSumReport rep = row_sums(g, 3);
      run.check(rep.applicable && rep.all_pass, [&] {
        json bad = json::array();
        for (int v = 0; v < n; ++v) {
          const auto& it = rep.items[v];
          if (!it.all()) {
            bad.push_back({{"v", v}, {"item1", it.item1}, {"item2", it.item2},
                           {"item3", it.item3}, {"item4", it.item4}});
          }
        }
        return json{{"graph", graph_to_json(g)}, {"failing", bad}};
      });
    }
  }
  run.details["graphs_per_order"] = per_n;
  if (lo <= 4 && hi >= 4) {
    const RowSumReport c4 = row_sums(cycle(4), 2);
    bool tight = true;
    for (int v = 0; v < 4; ++v) tight = tight && 2 * c4.s1[v] == 4 && 2 * c4.s2[v] == 3 * 4 - 4;
    run.details["c4_items_1_2_tight"] = tight;
    run.check(tight, [] { return json{{"c4_tightness", false}}; });
  }
}

void cert(Run& run, const SuiteParams& p, const Config& cfg) {
  const int lo = pick(p.n_lo, 16), hi = pick(p.n_hi, 20);
  json per_n = json::object();
  for (int n = std::max(lo, 16) + (std::max(lo, 16) % 2); n <= hi; n += 2) {
    const double c = 3.0 * n / 4 + 2, bound = std::sqrt(c);
    const auto graphs = census(n, cfg);
    double min_gap = 1e300;
    std::map<std::string, std::size_t> verdicts;
    for (const Graph& g : graphs) {
      BoundCertificate bc;
      bc.poly = {1, 0, -c, 0};
      bc.r = 0;
      const BoundCertificate out = certify_bound(g, bc, cfg.tolerances);
      ++verdicts[to_string(out.verdict)];
      min_gap = std::min(min_gap, bound - out.rho);
      run.check(out.verdict != Verdict::fail && out.consistent &&
                    out.rho <= bound + cfg.tolerances.slack,
                [&] {
                  return json{{"graph", graph_to_json(g)}, {"verdict", to_string(out.verdict)},
                              {"rho", out.rho}, {"bound", bound}};
                });
    }
    json v = json::object();
    for (const auto& [k, cnt] : verdicts) v[k] = cnt;
    per_n[std::to_string(n)] = {{"graphs", graphs.size()}, {"verdicts", v}, {"min_gap", min_gap}};
  }
  run.details["orders"] = per_n;
}

// Strict star bound on both pendant families, with monotonicity in s measured.
void g1g2(Run& run, const SuiteParams& p, const Config& cfg) {
  const int hi = pick(p.n_hi, 60);
  json families = json::array();
  for (int fam = 1; fam <= 2; ++fam) {
    const int s_max = fam == 1 ? 4 : 8;
    const int n_lo = std::max(pick(p.n_lo, fam == 1 ? 36 : 37), 2 * s_max + 3);
    std::vector<std::vector<double>> rhos(s_max + 1);
    for (int s = 1; s <= s_max; ++s) {
      double min_margin = 1e300;
      int worst_n = -1, first_fail = -1;
      for (int n = n_lo; n <= hi; ++n) {
        const Graph g = fam == 1 ? g1(n, s) : g2(n, s);
        const double r = rho(g, cfg);
        rhos[s].push_back(r);
        const double margin = std::sqrt(n - 1.0) - r;
        if (margin < min_margin) {
          min_margin = margin;
          worst_n = n;
        }
        const bool ok = margin > cfg.tolerances.strict_margin;
        if (!ok && first_fail < 0) first_fail = n;
        run.check(ok, [&] {
          return json{{"family", fam == 1 ? "g1" : "g2"}, {"n", n}, {"s", s}, {"rho", r},
                      {"margin", margin}};
        });
      }
      families.push_back({{"family", fam == 1 ? "g1" : "g2"},
                          {"s", s},
                          {"n_range", {n_lo, hi}},
                          {"min_margin", min_margin},
                          {"worst_n", worst_n},
                          {"first_failing_n", first_fail},
                          {"bip_outerplanar", is_bip_outerplanar(fam == 1 ? g1(n_lo, s) : g2(n_lo, s))}});
    }
    bool decreasing = true;
    for (int s = 2; s <= s_max; ++s) {
      for (std::size_t i = 0; i < rhos[s].size(); ++i) decreasing = decreasing && rhos[s - 1][i] > rhos[s][i];
    }
    run.details[fam == 1 ? "g1_rho_decreasing_in_s" : "g2_rho_decreasing_in_s"] = decreasing;
  }
  run.details["families"] = families;
}

void hcases(Run& run, const SuiteParams& p, const Config& cfg) {
  const int lo = pick(p.n_lo, 36), hi = pick(p.n_hi, 36);
  json rows = json::array();
  for (int n = std::max(lo, 11); n <= hi; ++n) {
    const double cap = std::max(rho(g1(n, 4), cfg), rho(g2(n, 5), cfg));
    const int eps = n - 10;
    double best = 0;
    for (int i = 1; i <= 5; ++i) {
      const Graph h = h_case(i);
      for (int u = 0; u < 10; ++u) {
        const Graph g = attach_pendants(h, u, eps);
        const double r = rho(g, cfg);
        best = std::max(best, r);
        run.check(r <= cap + cfg.tolerances.slack, [&] {
          return json{{"n", n}, {"h", i}, {"u", u}, {"rho", r}, {"cap", cap}};
        });
      }
    }
    rows.push_back({{"n", n}, {"eps", eps}, {"max_rho", best}, {"cap", cap}, {"gap", cap - best}});
  }
  run.details["orders"] = rows;
}

Graph random_connected(int n, std::mt19937_64& rng) {
  GraphBuilder b(n);
  for (int v = 1; v < n; ++v) b.add_edge(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
  const double density = std::uniform_real_distribution<double>(0.05, 0.5)(rng);
  std::bernoulli_distribution extra(density);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (extra(rng)) b.add_edge(u, v);
    }
  }
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(b.build(), perm);
}

void rotation(Run& run, const SuiteParams& p, const Config& cfg) {
  const int lo = std::max(pick(p.n_lo, 3), 3), hi = std::max(pick(p.n_hi, 12), lo);
  std::mt19937_64 rng(p.seed);
  std::size_t attempts = 0, accepted = 0;
  double min_gain = 1e300;
  while (static_cast<int>(accepted) < p.samples && attempts < 1000000) {
    ++attempts;
    const int n = std::uniform_int_distribution<int>(lo, hi)(rng);
    const Graph g = random_connected(n, rng);
    int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int v = std::uniform_int_distribution<int>(0, n - 2)(rng);
    if (v >= u) ++v;
    const SpectralResult pr = spectral_radius(g, cfg.tolerances);
    if (pr.vector[u] < pr.vector[v]) std::swap(u, v);
    std::vector<int> cand;
    for_each_vertex(g.neighbors(v) & ~g.neighbors(u) & ~bit(u), [&](int t) { cand.push_back(t); });
    if (cand.empty()) continue;
    std::vector<int> targets;
    while (targets.empty()) {
      for (int t : cand) {
        if (std::bernoulli_distribution(0.5)(rng)) targets.push_back(t);
      }
    }
    GraphBuilder b(g);
    for (int t : targets) b.remove_edge(v, t).add_edge(u, t);
    if (!is_connected(b.build())) continue;
    const RotationVerdict rv = rotation_increases_rho(g, u, v, targets, cfg.tolerances);
    if (!rv.hypothesis_met) continue;
    ++accepted;
    min_gain = std::min(min_gain, rv.rho_after - rv.rho_before);
    run.check(rv.increased, [&] {
      return json{{"graph", graph_to_json(g)}, {"u", u}, {"v", v}, {"targets", targets},
                  {"rho_before", rv.rho_before}, {"rho_after", rv.rho_after}};
    });
  }
  run.details["attempts"] = attempts;
  run.details["instances"] = accepted;
  run.details["min_gain"] = min_gain;
  run.check(static_cast<int>(accepted) == p.samples,
            [&] { return json{{"too_few_instances", accepted}}; });
}

void monotone(Run& run, const SuiteParams& p, const Config& cfg) {
  const int lo = std::max(pick(p.n_lo, 2), 1), hi = pick(p.n_hi, 6);
  for (int n = lo; n <= hi; ++n) {
    for (const Graph& g : enumerate({n, Family::all_connected, true, 0}, cfg).graphs) {
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          run.check(monotonicity_check(g, u, v, cfg.tolerances), [&] {
            return json{{"graph", graph_to_json(g)}, {"u", u}, {"v", v}};
          });
        }
      }
    }
  }
}

void floor_suite(Run& run, const SuiteParams& p, const Config& cfg) {
  const int lo = std::max(pick(p.n_lo, 2), 1), hi = pick(p.n_hi, 6);
  const Tolerances& tol = cfg.tolerances;
  std::size_t bipartite_cases = 0;
  for (int n = lo; n <= hi; ++n) {
    for (const Graph& g : enumerate({n, Family::all_connected, true, 0}, cfg).graphs) {
      const FloorResult f = bipartite_floor(g, tol, cfg.caps.floor_max_order);
      const bool bip = is_bipartite(g);
      bool subgraph = is_connected(f.subgraph) && is_bipartite(f.subgraph);
      for (const auto& [a, b] : f.edges) subgraph = subgraph && g.has_edge(a, b);
      const bool relation = bip ? std::abs(f.lambda_h - f.lambda_g) <= tol.slack
                                : f.lambda_h < f.lambda_g - tol.strict_margin;
      bipartite_cases += bip;
      run.check(subgraph && f.lambda_h <= f.lambda_g + tol.strict_margin && relation, [&] {
        return json{{"graph", graph_to_json(g)}, {"lambda_h", f.lambda_h},
                    {"lambda_g", f.lambda_g}, {"bipartite", bip}};
      });
    }
  }
  run.details["bipartite_inputs"] = bipartite_cases;
}

void structure(Run& run, const SuiteParams& p, const Config& cfg) {
  const int lo = std::max(pick(p.n_lo, 1), 1), hi = pick(p.n_hi, 8);
  json rows = json::array();
  for (int n = lo; n <= hi; ++n) {
    std::set<std::vector<std::uint8_t>> filtered, built;
    std::size_t predictions = 0;
    for (const Graph& g : enumerate({n, Family::bipartite_outerplanar, true, 0}, cfg).graphs) {
      const bool maximal = is_maximal_bip_outerplanar(g);
      const bool predicted = analyze_structure(g).predicts_maximal();
      ++predictions;
      run.check(maximal == predicted, [&] {
        return json{{"graph", graph_to_json(g)}, {"oracle", maximal}, {"structure", predicted}};
      });
      if (maximal) {
        filtered.insert(canonical_code(g));
        bool decomposed = true;
        try {
          structural_decompose(g);
        } catch (const Error&) {
          decomposed = false;
        }
        run.check(decomposed, [&] { return json{{"undecomposable", graph_to_json(g)}}; });
      }
    }
    for (const Graph& g : maximal_structured(n, cfg).graphs) built.insert(canonical_code(g));
    run.check(filtered == built, [&] {
      return json{{"n", n}, {"filter", filtered.size()}, {"structured", built.size()}};
    });
    rows.push_back({{"n", n}, {"maximal_classes", filtered.size()},
                    {"structured_classes", built.size()}, {"graphs_checked", predictions}});
  }
  run.details["orders"] = rows;
}

// A degree-2 vertex's two neighbours receive at most n/2 edges from the rest.
void contribution(Run& run, const SuiteParams& p, const Config& cfg) {
  const int lo = std::max(pick(p.n_lo, 4), 4), hi = pick(p.n_hi, 10);
  for (int n = lo + lo % 2; n <= hi; n += 2) {
    for (const Graph& g : enumerate({n, Family::bipartite_outerplanar, true, 0}, cfg).graphs) {
      if (!is_2connected(g)) continue;
      for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 2) continue;
        const VertexSet nb = g.neighbors(v);
        const int v1 = std::countr_zero(nb);
        const int v2 = 63 - std::countl_zero(nb);
        const VertexSet skip = bit(v) | bit(v1) | bit(v2);
        const int contrib = std::popcount(g.neighbors(v1) & ~skip) +
                            std::popcount(g.neighbors(v2) & ~skip);
        run.check(2 * contrib <= n, [&] {
          return json{{"graph", graph_to_json(g)}, {"v", v}, {"contribution", contrib}};
        });
      }
    }
  }
}

// Pendants at one vertex of a quadrangulation: walk-count bounds of length 3,
// the cubic certificate built from them, and the direct star comparison.
void pendant(Run& run, const SuiteParams& p, const Config& cfg) {
  const int lo = std::max(pick(p.n_lo, 21), 21), hi = pick(p.n_hi, 32);
  std::map<int, std::vector<Graph>> cores;
  std::size_t instances = 0;
  std::map<std::string, std::size_t> failed;
  std::map<std::string, std::size_t> verdicts;
  double min_margin = 1e300;
  for (int n = lo; n <= hi; ++n) {
    for (int eps = (n + 1) / 2; eps <= n - 12; ++eps) {
      const int h = n - eps;
      if (h % 2 == 1 || h > cfg.caps.dissection_max_order) continue;
      if (!cores.count(h)) cores[h] = census(h, cfg);
      for (const Graph& core : cores[h]) {
        for (int r = 0; r < h; ++r) {
          const Graph g = attach_pendants(core, r, eps);
          const RowSumReport rs = row_sums(g, 3);
          ++instances;
          const auto& s1 = rs.s1;
          const bool root_ok = 2 * rs.s3[r] <= 2 * (s1[r] + 3) * s1[r] + 3 * n - 3 * eps - 12;
          bool core_ok = true;
          for (int t = 0; t < h; ++t) {
            if (t == r) continue;
            const std::int64_t extra = core.has_edge(r, t) ? -eps : eps;
            core_ok = core_ok && 2 * rs.s3[t] <= 2 * s1[t] * s1[t] + 6 * s1[t] + 3 * n + extra - 12;
          }
          bool leaf_ok = true;
          for (int z = h; z < n; ++z) leaf_ok = leaf_ok && rs.s3[z] <= n - 2;

          BoundCertificate bc;
          bc.poly = {1, 0, -(n - 1.0), 0};
          const BoundCertificate out = certify_bound(g, bc, cfg.tolerances);
          ++verdicts[to_string(out.verdict)];
          const double margin = std::sqrt(n - 1.0) - out.rho;
          min_margin = std::min(min_margin, margin);

          const std::pair<const char*, bool> items[] = {
              {"root_item", root_ok}, {"core_items", core_ok}, {"pendant_item", leaf_ok},
              {"certificate_consistent", out.consistent},
              {"rho_below_star", margin > cfg.tolerances.strict_margin}};
          for (const auto& [label, ok] : items) {
            if (!ok) ++failed[label];
            run.check(ok, [&] {
              return json{{"statement", label}, {"core", graph_to_json(core)}, {"root", r},
                          {"eps", eps}, {"rho", out.rho}, {"pendant_walks", rs.s3[n - 1]}};
            });
          }
        }
      }
    }
  }
  run.details["instances"] = instances;
  json f = json::object();
  for (const auto& [k, c] : failed) f[k] = c;
  json v = json::object();
  for (const auto& [k, c] : verdicts) v[k] = c;
  run.details["failed_by_statement"] = f;
  run.details["certificate_verdicts"] = v;
  run.details["min_star_margin"] = min_margin;
}

const std::map<std::string, std::function<void(Run&, const SuiteParams&, const Config&)>,
               std::less<>>& registry() {
  static const std::map<std::string, std::function<void(Run&, const SuiteParams&, const Config&)>,
                        std::less<>>
      suites = {
          {"star-extremal", star_extremal}, {"quadbook", quadbook},   {"maximality", maximality},
          {"edgecount", edgecount},         {"census5", census5},     {"rowsum", rowsum},
          {"cert", cert},                   {"g1g2", g1g2},           {"hcases", hcases},
          {"rotation", rotation},           {"monotone", monotone},   {"floor", floor_suite},
          {"structure", structure},         {"contribution", contribution},
          {"pendant", pendant},
      };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

json run_suite(std::string_view name, const SuiteParams& params, const Config& cfg) {
  const auto& suites = registry();
  auto it = suites.find(name);
  require(it != suites.end(), ErrorCode::invalid_argument,
          "unknown suite '" + std::string(name) + "'");
  Run run;
  it->second(run, params, cfg);
  json out;
  out["suite"] = std::string(name);
  out["params"] = {{"n_lo", params.n_lo}, {"n_hi", params.n_hi}, {"samples", params.samples},
                   {"seed", params.seed}};
  out["pass"] = run.violations == 0;
  out["checked"] = run.checked;
  out["violations"] = run.violations;
  out["details"] = run.details;
  if (!run.failures.empty()) out["failures"] = run.failures;
  return out;
}

}  // namespace bipop
