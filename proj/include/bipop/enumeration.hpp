#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bipop/config.hpp"
#include "bipop/graph.hpp"

namespace bipop {

enum class Family {
  all,                              // every graph, n <= caps.all_graphs_max_order
  all_connected,                    // connected graphs, same cap
  all_connected_outerplanar,
  bipartite_outerplanar,            // disconnected graphs included
  connected_bipartite_outerplanar,
  maximal_bip_outerplanar,
  maximal_2conn_bip_outerplanar,    // quadrangulations, even n
};

const char* to_string(Family f) noexcept;
std::optional<Family> family_from_string(std::string_view s);

struct EnumSpec {
  int order = 1;
  Family family = Family::bipartite_outerplanar;
  bool iso_reduce = true;  // false is supported for the quadrangulation family only
  std::size_t cap = 0;     // 0: caps.max_results
};

struct EnumResult {
  std::vector<Graph> graphs;  // sorted by (size, canonical code) when iso-reduced
  bool truncated = false;
};

EnumResult enumerate(const EnumSpec& spec, const Config& cfg = {});

/// Quadrangulations of the labelled polygon 0..n-1 as chord lists.
std::vector<std::vector<Edge>> labeled_dissections(int n);
std::size_t labeled_dissection_count(int n);

/// One chord plan per isomorphism class, ordered by dissection code.
std::vector<std::vector<Edge>> dissection_classes(int n);

/// Maximal bipartite outerplanar graphs of order n built from the structural
/// characterization: the star, or 1-sums of quadrangulations with no two cut
/// vertices EBO-adjacent, plus pendant edges at pairwise NEBO-adjacent roots
/// not EBO-adjacent to a cut vertex. Roots at cut vertices are allowed.
EnumResult maximal_structured(int n, const Config& cfg = {});

/// Twice the edge-count bound for bipartite outerplanar graphs of order n.
int edge_bound_twice(int n);

/// Equality structure for the edge bound: K1, K2, a 2-connected maximal graph
/// (even n >= 4), or a 1-sum of two edge-most even-order pieces (odd n >= 3),
/// where `k2_is_factor` decides whether K2 counts as such a piece.
bool edge_equality_structure(const Graph& g, bool k2_is_factor = true);

enum class Objective { max_rho, min_lambda };
const char* to_string(Objective o) noexcept;

struct ScanReport {
  EnumSpec spec;
  Objective objective = Objective::max_rho;
  std::size_t count = 0;
  double best = 0;
  std::vector<Graph> winners;           // within tolerances.slack of best
  std::vector<bool> winner_edge_most;
  bool star_in_family = false;
  double star_value = 0;
  bool star_attains = false;
  std::vector<std::pair<Graph, double>> table;  // top entries, best first
  bool truncated = false;
};

ScanReport extremal_scan(const EnumSpec& spec, Objective objective, const Config& cfg = {},
                         std::size_t table_size = 0);

struct CensusReport {
  int order = 0;
  std::map<int, std::size_t> histogram;  // size -> count
  std::size_t total = 0;
  int max_m = -1;
  int bound_twice = 0;
  std::size_t violations = 0;            // graphs above the bound
  std::size_t equality = 0;              // graphs on the bound
  std::size_t mismatches = 0;            // equality != structure (K2 counted as factor)
  std::size_t literal_mismatches = 0;    // same with 2-connected factors only
  bool truncated = false;
};

CensusReport census_edge_counts(const EnumSpec& spec, const Config& cfg = {});

bool in_family(const Graph& g, Family f);

}  // namespace bipop
