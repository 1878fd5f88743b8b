#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "bipop/constructions.hpp"
#include "bipop/graph.hpp"
#include "oracles.hpp"

using namespace bipop;

TEST_CASE("builder collapses duplicates and rejects loops") {
  GraphBuilder b(3);
  b.add_edge(0, 1).add_edge(1, 0).add_edge(1, 2);
  const Graph g = b.build();
  CHECK(g.size() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.degree_sequence() == std::vector<int>{2, 1, 1});
  CHECK_THROWS_AS(GraphBuilder(3).add_edge(1, 1), Error);
  CHECK_THROWS_AS(GraphBuilder(3).add_edge(0, 3), Error);
  CHECK_THROWS_AS(GraphBuilder(65), Error);
  CHECK_THROWS_AS(g.with_edge(0, 1), Error);
  CHECK_THROWS_AS(g.without_edge(0, 2), Error);
}

TEST_CASE("with_edge and without_edge are inverse") {
  const Graph g = cycle(5);
  CHECK(g.without_edge(0, 1).with_edge(0, 1) == g);
  CHECK(g.with_edge(0, 2).size() == 6);
}

TEST_CASE("connectivity, bipartition and blocks agree with brute force for all graphs n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    oracle::for_each_labelled(n, [&](const Graph& g) {
      CHECK(is_connected(g) == oracle::brute_connected(g));
      CHECK(bipartition(g).has_value() == oracle::brute_bipartite(g));
      if (auto bp = bipartition(g)) {
        for (const auto& [u, v] : g.edges()) CHECK(bp->side[u] != bp->side[v]);
      }
      CHECK(static_cast<int>(components(g).size()) == oracle::brute_component_count(g));
      const BlockMasks bm = block_masks(g);
      for (int v = 0; v < n; ++v) CHECK(((bm.cuts >> v) & 1U) == oracle::brute_cut_vertex(g, v));
      if (is_connected(g)) {
        const BlockTree bt = block_tree(g);
        std::set<int> cuts(bt.cut_vertices.begin(), bt.cut_vertices.end());
        for (int v = 0; v < n; ++v) CHECK(cuts.count(v) == static_cast<std::size_t>(oracle::brute_cut_vertex(g, v)));
        const bool two = n >= 3 && cuts.empty();
        CHECK(is_2connected(g) == two);
        // every edge lies in exactly one block
        for (const auto& [u, v] : g.edges()) {
          int hits = 0;
          for (const auto& b : bt.blocks) {
            hits += std::count(b.begin(), b.end(), u) && std::count(b.begin(), b.end(), v);
          }
          CHECK(hits == 1);
        }
      }
    });
  }
}

TEST_CASE("k_sum identifies the joint vertices") {
  const Graph c4 = cycle(4);
  const int j0[] = {0}, j1[] = {2};
  const Graph s = k_sum(c4, c4, j0, j1);
  CHECK(s.order() == 7);
  CHECK(s.size() == 8);
  CHECK(block_tree(s).cut_vertices == std::vector<int>{0});
  const int e0[] = {0, 1}, e1[] = {0, 1};
  const Graph t = k_sum(c4, c4, e0, e1);  // shared edge counted once
  CHECK(t.order() == 6);
  CHECK(t.size() == 7);
}

TEST_CASE("induced_subgraph and relabel") {
  const Graph g = path(4);
  const int keep[] = {1, 2, 3};
  CHECK(induced_subgraph(g, keep) == path(3));
  const int perm[] = {3, 2, 1, 0};
  CHECK(relabel(g, perm) == g);
  const int bad[] = {0, 0, 1, 2};
  CHECK_THROWS_AS(relabel(g, bad), Error);
}

TEST_CASE("canonical codes separate exactly the isomorphism classes for n <= 6") {
  const std::map<int, std::size_t> known = {{1, 1}, {2, 2}, {3, 4}, {4, 11}, {5, 34}, {6, 156}};
  for (int n = 1; n <= 6; ++n) {
    std::map<std::vector<std::uint8_t>, std::string> code_to_brute;
    std::set<std::string> brute_classes;
    bool consistent = true;
    oracle::for_each_labelled(n, [&](const Graph& g) {
      const auto code = canonical_code(g);
      const std::string b = oracle::brute_canonical(g);
      brute_classes.insert(b);
      auto [it, fresh] = code_to_brute.emplace(code, b);
      if (!fresh && it->second != b) consistent = false;
    });
    CHECK(consistent);
    CHECK(code_to_brute.size() == brute_classes.size());
    CHECK(brute_classes.size() == known.at(n));
  }
}

TEST_CASE("canonical code is invariant under random relabelling") {
  std::mt19937_64 rng(7);
  for (int run = 0; run < 200; ++run) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    const Graph g = oracle::random_connected(n, 0.3, rng);
    const auto perm = oracle::random_perm(n, rng);
    const Graph h = relabel(g, perm);
    CHECK(canonical_code(g) == canonical_code(h));
    const CanonicalForm cf = canonical_form(h);
    // order[] is a labelling that reproduces the code
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[cf.order[i]] = i;
    CHECK(canonical_code(relabel(h, inv)) == cf.code);
    CHECK(isomorphic(g, h).isomorphic);
    CHECK(isomorphic(g, h).exact);
  }
}

TEST_CASE("regular graphs with equal refinement colours are told apart") {
  // C6 and two triangles are both 2-regular on 6 vertices
  const Graph c6 = cycle(6);
  const Graph tt = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(canonical_code(c6) != canonical_code(tt));
  CHECK_FALSE(isomorphic(c6, tt).isomorphic);
  // the prism and K3,3 are 3-regular on 6 vertices
  const Graph prism = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(canonical_code(prism) != canonical_code(complete_bipartite(3, 3)));
}

TEST_CASE("isomorphism beyond the canonical cap") {
  std::mt19937_64 rng(11);
  const Graph g = g1(30, 2);
  const Graph h = relabel(g, oracle::random_perm(30, rng));
  const IsoVerdict v = isomorphic(g, h);
  CHECK(v.isomorphic);
  CHECK_FALSE(v.exact);  // not 2-connected: fingerprint only
  const Graph q = ladder(20);
  const IsoVerdict w = isomorphic(q, relabel(q, oracle::random_perm(20, rng)));
  CHECK(w.isomorphic);
  CHECK(w.exact);  // 2-connected outerplanar: dihedral chord code
  CHECK_FALSE(isomorphic(ladder(20), cycle(20)).isomorphic);
  CHECK_THROWS_AS(canonical_code(cycle(13)), Error);
}
