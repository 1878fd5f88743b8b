#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bipop/constructions.hpp"
#include "bipop/enumeration.hpp"
#include "bipop/recognition.hpp"
#include "oracles.hpp"

using namespace bipop;

TEST_CASE("forbidden minors") {
  CHECK(has_minor(complete(4), MinorTarget::K4));
  CHECK_FALSE(has_minor(complete(4), MinorTarget::K23));
  CHECK(has_minor(complete_bipartite(2, 3), MinorTarget::K23));
  CHECK_FALSE(has_minor(complete_bipartite(2, 3), MinorTarget::K4));
  CHECK_FALSE(is_outerplanar(complete(4)));
  CHECK_FALSE(is_outerplanar(complete_bipartite(2, 3)));
  CHECK(is_outerplanar(complete(4).without_edge(0, 1)));
  CHECK(is_outerplanar(cycle(9)));
  CHECK(is_outerplanar(star(12)));
  // subdivided K2,3 is caught only through contraction
  const Graph sub = make_graph(7, {{0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}, {0, 5}, {5, 6}, {6, 1}});
  CHECK(has_minor(sub, MinorTarget::K23));
  CHECK_FALSE(is_outerplanar_peeling(sub));
}

TEST_CASE("both outerplanarity routes match the circle-drawing oracle on all graphs n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    const auto all = enumerate({n, Family::all, true, 0}).graphs;
    for (const Graph& g : all) {
      const bool truth = oracle::brute_outerplanar(g);
      CHECK(is_outerplanar_peeling(g) == truth);
      CHECK(is_outerplanar_minor(g) == truth);
      CHECK(is_bipartite(g) == oracle::brute_bipartite(g));
    }
  }
}

TEST_CASE("recognizers agree on random larger graphs") {
  std::mt19937_64 rng(3);
  for (int run = 0; run < 300; ++run) {
    const int n = std::uniform_int_distribution<int>(6, 12)(rng);
    const Graph g = oracle::random_connected(n, 0.12, rng);
    CHECK(is_outerplanar_peeling(g) == is_outerplanar_minor(g));
  }
}

TEST_CASE("maximality oracle on small cases") {
  CHECK(is_maximal_bip_outerplanar(cycle(4)));
  CHECK(is_maximal_bip_outerplanar(path(3)));
  CHECK(is_maximal_bip_outerplanar(star(7)));
  CHECK_FALSE(is_maximal_bip_outerplanar(path(4)));
  CHECK_FALSE(is_maximal_bip_outerplanar(cycle(6)));
  CHECK(is_maximal_bip_outerplanar(ladder(6)));
  CHECK_THROWS_AS(is_maximal_bip_outerplanar(cycle(5)), Error);
  CHECK_THROWS_AS(is_maximal_bip_outerplanar(complete_bipartite(2, 3)), Error);
}

TEST_CASE("EBO-adjacency matches the definition over circle drawings") {
  SUBCASE("all bipartite outerplanar graphs n <= 7") {
    for (int n = 2; n <= 7; ++n) {
      for (const Graph& g : enumerate({n, Family::bipartite_outerplanar, true, 0}).graphs) {
        for (const auto& [u, v] : g.edges()) CHECK(ebo_adjacent(g, u, v) == oracle::brute_ebo(g, u, v));
      }
    }
  }
  SUBCASE("H1") {
    const Graph h = h_case(1);
    for (const auto& [u, v] : h.edges()) CHECK(ebo_adjacent(h, u, v) == oracle::brute_ebo(h, u, v));
  }
  CHECK_THROWS_AS(ebo_adjacent(cycle(4), 0, 2), Error);
}

TEST_CASE("structural characterization agrees with the maximality oracle for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : enumerate({n, Family::bipartite_outerplanar, true, 0}).graphs) {
      const bool maximal = is_maximal_bip_outerplanar(g);
      CHECK(analyze_structure(g).predicts_maximal() == maximal);
      if (maximal) {
        CHECK_NOTHROW(structural_decompose(g));
      } else {
        CHECK_THROWS_AS(structural_decompose(g), Error);
      }
    }
  }
}

TEST_CASE("a pendant at a cut vertex keeps the graph maximal") {
  // two 4-cycles sharing vertex 0, pendant at 0
  const Graph g = make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}, {0, 7}});
  CHECK(is_maximal_bip_outerplanar(g));
  const MaximalStructure s = structural_decompose(g);
  CHECK(s.kind == StructureKind::composite);
  CHECK(s.cut_vertices == std::vector<int>{0});
  CHECK(s.pendant_roots.at(0) == 1);
}

TEST_CASE("clause failures are visible separately") {
  // pendants at both ends of a C4 edge: roots are EBO-adjacent
  const Graph two_roots = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}});
  const StructureCheck a = analyze_structure(two_roots);
  CHECK(a.blocks_ok);
  CHECK_FALSE(a.roots_nebo);
  CHECK_FALSE(a.predicts_maximal());
  CHECK_FALSE(is_maximal_bip_outerplanar(two_roots));
  // pendant next to the cut vertex of two 4-cycles
  const Graph near_cut = make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}, {1, 7}});
  const StructureCheck b = analyze_structure(near_cut);
  CHECK_FALSE(b.roots_off_cuts);
  CHECK_FALSE(is_maximal_bip_outerplanar(near_cut));
  // C6 block is not a quadrangulation
  CHECK_FALSE(analyze_structure(cycle(6)).blocks_ok);
}

TEST_CASE("face test for 2-connected graphs") {
  CHECK(is_maximal_2conn_structural(cycle(4)));
  CHECK(is_maximal_2conn_structural(ladder(8)));
  CHECK_FALSE(is_maximal_2conn_structural(cycle(8)));
  CHECK_THROWS_AS(is_maximal_2conn_structural(path(4)), Error);
}

TEST_CASE("star detection") {
  CHECK(is_star(star(1)));
  CHECK(is_star(star(2)));
  CHECK(is_star(star(9)));
  CHECK_FALSE(is_star(path(4)));
  CHECK(structural_decompose(star(6)).kind == StructureKind::star);
}
