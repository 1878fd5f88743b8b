#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <set>

#include "bipop/constructions.hpp"
#include "bipop/embedding.hpp"
#include "bipop/enumeration.hpp"
#include "bipop/recognition.hpp"
#include "oracles.hpp"

using namespace bipop;

namespace {

// Classes of all labelled graphs of order n with property p, by brute canonical form.
template <class P>
std::size_t brute_class_count(int n, P p) {
  std::set<std::string> classes;
  oracle::for_each_labelled(n, [&](const Graph& g) {
    if (p(g)) classes.insert(oracle::brute_canonical(g));
  });
  return classes.size();
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Config with_threads(int t) {
  Config c;
  c.threads = t;
  return c;
}

}  // namespace

TEST_CASE("orderly generation matches brute-force class counts for n <= 6") {
  const std::size_t all_counts[] = {0, 1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) {
    CHECK(enumerate({n, Family::all, true, 0}).graphs.size() == all_counts[n]);
    CHECK(enumerate({n, Family::all_connected, true, 0}).graphs.size() ==
          brute_class_count(n, [](const Graph& g) { return oracle::brute_connected(g); }));
    CHECK(enumerate({n, Family::bipartite_outerplanar, true, 0}).graphs.size() ==
          brute_class_count(n, [](const Graph& g) { return oracle::brute_bipartite(g) && oracle::brute_outerplanar(g); }));
    CHECK(enumerate({n, Family::all_connected_outerplanar, true, 0}).graphs.size() ==
          brute_class_count(n, [](const Graph& g) { return oracle::brute_connected(g) && oracle::brute_outerplanar(g); }));
  }
  CHECK(enumerate({7, Family::all, true, 0}).graphs.size() == 1044);
}

TEST_CASE("enumerated graphs are distinct, in family and sorted") {
  for (Family f : {Family::bipartite_outerplanar, Family::connected_bipartite_outerplanar,
                   Family::maximal_bip_outerplanar, Family::all_connected_outerplanar}) {
    for (int n = 1; n <= 8; ++n) {
      const auto gs = enumerate({n, f, true, 0}).graphs;
      std::set<std::vector<std::uint8_t>> codes;
      for (const Graph& g : gs) {
        CHECK(in_family(g, f));
        codes.insert(canonical_code(g));
      }
      CHECK(codes.size() == gs.size());
      for (std::size_t i = 1; i < gs.size(); ++i) {
        CHECK(std::make_pair(gs[i - 1].size(), canonical_code(gs[i - 1])) <
              std::make_pair(gs[i].size(), canonical_code(gs[i])));
      }
    }
  }
}

TEST_CASE("quadrangulation counts") {
  CHECK(enumerate({4, Family::maximal_2conn_bip_outerplanar, true, 0}).graphs.size() == 1);
  CHECK(enumerate({6, Family::maximal_2conn_bip_outerplanar, true, 0}).graphs.size() == 1);
  CHECK(enumerate({10, Family::maximal_2conn_bip_outerplanar, true, 0}).graphs.size() == 5);
  CHECK(enumerate({7, Family::maximal_2conn_bip_outerplanar, true, 0}).graphs.empty());
  for (int n = 4; n <= 12; n += 2) CHECK(labeled_dissection_count(n) == oracle::brute_dissection_count(n));
  CHECK(labeled_dissection_count(10) == 55);
  for (int n = 4; n <= 20; n += 2) {
    const int k = n / 2 - 1;
    CHECK(labeled_dissection_count(n) == binomial(3 * k, k) / (2 * k + 1));
  }
  CHECK(labeled_dissection_count(20) == 246675);
  CHECK(labeled_dissections(12).size() == 273);
  const auto labelled = enumerate({10, Family::maximal_2conn_bip_outerplanar, false, 0});
  CHECK(labelled.graphs.size() == 55);
}

TEST_CASE("quadrangulation classes agree with orderly generation where both run") {
  for (int n = 4; n <= 10; n += 2) {
    std::set<std::vector<std::uint8_t>> from_dissections, from_orderly;
    for (const auto& plan : dissection_classes(n)) from_dissections.insert(canonical_code(quadrangulation(n, plan)));
    for (const Graph& g : enumerate({n, Family::maximal_bip_outerplanar, true, 0}).graphs) {
      if (is_2connected(g)) from_orderly.insert(canonical_code(g));
    }
    CHECK(from_dissections == from_orderly);
  }
}

TEST_CASE("structured generator equals the filtered census for n <= 10") {
  for (int n = 1; n <= 10; ++n) {
    std::set<std::vector<std::uint8_t>> structured, filtered;
    for (const Graph& g : maximal_structured(n).graphs) structured.insert(canonical_code(g));
    for (const Graph& g : enumerate({n, Family::maximal_bip_outerplanar, true, 0}).graphs) filtered.insert(canonical_code(g));
    CHECK(structured == filtered);
  }
}

TEST_CASE("edge bound and equality structure over the census") {
  CHECK(edge_bound_twice(1) == 0);
  CHECK(edge_bound_twice(2) == 2);
  CHECK(edge_bound_twice(3) == 4);
  CHECK(edge_bound_twice(4) == 8);
  CHECK(edge_bound_twice(5) == 10);
  for (int n = 1; n <= 10; ++n) {
    const CensusReport r = census_edge_counts({n, Family::bipartite_outerplanar, true, 0});
    CHECK(r.violations == 0);
    CHECK(r.mismatches == 0);
    CHECK(2 * r.max_m == r.bound_twice);
    CHECK(r.equality > 0);
  }
  CHECK(census_edge_counts({4, Family::bipartite_outerplanar, true, 0}).max_m == 4);
  CHECK(census_edge_counts({5, Family::bipartite_outerplanar, true, 0}).max_m == 5);
  CHECK(census_edge_counts({1, Family::bipartite_outerplanar, true, 0}).max_m == 0);
  // literal reading: odd n with a K2 factor is an edge-most graph the strict form misses
  CHECK(census_edge_counts({5, Family::bipartite_outerplanar, true, 0}).literal_mismatches > 0);
  CHECK(edge_equality_structure(attach_pendants(cycle(4), 0, 1)));
  CHECK_FALSE(edge_equality_structure(attach_pendants(cycle(4), 0, 1), false));
  CHECK_THROWS_AS(census_edge_counts({5, Family::all, true, 0}), Error);
}

TEST_CASE("extremal scans on small orders") {
  const ScanReport s4 = extremal_scan({4, Family::connected_bipartite_outerplanar, true, 0}, Objective::max_rho);
  CHECK(s4.star_in_family);
  CHECK(s4.best >= std::sqrt(3.0) - 1e-9);
  const ScanReport s6 = extremal_scan({6, Family::connected_bipartite_outerplanar, true, 0}, Objective::max_rho);
  REQUIRE(s6.winners.size() == 1);
  CHECK(s6.winner_edge_most[0]);
  CHECK(std::abs(s6.best - (1 + std::sqrt(2.0))) < 1e-9);
  CHECK_FALSE(s6.star_attains);
  const ScanReport l5 = extremal_scan({5, Family::all_connected_outerplanar, true, 0}, Objective::min_lambda, {}, 3);
  CHECK(l5.best <= -2 + 1e-9);
  CHECK(l5.table.size() == 3);
}

TEST_CASE("results do not depend on the thread count") {
  for (Family f : {Family::bipartite_outerplanar, Family::all_connected_outerplanar}) {
    const auto a = enumerate({8, f, true, 0}, with_threads(1)).graphs;
    const auto b = enumerate({8, f, true, 0}, with_threads(8)).graphs;
    CHECK(a == b);
  }
  const auto a = enumerate({14, Family::maximal_2conn_bip_outerplanar, true, 0}, with_threads(1)).graphs;
  const auto b = enumerate({14, Family::maximal_2conn_bip_outerplanar, true, 0}, with_threads(8)).graphs;
  CHECK(a == b);
}

TEST_CASE("caps and truncation") {
  const EnumResult r = enumerate({8, Family::bipartite_outerplanar, true, 10});
  CHECK(r.truncated);
  CHECK(r.graphs.size() == 10);
  CHECK_THROWS_AS(enumerate({8, Family::all, true, 0}), Error);
  CHECK_THROWS_AS(enumerate({11, Family::bipartite_outerplanar, true, 0}), Error);
  CHECK_THROWS_AS(enumerate({22, Family::maximal_2conn_bip_outerplanar, true, 0}), Error);
  CHECK_THROWS_AS(enumerate({6, Family::bipartite_outerplanar, false, 0}), Error);
  Config raised;
  raised.caps.all_graphs_max_order = 8;
  CHECK(enumerate({8, Family::all, true, 0}, raised).graphs.size() == 12346);
}

TEST_CASE("family names round trip") {
  for (Family f : {Family::all, Family::all_connected, Family::all_connected_outerplanar, Family::bipartite_outerplanar,
                   Family::connected_bipartite_outerplanar, Family::maximal_bip_outerplanar,
                   Family::maximal_2conn_bip_outerplanar}) {
    CHECK(family_from_string(to_string(f)) == f);
  }
  CHECK(family_from_string("quadrangulation") == Family::maximal_2conn_bip_outerplanar);
  CHECK_FALSE(family_from_string("planar").has_value());
}
