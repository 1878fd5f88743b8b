#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "bipop/constructions.hpp"
#include "bipop/enumeration.hpp"
#include "bipop/spectra.hpp"

// A quadrangulation core of order h with eps pendant edges at one root r,
// n = h + eps, over 21 <= n <= 32 and n/2 <= eps <= n - 12.

using namespace bipop;

namespace {

std::vector<std::vector<std::int64_t>> walks(const Graph& g, int k) {
  const int n = g.order();
  std::vector<std::vector<std::int64_t>> s(k + 1, std::vector<std::int64_t>(n, 1));
  for (int len = 1; len <= k; ++len) {
    for (int v = 0; v < n; ++v) {
      std::int64_t t = 0;
      for (int w = 0; w < n; ++w) {
        if (g.has_edge(v, w)) t += s[len - 1][w];
      }
      s[len][v] = t;
    }
  }
  return s;
}

struct Instance {
  Graph core;
  Graph g;
  int root;
  int eps;
};

void for_each_instance(const std::function<void(const Instance&)>& f) {
  std::map<int, std::vector<Graph>> cores;
  for (int n = 21; n <= 32; ++n) {
    for (int eps = (n + 1) / 2; eps <= n - 12; ++eps) {
      const int h = n - eps;
      if (h % 2 == 1) continue;
      if (!cores.count(h)) cores[h] = enumerate({h, Family::maximal_2conn_bip_outerplanar, true, 0}).graphs;
      for (const Graph& core : cores[h]) {
        for (int r = 0; r < h; ++r) f({core, attach_pendants(core, r, eps), r, eps});
      }
    }
  }
}

}  // namespace

TEST_CASE("pendant walk bound, literal form S3(z) <= n - 2") {
  std::size_t failures = 0, total = 0;
  for_each_instance([&](const Instance& in) {
    const auto s = walks(in.g, 3);
    const int n = in.g.order();
    bool ok = true;
    for (int z = in.core.order(); z < n; ++z) ok = ok && s[3][z] <= n - 2;
    failures += !ok;
    ++total;
  });
  MESSAGE("pendant instances violating the literal bound: " << failures << " of " << total);
  CHECK(failures == 0);
}

TEST_CASE("pendant walk bounds at the root, the core and the leaves") {
  std::size_t total = 0;
  for_each_instance([&](const Instance& in) {
    const auto s = walks(in.g, 3);
    const int n = in.g.order(), h = in.core.order(), eps = in.eps, r = in.root;
    ++total;
    // root
    CHECK(2 * s[3][r] <= 2 * (s[1][r] + 3) * s[1][r] + 3 * n - 3 * eps - 12);
    // other core vertices, with the pendant mass entering through a neighbour of the root
    for (int t = 0; t < h; ++t) {
      if (t == r) continue;
      const std::int64_t extra = in.core.has_edge(r, t) ? -eps : eps;
      CHECK(2 * s[3][t] <= 2 * s[1][t] * s[1][t] + 6 * s[1][t] + 3 * n + extra - 12);
    }
    // leaves: S3(z) = S2(r) = eps + S2_core(r) <= eps + 3h/2 - 2
    for (int z = h; z < n; ++z) CHECK(2 * s[3][z] <= 2 * n + h - 4);
    // the pendant graphs stay strictly below the star
    const double rho = spectral_radius(in.g).value;
    CHECK(rho < std::sqrt(n - 1.0) - 1e-10);
  });
  CHECK(total == 10104);
}
