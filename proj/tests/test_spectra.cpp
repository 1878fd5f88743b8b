#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "bipop/constructions.hpp"
#include "bipop/enumeration.hpp"
#include "bipop/recognition.hpp"
#include "bipop/spectra.hpp"
#include "oracles.hpp"

using namespace bipop;

namespace {

Eigen::MatrixXd adjacency(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.order(), g.order());
  for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = 1;
  return a;
}

Eigen::VectorXd eigen_values(const Graph& g) {
  if (g.order() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adjacency(g));
  return es.eigenvalues();  // ascending
}

double eigen_rho(const Graph& g) { return eigen_values(g).maxCoeff(); }
double eigen_lambda(const Graph& g) { return eigen_values(g).minCoeff(); }

// Minimum least eigenvalue over edge subsets forming a connected bipartite graph.
double brute_floor(const Graph& g) {
  const auto es = g.edges();
  double best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << es.size()); ++mask) {
    std::vector<int> used(g.order(), 0);
    std::vector<Edge> pick;
    for (std::size_t i = 0; i < es.size(); ++i) {
      if ((mask >> i) & 1U) {
        pick.push_back(es[i]);
        used[es[i].first] = used[es[i].second] = 1;
      }
    }
    std::vector<int> keep, where(g.order(), -1);
    for (int v = 0; v < g.order(); ++v) {
      if (used[v]) {
        where[v] = static_cast<int>(keep.size());
        keep.push_back(v);
      }
    }
    std::vector<Edge> local;
    for (const auto& [u, v] : pick) local.emplace_back(where[u], where[v]);
    const Graph h = make_graph(static_cast<int>(keep.size()), local);
    if (!oracle::brute_connected(h) || !oracle::brute_bipartite(h)) continue;
    best = std::min(best, eigen_lambda(h));
  }
  return best;
}

}  // namespace

TEST_CASE("all eigenvalues match a dense reference solver") {
  std::mt19937_64 rng(23);
  for (int run = 0; run < 100; ++run) {
    const int n = std::uniform_int_distribution<int>(1, 30)(rng);
    const Graph g = oracle::random_connected(n, 0.2, rng);
    const auto mine = all_eigenvalues(g);
    const Eigen::VectorXd ref = eigen_values(g);
    REQUIRE(static_cast<int>(mine.size()) == n);
    for (int i = 0; i < n; ++i) CHECK(std::abs(mine[i] - ref[i]) < 1e-9);
    const EigenSystem sys = eigensystem(g);
    CHECK(sys.reconstruction_residual < 1e-9);
  }
}

TEST_CASE("Perron pair") {
  std::mt19937_64 rng(29);
  for (int run = 0; run < 100; ++run) {
    const int n = std::uniform_int_distribution<int>(2, 40)(rng);
    const Graph g = oracle::random_connected(n, 0.1, rng);
    const SpectralResult r = spectral_radius(g);
    CHECK(std::abs(r.value - eigen_rho(g)) < 1e-9);
    CHECK(r.residual < 1e-9);
    CHECK_FALSE(r.disconnected);
    // strictly positive unit vector with Rayleigh quotient rho
    double norm = 0, rq = 0;
    const Eigen::MatrixXd a = adjacency(g);
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) {
      CHECK(r.vector[i] > 0);
      x[i] = r.vector[i];
      norm += r.vector[i] * r.vector[i];
    }
    rq = x.dot(a * x);
    CHECK(std::abs(norm - 1) < 1e-9);
    CHECK(std::abs(rq - r.value) < 1e-9);
    const SpectralResult l = least_eigenvalue(g);
    CHECK(std::abs(l.value - eigen_lambda(g)) < 1e-9);
    if (is_bipartite(g)) CHECK(std::abs(l.value + r.value) < 1e-9);
  }
}

TEST_CASE("closed-form spectra of small graphs") {
  CHECK(std::abs(spectral_radius(complete(2)).value - 1) < 1e-9);
  CHECK(std::abs(spectral_radius(cycle(4)).value - 2) < 1e-9);
  CHECK(std::abs(spectral_radius(star(10)).value - 3) < 1e-9);
  CHECK(std::abs(spectral_radius(quad_book(4)).value - 3) < 1e-9);
  CHECK(std::abs(least_eigenvalue(complete(3)).value + 1) < 1e-9);
  CHECK(std::abs(spectral_radius(ladder(20)).value - eigen_rho(ladder(20))) < 1e-9);
  for (int s = 1; s <= 8; ++s) CHECK(std::abs(spectral_radius(quad_book(s)).value - (1 + std::sqrt(s))) < 1e-9);
}

TEST_CASE("disconnected graphs aggregate over components") {
  const Graph g = make_graph(7, {{0, 1}, {2, 3}, {3, 4}, {4, 5}, {5, 2}});
  const SpectralResult r = spectral_radius(g);
  CHECK(r.disconnected);
  CHECK(std::abs(r.value - 2) < 1e-9);
  CHECK(r.vector[0] == 0);
  CHECK(r.vector[6] == 0);
}

TEST_CASE("walk counts match matrix powers") {
  std::mt19937_64 rng(31);
  for (int run = 0; run < 50; ++run) {
    const int n = std::uniform_int_distribution<int>(2, 20)(rng);
    const Graph g = oracle::random_connected(n, 0.2, rng);
    const RowSumReport r = row_sums(g);
    const Eigen::MatrixXd a = adjacency(g);
    const Eigen::VectorXd one = Eigen::VectorXd::Ones(n);
    const Eigen::VectorXd w1 = a * one, w2 = a * w1, w3 = a * w2;
    for (int i = 0; i < n; ++i) {
      CHECK(r.s1[i] == std::llround(w1[i]));
      CHECK(r.s2[i] == std::llround(w2[i]));
      CHECK(r.s3[i] == std::llround(w3[i]));
    }
    CHECK(r.applicable == (is_bip_outerplanar(g) && is_2connected(g) && is_maximal_2conn_structural(g)));
  }
}

TEST_CASE("row-sum items hold on every quadrangulation n <= 14") {
  for (int n = 4; n <= 14; n += 2) {
    for (const Graph& q : enumerate({n, Family::maximal_2conn_bip_outerplanar, true, 0}).graphs) {
      const RowSumReport r = row_sums(q);
      CHECK(r.applicable);
      CHECK(r.all_pass);
      CHECK(static_cast<int>(r.cycle.size()) == n);
    }
  }
  // C4 attains items (1) and (2)
  const RowSumReport c = row_sums(cycle(4));
  for (int v = 0; v < 4; ++v) {
    CHECK(c.s1[v] == 2);
    CHECK(c.s2[v] == 4);
  }
}

TEST_CASE("bound certificates") {
  // C4: A^2 1 = 4 * 1, so x^2 with r = 4 is tight everywhere: loose, rho = 2
  const double sq[] = {1, 0, 0};
  BoundCertificate c;
  c.poly.assign(sq, sq + 3);
  c.r = 4;
  BoundCertificate out = certify_bound(cycle(4), c);
  CHECK(out.verdict == Verdict::loose);
  CHECK(out.consistent);
  CHECK(std::abs(out.rho - 2) < 1e-9);
  CHECK(std::abs(out.margin) < 1e-9);
  // star K1,5: A^2 1 = 5 * 1, so x^2 - 4 on the all-ones vector is not dominated
  c.r = 0;
  c.poly = {1, 0, -4};
  out = certify_bound(star(6), c);
  CHECK(out.verdict == Verdict::fail);
  CHECK(out.consistent);
  // the Perron vector certifies x^2 - 5 <= 0
  c.y = spectral_radius(star(6)).vector;
  c.poly = {1, 0, -5};
  c.r = 1e-6;
  out = certify_bound(star(6), c);
  CHECK(out.verdict != Verdict::fail);
  CHECK_THROWS_AS(certify_bound(make_graph(3, {{0, 1}}), c), Error);
  c.y = {-1, 1, 1, 1, 1, 1};
  CHECK_THROWS_AS(certify_bound(star(6), c), Error);
  CHECK(eval_poly(sq, 3) == 9);
}

TEST_CASE("certificate soundness: a loose or strict verdict bounds rho") {
  std::mt19937_64 rng(37);
  for (int run = 0; run < 200; ++run) {
    const int n = std::uniform_int_distribution<int>(3, 16)(rng);
    const Graph g = oracle::random_connected(n, 0.25, rng);
    BoundCertificate c;
    c.poly = {1, 0, -static_cast<double>(std::uniform_int_distribution<int>(0, n)(rng)), 0};
    c.r = std::uniform_real_distribution<double>(0, 20)(rng);
    const BoundCertificate out = certify_bound(g, c);
    CHECK(out.consistent);
    if (out.verdict != Verdict::fail) CHECK(out.f_rho <= out.r + 1e-8);
  }
}

TEST_CASE("closed-form bounds and hypotheses") {
  CHECK(closed_form_bound(BoundKind::star, 10) == doctest::Approx(3));
  CHECK(closed_form_bound(BoundKind::even_edge_most, 6) == doctest::Approx(1 + std::sqrt(2.0)));
  CHECK(closed_form_bound(BoundKind::odd_edge_most, 7) == doctest::Approx(1 + std::sqrt(3.0)));
  CHECK(closed_form_bound(BoundKind::maximal_2conn, 16) == doctest::Approx(std::sqrt(14.0)));
  CHECK(closed_form_bound(BoundKind::pendant, 36, 26) == doctest::Approx(1 + std::sqrt(30.0)));
  CHECK_THROWS_AS(closed_form_bound(BoundKind::maximal_2conn, 14), Error);
  CHECK_THROWS_AS(closed_form_bound(BoundKind::even_edge_most, 5), Error);
  CHECK_THROWS_AS(closed_form_bound(BoundKind::pendant, 36, 25), Error);
  CHECK_THROWS_AS(closed_form_bound(BoundKind::pendant, 36, 0), Error);
}

TEST_CASE("every maximal quadrangulation n = 16 stays below its bound") {
  const double bound = closed_form_bound(BoundKind::maximal_2conn, 16);
  for (const Graph& q : enumerate({16, Family::maximal_2conn_bip_outerplanar, true, 0}).graphs) {
    CHECK(spectral_radius(q).value <= bound + 1e-8);
  }
}

TEST_CASE("rotation toward the larger Perron entry increases rho") {
  // two 4-cycles sharing vertex 0; 1 and 4 are on one side
  const Graph g = make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}});
  const int t[] = {2};
  const RotationVerdict r = rotation_increases_rho(g, 4, 1, t);  // symmetric: x_4 == x_1
  CHECK(r.hypothesis_met);
  CHECK(r.increased);
  std::mt19937_64 rng(41);
  int met = 0;
  for (int run = 0; run < 3000 && met < 200; ++run) {
    const int n = std::uniform_int_distribution<int>(3, 12)(rng);
    const Graph h = oracle::random_connected(n, 0.2, rng);
    const int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (u == v) continue;
    std::vector<int> ts;
    for_each_vertex(h.neighbors(v) & ~h.neighbors(u) & ~bit(u), [&](int x) { ts.push_back(x); });
    if (ts.empty()) continue;
    RotationVerdict rv;
    try {
      rv = rotation_increases_rho(h, u, v, ts);
    } catch (const Error&) {
      continue;
    }
    if (!rv.hypothesis_met) continue;
    ++met;
    CHECK(rv.increased);
    CHECK(std::abs(rv.rho_after - eigen_rho(edge_rotation(h, u, v, ts))) < 1e-9);
  }
  CHECK(met == 200);
}

TEST_CASE("adding an edge to a connected graph increases rho") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate({n, Family::all_connected, true, 0}).graphs) {
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (!g.has_edge(u, v)) CHECK(monotonicity_check(g, u, v));
        }
      }
    }
  }
  CHECK_THROWS_AS(monotonicity_check(cycle(4), 0, 1), Error);
}

TEST_CASE("bipartite floor") {
  const FloorResult k3 = bipartite_floor(complete(3));
  CHECK(k3.lambda_h == doctest::Approx(-std::sqrt(2.0)));
  CHECK(k3.subgraph.size() == 2);
  CHECK(k3.lambda_h < k3.lambda_g - 1e-10);
  const FloorResult c5 = bipartite_floor(cycle(5));
  CHECK(c5.lambda_h == doctest::Approx(-std::sqrt(3.0)));
  const FloorResult c6 = bipartite_floor(cycle(6));
  CHECK(c6.lambda_h == doctest::Approx(-2));
  CHECK(c6.subgraph.size() == 6);
  CHECK_THROWS_AS(bipartite_floor(complete(9)), Error);
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : enumerate({n, Family::all_connected, true, 0}).graphs) {
      const FloorResult f = bipartite_floor(g);
      CHECK(std::abs(f.lambda_h - brute_floor(g)) < 1e-9);
      CHECK(f.lambda_h <= f.lambda_g + 1e-10);
      CHECK((std::abs(f.lambda_h - f.lambda_g) < 1e-10) == is_bipartite(g));
      CHECK(is_connected(f.subgraph));
      CHECK(is_bipartite(f.subgraph));
      for (const auto& [u, v] : f.edges) CHECK(g.has_edge(u, v));
    }
  }
}
