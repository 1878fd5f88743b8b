#include "bipop/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bipop/constructions.hpp"
#include "bipop/embedding.hpp"
#include "bipop/recognition.hpp"

namespace bipop {

namespace {

std::vector<double> adjacency(const Graph& g) {
  const int n = g.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (const auto& [u, v] : g.edges()) {
    a[u * n + v] = 1.0;
    a[v * n + u] = 1.0;
  }
  return a;
}

std::vector<double> mul_adj(const Graph& g, const std::vector<double>& x) {
  std::vector<double> y(x.size(), 0.0);
  for (int v = 0; v < g.order(); ++v) {
    double s = 0;
    for_each_vertex(g.neighbors(v), [&](int w) { s += x[w]; });
    y[v] = s;
  }
  return y;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

void normalize(std::vector<double>& x) {
  const double nrm = std::sqrt(dot(x, x));
  for (double& v : x) v /= nrm;
}

double eigen_residual(const Graph& g, const std::vector<double>& x, double value) {
  const auto ax = mul_adj(g, x);
  double r = 0;
  for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::abs(ax[i] - value * x[i]));
  return r;
}

// Perron pair of a connected graph.
SpectralResult perron_connected(const Graph& g, const Tolerances& tol) {
  const int n = g.order();
  SpectralResult res;
  if (n == 1) {
    res.vector = {1.0};
    return res;
  }
  auto finish = [&](std::vector<double> x) {
    if (std::accumulate(x.begin(), x.end(), 0.0) < 0) {
      for (double& v : x) v = -v;
    }
    normalize(x);
    res.value = dot(x, mul_adj(g, x));
    res.residual = eigen_residual(g, x, res.value);
    res.vector = std::move(x);
  };

  // P <- (A + I)^(2^k), rescaled; its columns align with the Perron vector.
  std::vector<double> p = adjacency(g);
  for (int i = 0; i < n; ++i) p[i * n + i] += 1.0;
  std::vector<double> q(p.size());
  for (int k = 0; k < 48; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double s = 0;
        for (int l = 0; l < n; ++l) s += p[i * n + l] * p[l * n + j];
        q[i * n + j] = s;
      }
    }
    const double mx = *std::max_element(q.begin(), q.end());
    for (std::size_t i = 0; i < q.size(); ++i) p[i] = q[i] / mx;
    ++res.iterations;
    std::vector<double> x(n, 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) x[i] += p[i * n + j];
    }
    finish(std::move(x));
    if (res.residual <= 0.1 * tol.residual) return res;
  }
  // Polish with plain power steps on A + I.
  while (res.residual > tol.residual && res.iterations < tol.max_iterations) {
    auto x = mul_adj(g, res.vector);
    for (int i = 0; i < n; ++i) x[i] += res.vector[i];
    ++res.iterations;
    finish(std::move(x));
  }
  require(res.residual <= tol.residual, ErrorCode::not_converged,
          "spectral_radius: residual " + std::to_string(res.residual) + " after " +
              std::to_string(res.iterations) + " iterations");
  return res;
}

}  // namespace

EigenSystem jacobi_eigensystem(std::vector<double> a, int n, const Tolerances& tol) {
  require(n >= 1 && static_cast<int>(a.size()) == n * n, ErrorCode::invalid_argument,
          "jacobi: matrix size mismatch");
  const std::vector<double> orig = a;
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

  double scale = 0;
  for (double x : a) scale += x * x;
  scale = std::sqrt(scale);

  EigenSystem es;
  for (; es.sweeps < tol.max_sweeps; ++es.sweeps) {
    double off = 0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
    }
    if (std::sqrt(off) <= 1e-15 * std::max(scale, 1.0)) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int x, int y) { return a[x * n + x] < a[y * n + y]; });
  for (int k : idx) {
    es.values.push_back(a[k * n + k]);
    std::vector<double> col(n);
    for (int i = 0; i < n; ++i) col[i] = v[i * n + k];
    es.vectors.push_back(std::move(col));
  }

  for (int i = 0; i < n; ++i) {
    double row = 0;
    for (int j = 0; j < n; ++j) {
      double r = orig[i * n + j];
      for (int k = 0; k < n; ++k) r -= es.vectors[k][i] * es.values[k] * es.vectors[k][j];
      row += std::abs(r);
    }
    es.reconstruction_residual = std::max(es.reconstruction_residual, row);
  }
  require(es.reconstruction_residual <= tol.residual, ErrorCode::not_converged,
          "jacobi: reconstruction residual " + std::to_string(es.reconstruction_residual) +
              " after " + std::to_string(es.sweeps) + " sweeps");
  return es;
}

EigenSystem eigensystem(const Graph& g, const Tolerances& tol) {
  require(g.order() >= 1, ErrorCode::invalid_argument, "eigensystem: empty graph");
  return jacobi_eigensystem(adjacency(g), g.order(), tol);
}

std::vector<double> all_eigenvalues(const Graph& g, const Tolerances& tol) {
  return eigensystem(g, tol).values;
}

SpectralResult spectral_radius(const Graph& g, const Tolerances& tol) {
  require(g.order() >= 1, ErrorCode::invalid_argument, "spectral_radius: empty graph");
  const auto comps = components(g);
  if (comps.size() == 1) return perron_connected(g, tol);
  SpectralResult best;
  bool have = false;
  for (const auto& c : comps) {
    SpectralResult r = perron_connected(induced_subgraph(g, c), tol);
    if (!have || r.value > best.value) {
      best.value = r.value;
      best.residual = r.residual;
      best.vector.assign(g.order(), 0.0);
      for (std::size_t i = 0; i < c.size(); ++i) best.vector[c[i]] = r.vector[i];
      have = true;
    }
    best.iterations += r.iterations;
  }
  best.disconnected = true;
  return best;
}

SpectralResult least_eigenvalue(const Graph& g, const Tolerances& tol) {
  const EigenSystem es = eigensystem(g, tol);
  SpectralResult r;
  r.value = es.values.front();
  r.vector = es.vectors.front();
  r.residual = eigen_residual(g, r.vector, r.value);
  r.iterations = es.sweeps;
  r.disconnected = !is_connected(g);
  require(r.residual <= tol.residual, ErrorCode::not_converged,
          "least_eigenvalue: residual " + std::to_string(r.residual));
  return r;
}

bool monotonicity_check(const Graph& g, int u, int v, const Tolerances& tol) {
  require(u >= 0 && v >= 0 && u < g.order() && v < g.order() && u != v, ErrorCode::invalid_argument,
          "monotonicity_check: bad vertex pair");
  require(!g.has_edge(u, v), ErrorCode::invalid_argument, "monotonicity_check: uv is an edge");
  require(is_connected(g), ErrorCode::precondition_failed,
          "monotonicity_check: graph is not connected");
  return spectral_radius(g.with_edge(u, v), tol).value > spectral_radius(g, tol).value +
                                                             tol.strict_margin;
}

RowSumReport row_sums(const Graph& g, int k_max) {
  require(k_max >= 1 && k_max <= 3, ErrorCode::invalid_argument, "row_sums: k_max outside [1, 3]");
  const int n = g.order();
  RowSumReport rep;
  rep.k_max = k_max;
  auto step = [&](const std::vector<std::int64_t>& x) {
    std::vector<std::int64_t> y(n, 0);
    for (int v = 0; v < n; ++v) for_each_vertex(g.neighbors(v), [&](int w) { y[v] += x[w]; });
    return y;
  };
  rep.s1 = step(std::vector<std::int64_t>(n, 1));
  if (k_max >= 2) rep.s2 = step(rep.s1);
  if (k_max >= 3) rep.s3 = step(rep.s2);

  rep.applicable = n >= 4 && is_2connected(g) && is_bip_outerplanar(g) &&
                   is_maximal_2conn_structural(g);
  if (is_2connected(g)) {
    if (auto c = outer_cycle(g)) rep.cycle = *c;
  }
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < rep.cycle.size(); ++i) pos[rep.cycle[i]] = static_cast<int>(i);

  // Doubled to stay in integers.
  rep.items.resize(n);
  rep.all_pass = true;
  for (int v = 0; v < n; ++v) {
    RowSumItems& it = rep.items[v];
    const std::int64_t d = rep.s1[v];
    it.item1 = 2 * d <= n;
    if (k_max >= 2) {
      const std::int64_t s2 = rep.s2[v];
      it.item2 = 2 * s2 <= n + 4 * d - 4 && n + 4 * d - 4 <= 3 * n - 4;
      if (!rep.cycle.empty()) {
        const int len = static_cast<int>(rep.cycle.size());
        for (int w : {rep.cycle[(pos[v] + 1) % len], rep.cycle[(pos[v] + len - 1) % len]}) {
          if (s2 + rep.s1[w] > n + d || 2 * (n + d) > 3 * n) it.item3 = false;
        }
      }
    }
    if (k_max >= 3) it.item4 = 2 * rep.s3[v] <= 2 * d * d + 6 * d + 3 * n - 12;
    if (!it.all()) rep.all_pass = false;
  }
  return rep;
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::loose: return "loose";
    case Verdict::strict: return "strict";
    case Verdict::fail: return "fail";
  }
  return "unknown";
}

double eval_poly(std::span<const double> poly, double x) {
  double acc = 0;
  for (double c : poly) acc = acc * x + c;
  return acc;
}

BoundCertificate certify_bound(const Graph& g, BoundCertificate cert, const Tolerances& tol) {
  const int n = g.order();
  require(!cert.poly.empty(), ErrorCode::invalid_argument, "certify_bound: empty polynomial");
  if (cert.y.empty()) cert.y.assign(n, 1.0);
  require(static_cast<int>(cert.y.size()) == n, ErrorCode::invalid_argument,
          "certify_bound: y has wrong length");
  bool nonzero = false;
  for (double yi : cert.y) {
    require(yi >= 0 && std::isfinite(yi), ErrorCode::invalid_argument,
            "certify_bound: y must be nonnegative");
    nonzero = nonzero || yi > 0;
  }
  require(nonzero, ErrorCode::invalid_argument, "certify_bound: y must be nonzero");
  require(is_connected(g), ErrorCode::precondition_failed,
          "certify_bound: graph is not connected");

  std::vector<double> z(n);
  for (int i = 0; i < n; ++i) z[i] = cert.poly[0] * cert.y[i];
  for (std::size_t c = 1; c < cert.poly.size(); ++c) {
    z = mul_adj(g, z);
    for (int i = 0; i < n; ++i) z[i] += cert.poly[c] * cert.y[i];
  }
  cert.fy = z;

  bool all_le = true, some_lt = false;
  for (int i = 0; i < n; ++i) {
    const double ry = cert.r * cert.y[i];
    if (z[i] > ry + tol.certificate) all_le = false;
    if (z[i] < ry - tol.certificate) some_lt = true;
  }
  cert.verdict = !all_le ? Verdict::fail : (some_lt ? Verdict::strict : Verdict::loose);

  cert.rho = spectral_radius(g, tol).value;
  cert.f_rho = eval_poly(cert.poly, cert.rho);
  cert.margin = cert.r - cert.f_rho;
  switch (cert.verdict) {
    case Verdict::loose: cert.consistent = cert.margin >= -tol.slack; break;
    case Verdict::strict: cert.consistent = cert.margin > tol.strict_margin; break;
    case Verdict::fail: cert.consistent = true; break;
  }
  return cert;
}

const char* to_string(BoundKind k) noexcept {
  switch (k) {
    case BoundKind::even_edge_most: return "even_edge_most";
    case BoundKind::odd_edge_most: return "odd_edge_most";
    case BoundKind::maximal_2conn: return "maximal_2conn";
    case BoundKind::pendant: return "pendant";
    case BoundKind::star: return "star";
  }
  return "unknown";
}

double closed_form_bound(BoundKind kind, int n, int eps) {
  auto need = [](bool ok, const std::string& hyp) {
    require(ok, ErrorCode::invalid_argument, "closed_form_bound: hypothesis violated: " + hyp);
  };
  switch (kind) {
    case BoundKind::even_edge_most:
      need(n >= 4 && n % 2 == 0, "n >= 4 even");
      return 1.0 + std::sqrt(n / 2.0 - 1.0);
    case BoundKind::odd_edge_most:
      need(n >= 3 && n % 2 == 1, "n >= 3 odd");
      return 1.0 + std::sqrt(n / 2.0 - 0.5);
    case BoundKind::maximal_2conn:
      need(n >= 16 && n % 2 == 0, "n >= 16 even");
      return std::sqrt(3.0 * n / 4.0 + 2.0);
    case BoundKind::pendant:
      need(eps >= 1 && eps <= n - 4, "1 <= eps <= n-4");
      need((n - eps) % 2 == 0, "n - eps even (order of the 2-connected part)");
      return 1.0 + std::sqrt((n + eps - 2) / 2.0);
    case BoundKind::star:
      need(n >= 1, "n >= 1");
      return std::sqrt(n - 1.0);
  }
  fail(ErrorCode::invalid_argument, "closed_form_bound: unknown kind");
}

RotationVerdict rotation_increases_rho(const Graph& g, int u, int v, std::span<const int> targets,
                                       const Tolerances& tol) {
  require(!targets.empty(), ErrorCode::invalid_argument, "rotation: empty target list");
  const Graph h = edge_rotation(g, u, v, targets);
  const SpectralResult before = spectral_radius(g, tol);
  RotationVerdict out;
  out.x_u = before.vector[u];
  out.x_v = before.vector[v];
  out.rho_before = before.value;
  out.hypothesis_met = out.x_u >= out.x_v - tol.certificate;
  if (!out.hypothesis_met) return out;
  out.rho_after = spectral_radius(h, tol).value;
  out.increased = out.rho_after > out.rho_before + tol.strict_margin;
  return out;
}

FloorResult bipartite_floor(const Graph& g, const Tolerances& tol, int max_order) {
  const int n = g.order();
  require(n <= max_order, ErrorCode::cap_exceeded,
          "bipartite_floor: order " + std::to_string(n) + " exceeds " + std::to_string(max_order));
  require(is_connected(g), ErrorCode::precondition_failed,
          "bipartite_floor: graph is not connected");
  FloorResult out;
  out.lambda_g = least_eigenvalue(g, tol).value;
  double best = -1;
  // vertex n-1 is fixed on side 0; the complement gives the same cut
  for (VertexSet side = 0; side < (VertexSet{1} << (n - 1)); ++side) {
    GraphBuilder b(n);
    for (const auto& [x, y] : g.edges()) {
      if (((side >> x) & 1U) != ((side >> y) & 1U)) b.add_edge(x, y);
    }
    const Graph cut = b.build();
    for (const auto& comp : components(cut)) {
      const Graph h = induced_subgraph(cut, comp);
      const double rho = h.order() == 1 ? 0.0 : spectral_radius(h, tol).value;
      if (rho > best + 1e-12) {
        best = rho;
        out.subgraph = h;
        out.vertices = comp;
        out.edges.clear();
        for (const auto& [x, y] : h.edges()) out.edges.emplace_back(comp[x], comp[y]);
      }
    }
  }
  out.lambda_h = -best;
  return out;
}

}  // namespace bipop
