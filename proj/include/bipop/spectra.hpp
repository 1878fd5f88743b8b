#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bipop/graph.hpp"

namespace bipop {

struct Tolerances {
  double residual = 1e-9;       // eigen residuals and reconstruction
  double slack = 1e-8;          // comparisons against closed forms
  double strict_margin = 1e-10; // strict inequalities
  double certificate = 1e-12;   // coordinatewise slack in certificates
  int max_sweeps = 100;         // Jacobi
  int max_iterations = 100000;  // power iteration polishing steps
};

struct SpectralResult {
  double value = 0;
  std::vector<double> vector;  // unit 2-norm
  double residual = 0;         // max |(A x - value x)_i|
  int iterations = 0;
  bool disconnected = false;   // aggregated over components
};

struct EigenSystem {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // vectors[k] belongs to values[k]
  double reconstruction_residual = 0;        // max row sum of |A - Q L Q^T|
  int sweeps = 0;
};

/// Cyclic Jacobi on a dense symmetric row-major n x n matrix.
EigenSystem jacobi_eigensystem(std::vector<double> a, int n, const Tolerances& tol = {});
EigenSystem eigensystem(const Graph& g, const Tolerances& tol = {});
std::vector<double> all_eigenvalues(const Graph& g, const Tolerances& tol = {});

/// Perron pair by power iteration on A + I, accelerated by repeated squaring.
/// Disconnected graphs: maximum over components, vector supported on the
/// winning component, `disconnected` set.
SpectralResult spectral_radius(const Graph& g, const Tolerances& tol = {});

SpectralResult least_eigenvalue(const Graph& g, const Tolerances& tol = {});

/// rho(G + uv) > rho(G) + strict_margin. Requires g connected and uv a non-edge.
bool monotonicity_check(const Graph& g, int u, int v, const Tolerances& tol = {});

struct RowSumItems {
  bool item1 = true;  // S1 <= n/2
  bool item2 = true;  // S2 <= n/2 + 2 S1 - 2 <= 3n/2 - 2
  bool item3 = true;  // S2(v) + S1(w) <= n + S1(v) <= 3n/2, w each cycle neighbour
  bool item4 = true;  // S3 <= S1^2 + 3 S1 + 3n/2 - 6
  bool all() const { return item1 && item2 && item3 && item4; }
};

struct RowSumReport {
  int k_max = 3;
  std::vector<std::int64_t> s1, s2, s3;  // walk counts of length 1, 2, 3
  std::vector<RowSumItems> items;
  std::vector<int> cycle;    // Hamilton cycle used for item (3), empty if none
  bool applicable = false;   // maximal 2-connected bipartite outerplanar input
  bool all_pass = false;     // every available item at every vertex
};

/// Exact walk counts by repeated products with the all-ones vector.
RowSumReport row_sums(const Graph& g, int k_max = 3);

enum class Verdict { loose, strict, fail };
const char* to_string(Verdict v) noexcept;

struct BoundCertificate {
  std::vector<double> poly;  // highest degree first
  std::vector<double> y;     // empty means all ones
  double r = 0;
  Verdict verdict = Verdict::fail;
  std::vector<double> fy;    // f(A) y
  double rho = 0;
  double f_rho = 0;
  double margin = 0;         // r - f(rho)
  bool consistent = true;    // the verdict's claim holds for the computed rho
};

double eval_poly(std::span<const double> poly, double x);

/// f(A) y by Horner products. loose: all (f(A)y)_i <= r y_i + certificate;
/// strict: additionally some (f(A)y)_i < r y_i - certificate. Requires g
/// connected, y >= 0 and y != 0.
BoundCertificate certify_bound(const Graph& g, BoundCertificate cert, const Tolerances& tol = {});

enum class BoundKind { even_edge_most, odd_edge_most, maximal_2conn, pendant, star };
const char* to_string(BoundKind k) noexcept;

/// Numeric bound with its hypotheses enforced (violations name the hypothesis).
double closed_form_bound(BoundKind kind, int n, int eps = 0);

struct RotationVerdict {
  bool hypothesis_met = false;  // x_u >= x_v
  bool increased = false;       // rho(G*) > rho(G) + strict_margin
  double x_u = 0, x_v = 0;
  double rho_before = 0, rho_after = 0;
};

RotationVerdict rotation_increases_rho(const Graph& g, int u, int v, std::span<const int> targets,
                                       const Tolerances& tol = {});

inline constexpr int kFloorMaxOrder = 8;

struct FloorResult {
  Graph subgraph;             // relabelled onto 0..k-1 in vertex order
  std::vector<int> vertices;  // host labels
  std::vector<Edge> edges;    // host labels
  double lambda_h = 0;
  double lambda_g = 0;
};

/// Connected bipartite subgraph of minimum least eigenvalue. Exact: every
/// such subgraph lies inside the cut subgraph of some vertex 2-colouring, so
/// the search runs over all 2^(n-1) cuts. Requires g connected.
FloorResult bipartite_floor(const Graph& g, const Tolerances& tol = {},
                            int max_order = kFloorMaxOrder);

}  // namespace bipop
