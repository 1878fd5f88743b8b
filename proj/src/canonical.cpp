#include <algorithm>
#include <cmath>
#include <string>

#include "bipop/embedding.hpp"
#include "bipop/graph.hpp"
#include "bipop/spectra.hpp"

namespace bipop {

namespace {

// Iterated colour refinement. Colours are ranks of (colour, sorted neighbour
// colours) signatures, so they are isomorphism invariant.
std::vector<int> refine_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<int> nb;
      for_each_vertex(g.neighbors(v), [&](int u) { nb.push_back(colour[u]); });
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      colour[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                   distinct.begin());
    }
    const int now = static_cast<int>(distinct.size());
    if (now == classes) break;
    classes = now;
  }
  return colour;
}

// String order on columns: bit i of a column is the entry for position i, and
// position 0 comes first in the code.
bool column_less(VertexSet a, VertexSet b) {
  const VertexSet diff = a ^ b;
  if (!diff) return false;
  return (b >> std::countr_zero(diff)) & 1U;
}

struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<int> colour;
  std::vector<int> slot_colour;  // colour required at each position
  std::vector<int> order;
  std::vector<VertexSet> cols;
  std::vector<int> best_order;
  std::vector<VertexSet> best_cols;
  bool have_best = false;

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {
    colour = refine_colours(g);
    slot_colour = colour;
    std::sort(slot_colour.begin(), slot_colour.end());
    order.assign(n, -1);
    cols.assign(n, 0);
  }

  VertexSet column_of(int v, int pos) const {
    VertexSet c = 0;
    for (int i = 0; i < pos; ++i) {
      if (g.has_edge(order[i], v)) c |= bit(i);
    }
    return c;
  }

  // smaller: the placed prefix is already below the best code, so the first
  // leaf reached replaces it. Afterwards the prefix equals the best prefix.
  void dfs(int pos, VertexSet used, bool smaller) {
    if (pos == n) {
      if (!have_best || smaller) {
        best_order = order;
        best_cols = cols;
        have_best = true;
      }
      return;
    }
    std::vector<int> cands;
    VertexSet min_col = 0;
    bool first = true;
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1U || colour[v] != slot_colour[pos]) continue;
      const VertexSet c = column_of(v, pos);
      if (first || column_less(c, min_col)) {
        cands.assign(1, v);
        min_col = c;
        first = false;
      } else if (c == min_col) {
        cands.push_back(v);
      }
    }
    bool next = smaller;
    if (have_best && !smaller) {
      if (column_less(best_cols[pos], min_col)) return;
      next = column_less(min_col, best_cols[pos]);
    }
    // Unplaced twins (same neighbourhood apart from each other) give
    // isomorphic subtrees via the transposition automorphism; keep one.
    std::vector<int> reps;
    for (int v : cands) {
      bool twin = false;
      for (int r : reps) {
        if ((g.neighbors(v) & ~bit(r)) == (g.neighbors(r) & ~bit(v))) {
          twin = true;
          break;
        }
      }
      if (!twin) reps.push_back(v);
    }
    cols[pos] = min_col;
    for (int v : reps) {
      order[pos] = v;
      dfs(pos + 1, used | bit(v), next);
      next = false;
    }
    order[pos] = -1;
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  require(n <= kCanonicalMaxOrder, ErrorCode::cap_exceeded,
          "canonical_form: order " + std::to_string(n) + " exceeds exhaustive cap " +
              std::to_string(kCanonicalMaxOrder));
  CanonicalForm out;
  out.code.push_back(static_cast<std::uint8_t>(n));
  if (n == 0) return out;

  CanonSearch search(g);
  search.dfs(0, 0, false);
  out.order = search.best_order;

  std::uint8_t byte = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      byte = static_cast<std::uint8_t>((byte << 1) | ((search.best_cols[j] >> i) & 1U));
      if (++filled == 8) {
        out.code.push_back(byte);
        byte = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.code.push_back(static_cast<std::uint8_t>(byte << (8 - filled)));
  return out;
}

std::vector<std::uint8_t> canonical_code(const Graph& g) { return canonical_form(g).code; }

Fingerprint fingerprint(const Graph& g) {
  Fingerprint f;
  f.degrees = g.degree_sequence();
  f.spectrum = all_eigenvalues(g);
  return f;
}

bool fingerprints_match(const Fingerprint& a, const Fingerprint& b, double tol) {
  if (a.degrees != b.degrees || a.spectrum.size() != b.spectrum.size()) return false;
  for (std::size_t i = 0; i < a.spectrum.size(); ++i) {
    if (std::abs(a.spectrum[i] - b.spectrum[i]) > tol) return false;
  }
  return true;
}

IsoVerdict isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return {false, true};
  if (a.degree_sequence() != b.degree_sequence()) return {false, true};
  if (a.order() <= kCanonicalMaxOrder) return {canonical_code(a) == canonical_code(b), true};
  const bool oa = is_2connected(a) && outer_cycle(a).has_value();
  const bool ob = is_2connected(b) && outer_cycle(b).has_value();
  if (oa != ob) return {false, true};
  if (oa) return {outerplanar_code(a) == outerplanar_code(b), true};
  return {fingerprints_match(fingerprint(a), fingerprint(b)), false};
}

}  // namespace bipop
