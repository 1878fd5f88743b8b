#pragma once

#include <span>
#include <vector>

#include "bipop/graph.hpp"

namespace bipop {

Graph star(int n);  // centre 0
Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);  // parts 0..a-1 and a..a+b-1

/// 2 x (n/2) grid: top row 0..k-1, bottom row k..2k-1, rungs i -- k+i.
Graph ladder(int n);

/// s quadrilaterals 0-1-(2j+1)-2j sharing the edge 01; 2s+2 vertices, 3s+1 edges.
Graph quad_book(int s);

/// quad_book(s) with pendants at vertex 0 up to order n. 1 <= s <= 4 unless
/// `unchecked`.
Graph g1(int n, int s, bool unchecked = false);

/// s paths 0-i-1 (i = 2..s+1) with pendants at vertex 0 up to order n.
/// 1 <= s <= 8 unless `unchecked`.
Graph g2(int n, int s, bool unchecked = false);

/// The five order-10 maximal 2-connected bipartite outerplanar graphs, i in 1..5.
Graph h_case(int i);

/// Three 4-cycles sharing one edge, in the figure's vertex numbering.
/// Isomorphic to quad_book(3); contains a K2,3 minor.
Graph q_graph();

Graph attach_pendants(const Graph& g, int root, int eps);

/// G - sum v t + sum u t over t in targets; targets must lie in N(v) \ N[u].
Graph edge_rotation(const Graph& g, int u, int v, std::span<const int> targets);

/// Remove then add the listed edges; removed edges must exist and added ones
/// must not.
Graph surgery(const Graph& g, std::span<const Edge> remove, std::span<const Edge> add);

/// Polygon 0..n-1 with the given chords; every face must be a quadrilateral.
Graph quadrangulation(int outer_n, std::span<const Edge> chord_plan);

/// Chords {0,3}, {0,5}, ..., {0,n-3}.
std::vector<Edge> fan_plan(int outer_n);

}  // namespace bipop
