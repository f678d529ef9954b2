#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boxperf/budgets.hpp"
#include "boxperf/graph.hpp"

namespace boxperf {

// Named graph catalog. Vertex numbering per family:
//   S_n        params [n], n >= 2: cycle vertices v1..v_{2n} map to 0..2n-1
//              (v_i -> i-1); edges of the cycle plus all pairs of paper-even
//              vertices, i.e. all pairs of odd indices.
//   barS3      complement of S_3, numbering inherited.
//   barS3plus  barS3 plus vertex 6 adjacent to 0..5.
//   Gamma      6-cycle 0..5 plus chords (0,2) and (0,4).
//   K4plus     K_4 on 0..3 plus pendants 4-0 and 5-1.
//   K2nplus    params [n], n >= 3: degree-n hubs 0,1; leaves 2..n+1;
//              pendant n+2 attached to leaf 2; hub edge (0,1).
//   Cn         params [n], n >= 3: cycle 0..n-1.
//   Kmn        params [m, n]: side A = 0..m-1, side B = m..m+n-1.
//   classC     params [len, k, x_1..x_k, d_1..d_k]: even cycle 0..len-1,
//              stable set X = {x_i}; a pendant vertex is appended for each
//              vertex of V(C) - X - N(X) in ascending order; then d_i extra
//              non-adjacent copies of x_i are appended, grouped by i.
Graph build_named(const std::string& name, const std::vector<int>& params);

struct LineGraphResult {
    Graph graph;                               // one vertex per edge of H
    std::vector<std::pair<int, int>> edge_of;  // vertex -> endpoints in H
};
// Line graph of a loopless multigraph; parallel edges give distinct vertices.
LineGraphResult line_graph(const Multigraph& h);

// Disjoint union of H and bipartite B with the stable, same-neighborhood set
// S of H identified elementwise (in ascending order) with T, a subset of one
// color class of B. Vertices of H keep their indices; B - T is appended.
Graph bipartite_extension(const Graph& h, VertexSet s, const Graph& b, VertexSet t);

// Glues G1 - x1 and G2 - x2, joining N(x1) to N(x2) completely. Requires
// each x_i simplicial with nonempty neighborhood and |V(G_i)| >= 3.
// Vertices of G1 - x1 come first (ascending), then G2 - x2.
Graph simplicial_sum(const Graph& g1, int x1, const Graph& g2, int x2);

// Simple dicycles as arc-index sequences; throws budget_error past the cap.
std::vector<std::vector<int>> enumerate_dicycles(const Digraph& d, long long budget);

struct PComparabilityResult {
    Graph graph;
    std::vector<int> vertex_of;  // new index -> vertex of D
};
// Validates by exhaustive dicycle enumeration: every arc on a dicycle, every
// dicycle meets T exactly once, no arc inside T. Then joins every pair of
// non-T vertices sharing a dicycle and deletes T.
PComparabilityResult p_comparability_graph(const Digraph& d, VertexSet t,
                                           const Budgets& budgets = {});

}  // namespace boxperf
