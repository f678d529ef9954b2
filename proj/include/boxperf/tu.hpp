#pragma once

#include <optional>
#include <vector>

#include "boxperf/budgets.hpp"
#include "boxperf/cliques.hpp"
#include "boxperf/graph.hpp"
#include "boxperf/matrix.hpp"

namespace boxperf {

struct TUViolator {
    std::vector<int> rows;
    std::vector<int> cols;
    long long det = 0;
};

struct TUReport {
    bool is_tu = true;
    std::optional<TUViolator> violator;  // square, |det| >= 2 when present
    std::string method;                  // "exhaustive" or "ghouila-houri"
};

// Exact total-unimodularity test. Small matrices are settled by exhaustive
// fraction-free determinants over square submatrices in size order (first,
// hence minimal, violator returned). When the submatrix count exceeds the
// cell budget the Ghouila-Houri signing criterion decides instead, and a
// violator is recovered from the minimal unsignable subset.
TUReport is_totally_unimodular(const IntMatrix& m, const Budgets& budgets = {});

// TU test of the maximal-clique matrix B_G.
TUReport is_tu_graph(const Graph& g, const Budgets& budgets = {});

struct BalancedReport {
    bool balanced = true;
    std::optional<TUViolator> witness;  // odd-cycle incidence submatrix
};
// 0/1 matrix is balanced iff no submatrix is the vertex-edge incidence
// matrix of an odd cycle, i.e. the row-column incidence graph has no
// chordless cycle of length 2 mod 4.
BalancedReport is_balanced(const IntMatrix& m);

struct ClassQReport {
    bool member = false;
    // Camion conditions, cross-checked whenever member = true; any
    // inconsistency is raised as an internal error.
    bool eulerian = false;
    bool sides_equal = false;
    long long edge_count = 0;   // must be 2 mod 4 for members
    IntMatrix biadjacency;
};
// Membership of a bipartite graph in class Q: the biadjacency matrix is not
// totally unimodular but every proper submatrix is.
ClassQReport class_Q_membership(const Graph& b, VertexSet side_u, VertexSet side_v,
                                const Budgets& budgets = {});
bool matrix_in_class_Q(const IntMatrix& m, const Budgets& budgets = {});

// Partition of the rows of M into two parts whose signed sum (part one minus
// part two) is a {0,+-1}-vector. Row 0 is pinned to part one; the search is
// lexicographic, so the returned partition is the least such.
std::optional<std::pair<std::vector<int>, std::vector<int>>> row_bipartition(const IntMatrix& m);

}  // namespace boxperf
