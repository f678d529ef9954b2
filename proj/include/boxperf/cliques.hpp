#pragma once

#include <vector>

#include "boxperf/budgets.hpp"
#include "boxperf/graph.hpp"
#include "boxperf/matrix.hpp"

namespace boxperf {

// Ordered family of cliques of one graph. When maximal = true the members
// are exactly the inclusion-maximal cliques, pairwise non-nested, sorted so
// that the clique containing the lowest vertices comes first (ascending
// vertex-list order).
struct CliqueFamily {
    std::vector<VertexSet> cliques;
    bool maximal = false;
};

// All maximal cliques via pivoting branch and bound over neighbor bitsets.
// Output order never depends on recursion order.
CliqueFamily maximal_cliques(const Graph& g, const Budgets& budgets = {});

struct CliqueMatrix {
    IntMatrix B;               // rows follow maximal_cliques order
    std::vector<long long> c;  // c[v] = number of maximal cliques containing v
};
CliqueMatrix clique_matrix(const Graph& g, const Budgets& budgets = {});

// Compares vertex sets as ascending vertex lists (the row order of B).
bool clique_less(VertexSet a, VertexSet b);

}  // namespace boxperf
