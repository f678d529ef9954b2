#pragma once

#include <random>
#include <string>

#include "boxperf/boxtdi.hpp"
#include "boxperf/budgets.hpp"
#include "boxperf/graph.hpp"

namespace boxperf {

using Rng = std::mt19937_64;

// Deterministic corpus generators (fixed seeds give fixed corpora).
Graph random_graph(int n, double p, Rng& rng);
Graph random_comparability(int n, Rng& rng);
Graph random_tu_graph(int max_n, Rng& rng, const Budgets& budgets = {});
// A graph with a vertex u such that G - u is bipartite and G - N(u) is
// edgeless.
Graph random_vertex_cover_structure(int max_n, Rng& rng);
// A bipartite graph from the pendant-and-duplication cycle family, or
// K_{3,3}.
Graph random_degree_split_host(Rng& rng);

// Shared fixtures.
Graph bipartite_even_cycle(int half);  // C_{2k}, sides 0..k-1 and k..2k-1
IntMatrix dominating_q_matrix();       // the 4x4 class-Q biadjacency with an all-ones row
// The 10-vertex non-box-perfect graph assembled from a 10-cycle and a
// 5-cycle with one chord, and its 8-vertex core with a hand-written
// certificate of value 7/4.
RGraphResult nbp10_graph(const Budgets& budgets = {});
Graph nbp8_graph();
BoxCertificate nbp8_certificate(const Graph& h, const Budgets& budgets = {});

// Brute-force oracles, kept independent of the library implementations.
int oracle_chromatic(const Graph& g);
long long oracle_alpha_q(const Graph& g, int q);
long long oracle_chibar_q(const Graph& g, int q);
long long oracle_max_stable(const Graph& g, const std::vector<long long>& w);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

int criterion_count();
CriterionResult run_criterion(int id, const Budgets& budgets = {});

}  // namespace boxperf
