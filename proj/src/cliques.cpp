#include "boxperf/cliques.hpp"

#include <algorithm>

namespace boxperf {

bool clique_less(VertexSet a, VertexSet b) {
    return set_to_vec(a) < set_to_vec(b);
}

namespace {

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out, long long budget) {
    if (!p && !x) {
        if ((long long)out.size() >= budget) throw budget_error("clique budget exceeded");
        out.push_back(r);
        return;
    }
    // pivot with most neighbors in P
    int pivot = -1, best = -1;
    for (int v : set_to_vec(p | x)) {
        int c = popcount(p & g.adj[v]);
        if (c > best) { best = c; pivot = v; }
    }
    for (int v : set_to_vec(p & ~g.adj[pivot])) {
        bron_kerbosch(g, r | bit(v), p & g.adj[v], x & g.adj[v], out, budget);
        p &= ~bit(v);
        x |= bit(v);
    }
}

}  // namespace

CliqueFamily maximal_cliques(const Graph& g, const Budgets& budgets) {
    CliqueFamily f;
    f.maximal = true;
    if (g.n == 0) return f;
    bron_kerbosch(g, 0, full_set(g.n), 0, f.cliques, budgets.clique_budget);
    std::sort(f.cliques.begin(), f.cliques.end(), clique_less);
    return f;
}

CliqueMatrix clique_matrix(const Graph& g, const Budgets& budgets) {
    CliqueFamily f = maximal_cliques(g, budgets);
    CliqueMatrix m;
    m.B = IntMatrix((int)f.cliques.size(), g.n);
    m.c.assign(g.n, 0);
    for (int r = 0; r < m.B.rows; ++r)
        for (int v : set_to_vec(f.cliques[r])) {
            m.B.at(r, v) = 1;
            m.c[v]++;
        }
    return m;
}

}  // namespace boxperf
