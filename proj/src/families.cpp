#include "boxperf/families.hpp"

#include <algorithm>

namespace boxperf {

namespace {

Graph make_sn(int n) {
    if (n < 2) throw error("S_n needs n >= 2");
    Graph g(2 * n, "S_" + std::to_string(n));
    for (int i = 0; i < 2 * n; ++i) g.add_edge(i, (i + 1) % (2 * n));
    for (int i = 1; i < 2 * n; i += 2)
        for (int j = i + 2; j < 2 * n; j += 2) g.add_edge(i, j);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw error("C_n needs n >= 3");
    Graph g(n, "C_" + std::to_string(n));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph make_kmn(int m, int n) {
    if (m < 1 || n < 1) throw error("K_{m,n} needs m, n >= 1");
    Graph g(m + n, "K_" + std::to_string(m) + "," + std::to_string(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
    return g;
}

Graph make_class_c(const std::vector<int>& params) {
    if (params.size() < 2) throw error("classC needs [len, k, x_1..x_k, d_1..d_k]");
    int len = params[0], k = params[1];
    if (len < 4 || len % 2) throw error("classC cycle length must be even and >= 4");
    if (k < 0 || (int)params.size() != 2 + 2 * k)
        throw error("classC needs [len, k, x_1..x_k, d_1..d_k]");
    Graph cyc = make_cycle(len);
    VertexSet x = 0;
    for (int i = 0; i < k; ++i) {
        int xi = params[2 + i];
        if (xi < 0 || xi >= len) throw error("classC: X vertex out of range");
        if (x & bit(xi)) throw error("classC: repeated X vertex");
        x |= bit(xi);
    }
    if (!cyc.is_stable(x)) throw error("classC: X is not stable on the cycle");
    VertexSet nx = 0;
    for (int v : set_to_vec(x)) nx |= cyc.adj[v];
    VertexSet y = full_set(len) & ~x & ~nx;
    Graph g = cyc;
    g.name = "classC";
    for (int v : set_to_vec(y)) {
        Graph h(g.n + 1, g.name);
        for (int u = 0; u < g.n; ++u) h.adj[u] = g.adj[u];
        h.add_edge(g.n, v);
        g = h;
    }
    for (int i = 0; i < k; ++i) {
        int d = params[2 + k + i];
        if (d < 0) throw error("classC: negative duplication count");
        for (int c = 0; c < d; ++c) g = duplicate_vertex(g, params[2 + i], false);
    }
    g.name = "classC";
    return g;
}

}  // namespace

Graph build_named(const std::string& name, const std::vector<int>& params) {
    auto want = [&](size_t k) {
        if (params.size() != k)
            throw error(name + " takes " + std::to_string(k) + " parameter(s)");
    };
    if (name == "S_n") { want(1); return make_sn(params[0]); }
    if (name == "Cn") { want(1); return make_cycle(params[0]); }
    if (name == "Kmn") { want(2); return make_kmn(params[0], params[1]); }
    if (name == "barS3") {
        want(0);
        Graph g = complement(make_sn(3));
        g.name = "barS3";
        return g;
    }
    if (name == "barS3plus") {
        want(0);
        Graph b = complement(make_sn(3));
        Graph g(7, "barS3plus");
        for (int v = 0; v < 6; ++v) g.adj[v] = b.adj[v];
        for (int v = 0; v < 6; ++v) g.add_edge(v, 6);
        return g;
    }
    if (name == "Gamma") {
        want(0);
        Graph g = make_cycle(6);
        g.name = "Gamma";
        g.add_edge(0, 2);
        g.add_edge(0, 4);
        return g;
    }
    if (name == "K4plus") {
        want(0);
        Graph g(6, "K4plus");
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
        g.add_edge(4, 0);
        g.add_edge(5, 1);
        return g;
    }
    if (name == "K2nplus") {
        want(1);
        int n = params[0];
        if (n < 3) throw error("K2nplus needs n >= 3");
        Graph g(n + 3, "K2nplus");
        for (int j = 0; j < n; ++j) {
            g.add_edge(0, 2 + j);
            g.add_edge(1, 2 + j);
        }
        g.add_edge(n + 2, 2);
        g.add_edge(0, 1);
        return g;
    }
    if (name == "classC") return make_class_c(params);
    throw error("unknown graph family: " + name);
}

LineGraphResult line_graph(const Multigraph& h) {
    if (h.has_loops()) throw error("line_graph: input has loops");
    std::vector<std::pair<int, int>> ev;
    for (const auto& [e, m] : h.mult)
        for (long long k = 0; k < m; ++k) ev.push_back(e);
    LineGraphResult r;
    r.graph = Graph((int)ev.size(), h.name.empty() ? "" : "L(" + h.name + ")");
    r.edge_of = ev;
    for (int i = 0; i < (int)ev.size(); ++i)
        for (int j = i + 1; j < (int)ev.size(); ++j) {
            auto [a, b] = ev[i];
            auto [c, d] = ev[j];
            if (a == c || a == d || b == c || b == d) r.graph.add_edge(i, j);
        }
    return r;
}

Graph bipartite_extension(const Graph& h, VertexSet s, const Graph& b, VertexSet t) {
    if (s & ~full_set(h.n)) throw error("bipartite_extension: S out of range");
    if (t & ~full_set(b.n)) throw error("bipartite_extension: T out of range");
    if (!h.is_stable(s)) throw error("bipartite_extension: S is not stable in H");
    auto sv = set_to_vec(s), tv = set_to_vec(t);
    if (sv.empty()) throw error("bipartite_extension: S is empty");
    if (sv.size() != tv.size()) throw error("bipartite_extension: |S| != |T|");
    for (int v : sv)
        if ((h.adj[v] & ~s) != (h.adj[sv[0]] & ~s))
            throw error("bipartite_extension: S vertices have different neighborhoods");
    std::vector<int> side;
    if (!bipartition(b, side)) throw error("bipartite_extension: B is not bipartite");
    // T must fit into one color class; component color flips are free.
    for (size_t i = 1; i < tv.size(); ++i) {
        // same component and opposite sides is the only fatal case
        VertexSet comp = bit(tv[0]);
        for (bool grew = true; grew;) {
            grew = false;
            for (int v : set_to_vec(comp))
                if (b.adj[v] & ~comp) { comp |= b.adj[v]; grew = true; }
        }
        if ((comp & bit(tv[i])) && side[tv[i]] != side[tv[0]])
            throw error("bipartite_extension: T is not inside one color class of B");
    }
    std::vector<int> bmap(b.n, -1);
    for (size_t i = 0; i < tv.size(); ++i) bmap[tv[i]] = sv[i];
    Graph g(h.n + b.n - (int)tv.size());
    int next = h.n;
    for (int v = 0; v < b.n; ++v)
        if (bmap[v] < 0) bmap[v] = next++;
    for (int v = 0; v < h.n; ++v) g.adj[v] = h.adj[v];
    for (auto [u, v] : b.edges()) {
        if (g.has_edge(bmap[u], bmap[v]))
            throw error("bipartite_extension: identification creates a parallel edge");
        g.add_edge(bmap[u], bmap[v]);
    }
    return g;
}

Graph simplicial_sum(const Graph& g1, int x1, const Graph& g2, int x2) {
    auto check = [](const Graph& g, int x, const char* who) {
        if (x < 0 || x >= g.n) throw error(std::string(who) + ": vertex out of range");
        if (g.n < 3) throw error(std::string(who) + ": graph has fewer than 3 vertices");
        if (!g.adj[x]) throw error(std::string(who) + ": vertex is isolated");
        if (!g.is_clique(g.adj[x] | bit(x)))
            throw error(std::string(who) + ": vertex is not simplicial");
    };
    check(g1, x1, "simplicial_sum: x1");
    check(g2, x2, "simplicial_sum: x2");
    auto v1 = set_to_vec(full_set(g1.n) & ~bit(x1));
    auto v2 = set_to_vec(full_set(g2.n) & ~bit(x2));
    Graph g((int)(v1.size() + v2.size()));
    std::vector<int> m1(g1.n, -1), m2(g2.n, -1);
    for (int i = 0; i < (int)v1.size(); ++i) m1[v1[i]] = i;
    for (int i = 0; i < (int)v2.size(); ++i) m2[v2[i]] = (int)v1.size() + i;
    for (auto [u, v] : g1.edges())
        if (u != x1 && v != x1) g.add_edge(m1[u], m1[v]);
    for (auto [u, v] : g2.edges())
        if (u != x2 && v != x2) g.add_edge(m2[u], m2[v]);
    for (int a : set_to_vec(g1.adj[x1]))
        for (int b : set_to_vec(g2.adj[x2])) g.add_edge(m1[a], m2[b]);
    return g;
}

std::vector<std::vector<int>> enumerate_dicycles(const Digraph& d, long long budget) {
    // Simple dicycles, found as arc-index sequences whose smallest vertex is
    // the start. Parallel arcs yield distinct dicycles.
    std::vector<std::vector<int>> out_arcs(d.n);
    for (int i = 0; i < (int)d.arcs.size(); ++i) out_arcs[d.arcs[i].first].push_back(i);
    std::vector<std::vector<int>> cycles;
    std::vector<int> path;
    VertexSet on_path = 0;
    long long count = 0;

    auto dfs = [&](auto&& self, int root, int v) -> void {
        for (int ai : out_arcs[v]) {
            int w = d.arcs[ai].second;
            if (w == root) {
                if (++count > budget) throw budget_error("dicycle budget exceeded");
                path.push_back(ai);
                cycles.push_back(path);
                path.pop_back();
            } else if (w > root && !(on_path & bit(w))) {
                path.push_back(ai);
                on_path |= bit(w);
                self(self, root, w);
                on_path &= ~bit(w);
                path.pop_back();
            }
        }
    };
    for (int root = 0; root < d.n; ++root) {
        on_path = bit(root);
        dfs(dfs, root, root);
    }
    return cycles;
}

PComparabilityResult p_comparability_graph(const Digraph& d, VertexSet t,
                                           const Budgets& budgets) {
    if (t & ~full_set(d.n)) throw error("p_comparability: T out of range");
    for (auto [u, v] : d.arcs)
        if ((t & bit(u)) && (t & bit(v)))
            throw error("p_comparability: arc " + std::to_string(u) + "->" +
                        std::to_string(v) + " joins two T-vertices");
    auto cycles = enumerate_dicycles(d, budgets.dicycle_budget);
    std::vector<char> on_cycle(d.arcs.size(), 0);
    std::vector<VertexSet> cycle_vs;
    for (const auto& c : cycles) {
        VertexSet vs = 0;
        for (int ai : c) {
            on_cycle[ai] = 1;
            vs |= bit(d.arcs[ai].first);
        }
        int hits = popcount(vs & t);
        if (hits != 1) {
            std::string desc;
            for (int ai : c) desc += " " + std::to_string(d.arcs[ai].first);
            throw error("p_comparability: dicycle" + desc + " meets T " +
                        std::to_string(hits) + " times");
        }
        cycle_vs.push_back(vs);
    }
    for (int ai = 0; ai < (int)d.arcs.size(); ++ai)
        if (!on_cycle[ai])
            throw error("p_comparability: arc " + std::to_string(d.arcs[ai].first) + "->" +
                        std::to_string(d.arcs[ai].second) + " lies on no dicycle");
    PComparabilityResult r;
    r.vertex_of = set_to_vec(full_set(d.n) & ~t);
    std::vector<int> newid(d.n, -1);
    for (int i = 0; i < (int)r.vertex_of.size(); ++i) newid[r.vertex_of[i]] = i;
    r.graph = Graph((int)r.vertex_of.size());
    for (VertexSet vs : cycle_vs) {
        auto vv = set_to_vec(vs & ~t);
        for (size_t i = 0; i < vv.size(); ++i)
            for (size_t j = i + 1; j < vv.size(); ++j)
                if (!r.graph.has_edge(newid[vv[i]], newid[vv[j]]))
                    r.graph.add_edge(newid[vv[i]], newid[vv[j]]);
    }
    return r;
}

}  // namespace boxperf
