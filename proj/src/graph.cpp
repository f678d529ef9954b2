#include "boxperf/graph.hpp"

#include <algorithm>

namespace boxperf {

std::vector<int> set_to_vec(VertexSet s) {
    std::vector<int> v;
    while (s) {
        int b = lowest(s);
        v.push_back(b);
        s &= s - 1;
    }
    return v;
}

VertexSet vec_to_set(const std::vector<int>& v) {
    VertexSet s = 0;
    for (int x : v) s |= bit(x);
    return s;
}

Graph::Graph(int n_, std::string name_) : n(n_), adj(n_, 0), name(std::move(name_)) {
    if (n_ < 0 || n_ > 64) throw error("graph size out of range: " + std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw error("edge endpoint out of range");
    if (u == v) throw error("loop not allowed in simple graph");
    adj[u] |= bit(v);
    adj[v] |= bit(u);
}

long long Graph::edge_count() const {
    long long s = 0;
    for (int v = 0; v < n; ++v) s += degree(v);
    return s / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (has_edge(u, v)) es.push_back({u, v});
    return es;
}

bool Graph::is_clique(VertexSet s) const {
    for (VertexSet t = s; t;) {
        int v = lowest(t);
        t &= t - 1;
        if ((s & ~bit(v)) & ~adj[v]) return false;
    }
    return true;
}

bool Graph::is_stable(VertexSet s) const {
    for (VertexSet t = s; t;) {
        int v = lowest(t);
        t &= t - 1;
        if (s & adj[v]) return false;
    }
    return true;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& es, std::string name) {
    Graph g(n, std::move(name));
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

Graph complement(const Graph& g) {
    Graph c(g.n, g.name.empty() ? "" : "co-" + g.name);
    for (int v = 0; v < g.n; ++v) c.adj[v] = ~g.adj[v] & ~bit(v) & full_set(g.n);
    c.labels = g.labels;
    return c;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
    if (keep & ~full_set(g.n)) throw error("induced_subgraph: vertex out of range");
    return induced_subgraph(g, set_to_vec(keep));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    Graph s((int)keep.size(), g.name);
    for (int x : keep)
        if (x < 0 || x >= g.n) throw error("induced_subgraph: vertex out of range");
    for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j)
            if (g.has_edge(keep[i], keep[j])) s.add_edge(i, j);
    if (!g.labels.empty()) {
        s.labels.resize(s.n);
        for (int i = 0; i < s.n; ++i) s.labels[i] = g.labels[keep[i]];
    }
    return s;
}

Graph duplicate_vertex(const Graph& g, int v, bool adjacent) {
    if (v < 0 || v >= g.n) throw error("duplicate_vertex: vertex out of range");
    Graph d(g.n + 1, g.name);
    for (int u = 0; u < g.n; ++u) d.adj[u] = g.adj[u];
    int vp = g.n;
    for (int u : set_to_vec(g.adj[v])) d.add_edge(vp, u);
    if (adjacent) d.add_edge(vp, v);
    return d;
}

Graph replicate(const Graph& g, const std::vector<int>& d, std::vector<int>* provenance) {
    if ((int)d.size() != g.n) throw error("replicate: dimension mismatch");
    std::vector<int> of_new;
    for (int v = 0; v < g.n; ++v) {
        if (d[v] < 0) throw error("replicate: negative multiplicity");
        for (int k = 0; k < d[v]; ++k) of_new.push_back(v);
    }
    Graph r((int)of_new.size(), g.name);
    for (int i = 0; i < r.n; ++i)
        for (int j = i + 1; j < r.n; ++j)
            if (of_new[i] != of_new[j] && g.has_edge(of_new[i], of_new[j])) r.add_edge(i, j);
    if (provenance) *provenance = of_new;
    return r;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph u(a.n + b.n);
    for (int v = 0; v < a.n; ++v) u.adj[v] = a.adj[v];
    for (int v = 0; v < b.n; ++v) u.adj[a.n + v] = b.adj[v] << a.n;
    return u;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    VertexSet seen = bit(0), frontier = bit(0);
    while (frontier) {
        VertexSet next = 0;
        for (int v : set_to_vec(frontier)) next |= g.adj[v];
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == full_set(g.n);
}

bool bipartition(const Graph& g, std::vector<int>& side) {
    side.assign(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<int> queue = {s};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int u : set_to_vec(g.adj[v])) {
                if (side[u] < 0) {
                    side[u] = 1 - side[v];
                    queue.push_back(u);
                } else if (side[u] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

void Multigraph::add_edge(int u, int v, long long m) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw error("edge endpoint out of range");
    if (m < 0) throw error("negative multiplicity");
    if (u > v) std::swap(u, v);
    mult[{u, v}] += m;
}

long long Multigraph::multiplicity(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = mult.find({u, v});
    return it == mult.end() ? 0 : it->second;
}

long long Multigraph::degree(int v) const {
    long long d = 0;
    for (const auto& [e, m] : mult) {
        if (e.first == v) d += m;
        if (e.second == v) d += m;
    }
    return d;
}

long long Multigraph::edge_count() const {
    long long c = 0;
    for (const auto& [e, m] : mult) c += m;
    return c;
}

bool Multigraph::has_loops() const {
    for (const auto& [e, m] : mult)
        if (e.first == e.second && m > 0) return true;
    return false;
}

std::vector<std::pair<int, int>> Multigraph::support() const {
    std::vector<std::pair<int, int>> es;
    for (const auto& [e, m] : mult)
        if (m > 0) es.push_back(e);
    return es;
}

Multigraph Multigraph::of(const Graph& g) {
    Multigraph h(g.n, g.name);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    return h;
}

Graph simplify(const Multigraph& h) {
    Graph g(h.n, h.name);
    for (const auto& [e, m] : h.mult)
        if (m > 0 && e.first != e.second) g.add_edge(e.first, e.second);
    return g;
}

Multigraph normalize_pendant_twins(const Multigraph& h) {
    Multigraph cur = h;
    bool changed = true;
    while (changed) {
        changed = false;
        Graph s = simplify(cur);
        for (int x = 0; x < s.n && !changed; ++x) {
            if (s.degree(x) != 1) continue;
            int z = lowest(s.adj[x]);
            for (int y = x + 1; y < s.n; ++y) {
                if (y == z || s.degree(y) != 1 || lowest(s.adj[y]) != z) continue;
                long long m = cur.multiplicity(y, z);
                cur.mult[{std::min(y, z), std::max(y, z)}] = 0;
                cur.add_edge(x, z, m);
                changed = true;
                break;
            }
        }
    }
    // drop isolated vertices, reindex densely
    std::vector<int> keep;
    Graph s = simplify(cur);
    for (int v = 0; v < cur.n; ++v)
        if (cur.degree(v) > 0) keep.push_back(v);
    std::vector<int> newid(cur.n, -1);
    for (int i = 0; i < (int)keep.size(); ++i) newid[keep[i]] = i;
    Multigraph out((int)keep.size(), cur.name);
    for (const auto& [e, m] : cur.mult)
        if (m > 0) out.add_edge(newid[e.first], newid[e.second], m);
    return out;
}

void Digraph::add_arc(int u, int v, long long mult) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw error("arc endpoint out of range");
    if (mult < 0) throw error("negative arc multiplicity");
    for (long long k = 0; k < mult; ++k) arcs.push_back({u, v});
}

}  // namespace boxperf
