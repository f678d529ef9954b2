#include "boxperf/invariants.hpp"

#include <algorithm>

#include "boxperf/subgraph.hpp"

namespace boxperf {

namespace {

// Greedy clique cover of the vertices in `rest`; the weight bound per clique
// is its maximum remaining vertex weight.
long long cover_bound(const Graph& g, VertexSet rest, const std::vector<long long>& w) {
    long long bound = 0;
    while (rest) {
        int v = lowest(rest);
        VertexSet clique = bit(v);
        long long mx = w[v];
        VertexSet cand = rest & g.adj[v];
        while (cand) {
            int u = lowest(cand);
            clique |= bit(u);
            mx = std::max(mx, w[u]);
            cand &= g.adj[u];
        }
        bound += mx;
        rest &= ~clique;
    }
    return bound;
}

void mwis_rec(const Graph& g, const std::vector<long long>& w, VertexSet rest,
              VertexSet chosen, long long value, MwisResult& best) {
    if (value > best.value) {
        best.value = value;
        best.witness = chosen;
    }
    if (!rest) return;
    if (value + cover_bound(g, rest, w) <= best.value) return;
    int v = lowest(rest);
    if (w[v] > 0)
        mwis_rec(g, w, rest & ~(g.adj[v] | bit(v)), chosen | bit(v), value + w[v], best);
    mwis_rec(g, w, rest & ~bit(v), chosen, value, best);
}

}  // namespace

MwisResult max_weight_stable_set(const Graph& g, const std::vector<long long>& w) {
    if ((int)w.size() != g.n) throw error("max_weight_stable_set: dimension mismatch");
    for (long long x : w)
        if (x < 0) throw error("max_weight_stable_set: negative weight");
    MwisResult best;
    mwis_rec(g, w, full_set(g.n), 0, 0, best);
    return best;
}

namespace {

// k-colorability backtracking with used-color symmetry breaking.
bool colorable(const Graph& g, const std::vector<int>& order, int k) {
    std::vector<int> color(g.n, -1);
    auto rec = [&](auto&& self, int i, int used) -> bool {
        if (i == (int)order.size()) return true;
        int v = order[i];
        int cap = std::min(k, used + 1);
        for (int c = 0; c < cap; ++c) {
            bool ok = true;
            for (int u : set_to_vec(g.adj[v]))
                if (color[u] == c) { ok = false; break; }
            if (!ok) continue;
            color[v] = c;
            if (self(self, i + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

}  // namespace

int chromatic_number(const Graph& g, const Budgets& budgets) {
    if (g.n > budgets.chi_max_n)
        throw budget_error("chromatic_number: n exceeds budget " +
                           std::to_string(budgets.chi_max_n));
    if (g.n == 0) return 0;
    std::vector<int> order(g.n);
    for (int i = 0; i < g.n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b; });
    std::vector<long long> ones(g.n, 1);
    int lo = (int)max_weight_stable_set(complement(g), ones).value;  // omega
    for (int k = lo;; ++k)
        if (colorable(g, order, k)) return k;
}

ParamReport parameters(const Graph& g, const Budgets& budgets) {
    ParamReport r;
    std::vector<long long> ones(g.n, 1);
    r.alpha = (int)max_weight_stable_set(g, ones).value;
    r.omega = (int)max_weight_stable_set(complement(g), ones).value;
    r.chi = chromatic_number(g, budgets);
    r.chibar = chromatic_number(complement(g), budgets);
    return r;
}

std::vector<std::uint8_t> chromatic_all_subsets(const Graph& g, const Budgets& budgets) {
    if (g.n > budgets.qperfect_max_n)
        throw budget_error("chromatic_all_subsets: n exceeds budget " +
                           std::to_string(budgets.qperfect_max_n));
    size_t full = size_t(1) << g.n;
    std::vector<std::uint8_t> chi(full, 0);
    // chi(S) = 1 + min over maximal stable sets I of G[S] containing the
    // lowest vertex of S.
    for (size_t s = 1; s < full; ++s) {
        int v0 = lowest(s);
        int best = 255;
        // enumerate maximal (within G[S]) stable sets containing v0
        auto rec = [&](auto&& self, VertexSet stab, VertexSet cand) -> void {
            if (!cand) {
                best = std::min(best, 1 + (int)chi[s & ~stab]);
                return;
            }
            int u = lowest(cand);
            self(self, stab | bit(u), cand & ~(g.adj[u] | bit(u)));
            // skip u only if some later candidate or chosen vertex keeps
            // maximality plausible; plain skip is correct, just slower
            VertexSet rest = cand & ~bit(u);
            if (rest) self(self, stab, rest);
        };
        rec(rec, bit(v0), VertexSet(s) & ~(g.adj[v0] | bit(v0)));
        chi[s] = (std::uint8_t)best;
    }
    return chi;
}

QPerfectReport q_perfect_report(const Graph& g, int q, const Budgets& budgets) {
    if (q < 1) throw error("q_perfect_report: q must be positive");
    QPerfectReport r;
    r.q = q;
    auto chi = chromatic_all_subsets(g, budgets);
    auto chibar = chromatic_all_subsets(complement(g), budgets);
    size_t full = size_t(1) << g.n;
    long long best_alpha = -1, best_chibar = -1;
    for (size_t s = 0; s < full; ++s) {
        if (chi[s] <= q && popcount(s) > best_alpha) {
            best_alpha = popcount(s);
            r.witness_x_alpha = s;
        }
        long long val = (long long)q * chibar[full_set(g.n) & ~s] + popcount(s);
        if (best_chibar < 0 || val < best_chibar) {
            best_chibar = val;
            r.witness_x_chibar = s;
        }
    }
    r.alpha_q = best_alpha;
    r.chibar_q = best_chibar;
    return r;
}

PerfectReport is_perfect(const Graph& g, const Budgets& budgets) {
    if (g.n > budgets.perfect_max_n)
        throw budget_error("is_perfect: n exceeds budget " +
                           std::to_string(budgets.perfect_max_n));
    PerfectReport r;
    Graph co = complement(g);
    for (int k = 5; k <= g.n; k += 2) {
        Graph ck(k);
        for (int i = 0; i < k; ++i) ck.add_edge(i, (i + 1) % k);
        for (int side = 0; side < 2; ++side) {
            const Graph& h = side ? co : g;
            auto emb = contains_induced(h, ck);
            if (emb) {
                r.perfect = false;
                r.hole = emb->map;
                r.in_complement = side == 1;
                return r;
            }
        }
    }
    return r;
}

std::optional<SplitPartition> is_split(const Graph& g) {
    std::vector<int> order(g.n);
    for (int i = 0; i < g.n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    // Hammer–Simeone: take the largest m with d_m >= m-1 as the clique size.
    int m = 0;
    for (int i = 0; i < g.n; ++i)
        if (g.degree(order[i]) >= i) m = i + 1;
    SplitPartition p;
    for (int i = 0; i < g.n; ++i) (i < m ? p.clique : p.stable) |= bit(order[i]);
    if (g.is_clique(p.clique) && g.is_stable(p.stable)) return p;
    return std::nullopt;
}

namespace {

// All induced paths u..v; parity = length mod 2. Stops early on a parity
// clash, recording the two offending paths.
struct ParitySearch {
    const Graph& g;
    int target;
    std::vector<int> path;
    std::vector<int> seen_parity_path[2];
    bool clash = false;

    bool extend(int last, VertexSet forbidden) {
        if (last == target) {
            int par = ((int)path.size() - 1) & 1;
            if (seen_parity_path[par].empty()) seen_parity_path[par] = path;
            return !seen_parity_path[0].empty() && !seen_parity_path[1].empty();
        }
        for (int w : set_to_vec(g.adj[last] & ~forbidden)) {
            // induced: w may touch only the last path vertex
            bool ok = true;
            for (size_t i = 0; i + 1 < path.size(); ++i)
                if (g.has_edge(path[i], w)) { ok = false; break; }
            if (!ok) continue;
            path.push_back(w);
            if (extend(w, forbidden | bit(w))) return true;
            path.pop_back();
        }
        return false;
    }
};

}  // namespace

ParityReport is_parity(const Graph& g, const Budgets& budgets) {
    if (g.n > budgets.parity_max_n)
        throw budget_error("is_parity: n exceeds budget " + std::to_string(budgets.parity_max_n));
    ParityReport r;
    for (int u = 0; u < g.n && r.parity; ++u)
        for (int v = u + 1; v < g.n && r.parity; ++v) {
            ParitySearch s{g, v};
            s.path = {u};
            if (s.extend(u, bit(u))) {
                r.parity = false;
                r.u = u;
                r.v = v;
                r.even_path = s.seen_parity_path[0];
                r.odd_path = s.seen_parity_path[1];
            }
        }
    return r;
}

bool orientation_is_transitive(const Graph& g, const Orientation& o) {
    if ((int)o.out.size() != g.n) return false;
    for (int v = 0; v < g.n; ++v) {
        if (o.out[v] & ~g.adj[v]) return false;
        if (o.out[v] & bit(v)) return false;
    }
    for (int u = 0; u < g.n; ++u)
        for (int v : set_to_vec(o.out[u])) {
            if (o.out[v] & bit(u)) return false;       // both directions
            if (o.out[v] & ~o.out[u]) return false;    // u->v->w needs u->w
        }
    for (auto [u, v] : g.edges())
        if (!((o.out[u] >> v) & 1) && !((o.out[v] >> u) & 1)) return false;
    return true;
}

namespace {

struct OrientSearch {
    const Graph& g;
    std::vector<VertexSet> out;
    std::vector<std::pair<int, int>> edges;

    // dir: 0 unassigned; sets u->v and propagates transitivity closures.
    bool assign(int u, int v, std::vector<std::pair<int, int>>& trail) {
        if ((out[u] >> v) & 1) return true;
        if ((out[v] >> u) & 1) return false;
        out[u] |= bit(v);
        trail.push_back({u, v});
        // u->v plus v->w forces u->w; w->u plus u->v forces w->v
        for (int w : set_to_vec(out[v])) {
            if (!g.has_edge(u, w)) return false;
            if (!assign(u, w, trail)) return false;
        }
        for (int w = 0; w < g.n; ++w) {
            if ((out[w] >> u) & 1) {
                if (!g.has_edge(w, v)) return false;
                if (!assign(w, v, trail)) return false;
            }
        }
        return true;
    }

    bool solve(size_t i) {
        while (i < edges.size()) {
            auto [u, v] = edges[i];
            if (((out[u] >> v) & 1) || ((out[v] >> u) & 1)) { ++i; continue; }
            for (int dir = 0; dir < 2; ++dir) {
                std::vector<std::pair<int, int>> trail;
                bool ok = dir == 0 ? assign(u, v, trail) : assign(v, u, trail);
                if (ok && solve(i + 1)) return true;
                for (auto [a, b] : trail) out[a] &= ~bit(b);
            }
            return false;
        }
        return true;
    }
};

}  // namespace

std::optional<Orientation> transitive_orientation(const Graph& g, const Budgets& budgets) {
    if (g.n > budgets.orientation_max_n)
        throw budget_error("transitive_orientation: n exceeds budget " +
                           std::to_string(budgets.orientation_max_n));
    OrientSearch s{g, std::vector<VertexSet>(g.n, 0), g.edges()};
    if (!s.solve(0)) return std::nullopt;
    Orientation o{s.out};
    if (!orientation_is_transitive(g, o))
        throw error("transitive_orientation: internal check failed");
    return o;
}

}  // namespace boxperf
