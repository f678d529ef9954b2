#include "boxperf/esp.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace boxperf {

long long CliqueMultiset::size() const {
    long long s = 0;
    for (const auto& e : entries) s += e.mult;
    return s;
}

std::vector<long long> CliqueMultiset::coverage(int n) const {
    std::vector<long long> d(n, 0);
    for (const auto& e : entries)
        for (int v : set_to_vec(e.clique)) {
            if (v >= n) throw error("clique multiset: vertex out of range");
            d[v] += e.mult;
        }
    return d;
}

void CliqueMultiset::validate(const Graph& g) const {
    for (const auto& e : entries) {
        if (e.mult < 1) throw error("clique multiset: multiplicity must be positive");
        if (e.clique & ~full_set(g.n)) throw error("clique multiset: vertex out of range");
        if (!g.is_clique(e.clique)) throw error("clique multiset: member is not a clique");
    }
}

void CliqueMultiset::add(VertexSet clique, long long mult) {
    if (mult > 0) entries.push_back({clique, mult});
}

void write_clique_multiset(std::ostream& os, const CliqueMultiset& m) {
    for (const auto& e : m.entries) {
        os << "k " << e.mult;
        for (int v : set_to_vec(e.clique)) os << " " << v;
        os << "\n";
    }
}

CliqueMultiset read_clique_multiset(std::istream& is) {
    CliqueMultiset m;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok)) continue;
        if (tok != "k") throw error("line " + std::to_string(lineno) + ": expected 'k'");
        long long mult;
        if (!(ss >> mult) || mult < 1)
            throw error("line " + std::to_string(lineno) + ": bad multiplicity");
        VertexSet cl = 0;
        int v;
        while (ss >> v) {
            if (v < 0 || v >= 64) throw error("line " + std::to_string(lineno) + ": bad vertex");
            cl |= bit(v);
        }
        m.entries.push_back({cl, mult});
    }
    return m;
}

SubpartitionCheck check_equitable_subpartition(const Graph& g, const CliqueMultiset& lambda,
                                               const CliqueMultiset& l1,
                                               const CliqueMultiset& l2) {
    lambda.validate(g);
    l1.validate(g);
    l2.validate(g);
    SubpartitionCheck r;
    if (l1.size() + l2.size() > lambda.size()) {
        r.ok = false;
        r.violated = "(i)";
        return r;
    }
    auto d = lambda.coverage(g.n), d1 = l1.coverage(g.n), d2 = l2.coverage(g.n);
    for (int v = 0; v < g.n; ++v) {
        if (d1[v] + d2[v] < d[v]) {
            r.ok = false;
            r.violated = "(ii)";
            r.witness_vertex = v;
            return r;
        }
    }
    for (int v = 0; v < g.n; ++v) {
        if (std::min(d1[v], d2[v]) < d[v] / 2) {
            r.ok = false;
            r.violated = "(iii)";
            r.witness_vertex = v;
            return r;
        }
    }
    return r;
}

CoverSolver::CoverSolver(const Graph& g, long long state_budget)
    : g_(g), budget_(state_budget) {}

const std::vector<VertexSet>& CoverSolver::cliques_at(VertexSet supp, int v0) {
    VertexSet key = supp;  // v0 is determined by supp (lowest set bit)
    auto it = clique_cache_.find(key);
    if (it != clique_cache_.end()) return it->second;
    // maximal cliques of G[supp] containing v0, via Bron-Kerbosch rooted at v0
    std::vector<VertexSet> out;
    auto bk = [&](auto&& self, VertexSet r, VertexSet p, VertexSet x) -> void {
        if (!p && !x) {
            out.push_back(r);
            return;
        }
        int pivot = -1, best = -1;
        for (int v : set_to_vec(p | x)) {
            int c = popcount(p & g_.adj[v] & supp);
            if (c > best) { best = c; pivot = v; }
        }
        VertexSet cand = p & ~(g_.adj[pivot] & supp);
        for (int v : set_to_vec(cand)) {
            self(self, r | bit(v), p & g_.adj[v] & supp, x & g_.adj[v] & supp);
            p &= ~bit(v);
            x |= bit(v);
        }
    };
    bk(bk, bit(v0), g_.adj[v0] & supp & ~bit(v0), 0);
    std::sort(out.begin(), out.end(), clique_less);
    return clique_cache_.emplace(key, std::move(out)).first->second;
}

long long CoverSolver::solve(std::vector<long long>& c) {
    VertexSet supp = 0;
    for (int v = 0; v < g_.n; ++v)
        if (c[v] > 0) supp |= bit(v);
    if (!supp) return 0;
    auto it = memo_.find(c);
    if (it != memo_.end()) return it->second;
    if (++states_ > budget_) throw budget_error("clique-cover state budget exceeded");
    int v0 = lowest(supp);
    long long best = -1;
    for (VertexSet k : cliques_at(supp, v0)) {
        for (int v : set_to_vec(k)) --c[v];
        long long sub = solve(c);
        for (int v : set_to_vec(k)) ++c[v];
        if (best < 0 || sub + 1 < best) best = sub + 1;
    }
    memo_[c] = best;
    return best;
}

long long CoverSolver::min_cover(const std::vector<long long>& c) {
    if ((int)c.size() != g_.n) throw error("min_cover: dimension mismatch");
    for (long long x : c)
        if (x < 0) throw error("min_cover: negative multiplicity");
    std::vector<long long> work = c;
    return solve(work);
}

std::vector<VertexSet> CoverSolver::witness(const std::vector<long long>& c) {
    std::vector<long long> work = c;
    long long total = min_cover(c);
    std::vector<VertexSet> cover;
    while (total > 0) {
        VertexSet supp = 0;
        for (int v = 0; v < g_.n; ++v)
            if (work[v] > 0) supp |= bit(v);
        int v0 = lowest(supp);
        bool stepped = false;
        for (VertexSet k : cliques_at(supp, v0)) {
            for (int v : set_to_vec(k)) --work[v];
            if (solve(work) == total - 1) {
                cover.push_back(k);
                --total;
                stepped = true;
                break;
            }
            for (int v : set_to_vec(k)) ++work[v];
        }
        if (!stepped) throw error("cover witness reconstruction failed");
    }
    return cover;
}

namespace {

std::vector<int> odd_positions(const std::vector<long long>& d) {
    std::vector<int> odd;
    for (int v = 0; v < (int)d.size(); ++v)
        if (d[v] % 2) odd.push_back(v);
    return odd;
}

// Sweeps the balanced per-vertex splits of d: c1 = floor(d/2) plus a chosen
// subset of the odd coordinates. Calls visit(c1); stops when it returns true.
template <typename F>
bool sweep_balanced_splits(const std::vector<long long>& d, F visit) {
    auto odd = odd_positions(d);
    if (odd.size() > 30) throw budget_error("too many odd coordinates in balanced sweep");
    std::vector<long long> c1(d.size());
    for (size_t v = 0; v < d.size(); ++v) c1[v] = d[v] / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << odd.size()); ++mask) {
        for (size_t i = 0; i < odd.size(); ++i)
            c1[odd[i]] = d[odd[i]] / 2 + ((mask >> i) & 1);
        if (visit(c1)) return true;
    }
    return false;
}

}  // namespace

namespace {

// Assignment-only witness: place every member of lambda on side one or two,
// no shrinking. Sufficient for a split whenever some assignment balances
// all coverages; cheap, so it runs before the cover search. `cap` bounds
// the side sizes when nonnegative.
std::optional<std::uint64_t> assignment_split(const std::vector<VertexSet>& members,
                                              const std::vector<long long>& d, long long cap) {
    int n_members = (int)members.size();
    if (n_members == 0) return std::uint64_t(0);
    if (n_members > 16) return std::nullopt;  // leave it to the cover search
    int nverts = (int)d.size();
    for (std::uint64_t side1 = 0; side1 < (std::uint64_t(1) << (n_members - 1)); ++side1) {
        // member n_members-1 pinned to side two (global swap symmetry)
        if (cap >= 0) {
            int c1 = popcount(side1);
            if (c1 > cap || n_members - c1 > cap) continue;
        }
        bool ok = true;
        for (int v = 0; v < nverts && ok; ++v) {
            if (d[v] == 0) continue;
            long long d1 = 0;
            for (int i : set_to_vec(side1))
                if ((members[i] >> v) & 1) ++d1;
            long long lo = d[v] / 2;
            if (d1 < lo || d[v] - d1 < lo) ok = false;
        }
        if (ok) return side1;
    }
    return std::nullopt;
}

}  // namespace

std::optional<EquitableSubpartition> find_equitable_subpartition(const Graph& g,
                                                                 const CliqueMultiset& lambda,
                                                                 const Budgets& budgets) {
    lambda.validate(g);
    long long n_total = lambda.size();
    auto d = lambda.coverage(g.n);
    std::vector<VertexSet> members;
    for (const auto& e : lambda.entries)
        for (long long k = 0; k < e.mult; ++k) members.push_back(e.clique);
    if (auto side1 = assignment_split(members, d, -1)) {
        EquitableSubpartition e;
        for (int i = 0; i < (int)members.size(); ++i)
            ((*side1 >> i) & 1 ? e.part1 : e.part2).add(members[i]);
        return e;
    }
    CoverSolver solver(g, budgets.esp_cover_budget);
    std::optional<EquitableSubpartition> result;
    sweep_balanced_splits(d, [&](const std::vector<long long>& c1) {
        std::vector<long long> c2(d.size());
        for (size_t v = 0; v < d.size(); ++v) c2[v] = d[v] - c1[v];
        long long m1 = solver.min_cover(c1);
        if (m1 > n_total) return false;
        long long m2 = solver.min_cover(c2);
        if (m1 + m2 > n_total) return false;
        EquitableSubpartition e;
        for (VertexSet k : solver.witness(c1)) e.part1.add(k);
        for (VertexSet k : solver.witness(c2)) e.part2.add(k);
        result = std::move(e);
        return true;
    });
    return result;
}

namespace {

// Existence-only split test against a shared solver; `cap` bounds each side
// when nonnegative (strong ESP).
bool lambda_splits(CoverSolver& solver, const std::vector<VertexSet>& members,
                   const std::vector<long long>& d, long long n_total, long long cap) {
    if (assignment_split(members, d, cap)) return true;
    return sweep_balanced_splits(d, [&](const std::vector<long long>& c1) {
        std::vector<long long> c2(d.size());
        for (size_t v = 0; v < d.size(); ++v) c2[v] = d[v] - c1[v];
        long long m1 = solver.min_cover(c1);
        if (m1 > n_total || (cap >= 0 && m1 > cap)) return false;
        long long m2 = solver.min_cover(c2);
        return m1 + m2 <= n_total && (cap < 0 || m2 <= cap);
    });
}

EspReport esp_direct(const Graph& g, bool strong, const Budgets& budgets) {
    EspReport rep;
    rep.mode = EspMode::Direct;
    CliqueFamily cf = maximal_cliques(g, budgets);
    int m = (int)cf.cliques.size();
    if (m > 0 && (m >= 62 || (1LL << m) > budgets.esp_lambda_budget))
        throw budget_error("is_esp: too many maximal cliques for the set sweep");
    CoverSolver solver(g, budgets.esp_cover_budget);
    std::vector<long long> d(g.n);
    std::vector<VertexSet> members;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
        int count = popcount(mask);
        if (count <= 1) continue;  // ({K}, {}) always works
        std::fill(d.begin(), d.end(), 0);
        members.clear();
        for (int i : set_to_vec(mask)) {
            members.push_back(cf.cliques[i]);
            for (int v : set_to_vec(cf.cliques[i])) ++d[v];
        }
        long long cap = strong ? (count + 1) / 2 : -1;
        if (!lambda_splits(solver, members, d, count, cap)) {
            rep.esp = false;
            rep.failing_lambda = CliqueMultiset{};
            for (int i : set_to_vec(mask)) rep.failing_lambda->add(cf.cliques[i]);
            return rep;
        }
    }
    return rep;
}

bool reform_d_splits(const Graph& g, const std::vector<long long>& d) {
    MwisResult whole = max_weight_stable_set(g, d);
    return sweep_balanced_splits(d, [&](const std::vector<long long>& c1) {
        std::vector<long long> c2(d.size());
        for (size_t v = 0; v < d.size(); ++v) c2[v] = d[v] - c1[v];
        return max_weight_stable_set(g, c1).value + max_weight_stable_set(g, c2).value <=
               whole.value;
    });
}

}  // namespace

bool reform_d_fails(const Graph& g, const std::vector<long long>& d) {
    return !reform_d_splits(g, d);
}

EspReport is_esp(const Graph& g, EspMode mode, const Budgets& budgets) {
    if (mode == EspMode::Direct) return esp_direct(g, false, budgets);
    if (!is_perfect(g, budgets).perfect)
        throw error("is_esp: perfect-reform mode requires a perfect graph");
    EspReport rep;
    rep.mode = EspMode::PerfectReform;
    auto cm = clique_matrix(g, budgets);
    long long space = 1;
    for (int v = 0; v < g.n; ++v) {
        space *= cm.c[v] + 1;
        if (space > budgets.reform_budget)
            throw budget_error("is_esp: replication sweep exceeds budget");
    }
    std::vector<long long> d(g.n, 0);
    // lexicographic odometer over 0 <= d <= c_G
    while (true) {
        int i = g.n - 1;
        while (i >= 0 && d[i] == cm.c[i]) { d[i] = 0; --i; }
        if (i < 0) break;
        ++d[i];
        if (!reform_d_splits(g, d)) {
            rep.esp = false;
            rep.failing_d = d;
            return rep;
        }
    }
    return rep;
}

EspReport is_strong_esp(const Graph& g, const Budgets& budgets) {
    return esp_direct(g, true, budgets);
}

std::pair<std::vector<long long>, std::vector<long long>> incomparability_partition(
    const Graph& g, const Orientation& orient, const std::vector<long long>& d) {
    Graph co = complement(g);
    if (!orientation_is_transitive(co, orient))
        throw error("incomparability_partition: orientation is not a transitive orientation "
                    "of the complement");
    if ((int)d.size() != g.n) throw error("incomparability_partition: dimension mismatch");
    auto c = clique_matrix(g).c;
    for (int v = 0; v < g.n; ++v)
        if (d[v] < 0 || d[v] > c[v])
            throw error("incomparability_partition: d must satisfy 0 <= d <= c_G");
    // Peel maximal antichain layers of P^d; chain copies of v leave one per
    // layer once everything above v is exhausted.
    std::vector<long long> rem = d, d1(g.n, 0), d2(g.n, 0);
    long long remaining = 0;
    for (long long x : rem) remaining += x;
    int layer = 0;
    while (remaining > 0) {
        ++layer;
        std::vector<int> peel;
        for (int v = 0; v < g.n; ++v) {
            if (rem[v] == 0) continue;
            bool top = true;
            for (int w : set_to_vec(orient.out[v]))
                if (rem[w] > 0) { top = false; break; }
            if (top) peel.push_back(v);
        }
        if (peel.empty()) throw error("incomparability_partition: empty layer (internal bug)");
        for (int v : peel) {
            --rem[v];
            --remaining;
            (layer % 2 ? d1 : d2)[v]++;
        }
    }
    for (int v = 0; v < g.n; ++v) {
        if (d1[v] + d2[v] != d[v] || std::min(d1[v], d2[v]) < d[v] / 2 ||
            std::max(d1[v], d2[v]) > (d[v] + 1) / 2)
            throw error("incomparability_partition: balance postcondition failed (internal bug)");
    }
    long long a = max_weight_stable_set(g, d).value;
    long long a1 = max_weight_stable_set(g, d1).value;
    long long a2 = max_weight_stable_set(g, d2).value;
    if (a1 + a2 > a)
        throw error("incomparability_partition: alpha postcondition failed (internal bug)");
    return {d1, d2};
}

std::vector<VertexSet> consecutive_clique_family(const Graph& g, const CliqueMultiset& lambda,
                                                 VertexSet x, VertexSet y) {
    lambda.validate(g);
    if ((x | y) != full_set(g.n) || (x & y))
        throw error("consecutive_clique_family: X, Y must partition the vertices");
    if (!g.is_clique(x) || !g.is_clique(y))
        throw error("consecutive_clique_family: X and Y must both be cliques");
    long long n_total = lambda.size();
    auto d = lambda.coverage(g.n);
    std::vector<VertexSet> q((size_t)n_total, 0);
    for (long long i = 1; i <= n_total; ++i) {
        VertexSet qi = 0;
        for (int v : set_to_vec(x))
            if (i <= d[v]) qi |= bit(v);
        for (int v : set_to_vec(y))
            if (i >= n_total - d[v] + 1) qi |= bit(v);
        if (!g.is_clique(qi)) {
            // name the nonadjacent cross pair; it certifies d(x)+d(y) > |L|
            for (int a : set_to_vec(qi & x))
                for (int b : set_to_vec(qi & y))
                    if (!g.has_edge(a, b))
                        throw error("consecutive_clique_family: nonadjacent pair " +
                                    std::to_string(a) + "," + std::to_string(b) +
                                    " with d(x)+d(y) > |Lambda|");
            throw error("consecutive_clique_family: term is not a clique");
        }
        q[(size_t)i - 1] = qi;
    }
    // degree preservation
    std::vector<long long> check(g.n, 0);
    for (VertexSet qi : q)
        for (int v : set_to_vec(qi)) ++check[v];
    if (check != d) throw error("consecutive_clique_family: coverage changed (internal bug)");
    return q;
}

bool is_circulation(const Digraph& dg, const Circulation& f) {
    if (f.size() != dg.arcs.size()) return false;
    for (long long x : f)
        if (x < 0) return false;
    std::vector<long long> net(dg.n, 0);
    for (size_t i = 0; i < f.size(); ++i) {
        net[dg.arcs[i].first] -= f[i];
        net[dg.arcs[i].second] += f[i];
    }
    for (long long x : net)
        if (x != 0) return false;
    return true;
}

std::vector<std::vector<int>> decompose_circulation(const Digraph& dg, const Circulation& f) {
    if (!is_circulation(dg, f)) throw error("decompose_circulation: not a circulation");
    Circulation rem = f;
    std::vector<std::vector<int>> cycles;
    auto first_positive_out = [&](int v) {
        for (size_t i = 0; i < rem.size(); ++i)
            if (rem[i] > 0 && dg.arcs[i].first == v) return (int)i;
        return -1;
    };
    while (true) {
        int start = -1;
        for (size_t i = 0; i < rem.size(); ++i)
            if (rem[i] > 0) { start = (int)i; break; }
        if (start < 0) break;
        // walk forward until a vertex repeats, then extract the loop
        std::vector<int> walk = {start};
        std::vector<int> seen_at(dg.n, -1);
        seen_at[dg.arcs[start].first] = 0;
        int v = dg.arcs[start].second;
        while (seen_at[v] < 0) {
            seen_at[v] = (int)walk.size();
            int a = first_positive_out(v);
            if (a < 0) throw error("decompose_circulation: conservation broke (internal bug)");
            walk.push_back(a);
            v = dg.arcs[a].second;
        }
        std::vector<int> cycle(walk.begin() + seen_at[v], walk.end());
        for (int a : cycle) --rem[a];
        cycles.push_back(cycle);
    }
    return cycles;
}

std::pair<Circulation, Circulation> circulation_split(const Digraph& dg, const Circulation& f) {
    if (f.size() != dg.arcs.size()) throw error("circulation_split: dimension mismatch");
    for (long long x : f)
        if (x < 0) throw error("circulation_split: negative flow");
    if (!is_circulation(dg, f)) throw error("circulation_split: flow is not conserved");
    int m = (int)f.size();
    Circulation lo(m), hi(m);
    for (int i = 0; i < m; ++i) {
        lo[i] = f[i] / 2;
        hi[i] = (f[i] + 1) / 2;
    }
    // feasible circulation with bounds [lo, hi] via max-flow on the excess
    // network; existence is guaranteed, so saturation failure is a bug
    int n = dg.n, s = n, t = n + 1;
    struct Arc { int to; long long cap; int rev; int orig; };
    std::vector<std::vector<Arc>> net(n + 2);
    auto add_arc = [&](int a, int b, long long cap, int orig) {
        net[a].push_back({b, cap, (int)net[b].size(), orig});
        net[b].push_back({a, 0, (int)net[a].size() - 1, -1});
    };
    std::vector<long long> excess(n, 0);
    for (int i = 0; i < m; ++i) {
        excess[dg.arcs[i].first] -= lo[i];
        excess[dg.arcs[i].second] += lo[i];
        if (hi[i] > lo[i]) add_arc(dg.arcs[i].first, dg.arcs[i].second, hi[i] - lo[i], i);
    }
    long long need = 0;
    for (int v = 0; v < n; ++v) {
        if (excess[v] > 0) { add_arc(s, v, excess[v], -1); need += excess[v]; }
        if (excess[v] < 0) add_arc(v, t, -excess[v], -1);
    }
    long long flow = 0;
    while (true) {  // Edmonds-Karp, deterministic arc order
        std::vector<std::pair<int, int>> parent(n + 2, {-1, -1});
        std::vector<int> queue = {s};
        parent[s] = {s, 0};
        for (size_t qi = 0; qi < queue.size() && parent[t].first < 0; ++qi) {
            int v = queue[qi];
            for (int ai = 0; ai < (int)net[v].size(); ++ai) {
                const Arc& a = net[v][ai];
                if (a.cap > 0 && parent[a.to].first < 0) {
                    parent[a.to] = {v, ai};
                    queue.push_back(a.to);
                }
            }
        }
        if (parent[t].first < 0) break;
        long long aug = INT64_MAX;
        for (int v = t; v != s;) {
            auto [pv, pa] = parent[v];
            aug = std::min(aug, net[pv][pa].cap);
            v = pv;
        }
        for (int v = t; v != s;) {
            auto [pv, pa] = parent[v];
            net[pv][pa].cap -= aug;
            net[net[pv][pa].to][net[pv][pa].rev].cap += aug;
            v = pv;
        }
        flow += aug;
    }
    if (flow != need) throw error("circulation_split: infeasible bounds (internal bug)");
    Circulation f1 = lo;
    for (int v = 0; v < n; ++v)
        for (const Arc& a : net[v])
            if (a.orig >= 0) f1[a.orig] = lo[a.orig] + (hi[a.orig] - lo[a.orig] - a.cap);
    Circulation f2(m);
    for (int i = 0; i < m; ++i) f2[i] = f[i] - f1[i];
    for (int i = 0; i < m; ++i)
        if (f[i] % 2) {
            if (f1[i] < f2[i]) std::swap(f1, f2);  // side one takes the ceiling
            break;
        }
    if (!is_circulation(dg, f1) || !is_circulation(dg, f2))
        throw error("circulation_split: parts are not circulations (internal bug)");
    return {f1, f2};
}

DegreeSplit matching_degree_split(const Graph& h, const std::vector<long long>& mu) {
    std::vector<int> side;
    if (!bipartition(h, side)) throw error("matching_degree_split: graph is not bipartite");
    auto edges = h.edges();
    if (mu.size() != edges.size()) throw error("matching_degree_split: dimension mismatch");
    for (long long x : mu)
        if (x < 0) throw error("matching_degree_split: negative multiplicity");
    int m = (int)edges.size();
    std::vector<long long> deg_mu(h.n, 0);
    for (int i = 0; i < m; ++i) {
        deg_mu[edges[i].first] += mu[i];
        deg_mu[edges[i].second] += mu[i];
    }
    long long delta = 0;
    for (long long x : deg_mu) delta = std::max(delta, x);
    DegreeSplit out;
    out.mu1.assign(m, 0);
    out.mu2.assign(m, 0);
    // peel floor(mu/2) to each side; the odd residue is a simple graph
    std::vector<long long> cap1(h.n), cap2(h.n);
    for (int v = 0; v < h.n; ++v) {
        long long base = 0;
        for (int i = 0; i < m; ++i)
            if (edges[i].first == v || edges[i].second == v) base += mu[i] / 2;
        cap1[v] = (delta + 1) / 2 - base;
        cap2[v] = delta / 2 - base;
    }
    std::vector<int> residual;
    for (int i = 0; i < m; ++i)
        if (mu[i] % 2) residual.push_back(i);

    // order residual edges along trails so alternation is the first thing
    // the search tries
    std::vector<int> order;
    {
        std::vector<char> used(residual.size(), 0);
        std::vector<long long> rdeg(h.n, 0);
        for (int i : residual) {
            rdeg[edges[i].first]++;
            rdeg[edges[i].second]++;
        }
        auto next_edge = [&](int v) {
            for (size_t j = 0; j < residual.size(); ++j)
                if (!used[j] &&
                    (edges[residual[j]].first == v || edges[residual[j]].second == v))
                    return (int)j;
            return -1;
        };
        while (order.size() < residual.size()) {
            int start = -1;
            for (int v = 0; v < h.n && start < 0; ++v)
                if (rdeg[v] % 2) {
                    int j = next_edge(v);
                    if (j >= 0) start = v;
                }
            if (start < 0)
                for (int v = 0; v < h.n && start < 0; ++v)
                    if (next_edge(v) >= 0) start = v;
            int v = start;
            for (int j = next_edge(v); j >= 0; j = next_edge(v)) {
                used[j] = 1;
                order.push_back(residual[j]);
                rdeg[edges[residual[j]].first]--;
                rdeg[edges[residual[j]].second]--;
                v = edges[residual[j]].first == v ? edges[residual[j]].second
                                                  : edges[residual[j]].first;
            }
        }
    }
    std::vector<long long> used1(h.n, 0), used2(h.n, 0);
    std::vector<int> assign(order.size(), 0);
    auto rec = [&](auto&& self, size_t i) -> bool {
        if (i == order.size()) return true;
        auto [a, b] = edges[order[i]];
        for (int sidepick : {1, 2}) {
            auto& used_v = sidepick == 1 ? used1 : used2;
            auto& cap_v = sidepick == 1 ? cap1 : cap2;
            if (used_v[a] + 1 > cap_v[a] || used_v[b] + 1 > cap_v[b]) continue;
            used_v[a]++;
            used_v[b]++;
            assign[i] = sidepick;
            if (self(self, i + 1)) return true;
            used_v[a]--;
            used_v[b]--;
        }
        return false;
    };
    if (!rec(rec, 0)) return out;  // exhaustive: no split exists
    out.found = true;
    for (int i = 0; i < m; ++i) {
        out.mu1[i] = mu[i] / 2;
        out.mu2[i] = mu[i] / 2;
    }
    for (size_t i = 0; i < order.size(); ++i)
        (assign[i] == 1 ? out.mu1 : out.mu2)[order[i]]++;
    return out;
}

}  // namespace boxperf
