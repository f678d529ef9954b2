#include "boxperf/tu.hpp"

#include <algorithm>

namespace boxperf {

namespace {

void check_entries(const IntMatrix& m, long long lo, long long hi, const char* who) {
    for (long long x : m.a)
        if (x < lo || x > hi) throw error(std::string(who) + ": entry out of range");
}

// Number of square submatrices of an r x c matrix: sum_k C(r,k)*C(c,k).
double submatrix_count(int r, int c) {
    std::vector<double> cr(r + 1, 0), cc(c + 1, 0);
    double total = 0;
    for (int k = 1; k <= std::min(r, c); ++k) {
        auto choose = [](int n, int k) {
            double v = 1;
            for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
            return v;
        };
        total += choose(r, k) * choose(c, k);
    }
    return total;
}

bool next_combination(std::vector<int>& idx, int n) {
    int k = (int)idx.size();
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::optional<TUViolator> exhaustive_violator(const IntMatrix& m) {
    for (int k = 1; k <= std::min(m.rows, m.cols); ++k) {
        std::vector<int> rs(k), cs0(k);
        for (int i = 0; i < k; ++i) rs[i] = i;
        do {
            std::vector<int> cs = cs0;
            for (int i = 0; i < k; ++i) cs[i] = i;
            do {
                long long d = determinant(m.submatrix(rs, cs));
                if (d < -1 || d > 1) return TUViolator{rs, cs, d};
            } while (next_combination(cs, m.cols));
        } while (next_combination(rs, m.rows));
    }
    return std::nullopt;
}

// Ghouila-Houri signing over a subset of rows: a signing eps in {+-1}^subset
// with every column of sum(eps_i * row_i) in {-1,0,1}. Backtracking with a
// per-column reachability bound.
bool gh_signable(const IntMatrix& m, const std::vector<int>& rows) {
    int k = (int)rows.size();
    std::vector<long long> partial(m.cols, 0);
    // remaining absolute contribution per column
    std::vector<std::vector<long long>> tail(k + 1, std::vector<long long>(m.cols, 0));
    for (int i = k - 1; i >= 0; --i)
        for (int j = 0; j < m.cols; ++j)
            tail[i][j] = tail[i + 1][j] + std::llabs(m.at(rows[i], j));
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) return true;
        for (int sgn : {1, -1}) {
            bool ok = true;
            for (int j = 0; j < m.cols && ok; ++j) {
                long long v = partial[j] + sgn * m.at(rows[i], j);
                if (std::llabs(v) > 1 + tail[i + 1][j]) ok = false;
            }
            if (!ok) continue;
            for (int j = 0; j < m.cols; ++j) partial[j] += sgn * m.at(rows[i], j);
            if (self(self, i + 1)) return true;
            for (int j = 0; j < m.cols; ++j) partial[j] -= sgn * m.at(rows[i], j);
            if (i == 0) break;  // global sign symmetry
        }
        return false;
    };
    return rec(rec, 0);
}

// Minimal (by size, then lexicographic) row subset with no valid signing, or
// empty when every subset signs.
std::vector<int> gh_unsignable_subset(const IntMatrix& m) {
    for (int k = 1; k <= m.rows; ++k) {
        std::vector<int> rs(k);
        for (int i = 0; i < k; ++i) rs[i] = i;
        do {
            if (!gh_signable(m, rs)) return rs;
        } while (next_combination(rs, m.rows));
    }
    return {};
}

}  // namespace

TUReport is_totally_unimodular(const IntMatrix& m, const Budgets& budgets) {
    check_entries(m, -1, 1, "is_totally_unimodular");
    TUReport rep;
    if (m.rows == 0 || m.cols == 0) {
        rep.method = "exhaustive";
        return rep;
    }
    if (submatrix_count(m.rows, m.cols) <= (double)budgets.tu_exhaustive_cells) {
        rep.method = "exhaustive";
        rep.violator = exhaustive_violator(m);
        rep.is_tu = !rep.violator.has_value();
        return rep;
    }
    // Wide matrix: decide by Ghouila-Houri on the smaller dimension.
    bool transposed = m.rows > m.cols;
    IntMatrix w = transposed ? m.transpose() : m;
    if (w.rows > budgets.tu_gh_max_dim)
        throw budget_error("is_totally_unimodular: matrix too large for both strategies");
    rep.method = "ghouila-houri";
    std::vector<int> bad = gh_unsignable_subset(w);
    if (bad.empty()) return rep;
    rep.is_tu = false;
    // The unsignable row set supports a violating square submatrix; recover
    // one by determinants restricted to those rows.
    int k = (int)bad.size();
    std::vector<int> cs(k);
    for (int i = 0; i < k; ++i) cs[i] = i;
    for (int kk = 2; kk <= std::min(k, w.cols); ++kk) {
        std::vector<int> rsel(kk), csel(kk);
        for (int i = 0; i < kk; ++i) rsel[i] = i;
        do {
            std::vector<int> rr(kk);
            for (int i = 0; i < kk; ++i) rr[i] = bad[rsel[i]];
            for (int i = 0; i < kk; ++i) csel[i] = i;
            do {
                long long det = determinant(w.submatrix(rr, csel));
                if (det < -1 || det > 1) {
                    TUViolator v{rr, csel, det};
                    if (transposed) std::swap(v.rows, v.cols);
                    rep.violator = v;
                    return rep;
                }
            } while (next_combination(csel, w.cols));
        } while (next_combination(rsel, k));
    }
    throw error("is_totally_unimodular: unsignable subset without determinant violator");
}

TUReport is_tu_graph(const Graph& g, const Budgets& budgets) {
    return is_totally_unimodular(clique_matrix(g, budgets).B, budgets);
}

BalancedReport is_balanced(const IntMatrix& m) {
    check_entries(m, 0, 1, "is_balanced");
    BalancedReport rep;
    // incidence graph: vertices 0..rows-1 are rows, rows..rows+cols-1 columns
    int n = m.rows + m.cols;
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j)) {
                adj[i].push_back(m.rows + j);
                adj[m.rows + j].push_back(i);
            }
    // Chordless cycles rooted at their smallest vertex. A new path vertex
    // may touch only the current end among path[1..]; adjacency to the root
    // is audited at closing time.
    std::vector<int> path;
    std::vector<char> on_path(n, 0);
    auto edge = [&](int a, int b) {
        return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
    };
    bool found = false;
    std::vector<int> cycle;
    auto dfs = [&](auto&& self, int root, int v) -> void {
        if (found) return;
        for (int w : adj[v]) {
            if (found) return;
            if (w == root) {
                if (path.size() < 4 || (path.size() % 4) != 2) continue;
                bool chord = false;
                for (size_t i = 2; i + 1 < path.size(); ++i)
                    if (edge(root, path[i])) { chord = true; break; }
                if (!chord) {
                    found = true;
                    cycle = path;
                }
                continue;
            }
            if (w < root || on_path[w]) continue;
            bool chord = false;
            for (size_t i = 1; i + 1 < path.size(); ++i)
                if (edge(path[i], w)) { chord = true; break; }
            if (chord) continue;
            path.push_back(w);
            on_path[w] = 1;
            self(self, root, w);
            on_path[w] = 0;
            path.pop_back();
        }
    };
    for (int root = 0; root < n && !found; ++root) {
        path = {root};
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[root] = 1;
        dfs(dfs, root, root);
    }
    if (found) {
        rep.balanced = false;
        TUViolator v;
        for (int x : cycle)
            (x < m.rows ? v.rows : v.cols).push_back(x < m.rows ? x : x - m.rows);
        std::sort(v.rows.begin(), v.rows.end());
        std::sort(v.cols.begin(), v.cols.end());
        v.det = determinant(m.submatrix(v.rows, v.cols));  // +-2 for odd-cycle incidence
        rep.witness = v;
    }
    return rep;
}

bool matrix_in_class_Q(const IntMatrix& m, const Budgets& budgets) {
    check_entries(m, 0, 1, "matrix_in_class_Q");
    if (m.rows == 0 || m.cols == 0) return false;
    if (is_totally_unimodular(m, budgets).is_tu) return false;
    for (int r = 0; r < m.rows; ++r)
        if (!is_totally_unimodular(m.drop_row(r), budgets).is_tu) return false;
    for (int c = 0; c < m.cols; ++c)
        if (!is_totally_unimodular(m.drop_col(c), budgets).is_tu) return false;
    return true;
}

ClassQReport class_Q_membership(const Graph& b, VertexSet side_u, VertexSet side_v,
                                const Budgets& budgets) {
    if ((side_u | side_v) != full_set(b.n) || (side_u & side_v))
        throw error("class_Q_membership: sides must partition the vertices");
    auto us = set_to_vec(side_u), vs = set_to_vec(side_v);
    for (int u : us)
        if (b.adj[u] & side_u) throw error("class_Q_membership: input is not bipartite");
    for (int v : vs)
        if (b.adj[v] & side_v) throw error("class_Q_membership: input is not bipartite");
    ClassQReport rep;
    rep.biadjacency = IntMatrix((int)us.size(), (int)vs.size());
    for (size_t i = 0; i < us.size(); ++i)
        for (size_t j = 0; j < vs.size(); ++j)
            rep.biadjacency.at((int)i, (int)j) = b.has_edge(us[i], vs[j]) ? 1 : 0;
    rep.member = matrix_in_class_Q(rep.biadjacency, budgets);
    rep.eulerian = true;
    for (int v = 0; v < b.n; ++v)
        if (b.degree(v) % 2) rep.eulerian = false;
    rep.sides_equal = us.size() == vs.size();
    rep.edge_count = b.edge_count();
    if (rep.member && !(rep.eulerian && rep.sides_equal && rep.edge_count % 4 == 2))
        throw error("class_Q_membership: member violates the Camion conditions");
    return rep;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> row_bipartition(const IntMatrix& m) {
    if (m.rows == 0) return std::make_pair(std::vector<int>{}, std::vector<int>{});
    // signing search with row 0 pinned positive
    int k = m.rows;
    std::vector<int> sign(k, 0);
    std::vector<long long> partial(m.cols, 0);
    std::vector<std::vector<long long>> tail(k + 1, std::vector<long long>(m.cols, 0));
    for (int i = k - 1; i >= 0; --i)
        for (int j = 0; j < m.cols; ++j) tail[i][j] = tail[i + 1][j] + std::llabs(m.at(i, j));
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) return true;
        for (int sgn : {1, -1}) {
            if (i == 0 && sgn < 0) break;  // pin row 0 to part one
            bool ok = true;
            for (int j = 0; j < m.cols && ok; ++j)
                if (std::llabs(partial[j] + sgn * m.at(i, j)) > 1 + tail[i + 1][j]) ok = false;
            if (!ok) continue;
            for (int j = 0; j < m.cols; ++j) partial[j] += sgn * m.at(i, j);
            sign[i] = sgn;
            if (self(self, i + 1)) return true;
            for (int j = 0; j < m.cols; ++j) partial[j] -= sgn * m.at(i, j);
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int i = 0; i < k; ++i) (sign[i] > 0 ? parts.first : parts.second).push_back(i);
    return parts;
}

}  // namespace boxperf
