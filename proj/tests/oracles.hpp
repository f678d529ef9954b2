#pragma once

// Brute-force oracles for the unit tests. Everything here enumerates the
// whole space directly and stays independent of the library search paths it
// is used to check.

#include <algorithm>
#include <optional>
#include <vector>

#include "boxperf/esp.hpp"
#include "boxperf/graph.hpp"
#include "boxperf/matrix.hpp"

namespace oracle {

using namespace boxperf;

inline std::vector<VertexSet> brute_maximal_cliques(const Graph& g) {
    std::vector<VertexSet> all;
    for (VertexSet s = 1; s < bit(g.n); ++s)
        if (g.is_clique(s)) all.push_back(s);
    std::vector<VertexSet> maximal;
    for (VertexSet s : all) {
        bool max = true;
        for (VertexSet t : all)
            if (t != s && (t & s) == s) { max = false; break; }
        if (max) maximal.push_back(s);
    }
    std::sort(maximal.begin(), maximal.end(), clique_less);
    return maximal;
}

inline std::vector<VertexSet> all_cliques(const Graph& g) {
    std::vector<VertexSet> cs;
    for (VertexSet s = 1; s < bit(g.n); ++s)
        if (g.is_clique(s)) cs.push_back(s);
    return cs;
}

// Exhaustive equitable-subpartition existence: both sides range over all
// multisets of nonempty cliques with |L1| + |L2| <= |Lambda|.
inline bool brute_has_equitable_subpartition(const Graph& g, const CliqueMultiset& lambda) {
    auto cliques = all_cliques(g);
    long long n_total = lambda.size();
    auto d = lambda.coverage(g.n);

    std::vector<long long> d1(g.n, 0), d2(g.n, 0);
    auto feasible = [&]() {
        for (int v = 0; v < g.n; ++v) {
            if (d1[v] + d2[v] < d[v]) return false;
            if (std::min(d1[v], d2[v]) < d[v] / 2) return false;
        }
        return true;
    };
    // choose multiset for side two starting from clique index j
    auto pick2 = [&](auto&& self, size_t j, long long left) -> bool {
        if (feasible()) return true;
        if (left == 0) return false;
        for (size_t k = j; k < cliques.size(); ++k) {
            for (int v : set_to_vec(cliques[k])) ++d2[v];
            if (self(self, k, left - 1)) {
                for (int v : set_to_vec(cliques[k])) --d2[v];
                return true;
            }
            for (int v : set_to_vec(cliques[k])) --d2[v];
        }
        return false;
    };
    auto pick1 = [&](auto&& self, size_t j, long long used) -> bool {
        if (pick2(pick2, 0, n_total - used)) return true;
        if (used == n_total) return false;
        for (size_t k = j; k < cliques.size(); ++k) {
            for (int v : set_to_vec(cliques[k])) ++d1[v];
            if (self(self, k, used + 1)) {
                for (int v : set_to_vec(cliques[k])) --d1[v];
                return true;
            }
            for (int v : set_to_vec(cliques[k])) --d1[v];
        }
        return false;
    };
    return pick1(pick1, 0, 0);
}

// Every square submatrix via cofactor-expansion determinants (a different
// algorithm than the library's Bareiss elimination).
inline long long cofactor_det(const IntMatrix& m) {
    if (m.rows == 1) return m.at(0, 0);
    long long det = 0, sign = 1;
    for (int c = 0; c < m.cols; ++c) {
        std::vector<int> rs, cs;
        for (int i = 1; i < m.rows; ++i) rs.push_back(i);
        for (int j = 0; j < m.cols; ++j)
            if (j != c) cs.push_back(j);
        det += sign * m.at(0, c) * cofactor_det(m.submatrix(rs, cs));
        sign = -sign;
    }
    return det;
}

inline bool brute_is_tu(const IntMatrix& m) {
    std::vector<int> ridx(m.rows), cidx(m.cols);
    for (int k = 1; k <= std::min(m.rows, m.cols); ++k) {
        std::vector<int> rs, cs;
        auto rec_rows = [&](auto&& self, int from) -> bool {
            if ((int)rs.size() == k) {
                auto rec_cols = [&](auto&& cself, int cfrom) -> bool {
                    if ((int)cs.size() == k) {
                        long long d = cofactor_det(m.submatrix(rs, cs));
                        return d < -1 || d > 1;
                    }
                    for (int j = cfrom; j < m.cols; ++j) {
                        cs.push_back(j);
                        if (cself(cself, j + 1)) return true;
                        cs.pop_back();
                    }
                    return false;
                };
                return rec_cols(rec_cols, 0);
            }
            for (int i = from; i < m.rows; ++i) {
                rs.push_back(i);
                if (self(self, i + 1)) return true;
                rs.pop_back();
            }
            return false;
        };
        if (rec_rows(rec_rows, 0)) return false;
    }
    return true;
}

inline bool brute_is_split(const Graph& g) {
    for (VertexSet c = 0; c < bit(g.n); ++c)
        if (g.is_clique(c) && g.is_stable(full_set(g.n) & ~c)) return true;
    return g.n == 0;
}

// omega = chi on every induced subgraph (the subset characterization of
// perfection at tiny scale).
inline int brute_omega(const Graph& g) {
    int best = 0;
    for (VertexSet s = 0; s < bit(g.n); ++s)
        if (g.is_clique(s)) best = std::max(best, popcount(s));
    return best;
}

}  // namespace oracle
