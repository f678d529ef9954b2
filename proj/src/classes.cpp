#include "boxperf/classes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "boxperf/esp.hpp"
#include "boxperf/invariants.hpp"
#include "boxperf/subgraph.hpp"
#include "boxperf/tu.hpp"
#include "json.hpp"

namespace boxperf {

namespace {

// color refinement: split classes by the multiset of neighbor colors
std::vector<int> refine(const Graph& g, std::vector<int> color) {
    while (true) {
        std::vector<std::vector<int>> sig(g.n);
        for (int v = 0; v < g.n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> nb;
            for (int u : set_to_vec(g.adj[v])) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        // rank signatures so the new ids depend only on signature content
        std::vector<std::vector<int>> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::vector<int> next(g.n);
        for (int v = 0; v < g.n; ++v)
            next[v] = (int)(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
        if (next == color) return color;
        color = next;
    }
}

void canon_search(const Graph& g, std::vector<int> color, std::vector<std::uint64_t>& best,
                  bool& have) {
    color = refine(g, color);
    // cells grouped by color id
    int ncolors = 0;
    for (int c : color) ncolors = std::max(ncolors, c + 1);
    std::vector<std::vector<int>> cell(ncolors);
    for (int v = 0; v < g.n; ++v) cell[color[v]].push_back(v);
    int target = -1;
    for (int c = 0; c < ncolors; ++c)
        if (cell[c].size() > 1) { target = c; break; }
    if (target < 0) {
        // discrete: order vertices by color id
        std::vector<int> pos(g.n);
        for (int v = 0; v < g.n; ++v) pos[color[v]] = v;
        std::vector<std::uint64_t> key(g.n, 0);
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                if (g.has_edge(pos[i], pos[j])) key[i] |= bit(j);
        if (!have || key < best) {
            best = key;
            have = true;
        }
        return;
    }
    for (int v : cell[target]) {
        std::vector<int> next = color;
        // individualize v: give it a fresh color just below its cell
        for (int u = 0; u < g.n; ++u)
            if (next[u] >= next[v] && u != v) next[u]++;
        canon_search(g, next, best, have);
    }
}

}  // namespace

std::vector<std::uint64_t> canonical_key(const Graph& g) {
    std::vector<std::uint64_t> best;
    bool have = false;
    canon_search(g, std::vector<int>(g.n, 0), best, have);
    if (!have) return {};
    return best;
}

std::string canonical_hex(const Graph& g) {
    auto key = canonical_key(g);
    std::ostringstream os;
    os << g.n << ":";
    for (std::uint64_t row : key) {
        os << std::hex << row << ",";
    }
    return os.str();
}

std::vector<Graph> all_graphs_up_to_iso(int n) {
    if (n < 1) return {};
    std::vector<Graph> cur = {Graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::set<std::vector<std::uint64_t>> seen;
        std::vector<Graph> next;
        for (const Graph& g : cur) {
            for (VertexSet nb = 0; nb < bit(k - 1); ++nb) {
                Graph h(k);
                for (int v = 0; v < k - 1; ++v) h.adj[v] = g.adj[v];
                for (int v : set_to_vec(nb)) h.add_edge(k - 1, v);
                auto key = canonical_key(h);
                if (seen.insert(key).second) next.push_back(h);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

namespace {

Graph graph_of_biadjacency(const IntMatrix& m) {
    Graph g(m.rows + m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j)) g.add_edge(i, m.rows + j);
    return g;
}

// Does the (k+1) x k augmented matrix [M; 1] contain a square submatrix that
// is minimally non-TU with an all-ones row (a Q1 member, side-respecting)?
bool augmentation_contains_q1(const IntMatrix& m, const Budgets& budgets) {
    IntMatrix aug(m.rows + 1, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    for (int j = 0; j < m.cols; ++j) aug.at(m.rows, j) = 1;
    int r = aug.rows, c = aug.cols;
    for (int k = 1; k <= std::min(r, c); ++k) {
        std::vector<int> rs(k), cs(k);
        for (int i = 0; i < k; ++i) rs[i] = i;
        auto next = [](std::vector<int>& idx, int n) {
            int kk = (int)idx.size();
            for (int i = kk - 1; i >= 0; --i)
                if (idx[i] < n - kk + i) {
                    ++idx[i];
                    for (int j = i + 1; j < kk; ++j) idx[j] = idx[j - 1] + 1;
                    return true;
                }
            return false;
        };
        do {
            for (int i = 0; i < k; ++i) cs[i] = i;
            do {
                IntMatrix sub = aug.submatrix(rs, cs);
                bool has_ones_row = false;
                for (int i = 0; i < k && !has_ones_row; ++i) {
                    bool all = true;
                    for (int j = 0; j < k; ++j)
                        if (!sub.at(i, j)) { all = false; break; }
                    if (all) has_ones_row = true;
                }
                if (has_ones_row && matrix_in_class_Q(sub, budgets)) return true;
            } while (next(cs, c));
        } while (next(rs, r));
    }
    return false;
}

// Non-side-respecting reading: search the augmented graph for an induced
// copy of any Q1 member of at most its size.
bool augmentation_contains_q1_graphwise(const IntMatrix& m, const Budgets& budgets) {
    Graph aug(m.rows + 1 + m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j)) aug.add_edge(i, m.rows + 1 + j);
    for (int j = 0; j < m.cols; ++j) aug.add_edge(m.rows, m.rows + 1 + j);
    int side = std::max(m.rows + 1, m.cols);
    ClassCatalog q = enumerate_Q(std::min(side, (aug.n) / 2), budgets, true);
    for (const auto& e : q.members) {
        bool q1 = std::find(e.tags.begin(), e.tags.end(), "Q1") != e.tags.end();
        if (q1 && contains_induced(aug, e.graph)) return true;
    }
    return false;
}

}  // namespace

ClassCatalog enumerate_Q(int max_side, const Budgets& budgets, bool side_respecting) {
    if (max_side > 5) throw budget_error("enumerate_Q: side budget is 5");
    ClassCatalog cat;
    std::set<std::vector<std::uint64_t>> seen;
    for (int k = 1; k <= max_side; ++k) {
        // rows strictly increasing as k-bit words: a minimally non-TU matrix
        // has no repeated row (equal rows put every violator in a proper
        // submatrix), so this is exhaustive up to row order
        std::vector<int> rows(k);
        for (int i = 0; i < k; ++i) rows[i] = i;
        int nrows_words = 1 << k;
        auto next = [&](std::vector<int>& idx) {
            for (int i = k - 1; i >= 0; --i)
                if (idx[i] < nrows_words - k + i) {
                    ++idx[i];
                    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                    return true;
                }
            return false;
        };
        if (nrows_words < k) continue;
        do {
            IntMatrix m(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) m.at(i, j) = (rows[i] >> j) & 1;
            long long det = determinant(m);
            if (det >= -1 && det <= 1) continue;  // the minimal violator is M itself
            if (!matrix_in_class_Q(m, budgets)) continue;
            Graph g = graph_of_biadjacency(m);
            auto key = canonical_key(g);
            if (!seen.insert(key).second) continue;
            CatalogEntry e;
            g.name = "Q-" + std::to_string(k);
            e.graph = g;
            e.canon = canonical_hex(g);
            bool q1 = false;
            for (int i = 0; i < k && !q1; ++i) {
                bool all = true;
                for (int j = 0; j < k; ++j)
                    if (!m.at(i, j)) { all = false; break; }
                q1 = all;
            }
            if (q1) {
                e.tags.push_back("Q1");
            } else {
                bool contains = side_respecting ? augmentation_contains_q1(m, budgets)
                                                : augmentation_contains_q1_graphwise(m, budgets);
                if (!contains) e.tags.push_back("Q2");
            }
            ConstructionRecord rec;
            rec.M = m;
            long long total = 0;
            for (long long x : m.a) total += x;
            rec.m = (total - 2) / 4;
            e.record = rec;
            cat.members.push_back(std::move(e));
        } while (next(rows));
    }
    return cat;
}

ClassCatalog enumerate_S(int max_n, const Budgets& budgets) {
    int max_side = (max_n + 1) / 2;
    ClassCatalog q = enumerate_Q(max_side, budgets);
    ClassCatalog cat;
    std::set<std::vector<std::uint64_t>> seen;
    for (const auto& qe : q.members) {
        bool q1 = std::find(qe.tags.begin(), qe.tags.end(), "Q1") != qe.tags.end();
        bool q2 = std::find(qe.tags.begin(), qe.tags.end(), "Q2") != qe.tags.end();
        if (!q1 && !q2) continue;
        int k = qe.record->M.cols;
        int out_n = q1 ? 2 * k - 1 : 2 * k;
        if (out_n > max_n) continue;
        Graph complete(k);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) complete.add_edge(i, j);
        VertexSet side_u = 0, side_v = 0;
        for (int i = 0; i < k; ++i) side_u |= bit(i);
        for (int j = 0; j < k; ++j) side_v |= bit(k + j);
        RGraphResult r = build_R_graph(qe.graph, side_u, side_v, complete, budgets);
        auto key = canonical_key(r.graph);
        if (!seen.insert(key).second) continue;
        CatalogEntry e;
        e.graph = r.graph;
        e.graph.name = "S-" + std::to_string(r.graph.n);
        e.canon = canonical_hex(r.graph);
        e.tags = qe.tags;
        e.record = r.record;
        cat.members.push_back(std::move(e));
    }
    std::sort(cat.members.begin(), cat.members.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) {
                  return a.graph.n != b.graph.n ? a.graph.n < b.graph.n : a.canon < b.canon;
              });
    return cat;
}

SplitBoxPerfectReport split_box_perfect_test(const Graph& g, bool with_esp,
                                             const Budgets& budgets) {
    if (!is_split(g)) throw error("split_box_perfect_test: input is not a split graph");
    SplitBoxPerfectReport rep;
    rep.tu = is_tu_graph(g, budgets).is_tu;
    rep.s_free = true;
    for (const auto& member : enumerate_S(g.n, budgets).members)
        if (contains_induced(g, member.graph)) { rep.s_free = false; break; }
    if (rep.tu != rep.s_free)
        throw error("split_box_perfect_test: TU and S-freeness diverge on this graph "
                    "(high-severity finding)");
    if (with_esp) rep.esp = is_esp(g, EspMode::Direct, budgets).esp;
    return rep;
}

bool minimality_check(const Graph& g, const ConstructionRecord& record,
                      const Budgets& budgets) {
    BoxCertificate cert = make_R_certificate(g, record, std::nullopt, budgets);
    if (!verify_certificate(g, cert, false, budgets).pass) return false;
    for (int v = 0; v < g.n; ++v) {
        Graph h = induced_subgraph(g, full_set(g.n) & ~bit(v));
        if (is_tu_graph(h, budgets).is_tu) continue;
        if (is_esp(h, EspMode::Direct, budgets).esp) continue;
        return false;
    }
    return true;
}

std::string catalog_to_jsonl(const ClassCatalog& c) {
    using ordered_json = nlohmann::ordered_json;
    std::ostringstream os;
    for (const auto& e : c.members) {
        ordered_json j;
        j["n"] = e.graph.n;
        ordered_json es = ordered_json::array();
        for (auto [u, v] : e.graph.edges()) es.push_back({u, v});
        j["edges"] = es;
        j["name"] = e.graph.name;
        j["canon"] = e.canon;
        j["tags"] = e.tags;
        if (e.record) {
            ordered_json rec;
            rec["rows"] = e.record->M.rows;
            rec["cols"] = e.record->M.cols;
            rec["entries"] = e.record->M.a;
            rec["deleted"] = e.record->deleted;
            rec["deleted_row"] = e.record->deleted_row;
            rec["m"] = e.record->m;
            j["record"] = rec;
        }
        os << j.dump() << "\n";
    }
    return os.str();
}

ClassCatalog catalog_from_jsonl(const std::string& text) {
    using ordered_json = nlohmann::ordered_json;
    ClassCatalog c;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        ordered_json j = ordered_json::parse(line);
        CatalogEntry e;
        Graph g(j.at("n").get<int>());
        for (const auto& ed : j.at("edges")) g.add_edge(ed[0].get<int>(), ed[1].get<int>());
        g.name = j.at("name").get<std::string>();
        e.graph = g;
        e.canon = j.at("canon").get<std::string>();
        e.tags = j.at("tags").get<std::vector<std::string>>();
        if (j.contains("record")) {
            ConstructionRecord rec;
            rec.M = IntMatrix(j["record"]["rows"].get<int>(), j["record"]["cols"].get<int>());
            rec.M.a = j["record"]["entries"].get<std::vector<long long>>();
            rec.deleted = j["record"]["deleted"].get<bool>();
            rec.deleted_row = j["record"]["deleted_row"].get<int>();
            rec.m = j["record"]["m"].get<long long>();
            e.record = rec;
        }
        c.members.push_back(std::move(e));
    }
    return c;
}

}  // namespace boxperf
