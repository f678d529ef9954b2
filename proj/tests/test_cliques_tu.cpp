#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <sstream>

#include "boxperf/families.hpp"
#include "boxperf/invariants.hpp"
#include "boxperf/suite.hpp"
#include "boxperf/tu.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace boxperf;

TEST_CASE("maximal clique enumeration matches the brute oracle") {
    Rng rng(31);
    for (int it = 0; it < 40; ++it) {
        Graph g = random_graph(1 + (int)(rng() % 8), 0.5, rng);
        CHECK(maximal_cliques(g).cliques == oracle::brute_maximal_cliques(g));
    }
    Graph k5(5);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5.add_edge(i, j);
    CHECK(maximal_cliques(k5).cliques == std::vector<VertexSet>{full_set(5)});
    CHECK(maximal_cliques(build_named("Cn", {4})).cliques.size() == 4);
}

TEST_CASE("clique matrix shapes and counts") {
    Graph k2(2);
    k2.add_edge(0, 1);
    auto cm = clique_matrix(k2);
    CHECK(cm.B.rows == 1);
    CHECK(cm.B.at(0, 0) == 1);
    CHECK(cm.B.at(0, 1) == 1);
    CHECK(cm.c == std::vector<long long>{1, 1});

    auto s3 = clique_matrix(build_named("S_n", {3}));
    CHECK(s3.B.rows == 4);
    CHECK(s3.B.cols == 6);
    CHECK(s3.c == std::vector<long long>{1, 3, 1, 3, 1, 3});

    auto c4 = clique_matrix(build_named("Cn", {4}));
    CHECK(c4.B.rows == 4);
    CHECK(c4.c == std::vector<long long>(4, 2));

    // column counts and row sums
    Rng rng(32);
    for (int it = 0; it < 20; ++it) {
        Graph g = random_graph(2 + (int)(rng() % 6), 0.5, rng);
        auto m = clique_matrix(g);
        auto rows = maximal_cliques(g).cliques;
        auto colsum = m.B.col_sums();
        for (int v = 0; v < g.n; ++v) CHECK(colsum[v] == m.c[v]);
        auto rowsum = m.B.row_sums();
        for (size_t r = 0; r < rows.size(); ++r) CHECK(rowsum[r] == popcount(rows[r]));
    }
}

TEST_CASE("stable-side vertices of a split graph lie in one maximal clique") {
    Rng rng(33);
    int seen = 0;
    while (seen < 25) {
        Graph g = random_graph(2 + (int)(rng() % 6), 0.5, rng);
        auto part = is_split(g);
        if (!part) continue;
        ++seen;
        auto c = clique_matrix(g).c;
        for (int u : set_to_vec(part->stable)) CHECK(c[u] == 1);
    }
}

TEST_CASE("induced clique matrices are the maximal restrictions") {
    Rng rng(34);
    for (int it = 0; it < 20; ++it) {
        Graph g = random_graph(3 + (int)(rng() % 5), 0.5, rng);
        VertexSet x = rng() & full_set(g.n);
        auto direct = maximal_cliques(induced_subgraph(g, x)).cliques;
        // restrict every maximal clique to x, keep the maximal distinct ones
        auto vs = set_to_vec(x);
        std::vector<int> pos(g.n, -1);
        for (int i = 0; i < (int)vs.size(); ++i) pos[vs[i]] = i;
        std::vector<VertexSet> restricted;
        for (VertexSet k : maximal_cliques(g).cliques) {
            VertexSet r = 0;
            for (int v : set_to_vec(k & x)) r |= bit(pos[v]);
            if (r) restricted.push_back(r);
        }
        std::vector<VertexSet> keep;
        for (VertexSet a : restricted) {
            bool dominated = false;
            for (VertexSet b : restricted)
                if (a != b && (a & b) == a) dominated = true;
            if (!dominated && std::find(keep.begin(), keep.end(), a) == keep.end())
                keep.push_back(a);
        }
        std::sort(keep.begin(), keep.end(), clique_less);
        CHECK(direct == keep);
    }
}

TEST_CASE("matrix text format round trip") {
    IntMatrix m(2, 3);
    m.at(0, 0) = 1;
    m.at(1, 2) = -1;
    std::stringstream ss;
    write_matrix(ss, m);
    CHECK(read_matrix(ss) == m);
    std::stringstream bad("2 2\n1 0 1\n");
    CHECK_THROWS_AS(read_matrix(bad), error);
}

TEST_CASE("total unimodularity basics") {
    IntMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(is_totally_unimodular(id).is_tu);

    // biadjacency of C_6: 3x3 circulant with two ones per row
    IntMatrix c6(3, 3);
    for (int i = 0; i < 3; ++i) {
        c6.at(i, i) = 1;
        c6.at(i, (i + 1) % 3) = 1;
    }
    TUReport rep = is_totally_unimodular(c6);
    CHECK(!rep.is_tu);
    REQUIRE(rep.violator);
    CHECK(rep.violator->rows.size() == 3);  // the whole matrix is the violator
    CHECK((rep.violator->det == 2 || rep.violator->det == -2));

    IntMatrix badentry(1, 1);
    badentry.at(0, 0) = 2;
    CHECK_THROWS_AS(is_totally_unimodular(badentry), error);
}

TEST_CASE("interval matrices are totally unimodular") {
    Rng rng(35);
    for (int it = 0; it < 25; ++it) {
        int r = 2 + (int)(rng() % 4), c = 2 + (int)(rng() % 4);
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            int a = (int)(rng() % c), b = (int)(rng() % c);
            if (a > b) std::swap(a, b);
            for (int j = a; j <= b; ++j) m.at(i, j) = 1;
        }
        CHECK(is_totally_unimodular(m).is_tu);
        CHECK(oracle::brute_is_tu(m));
    }
}

TEST_CASE("TU agrees with the cofactor oracle on random small matrices") {
    Rng rng(36);
    for (int it = 0; it < 60; ++it) {
        int r = 1 + (int)(rng() % 5), c = 1 + (int)(rng() % 5);
        IntMatrix m(r, c);
        for (auto& x : m.a) x = (int)(rng() % 3) - 1;
        bool want = oracle::brute_is_tu(m);
        CHECK(is_totally_unimodular(m).is_tu == want);
        // force the signing route as well
        Budgets tiny;
        tiny.tu_exhaustive_cells = 0;
        CHECK(is_totally_unimodular(m, tiny).is_tu == want);
    }
}

TEST_CASE("TU graphs") {
    Rng rng(37);
    for (int it = 0; it < 15; ++it) {
        // bipartite graphs are TU
        int a = 1 + (int)(rng() % 3), b = 1 + (int)(rng() % 4);
        Graph g(a + b);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                if (rng() & 1) g.add_edge(i, a + j);
        CHECK(is_tu_graph(g).is_tu);
    }
    CHECK(!is_tu_graph(build_named("S_n", {3})).is_tu);
}

TEST_CASE("balancedness") {
    IntMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(is_balanced(id).balanced);

    IntMatrix jmi(3, 3);  // all-ones minus identity = a triangle's incidence
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) jmi.at(i, j) = i == j ? 0 : 1;
    BalancedReport rep = is_balanced(jmi);
    CHECK(!rep.balanced);
    REQUIRE(rep.witness);
    CHECK(rep.witness->rows.size() == 3);
    CHECK((rep.witness->det == 2 || rep.witness->det == -2));

    // TU 0/1 matrices are balanced
    Rng rng(38);
    for (int it = 0; it < 25; ++it) {
        int r = 1 + (int)(rng() % 4), c = 1 + (int)(rng() % 4);
        IntMatrix m(r, c);
        for (auto& x : m.a) x = rng() & 1;
        if (oracle::brute_is_tu(m)) CHECK(is_balanced(m).balanced);
    }
}

TEST_CASE("class Q membership") {
    Graph c6 = bipartite_even_cycle(3);
    VertexSet u = bit(0) | bit(1) | bit(2), v = bit(3) | bit(4) | bit(5);
    ClassQReport rep = class_Q_membership(c6, u, v);
    CHECK(rep.member);
    CHECK(rep.eulerian);
    CHECK(rep.sides_equal);
    CHECK(rep.edge_count % 4 == 2);

    Graph c4 = bipartite_even_cycle(2);
    CHECK(!class_Q_membership(c4, bit(0) | bit(1), bit(2) | bit(3)).member);
    Graph c8 = bipartite_even_cycle(4);
    VertexSet u8 = 0, v8 = 0;
    for (int i = 0; i < 4; ++i) u8 |= bit(i);
    for (int i = 4; i < 8; ++i) v8 |= bit(i);
    CHECK(!class_Q_membership(c8, u8, v8).member);
    Graph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    CHECK_THROWS_AS(class_Q_membership(tri, bit(0) | bit(1), bit(2)), error);
}

TEST_CASE("row bipartition") {
    IntMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    auto parts = row_bipartition(id);
    REQUIRE(parts);
    CHECK(parts->first.front() == 0);  // deterministic least: row 0 in part one

    auto bc4 = clique_matrix(build_named("Cn", {4})).B;
    auto p4 = row_bipartition(bc4);
    REQUIRE(p4);
    // the signed sum must vanish or stay within one everywhere
    std::vector<long long> sum(bc4.cols, 0);
    for (int r : p4->first)
        for (int c = 0; c < bc4.cols; ++c) sum[c] += bc4.at(r, c);
    for (int r : p4->second)
        for (int c = 0; c < bc4.cols; ++c) sum[c] -= bc4.at(r, c);
    for (long long s : sum) CHECK((s >= -1 && s <= 1));

    IntMatrix c6(3, 3);
    for (int i = 0; i < 3; ++i) {
        c6.at(i, i) = 1;
        c6.at(i, (i + 1) % 3) = 1;
    }
    CHECK(!row_bipartition(c6));
}

TEST_CASE("TU graphs admit row bipartitions of every row subset") {
    Rng rng(39);
    int seen = 0;
    while (seen < 10) {
        Graph g = random_tu_graph(6, rng);
        auto b = clique_matrix(g).B;
        ++seen;
        for (int it = 0; it < 8; ++it) {
            std::vector<int> rows;
            for (int r = 0; r < b.rows; ++r)
                if (rng() & 1) rows.push_back(r);
            if (rows.empty()) continue;
            std::vector<int> cols(b.cols);
            for (int c = 0; c < b.cols; ++c) cols[c] = c;
            CHECK(row_bipartition(b.submatrix(rows, cols)).has_value());
        }
    }
}
