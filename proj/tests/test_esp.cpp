#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <sstream>

#include "boxperf/esp.hpp"
#include "boxperf/families.hpp"
#include "boxperf/suite.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace boxperf;

namespace {

CliqueMultiset odd_triangles_of_s3() {
    CliqueMultiset m;
    m.add(bit(0) | bit(1) | bit(5));
    m.add(bit(1) | bit(2) | bit(3));
    m.add(bit(3) | bit(4) | bit(5));
    return m;
}

}  // namespace

TEST_CASE("subpartition condition checks") {
    Graph k4(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
    CliqueMultiset lam, l1, l2;
    lam.add(full_set(4));
    l1.add(full_set(4));
    CHECK(check_equitable_subpartition(k4, lam, l1, l2).ok);

    SubpartitionCheck empty = check_equitable_subpartition(k4, lam, l2, l2);
    CHECK(!empty.ok);
    CHECK(empty.violated == "(ii)");

    CliqueMultiset both = lam;
    both.add(full_set(4));
    SubpartitionCheck toobig = check_equitable_subpartition(k4, lam, both, l2);
    CHECK(!toobig.ok);
    CHECK(toobig.violated == "(i)");

    // (iii): cover d = 2 with both units on one side
    Graph k1(1);
    CliqueMultiset two, bothone;
    two.add(bit(0), 2);
    bothone.add(bit(0), 2);
    CliqueMultiset none;
    SubpartitionCheck lop = check_equitable_subpartition(k1, two, bothone, none);
    CHECK(!lop.ok);
    CHECK(lop.violated == "(iii)");
    CHECK(lop.witness_vertex == 0);

    CliqueMultiset notclique;
    notclique.add(bit(0) | bit(1));
    CHECK_THROWS_AS(check_equitable_subpartition(build_named("Cn", {4}), notclique,
                                                 CliqueMultiset{}, CliqueMultiset{})
                        .ok,
                    error);
}

TEST_CASE("equitable subpartition search on S_3") {
    Graph s3 = build_named("S_n", {3});
    // the three triangles around the stable side admit no subpartition
    CHECK(!find_equitable_subpartition(s3, odd_triangles_of_s3()));
    CHECK(!oracle::brute_has_equitable_subpartition(s3, odd_triangles_of_s3()));

    // all four maximal cliques split
    CliqueMultiset all4 = odd_triangles_of_s3();
    all4.add(bit(1) | bit(3) | bit(5));
    auto split = find_equitable_subpartition(s3, all4);
    REQUIRE(split);
    CHECK(check_equitable_subpartition(s3, all4, split->part1, split->part2).ok);

    Graph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    CliqueMultiset single;
    single.add(full_set(3));
    CHECK(find_equitable_subpartition(k3, single).has_value());
}

TEST_CASE("search agrees with the exhaustive oracle on random multisets") {
    Rng rng(201);
    for (int it = 0; it < 60; ++it) {
        Graph g = random_graph(2 + (int)(rng() % 4), 0.5, rng);
        auto cliques = oracle::all_cliques(g);
        if (cliques.empty()) continue;
        CliqueMultiset lam;
        int picks = 1 + (int)(rng() % 3);
        for (int p = 0; p < picks; ++p)
            lam.add(cliques[rng() % cliques.size()], 1 + (int)(rng() % 2));
        bool got = find_equitable_subpartition(g, lam).has_value();
        bool want = oracle::brute_has_equitable_subpartition(g, lam);
        CHECK(got == want);
        if (auto s = find_equitable_subpartition(g, lam))
            CHECK(check_equitable_subpartition(g, lam, s->part1, s->part2).ok);
    }
}

TEST_CASE("ESP verdicts") {
    Graph k4(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
    CHECK(is_esp(k4, EspMode::Direct).esp);
    CHECK(is_strong_esp(k4).esp);

    Graph s3 = build_named("S_n", {3});
    EspReport dir = is_esp(s3, EspMode::Direct);
    CHECK(!dir.esp);
    REQUIRE(dir.failing_lambda);
    // the witness is the triangle set around the stable side
    std::vector<VertexSet> want = {bit(0) | bit(1) | bit(5), bit(1) | bit(2) | bit(3),
                                   bit(3) | bit(4) | bit(5)};
    std::vector<VertexSet> got;
    for (const auto& e : dir.failing_lambda->entries) got.push_back(e.clique);
    std::sort(got.begin(), got.end(), clique_less);
    CHECK(got == want);
    CHECK(!is_strong_esp(s3).esp);

    CHECK(is_esp(build_named("Cn", {4}), EspMode::Direct).esp);
    CHECK(is_esp(bipartite_even_cycle(3), EspMode::Direct).esp);
    CHECK(is_esp(bipartite_even_cycle(3), EspMode::PerfectReform).esp);
    CHECK(!is_esp(build_named("Cn", {5}), EspMode::Direct).esp);
    CHECK_THROWS_AS(is_esp(build_named("Cn", {5}), EspMode::PerfectReform), error);
}

TEST_CASE("multiset closure of the subpartition property") {
    // in an ESP graph every multiset of cliques splits, not just the sets of
    // maximal cliques the definition quantifies over
    Rng rng(202);
    int done = 0;
    while (done < 25) {
        Graph g = random_graph(2 + (int)(rng() % 4), 0.5, rng);
        if (!is_esp(g, EspMode::Direct).esp) continue;
        auto cliques = oracle::all_cliques(g);
        if (cliques.empty()) { ++done; continue; }
        CliqueMultiset lam;
        for (int p = 0; p < 3; ++p)
            lam.add(cliques[rng() % cliques.size()], 1 + (int)(rng() % 2));
        CHECK(find_equitable_subpartition(g, lam).has_value());
        ++done;
    }
}

TEST_CASE("incomparability partitions") {
    Graph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    Orientation none{std::vector<VertexSet>(3, 0)};  // complement has no edges
    auto [d1, d2] = incomparability_partition(k3, none, {1, 1, 1});
    CHECK(d1 == std::vector<long long>{1, 1, 1});
    CHECK(d2 == std::vector<long long>{0, 0, 0});

    // stable graph = incomparability of a chain: layers alternate
    Graph n3(3);
    Orientation chain{std::vector<VertexSet>{bit(1) | bit(2), bit(2), 0}};
    auto [e1, e2] = incomparability_partition(n3, chain, {1, 1, 1});
    CHECK(e1 == std::vector<long long>{0, 0, 1});
    CHECK(e2 == std::vector<long long>{0, 1, 0});

    CHECK_THROWS_AS(incomparability_partition(k3, chain, {1, 1, 1}), error);

    Rng rng(203);
    int done = 0;
    while (done < 30) {
        Graph comp = random_comparability(2 + (int)(rng() % 6), rng);
        Graph g = complement(comp);
        auto orient = transitive_orientation(comp);
        REQUIRE(orient);
        auto c = clique_matrix(g).c;
        std::vector<long long> d(g.n);
        for (int v = 0; v < g.n; ++v) d[v] = rng() % (c[v] + 1);
        // postconditions checked inside; a throw fails the test
        auto [p1, p2] = incomparability_partition(g, *orient, d);
        long long a = max_weight_stable_set(g, d).value;
        CHECK(max_weight_stable_set(g, p1).value + max_weight_stable_set(g, p2).value <= a);
        ++done;
    }
}

TEST_CASE("consecutive clique families") {
    Graph two(2);  // 2K_1
    CliqueMultiset lam;
    lam.add(bit(0));
    lam.add(bit(1));
    auto q = consecutive_clique_family(two, lam, bit(0), bit(1));
    REQUIRE(q.size() == 2);
    CHECK(q[0] == bit(0));
    CHECK(q[1] == bit(1));

    Graph k2(2);
    k2.add_edge(0, 1);
    CliqueMultiset both;
    both.add(full_set(2), 2);
    auto q2 = consecutive_clique_family(k2, both, bit(0), bit(1));
    CHECK(q2[0] == full_set(2));
    CHECK(q2[1] == full_set(2));

    // cobipartite 4-vertex graph with one non-edge
    Graph cb(4);
    cb.add_edge(0, 1);
    cb.add_edge(2, 3);
    cb.add_edge(0, 2);
    cb.add_edge(0, 3);
    cb.add_edge(1, 2);  // non-edge: 1-3
    Rng rng(204);
    auto cliques = oracle::all_cliques(cb);
    for (int it = 0; it < 20; ++it) {
        CliqueMultiset l3;
        for (int p = 0; p < 3; ++p) l3.add(cliques[rng() % cliques.size()]);
        auto d = l3.coverage(4);
        if (d[1] + d[3] > l3.size()) {
            CHECK_THROWS_AS(consecutive_clique_family(cb, l3, bit(0) | bit(1), bit(2) | bit(3)),
                            error);
            continue;
        }
        auto qs = consecutive_clique_family(cb, l3, bit(0) | bit(1), bit(2) | bit(3));
        std::vector<long long> check(4, 0);
        for (VertexSet k : qs) {
            CHECK(cb.is_clique(k));
            for (int v : set_to_vec(k)) ++check[v];
        }
        CHECK(check == d);
    }
    CHECK_THROWS_AS(consecutive_clique_family(two, lam, bit(0) | bit(1), 0), error);
}

TEST_CASE("circulation splits") {
    // one triangle with flow 3: the ceiling lands on side one
    Digraph tri(3);
    tri.add_arc(0, 1);
    tri.add_arc(1, 2);
    tri.add_arc(2, 0);
    auto [f1, f2] = circulation_split(tri, {3, 3, 3});
    CHECK(f1 == Circulation{2, 2, 2});
    CHECK(f2 == Circulation{1, 1, 1});
    auto [z1, z2] = circulation_split(tri, {0, 0, 0});
    CHECK(z1 == Circulation{0, 0, 0});
    CHECK(z2 == Circulation{0, 0, 0});

    // two triangles sharing an arc
    Digraph share(4);
    share.add_arc(0, 1);  // shared
    share.add_arc(1, 2);
    share.add_arc(2, 0);
    share.add_arc(1, 3);
    share.add_arc(3, 0);
    Circulation f = {2, 1, 1, 1, 1};
    auto [s1, s2] = circulation_split(share, f);
    CHECK(s1[0] == 1);
    CHECK(s2[0] == 1);
    CHECK(is_circulation(share, s1));
    CHECK(is_circulation(share, s2));

    CHECK_THROWS_AS(circulation_split(share, {1, 0, 0, 0, 0}), error);

    // decomposition strips whole dicycles
    auto cycles = decompose_circulation(share, f);
    Circulation re(share.arcs.size(), 0);
    for (const auto& c : cycles)
        for (int a : c) re[a] += 1;
    CHECK(re == f);
}

TEST_CASE("degree splits") {
    Graph k33 = build_named("Kmn", {3, 3});
    std::vector<long long> ones(k33.edge_count(), 1);
    DegreeSplit s = matching_degree_split(k33, ones);
    REQUIRE(s.found);
    auto edges = k33.edges();
    std::vector<long long> deg1(6, 0), deg2(6, 0);
    for (size_t e = 0; e < edges.size(); ++e) {
        deg1[edges[e].first] += s.mu1[e];
        deg1[edges[e].second] += s.mu1[e];
        deg2[edges[e].first] += s.mu2[e];
        deg2[edges[e].second] += s.mu2[e];
    }
    for (int v = 0; v < 6; ++v) {
        CHECK(deg1[v] <= 2);
        CHECK(deg2[v] <= 1);
    }

    std::vector<long long> twos(k33.edge_count(), 2);
    DegreeSplit t = matching_degree_split(k33, twos);
    REQUIRE(t.found);
    CHECK(t.mu1 == t.mu2);

    Graph c8 = build_named("Cn", {8});
    DegreeSplit c = matching_degree_split(c8, std::vector<long long>(8, 1));
    REQUIRE(c.found);
    std::vector<long long> d1(8, 0), d2(8, 0);
    auto ce = c8.edges();
    for (size_t e = 0; e < ce.size(); ++e) {
        d1[ce[e].first] += c.mu1[e];
        d1[ce[e].second] += c.mu1[e];
        d2[ce[e].first] += c.mu2[e];
        d2[ce[e].second] += c.mu2[e];
    }
    for (int v = 0; v < 8; ++v) {
        CHECK(d1[v] == 1);
        CHECK(d2[v] == 1);
    }
    CHECK_THROWS_AS(matching_degree_split(build_named("Cn", {5}),
                                          std::vector<long long>(5, 1)),
                    error);
}

TEST_CASE("ESP closure under duplication on small samples") {
    Rng rng(205);
    int done = 0;
    while (done < 20) {
        Graph g = random_graph(3 + (int)(rng() % 3), 0.5, rng);
        if (!is_esp(g, EspMode::Direct).esp) continue;
        Graph d = duplicate_vertex(g, (int)(rng() % g.n), rng() & 1);
        CHECK(is_esp(d, EspMode::Direct).esp);
        ++done;
    }
}

TEST_CASE("clique multiset text format") {
    CliqueMultiset m;
    m.add(bit(0) | bit(2), 2);
    m.add(bit(1));
    std::stringstream ss;
    write_clique_multiset(ss, m);
    CliqueMultiset back = read_clique_multiset(ss);
    REQUIRE(back.entries.size() == 2);
    CHECK(back.entries[0].clique == (bit(0) | bit(2)));
    CHECK(back.entries[0].mult == 2);
    std::stringstream bad("k 0 1\n");
    CHECK_THROWS_AS(read_clique_multiset(bad), error);
}
