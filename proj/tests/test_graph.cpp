#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <sstream>

#include "boxperf/classes.hpp"
#include "boxperf/families.hpp"
#include "boxperf/io.hpp"
#include "boxperf/subgraph.hpp"
#include "boxperf/suite.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace boxperf;

TEST_CASE("S_3 has exactly the four expected triangles") {
    Graph s3 = build_named("S_n", {3});
    auto cliques = oracle::brute_maximal_cliques(s3);
    // v1v2v6, v2v3v4, v2v4v6, v4v5v6 in 0-based indices
    std::vector<VertexSet> want = {bit(0) | bit(1) | bit(5), bit(1) | bit(2) | bit(3),
                                   bit(1) | bit(3) | bit(5), bit(3) | bit(4) | bit(5)};
    std::sort(want.begin(), want.end(), clique_less);
    CHECK(cliques == want);
}

TEST_CASE("named families") {
    CHECK(build_named("Cn", {4}).edge_count() == 4);
    CHECK(build_named("Cn", {4}).n == 4);
    Graph b3p = build_named("barS3plus", {});
    CHECK(b3p.n == 7);
    CHECK(b3p.degree(6) == 6);
    Graph rest = induced_subgraph(b3p, full_set(7) & ~bit(6));
    CHECK(canonical_key(rest) == canonical_key(complement(build_named("S_n", {3}))));
    CHECK(build_named("Gamma", {}).edge_count() == 8);
    CHECK(build_named("K4plus", {}).n == 6);
    CHECK(build_named("K2nplus", {3}).n == 6);
    CHECK_THROWS_AS(build_named("S_n", {1}), error);
    CHECK_THROWS_AS(build_named("nope", {}), error);
    // classC: X must be stable on the cycle
    CHECK_THROWS_AS(build_named("classC", {6, 2, 0, 1, 0, 0}), error);
    Graph c = build_named("classC", {6, 1, 0, 2});
    std::vector<int> side;
    CHECK(bipartition(c, side));
}

TEST_CASE("induced subgraphs") {
    Graph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    Graph sub = induced_subgraph(tri, std::vector<int>{0, 1});
    CHECK(sub.n == 2);
    CHECK(sub.has_edge(0, 1));
    // S_3 restricted to the clique side is a triangle
    Graph s3 = build_named("S_n", {3});
    Graph evens = induced_subgraph(s3, bit(1) | bit(3) | bit(5));
    CHECK(evens.edge_count() == 3);
    CHECK(induced_subgraph(s3, VertexSet(0)).n == 0);
    CHECK_THROWS_AS(induced_subgraph(tri, std::vector<int>{0, 7}), error);
}

TEST_CASE("complement and induced commute") {
    Rng rng(42);
    for (int it = 0; it < 40; ++it) {
        Graph g = random_graph(1 + (int)(rng() % 7), 0.5, rng);
        VertexSet x = rng() & full_set(g.n);
        Graph a = induced_subgraph(complement(g), x);
        Graph b = complement(induced_subgraph(g, x));
        CHECK(a.adj == b.adj);
    }
    Graph g = random_graph(6, 0.5, rng);
    CHECK(complement(complement(g)).adj == g.adj);
    Graph k2(2);
    k2.add_edge(0, 1);
    CHECK(complement(k2).edge_count() == 0);
}

TEST_CASE("duplication") {
    Graph k1(1);
    CHECK(duplicate_vertex(k1, 0, true).edge_count() == 1);
    CHECK(duplicate_vertex(k1, 0, false).edge_count() == 0);
    Graph k2(2);
    k2.add_edge(0, 1);
    Graph d = duplicate_vertex(k2, 0, false);  // twins 0 and 2 over vertex 1
    CHECK(d.n == 3);
    CHECK(d.has_edge(1, 2));
    CHECK(!d.has_edge(0, 2));
    // deleting the duplicate recovers the original exactly
    Rng rng(7);
    for (int it = 0; it < 30; ++it) {
        Graph g = random_graph(2 + (int)(rng() % 6), 0.4, rng);
        int v = (int)(rng() % g.n);
        Graph dup = duplicate_vertex(g, v, rng() & 1);
        Graph back = induced_subgraph(dup, full_set(dup.n) & ~bit(g.n));
        CHECK(back.adj == g.adj);
    }
}

TEST_CASE("replication") {
    Graph k2(2);
    k2.add_edge(0, 1);
    std::vector<int> prov;
    Graph r = replicate(k2, {2, 1}, &prov);
    CHECK(r.n == 3);
    CHECK(!r.has_edge(0, 1));  // the two copies of vertex 0 stay stable
    CHECK(r.has_edge(0, 2));
    CHECK(r.has_edge(1, 2));
    CHECK(prov == std::vector<int>{0, 0, 1});
    Rng rng(11);
    for (int it = 0; it < 20; ++it) {
        Graph g = random_graph(2 + (int)(rng() % 5), 0.5, rng);
        std::vector<int> d(g.n);
        for (auto& x : d) x = (int)(rng() % 3);
        std::vector<int> p;
        Graph gr = replicate(g, d, &p);
        for (int i = 0; i < gr.n; ++i)
            for (int j = i + 1; j < gr.n; ++j)
                CHECK(gr.has_edge(i, j) == (p[i] != p[j] && g.has_edge(p[i], p[j])));
        Graph same = replicate(g, std::vector<int>(g.n, 1));
        CHECK(same.adj == g.adj);
        CHECK(replicate(g, std::vector<int>(g.n, 0)).n == 0);
    }
}

TEST_CASE("line graphs") {
    Graph claw = build_named("Kmn", {1, 3});
    auto lg = line_graph(Multigraph::of(claw));
    CHECK(lg.graph.n == 3);
    CHECK(lg.graph.edge_count() == 3);
    Graph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    auto lp = line_graph(Multigraph::of(p4));
    CHECK(lp.graph.n == 3);
    CHECK(lp.graph.edge_count() == 2);
    Graph c6 = build_named("Cn", {6});
    CHECK(canonical_key(line_graph(Multigraph::of(c6)).graph) == canonical_key(c6));
    Multigraph loop(2);
    loop.add_edge(0, 0);
    CHECK_THROWS_AS(line_graph(loop), error);
    // parallel edges give adjacent line-graph vertices
    Multigraph par(2);
    par.add_edge(0, 1, 2);
    CHECK(line_graph(par).graph.edge_count() == 1);
    // every maximal clique of L(H) sits inside a star or a triangle of H;
    // for bipartite H stars are the only option
    Rng rng(5);
    for (int it = 0; it < 20; ++it) {
        Graph h = random_graph(3 + (int)(rng() % 4), 0.5, rng);
        auto l = line_graph(Multigraph::of(h));
        std::vector<int> side;
        bool bip = bipartition(h, side);
        for (VertexSet k : oracle::brute_maximal_cliques(l.graph)) {
            auto vs = set_to_vec(k);
            bool star = false;
            for (int hv = 0; hv < h.n && !star; ++hv) {
                bool all = true;
                for (int e : vs)
                    if (l.edge_of[e].first != hv && l.edge_of[e].second != hv) all = false;
                star = all;
            }
            bool triangle = false;
            if (vs.size() == 3) {
                VertexSet ends = 0;
                for (int e : vs) ends |= bit(l.edge_of[e].first) | bit(l.edge_of[e].second);
                triangle = popcount(ends) == 3;
            }
            CHECK((star || triangle));
            if (bip) CHECK(star);
        }
    }
}

TEST_CASE("bipartite extension") {
    Graph k1(1);
    Graph k2(2);
    k2.add_edge(0, 1);
    Graph r = bipartite_extension(k1, bit(0), k2, bit(0));
    CHECK(r.n == 2);
    CHECK(r.edge_count() == 1);

    Graph path3(3);
    path3.add_edge(0, 1);
    path3.add_edge(1, 2);
    Graph h = bipartite_extension(k2, bit(0), path3, bit(0));
    CHECK(h.n == 4);
    CHECK(h.edge_count() == 3);
    CHECK(h.has_edge(0, 1));  // the original K_2 edge
    CHECK(h.has_edge(0, 2));  // identified vertex picks up y
    CHECK(h.has_edge(2, 3));

    CHECK_THROWS_AS(bipartite_extension(k2, bit(0) | bit(1), path3, bit(0) | bit(2)), error);
    Graph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    CHECK_THROWS_AS(bipartite_extension(k1, bit(0), tri, bit(0)), error);  // B not bipartite
    CHECK_THROWS_AS(bipartite_extension(k2, bit(0), path3, bit(0) | bit(2)), error);  // sizes
}

TEST_CASE("simplicial sums") {
    Graph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    Graph s = simplicial_sum(tri, 0, tri, 0);
    CHECK(s.n == 4);
    CHECK(s.edge_count() == 6);  // K_4
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    Graph p = simplicial_sum(path, 0, path, 0);
    CHECK(p.n == 4);
    CHECK(p.edge_count() == 3);
    // both parts stay as induced subgraphs
    Rng rng(13);
    for (int it = 0; it < 20; ++it) {
        Graph g1 = random_graph(3 + (int)(rng() % 4), 0.6, rng);
        Graph g2 = random_graph(3 + (int)(rng() % 4), 0.6, rng);
        int x1 = -1, x2 = -1;
        for (int v = 0; v < g1.n; ++v)
            if (g1.adj[v] && g1.is_clique(g1.adj[v] | bit(v))) { x1 = v; break; }
        for (int v = 0; v < g2.n; ++v)
            if (g2.adj[v] && g2.is_clique(g2.adj[v] | bit(v))) { x2 = v; break; }
        if (x1 < 0 || x2 < 0) continue;
        Graph sum = simplicial_sum(g1, x1, g2, x2);
        CHECK(contains_induced(sum, induced_subgraph(g1, full_set(g1.n) & ~bit(x1))));
        CHECK(contains_induced(sum, induced_subgraph(g2, full_set(g2.n) & ~bit(x2))));
    }
    Graph lonely(3);
    lonely.add_edge(1, 2);
    CHECK_THROWS_AS(simplicial_sum(lonely, 0, tri, 0), error);  // isolated x1
}

TEST_CASE("p-comparability") {
    Digraph d3(3);
    d3.add_arc(0, 1);
    d3.add_arc(1, 2);
    d3.add_arc(2, 0);
    auto r = p_comparability_graph(d3, bit(0));
    CHECK(r.graph.n == 2);
    CHECK(r.graph.edge_count() == 1);

    Digraph d4(4);
    for (int i = 0; i < 4; ++i) d4.add_arc(i, (i + 1) % 4);
    auto r4 = p_comparability_graph(d4, bit(0));
    CHECK(r4.graph.n == 3);
    CHECK(r4.graph.edge_count() == 3);

    Digraph bad(3);
    bad.add_arc(0, 1);
    CHECK_THROWS_AS(p_comparability_graph(bad, bit(0)), error);
    Digraph twot(4);
    twot.add_arc(0, 1);
    twot.add_arc(1, 0);
    CHECK_THROWS_AS(p_comparability_graph(twot, bit(0) | bit(1)), error);  // arc inside T
}

TEST_CASE("induced pattern search") {
    Graph s3 = build_named("S_n", {3});
    Graph claw = build_named("Kmn", {1, 3});
    CHECK(!contains_induced(s3, claw));
    // oracle: no 4-subset of S_3 induces a claw
    bool found = false;
    for (VertexSet s = 0; s < bit(6); ++s)
        if (popcount(s) == 4 &&
            canonical_key(induced_subgraph(s3, s)) == canonical_key(claw))
            found = true;
    CHECK(!found);
    Graph b3p = build_named("barS3plus", {});
    auto emb = contains_induced(b3p, build_named("barS3", {}));
    REQUIRE(emb);
    Graph bar = build_named("barS3", {});
    for (int i = 0; i < bar.n; ++i)
        for (int j = i + 1; j < bar.n; ++j)
            CHECK(bar.has_edge(i, j) == b3p.has_edge(emb->map[i], emb->map[j]));
    CHECK(contains_induced(s3, Graph(1)));
    CHECK(!contains_induced(Graph(0), Graph(1)));
}

TEST_CASE("graph text format") {
    Graph g = build_named("S_n", {3});
    std::stringstream ss;
    write_graph(ss, g);
    Graph back = read_graph(ss);
    CHECK(back.adj == g.adj);
    CHECK(back.name == "S_3");

    std::stringstream bad1("graph x\nn 3\ne 0 9\n");
    CHECK_THROWS_WITH_AS(read_graph(bad1), "line 3: vertex index out of range", error);
    std::stringstream bad2("graph x\ne 0 1\n");
    CHECK_THROWS_WITH_AS(read_graph(bad2), "line 2: incidence line before 'n' line", error);
    std::stringstream bad3("graph x\nn 2\nq 0 1\n");
    CHECK_THROWS_AS(read_graph(bad3), error);

    Multigraph h(3);
    h.add_edge(0, 1, 2);
    h.add_edge(1, 1, 1);
    std::stringstream ms;
    write_multigraph(ms, h);
    Multigraph hb = read_multigraph(ms);
    CHECK(hb.multiplicity(0, 1) == 2);
    CHECK(hb.multiplicity(1, 1) == 1);

    Digraph d(3);
    d.add_arc(0, 1, 2);
    d.add_arc(2, 0);
    std::stringstream ds;
    write_digraph(ds, d);
    Digraph db = read_digraph(ds);
    CHECK(db.arcs.size() == 3);
}

TEST_CASE("multigraph normalization drops pendant twins") {
    Multigraph h(4);
    h.add_edge(0, 1);  // z = 1 with pendants 0 and 2
    h.add_edge(2, 1);
    h.add_edge(1, 3);
    Multigraph n = normalize_pendant_twins(h);
    CHECK(n.n == 3);
    CHECK(n.edge_count() == 3);
}
