#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "boxperf/rational.hpp"

namespace boxperf {

using VertexSet = std::uint64_t;  // bit v set <=> vertex v in the set

inline int popcount(VertexSet s) { return __builtin_popcountll(s); }
inline int lowest(VertexSet s) { return __builtin_ctzll(s); }
inline VertexSet bit(int v) { return VertexSet(1) << v; }
inline VertexSet full_set(int n) { return n == 64 ? ~VertexSet(0) : (VertexSet(1) << n) - 1; }

std::vector<int> set_to_vec(VertexSet s);
VertexSet vec_to_set(const std::vector<int>& v);

// Simple undirected graph over dense vertex indices 0..n-1, adjacency kept as
// one bitmask per vertex. Symmetric, irreflexive. Capped at 64 vertices,
// which is far beyond every search budget in this project.
struct Graph {
    int n = 0;
    std::vector<VertexSet> adj;
    std::vector<std::string> labels;  // empty, or one per vertex
    std::string name;

    Graph() = default;
    explicit Graph(int n_, std::string name_ = "");

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    int degree(int v) const { return popcount(adj[v]); }
    long long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
    bool is_clique(VertexSet s) const;
    bool is_stable(VertexSet s) const;
    VertexSet vertices() const { return full_set(n); }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& es,
                            std::string name = "");
};

Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, VertexSet keep);
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);
Graph duplicate_vertex(const Graph& g, int v, bool adjacent);
// Substitutes each vertex by a stable set of size d(v); vertices with
// d(v) = 0 disappear. provenance (optional out) maps new index -> old.
Graph replicate(const Graph& g, const std::vector<int>& d,
                std::vector<int>* provenance = nullptr);
Graph disjoint_union(const Graph& a, const Graph& b);
bool is_connected(const Graph& g);
// Proper 2-coloring; absent if an odd cycle exists. side[v] in {0,1};
// the lowest vertex of each component goes to side 0.
bool bipartition(const Graph& g, std::vector<int>& side);

// Loops and parallel edges allowed; mult maps unordered pairs (u <= v) to a
// nonnegative count.
struct Multigraph {
    int n = 0;
    std::map<std::pair<int, int>, long long> mult;
    std::string name;

    Multigraph() = default;
    explicit Multigraph(int n_, std::string name_ = "") : n(n_), name(std::move(name_)) {}

    void add_edge(int u, int v, long long m = 1);
    long long multiplicity(int u, int v) const;
    long long degree(int v) const;  // loops count twice
    long long edge_count() const;
    bool has_loops() const;
    // List of support edges (u <= v, mult > 0), lexicographic.
    std::vector<std::pair<int, int>> support() const;

    static Multigraph of(const Graph& g);
};

// Drops loops and collapses multiplicities to 0/1.
Graph simplify(const Multigraph& h);

// Merges pendant twins: when two vertices have the same single neighbor, the
// edges of one are moved onto the other and the emptied vertex is removed
// (together with any isolated vertices). Optional normalization pass; no
// operation in this library requires it.
Multigraph normalize_pendant_twins(const Multigraph& h);

// Directed graph; parallel arcs are separate entries of `arcs`.
struct Digraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;
    std::string name;

    Digraph() = default;
    explicit Digraph(int n_, std::string name_ = "") : n(n_), name(std::move(name_)) {}
    void add_arc(int u, int v, long long mult = 1);
};

// Injective vertex map from a pattern into a host preserving adjacency and
// non-adjacency.
struct Embedding {
    std::vector<int> map;  // pattern vertex -> host vertex
};

}  // namespace boxperf
