#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boxperf/boxtdi.hpp"
#include "boxperf/budgets.hpp"
#include "boxperf/graph.hpp"

namespace boxperf {

// Canonical adjacency key under vertex relabeling: iterated neighbor-color
// refinement plus individualization backtracking, minimizing the relabeled
// adjacency rows. Equal keys iff isomorphic.
std::vector<std::uint64_t> canonical_key(const Graph& g);
std::string canonical_hex(const Graph& g);

// All graphs on exactly n vertices up to isomorphism, by vertex-extension
// with canonical deduplication. Deterministic order.
std::vector<Graph> all_graphs_up_to_iso(int n);

struct CatalogEntry {
    Graph graph;
    std::string canon;
    std::vector<std::string> tags;       // Q1 / Q2 for class Q members
    std::optional<ConstructionRecord> record;  // S members carry provenance
};

struct ClassCatalog {
    std::vector<CatalogEntry> members;
};

// JSON-lines, one member per line; byte-stable across runs.
std::string catalog_to_jsonl(const ClassCatalog& c);
ClassCatalog catalog_from_jsonl(const std::string& text);

// All bipartite graphs with |U| = |V| <= max_side whose biadjacency matrix
// is minimally non-totally-unimodular, up to isomorphism. Members are
// tagged Q1 (a U-vertex dominates V) or Q2 (the V-dominating augmentation
// stays Q1-free) when applicable. Matrix-first enumeration. The
// side_respecting flag controls how the Q2 test reads "induced subgraph"
// (submatrix of the augmented biadjacency when true).
ClassCatalog enumerate_Q(int max_side, const Budgets& budgets = {},
                         bool side_respecting = true);

// All members of class S on <= max_n vertices up to isomorphism: Q1/Q2
// members paired with a complete graph on the V side.
ClassCatalog enumerate_S(int max_n, const Budgets& budgets = {});

struct SplitBoxPerfectReport {
    bool tu = false;
    bool s_free = false;
    std::optional<bool> esp;
};
// For a split graph: totally unimodular vs. free of induced S-members; the
// two verdicts must agree and divergence throws. Optionally also runs the
// ESP search.
SplitBoxPerfectReport split_box_perfect_test(const Graph& g, bool with_esp = false,
                                             const Budgets& budgets = {});

// True iff the construction certificate verifies on G and every one-vertex
// deletion is totally unimodular or search-verified ESP.
bool minimality_check(const Graph& g, const ConstructionRecord& record,
                      const Budgets& budgets = {});

}  // namespace boxperf
