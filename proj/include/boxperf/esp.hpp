#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "boxperf/budgets.hpp"
#include "boxperf/cliques.hpp"
#include "boxperf/graph.hpp"
#include "boxperf/invariants.hpp"

namespace boxperf {

// Multiset of cliques of one graph with multiplicities.
struct CliqueMultiset {
    struct Entry {
        VertexSet clique = 0;
        long long mult = 1;
    };
    std::vector<Entry> entries;

    long long size() const;                        // sum of multiplicities
    std::vector<long long> coverage(int n) const;  // d(v) per vertex
    void validate(const Graph& g) const;
    void add(VertexSet clique, long long mult = 1);
};

// Text format: one line per entry, "k <mult> v1 v2 ...".
void write_clique_multiset(std::ostream& os, const CliqueMultiset& m);
CliqueMultiset read_clique_multiset(std::istream& is);

struct EquitableSubpartition {
    CliqueMultiset part1, part2;
};

struct SubpartitionCheck {
    bool ok = true;
    std::string violated;  // "(i)", "(ii)" or "(iii)" when not ok
    int witness_vertex = -1;
};
// Conditions on (L1, L2) against L: (i) size bound, (ii) coverage at least
// d_L, (iii) both sides at least floor(d_L/2). Reports the first violation.
SubpartitionCheck check_equitable_subpartition(const Graph& g, const CliqueMultiset& lambda,
                                               const CliqueMultiset& l1,
                                               const CliqueMultiset& l2);

// Minimum number of cliques of G covering each vertex v exactly c(v) times,
// with memoization shared across queries on the same graph. Witness cover on
// demand. Exhaustive; throws budget_error past the state budget.
class CoverSolver {
public:
    explicit CoverSolver(const Graph& g, long long state_budget);
    long long min_cover(const std::vector<long long>& c);
    std::vector<VertexSet> witness(const std::vector<long long>& c);

private:
    const Graph& g_;
    long long budget_;
    long long states_ = 0;
    std::map<std::vector<long long>, long long> memo_;
    std::map<VertexSet, std::vector<VertexSet>> clique_cache_;

    const std::vector<VertexSet>& cliques_at(VertexSet supp, int v0);
    long long solve(std::vector<long long>& c);
};

// Exhaustive search for an equitable subpartition of lambda. Absence is
// certified: the search space (balanced per-vertex splits x minimum covers)
// is swept completely.
std::optional<EquitableSubpartition> find_equitable_subpartition(const Graph& g,
                                                                 const CliqueMultiset& lambda,
                                                                 const Budgets& budgets = {});

enum class EspMode { Direct, PerfectReform };

struct EspReport {
    bool esp = true;
    EspMode mode = EspMode::Direct;
    // Direct mode: the set of maximal cliques with no equitable subpartition.
    std::optional<CliqueMultiset> failing_lambda;
    // Reform mode: lexicographically least d <= c_G with no balanced d'.
    std::optional<std::vector<long long>> failing_d;
};

// Direct mode sweeps every set of maximal cliques per the definition.
// PerfectReform requires a perfect graph and sweeps d <= c_G, looking for
// d' in [floor(d/2), ceil(d/2)] with alpha(G^d') + alpha(G^{d-d'}) <=
// alpha(G^d).
EspReport is_esp(const Graph& g, EspMode mode, const Budgets& budgets = {});

// Adds the cardinality cap max(|L1|, |L2|) <= ceil(|L|/2).
EspReport is_strong_esp(const Graph& g, const Budgets& budgets = {});

// Checks that a specific d admits no balanced split (used to pin witnesses).
bool reform_d_fails(const Graph& g, const std::vector<long long>& d);

// Peels maximal antichains of the poset P^d, where `orient` transitively
// orients the complement of G; odd layers feed d1, even layers d2. All three
// postconditions (split, bounds, alpha inequality) are checked before
// returning and failure throws.
std::pair<std::vector<long long>, std::vector<long long>> incomparability_partition(
    const Graph& g, const Orientation& orient, const std::vector<long long>& d);

// Reorders a multiset of cliques of a cobipartite graph (two-clique
// partition X, Y) into Q_1..Q_N with every x in X in the first d(x) terms
// and every y in Y in the last d(y) terms.
std::vector<VertexSet> consecutive_clique_family(const Graph& g, const CliqueMultiset& lambda,
                                                 VertexSet x, VertexSet y);

using Circulation = std::vector<long long>;  // indexed by Digraph::arcs

bool is_circulation(const Digraph& d, const Circulation& f);
// Greedy cycle stripping; valid for any conserved nonnegative flow.
std::vector<std::vector<int>> decompose_circulation(const Digraph& d, const Circulation& f);
// Splits f into circulations f1 + f2 with floor(f/2) <= fi <= ceil(f/2).
// Deterministic: f1 takes the ceiling on the least-indexed odd arc.
std::pair<Circulation, Circulation> circulation_split(const Digraph& d, const Circulation& f);

struct DegreeSplit {
    bool found = false;
    std::vector<long long> mu1, mu2;  // aligned with Graph::edges()
};
// Splits mu over the edges of bipartite H into mu1 + mu2 with
// mu_i >= floor(mu/2) per edge, Delta(mu1) <= ceil(Delta(mu)/2) and
// Delta(mu2) <= floor(Delta(mu)/2). Peels floor(mu/2) per side, tries an
// Euler-trail alternation of the odd residue, then falls back to exhaustive
// assignment; found = false certifies no split exists.
DegreeSplit matching_degree_split(const Graph& h, const std::vector<long long>& mu);

}  // namespace boxperf
