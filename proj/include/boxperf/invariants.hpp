#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boxperf/budgets.hpp"
#include "boxperf/graph.hpp"

namespace boxperf {

struct MwisResult {
    long long value = 0;
    VertexSet witness = 0;
};
// Exact maximum-weight stable set by branch and bound with a greedy
// clique-cover upper bound. Zero-weight vertices never enter the witness, so
// ties resolve deterministically.
MwisResult max_weight_stable_set(const Graph& g, const std::vector<long long>& w);

struct ParamReport {
    int alpha = 0;
    int omega = 0;
    int chi = 0;
    int chibar = 0;
};
ParamReport parameters(const Graph& g, const Budgets& budgets = {});

// Exact chromatic number (branch and bound, clique lower bound).
int chromatic_number(const Graph& g, const Budgets& budgets = {});
// chi(G[S]) for every S; index by bitmask. Throws past qperfect_max_n.
std::vector<std::uint8_t> chromatic_all_subsets(const Graph& g, const Budgets& budgets = {});

struct QPerfectReport {
    int q = 1;
    long long alpha_q = 0;
    long long chibar_q = 0;
    VertexSet witness_x_alpha = 0;   // attains alpha_q
    VertexSet witness_x_chibar = 0;  // attains chibar_q
    bool equal() const { return alpha_q == chibar_q; }
};
QPerfectReport q_perfect_report(const Graph& g, int q, const Budgets& budgets = {});

struct PerfectReport {
    bool perfect = true;
    std::vector<int> hole;  // an induced odd hole (antihole vertices when in_complement)
    bool in_complement = false;
};
// Odd hole / odd antihole search; exact at desk scale.
PerfectReport is_perfect(const Graph& g, const Budgets& budgets = {});

struct SplitPartition {
    VertexSet clique = 0;
    VertexSet stable = 0;
};
// Witness partition via the degree-sequence characterization, verified
// before returning; deterministic (degree-descending, index tie-break).
std::optional<SplitPartition> is_split(const Graph& g);

struct ParityReport {
    bool parity = true;
    int u = -1, v = -1;              // least mismatched pair
    std::vector<int> even_path, odd_path;
};
ParityReport is_parity(const Graph& g, const Budgets& budgets = {});

// Orientation of the edges of one graph: out[v] holds the heads of arcs
// leaving v. Transitive: u->v and v->w force the edge uw, oriented u->w.
struct Orientation {
    std::vector<VertexSet> out;
};
std::optional<Orientation> transitive_orientation(const Graph& g, const Budgets& budgets = {});
bool orientation_is_transitive(const Graph& g, const Orientation& o);

}  // namespace boxperf
