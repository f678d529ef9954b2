#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boxperf/budgets.hpp"
#include "boxperf/cliques.hpp"
#include "boxperf/graph.hpp"
#include "boxperf/matrix.hpp"
#include "boxperf/rational.hpp"

namespace boxperf {

// Provenance of a graph assembled from a class-Q bipartite graph G' and a
// graph G'' on its right side. Vertex numbering of the assembled graph:
// the V side first (M column order), then the surviving U side (M row
// order, skipping the deleted row).
struct ConstructionRecord {
    IntMatrix M;           // biadjacency of G' (rows U, cols V)
    bool deleted = false;  // a dominating U-vertex was removed
    int deleted_row = -1;  // its row in M (the all-ones row)
    long long m = 0;       // 1^T M 1 = 4m + 2
};

struct RGraphResult {
    Graph graph;
    ConstructionRecord record;
};

// Assembles G from G' (bipartite, declared sides, must lie in class Q) and
// G'' on the V side; N_{G'}(u) must be a clique of G'' for every u. A
// U-vertex adjacent to all of V is deleted and recorded.
RGraphResult build_R_graph(const Graph& gprime, VertexSet side_u, VertexSet side_v,
                           const Graph& gsecond, const Budgets& budgets = {});

// Exact-rational certificate of non-box-perfectness for the system
// B_G x <= 1, x >= l: primal x, dual (y, z), objective value, and the
// integrality obstruction carried by l's granularity.
struct BoxCertificate {
    std::vector<long long> w;        // integral objective, per vertex
    RationalVector l;                // lower bounds, per vertex
    RationalVector x;                // primal optimum
    RationalVector y;                // dual on the recorded clique rows
    RationalVector z;                // dual on vertices
    std::vector<VertexSet> rows;     // recorded B_G row order for y
    Rational value;
};

std::string certificate_to_json(const Graph& g, const BoxCertificate& cert);
BoxCertificate certificate_from_json(const std::string& text);

// Instantiates the construction's certificate on G. The non-deleted case
// needs a prime p > 2m+1 (defaults to the smallest such prime); the deleted
// case is parameter-free.
BoxCertificate make_R_certificate(const Graph& g, const ConstructionRecord& record,
                                  std::optional<long long> p = std::nullopt,
                                  const Budgets& budgets = {});

struct CertCheck {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct CertReport {
    bool pass = false;
    std::vector<CertCheck> checks;
    Rational value;
    long long granularity = 1;  // l is (1/granularity)-integral
    std::optional<Rational> integral_dual_value;  // exhaustive_dual only
    const CertCheck* find(const std::string& name) const;
};

// Exact verification: primal feasibility, dual feasibility, objective
// equality, and the integrality obstruction (the optimum value is not
// 1/g-integral although l is). With exhaustive_dual the integral dual
// optimum is computed outright and must strictly exceed the value.
CertReport verify_certificate(const Graph& g, const BoxCertificate& cert,
                              bool exhaustive_dual, const Budgets& budgets = {});

struct IntegralDual {
    Rational value;
    std::vector<long long> y;  // per B_G row
    std::vector<long long> z;  // per vertex
};

// min { y^T 1 + z^T u : y^T B_G + z^T >= w^T, y, z >= 0 integral } by
// bounded exhaustive search (y <= max(w) per row; see the reduction note in
// the implementation).
IntegralDual integral_dual_optimum(const Graph& g, const RationalVector& u,
                                   const std::vector<long long>& w,
                                   const Budgets& budgets = {});

struct FalsifyLimits {
    int max_w = 2;
    std::vector<int> denoms = {1, 2, 3, 4};
};

struct FalsifyResult {
    bool found = false;
    RationalVector u;
    std::vector<long long> w;
    Rational lhs;  // integral min for 2w
    Rational rhs;  // twice the integral min for w
    std::string note;  // swept space when not found
};

// Bounded sweep for a violation of the half-integrality inequality:
// integral-min(2w) < 2 * integral-min(w). Phase one sweeps uniform u over
// the denominator palette with every w, |w|_inf <= max_w; phase two sweeps
// uniform w with two-valued u (palette value on a vertex subset, 1
// elsewhere). Absence certifies only the swept space.
FalsifyResult box_tdi_falsify_search(const Graph& g, const FalsifyLimits& limits,
                                     const Budgets& budgets = {});

}  // namespace boxperf
