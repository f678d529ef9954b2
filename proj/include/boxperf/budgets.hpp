#pragma once

#include <string>
#include <vector>

namespace boxperf {

// Central knobs for every search that is exponential at heart. Every verdict
// produced under one of these limits carries the limit it ran under, so a
// budget-truncated answer is never mistaken for an exhaustive one.
struct Budgets {
    int chi_max_n = 20;              // exact chi / chibar
    int qperfect_max_n = 14;         // subset DP for alpha_q / chibar_q
    int perfect_max_n = 16;          // odd hole / antihole search
    int parity_max_n = 12;           // induced-path enumeration
    int orientation_max_n = 14;      // transitive orientation backtracking
    long long clique_budget = 100000;        // maximal clique count
    long long tu_exhaustive_cells = 3000000; // square submatrices inspected
    int tu_gh_max_dim = 18;                  // Ghouila-Houri subset dimension
    long long dicycle_budget = 1000000;      // simple dicycle count
    long long esp_lambda_budget = 1 << 21;   // number of clique sets per graph
    long long esp_cover_budget = 2000000;    // clique-cover states per graph
    long long reform_budget = 4000000;       // d vectors in the replication sweep
    long long dual_budget = 80000000;        // integral dual candidates per call
    int falsify_max_w = 2;
    std::vector<int> falsify_denoms = {1, 2, 3, 4};

    // Reads "key = value" lines; '#' starts a comment. Unknown keys error.
    static Budgets load(const std::string& path);
    void set(const std::string& key, const std::string& value);
};

}  // namespace boxperf
