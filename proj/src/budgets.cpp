#include "boxperf/budgets.hpp"

#include <fstream>
#include <sstream>

#include "boxperf/rational.hpp"

namespace boxperf {

static std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

void Budgets::set(const std::string& key, const std::string& value) {
    auto as_ll = [&] { return std::stoll(value); };
    auto as_int = [&] { return std::stoi(value); };
    if (key == "chi_max_n") chi_max_n = as_int();
    else if (key == "qperfect_max_n") qperfect_max_n = as_int();
    else if (key == "perfect_max_n") perfect_max_n = as_int();
    else if (key == "parity_max_n") parity_max_n = as_int();
    else if (key == "orientation_max_n") orientation_max_n = as_int();
    else if (key == "clique_budget") clique_budget = as_ll();
    else if (key == "tu_exhaustive_cells") tu_exhaustive_cells = as_ll();
    else if (key == "tu_gh_max_dim") tu_gh_max_dim = as_int();
    else if (key == "dicycle_budget") dicycle_budget = as_ll();
    else if (key == "esp_lambda_budget") esp_lambda_budget = as_ll();
    else if (key == "esp_cover_budget") esp_cover_budget = as_ll();
    else if (key == "reform_budget") reform_budget = as_ll();
    else if (key == "dual_budget") dual_budget = as_ll();
    else if (key == "falsify_max_w") falsify_max_w = as_int();
    else if (key == "falsify_denoms") {
        falsify_denoms.clear();
        std::stringstream ss(value);
        std::string tok;
        while (std::getline(ss, tok, ',')) falsify_denoms.push_back(std::stoi(trim(tok)));
    } else {
        throw error("unknown budget key: " + key);
    }
}

Budgets Budgets::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open budget file: " + path);
    Budgets b;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw error(path + ":" + std::to_string(lineno) + ": expected key = value");
        try {
            b.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const std::logic_error& e) {
            throw error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return b;
}

}  // namespace boxperf
