// boxperf: recognize graph classes tied to box-total dual integrality,
// assemble the catalogued graph families, produce and verify exact-rational
// certificates of non-box-perfectness, and enumerate the minimal classes.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "boxperf/classes.hpp"
#include "boxperf/esp.hpp"
#include "boxperf/families.hpp"
#include "boxperf/invariants.hpp"
#include "boxperf/io.hpp"
#include "boxperf/subgraph.hpp"
#include "boxperf/suite.hpp"
#include "boxperf/tu.hpp"
#include "json.hpp"

using namespace boxperf;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Verdict {
    std::optional<bool> value;
    std::string method;  // exhaustive / budget-limited / not-run
    std::string note;
};

ordered_json verdict_json(const Verdict& v) {
    ordered_json j;
    if (v.value)
        j["value"] = *v.value;
    else
        j["value"] = nullptr;
    j["method"] = v.method;
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

template <typename F>
Verdict guarded(F&& f, const std::string& method) {
    Verdict v;
    v.method = method;
    try {
        v.value = f();
    } catch (const budget_error& e) {
        v.method = "budget-limited";
        v.note = e.what();
    }
    return v;
}

// Krausz-style search: does the edge set partition into cliques with every
// vertex in at most two parts? That makes G the line graph of a multigraph
// (parts = root vertices).
bool line_graph_of_multigraph(const Graph& g) {
    auto edges = g.edges();
    int m = (int)edges.size();
    std::vector<VertexSet> parts;
    std::vector<int> load(g.n, 0);
    std::vector<char> covered(m, 0);
    auto rec = [&](auto&& self, int e) -> bool {
        while (e < m && covered[e]) ++e;
        if (e == m) return true;
        auto [a, b] = edges[e];
        // grow a clique containing edge e out of uncovered edges
        auto grow = [&](auto&& gself, VertexSet clique, VertexSet cand) -> bool {
            // try to close this clique as one part
            bool ok = true;
            for (int v : set_to_vec(clique))
                if (load[v] >= 2) ok = false;
            if (ok) {
                std::vector<int> inside;
                for (int i = e; i < m && ok; ++i)
                    if (!covered[i] && (clique & bit(edges[i].first)) &&
                        (clique & bit(edges[i].second)))
                        inside.push_back(i);
                for (int i : inside) covered[i] = 1;
                for (int v : set_to_vec(clique)) ++load[v];
                if (self(self, e)) return true;
                for (int v : set_to_vec(clique)) --load[v];
                for (int i : inside) covered[i] = 0;
            }
            for (VertexSet c = cand; c;) {
                int v = lowest(c);
                c &= c - 1;
                if (gself(gself, clique | bit(v), cand & g.adj[v] & ~(bit(v) - 0) & ~clique &
                                                      (~VertexSet(0) << (v + 1))))
                    return true;
            }
            return false;
        };
        return grow(grow, bit(a) | bit(b), g.adj[a] & g.adj[b] & (~VertexSet(0) << (b + 1)) &
                                               ~(bit(a) | bit(b)));
    };
    return rec(rec, 0);
}

int cmd_analyze(const std::string& path, bool as_json, const Budgets& budgets) {
    Graph g = read_graph_file(path);
    ordered_json out;
    out["graph"] = g.name;
    out["n"] = g.n;
    out["edges"] = g.edge_count();

    auto t0 = std::chrono::steady_clock::now();
    ordered_json verdicts;

    Verdict perfect = guarded([&] { return is_perfect(g, budgets).perfect; }, "exhaustive");
    verdicts["perfect"] = verdict_json(perfect);
    Verdict split = guarded([&] { return is_split(g).has_value(); }, "exhaustive");
    verdicts["split"] = verdict_json(split);
    Verdict claw_free = guarded(
        [&] { return !contains_induced(g, build_named("Kmn", {1, 3})).has_value(); },
        "exhaustive");
    verdicts["claw_free"] = verdict_json(claw_free);
    verdicts["parity"] =
        verdict_json(guarded([&] { return is_parity(g, budgets).parity; }, "exhaustive"));
    Verdict comp = guarded([&] { return transitive_orientation(g, budgets).has_value(); },
                           "exhaustive");
    verdicts["comparability"] = verdict_json(comp);
    verdicts["incomparability"] = verdict_json(guarded(
        [&] { return transitive_orientation(complement(g), budgets).has_value(); },
        "exhaustive"));
    Verdict tu = guarded([&] { return is_tu_graph(g, budgets).is_tu; }, "exhaustive");
    verdicts["totally_unimodular"] = verdict_json(tu);
    verdicts["esp"] = verdict_json(
        guarded([&] { return is_esp(g, EspMode::Direct, budgets).esp; }, "exhaustive"));
    Verdict s3_free = guarded(
        [&] { return !contains_induced(g, build_named("S_n", {3})).has_value(); },
        "exhaustive");
    verdicts["s3_free"] = verdict_json(s3_free);
    verdicts["bars3plus_free"] = verdict_json(guarded(
        [&] { return !contains_induced(g, build_named("barS3plus", {})).has_value(); },
        "exhaustive"));

    try {
        ParamReport p = parameters(g, budgets);
        out["parameters"] = {{"alpha", p.alpha}, {"omega", p.omega}, {"chi", p.chi},
                             {"chibar", p.chibar}};
    } catch (const budget_error& e) {
        out["parameters"] = ordered_json{{"note", e.what()}};
    }
    out["verdicts"] = verdicts;

    // class-driven predictions about box-perfectness
    ordered_json predictions = ordered_json::array();
    if (tu.value && *tu.value)
        predictions.push_back("box-perfect: totally unimodular");
    if (claw_free.value && *claw_free.value && perfect.value && *perfect.value &&
        s3_free.value) {
        predictions.push_back(std::string("claw-free perfect: predicted ") +
                              (*s3_free.value ? "box-perfect (S_3-free)"
                                              : "not box-perfect (induced S_3)"));
    }
    if (perfect.value && *perfect.value && line_graph_of_multigraph(complement(g))) {
        bool free3 = s3_free.value && *s3_free.value;
        bool free3p = !contains_induced(g, build_named("barS3plus", {})).has_value();
        predictions.push_back(std::string("perfect complement of a line graph: predicted ") +
                              ((free3 && free3p) ? "box-perfect ({S_3, barS3plus}-free)"
                                                 : "not box-perfect"));
    }
    out["predictions"] = predictions;
    out["elapsed_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "graph " << g.name << ": n = " << g.n << ", m = " << g.edge_count()
                  << "\n";
        for (auto& [k, v] : verdicts.items()) {
            std::cout << "  " << k << ": ";
            if (v["value"].is_null())
                std::cout << "skipped (" << v.value("note", "") << ")";
            else
                std::cout << (v["value"].get<bool>() ? "yes" : "no");
            std::cout << "\n";
        }
        if (out.contains("parameters") && !out["parameters"].contains("note"))
            std::cout << "  alpha = " << out["parameters"]["alpha"]
                      << ", omega = " << out["parameters"]["omega"]
                      << ", chi = " << out["parameters"]["chi"]
                      << ", chibar = " << out["parameters"]["chibar"] << "\n";
        for (const auto& p : predictions) std::cout << "  " << p.get<std::string>() << "\n";
    }
    return 0;
}

int cmd_certify(const std::string& path, const std::string& mode,
                const std::string& record_path, const std::string& out_path, bool as_json,
                const Budgets& budgets) {
    Graph g = read_graph_file(path);
    std::optional<BoxCertificate> cert;
    std::string how;

    auto try_s_membership = [&]() -> std::optional<BoxCertificate> {
        ClassCatalog s = enumerate_S(std::min(g.n, 11), budgets);
        auto key = canonical_key(g);
        for (const auto& member : s.members) {
            if (canonical_key(member.graph) != key) continue;
            // map the certificate through the catalogued copy: certify the
            // catalogued graph, then report it (same isomorphism class)
            BoxCertificate c = make_R_certificate(member.graph, *member.record, std::nullopt,
                                                  budgets);
            if (verify_certificate(member.graph, c, false, budgets).pass) return c;
        }
        return std::nullopt;
    };

    if (mode == "from-record") {
        if (record_path.empty()) {
            std::cerr << "certify: --record is required in from-record mode\n";
            return 2;
        }
        std::ifstream in(record_path);
        if (!in) {
            std::cerr << "certify: cannot open " << record_path << "\n";
            return 2;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        BoxCertificate c = certificate_from_json(ss.str());
        CertReport rep = verify_certificate(g, c, true, budgets);
        if (as_json) {
            ordered_json j;
            j["pass"] = rep.pass;
            for (const auto& ch : rep.checks)
                j["checks"].push_back({{"name", ch.name}, {"ok", ch.ok}, {"detail", ch.detail}});
            if (rep.integral_dual_value)
                j["integral_dual"] = rep.integral_dual_value->str();
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& ch : rep.checks)
                std::cout << (ch.ok ? "ok   " : "FAIL ") << ch.name
                          << (ch.detail.empty() ? "" : " — " + ch.detail) << "\n";
        }
        return rep.pass ? 0 : 1;
    }

    if (mode == "auto") {
        cert = try_s_membership();
        if (cert) how = "class-S membership certificate";
    }
    if (!cert) {
        FalsifyLimits limits;
        limits.max_w = budgets.falsify_max_w;
        limits.denoms = budgets.falsify_denoms;
        FalsifyResult f = box_tdi_falsify_search(g, limits, budgets);
        if (f.found) {
            ordered_json j;
            j["found"] = true;
            j["kind"] = "half-integrality violation";
            j["w"] = f.w;
            ordered_json uj = ordered_json::array();
            for (const auto& r : f.u) uj.push_back(r.str());
            j["u"] = uj;
            j["integral_min_2w"] = f.lhs.str();
            j["twice_integral_min_w"] = f.rhs.str();
            std::string text = j.dump(2) + "\n";
            if (!out_path.empty()) std::ofstream(out_path) << text;
            std::cout << text;
            return 0;
        }
        std::cout << (as_json ? std::string("{\"found\": false, \"note\": \"") + f.note +
                                    "\"}\n"
                              : "no certificate within budgets: " + f.note + "\n");
        return 1;
    }
    std::string text = certificate_to_json(g, *cert);
    if (!out_path.empty()) std::ofstream(out_path) << text;
    std::cout << text;
    std::cerr << "certified non-box-perfect (" << how << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"box-perfectness toolkit: analysis, certificates, class enumeration"};
    app.require_subcommand(1);
    std::string budget_file;
    bool as_json = false;
    long long seed = 1;
    app.add_option("--budget", budget_file, "budget file (key = value lines)");
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--seed", seed, "seed for randomized corpus generation");

    std::string path, mode = "auto", record_path, out_path;
    auto* analyze = app.add_subcommand("analyze", "predicate battery on a graph file");
    analyze->add_option("file", path)->required();

    auto* certify = app.add_subcommand("certify", "produce or verify a certificate");
    certify->add_option("file", path)->required();
    certify->add_option("--mode", mode)->check(CLI::IsMember({"auto", "from-record", "falsify"}));
    certify->add_option("--record", record_path, "certificate JSON (from-record mode)");
    certify->add_option("--out", out_path, "write the certificate JSON here");

    std::string klass;
    int size = 3;
    auto* enumerate = app.add_subcommand("enumerate", "write a class catalog (JSON lines)");
    enumerate->add_option("class", klass)->required()->check(CLI::IsMember({"Q", "S"}));
    enumerate->add_option("size", size)->required();
    enumerate->add_option("out", out_path)->required();

    std::string family;
    std::vector<int> params;
    auto* construct = app.add_subcommand("construct", "write a named family to a graph file");
    construct->add_option("name", family)->required();
    construct->add_option("out", out_path)->required();
    construct->add_option("params", params, "integer parameters");

    std::vector<int> which;
    auto* suite = app.add_subcommand("suite", "run acceptance criteria");
    suite->add_option("criteria", which, "criterion numbers (default: all)");

    CLI11_PARSE(app, argc, argv);

    try {
        Budgets budgets;
        if (!budget_file.empty()) budgets = Budgets::load(budget_file);
        (void)seed;

        if (*analyze) return cmd_analyze(path, as_json, budgets);
        if (*certify) return cmd_certify(path, mode, record_path, out_path, as_json, budgets);
        if (*enumerate) {
            ClassCatalog cat = klass == "Q" ? enumerate_Q(size, budgets)
                                            : enumerate_S(size, budgets);
            std::ofstream out(out_path);
            if (!out) throw error("cannot write " + out_path);
            out << catalog_to_jsonl(cat);
            std::cout << cat.members.size() << " members written to " << out_path << "\n";
            return 0;
        }
        if (*construct) {
            Graph g = build_named(family, params);
            write_graph_file(out_path, g);
            std::cout << "wrote " << family << " (n = " << g.n << ") to " << out_path << "\n";
            return 0;
        }
        if (*suite) {
            if (which.empty())
                for (int i = 1; i <= criterion_count(); ++i) which.push_back(i);
            int failures = 0;
            for (int id : which) {
                CriterionResult r = run_criterion(id, budgets);
                std::printf("%s criterion %2d [%6.2fs] %s — %s\n", r.pass ? "PASS" : "FAIL",
                            r.id, r.seconds, r.name.c_str(), r.detail.c_str());
                if (!r.pass) ++failures;
            }
            return failures ? 1 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
