#include "boxperf/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace boxperf {

void write_graph(std::ostream& os, const Graph& g) {
    os << "graph " << (g.name.empty() ? "unnamed" : g.name) << "\n";
    os << "n " << g.n << "\n";
    for (auto [u, v] : g.edges()) os << "e " << u << " " << v << "\n";
}

void write_multigraph(std::ostream& os, const Multigraph& h) {
    os << "graph " << (h.name.empty() ? "unnamed" : h.name) << "\n";
    os << "n " << h.n << "\n";
    for (const auto& [e, m] : h.mult)
        if (m > 0) os << "m " << e.first << " " << e.second << " " << m << "\n";
}

void write_digraph(std::ostream& os, const Digraph& d) {
    os << "graph " << (d.name.empty() ? "unnamed" : d.name) << "\n";
    os << "n " << d.n << "\n";
    std::map<std::pair<int, int>, long long> mult;
    for (auto a : d.arcs) mult[a]++;
    for (const auto& [a, m] : mult) os << "a " << a.first << " " << a.second << " " << m << "\n";
}

namespace {

struct Parser {
    std::istream& is;
    int lineno = 0;
    std::string name;
    int n = -1;

    [[noreturn]] void fail(const std::string& msg) const {
        throw error("line " + std::to_string(lineno) + ": " + msg);
    }

    // Feeds every incidence line to sink(kind, u, v, mult).
    template <typename Sink>
    void run(Sink sink) {
        std::string line;
        while (std::getline(is, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::istringstream ss(line);
            std::string tok;
            if (!(ss >> tok)) continue;
            if (tok == "graph") {
                if (!(ss >> name)) fail("graph line needs a name");
            } else if (tok == "n") {
                if (!(ss >> n) || n < 0) fail("bad vertex count");
            } else if (tok == "e" || tok == "m" || tok == "a") {
                if (n < 0) fail("incidence line before 'n' line");
                int u, v;
                long long m = 1;
                if (!(ss >> u >> v)) fail("incidence line needs two endpoints");
                if (tok != "e" && !(ss >> m)) fail("'" + tok + "' line needs a multiplicity");
                if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex index out of range");
                sink(tok[0], u, v, m);
            } else {
                fail("unknown directive '" + tok + "'");
            }
        }
        if (n < 0) { lineno++; fail("missing 'n' line"); }
    }
};

}  // namespace

Graph read_graph(std::istream& is) {
    Parser p{is};
    std::vector<std::pair<int, int>> es;
    p.run([&](char kind, int u, int v, long long) {
        if (kind != 'e') p.fail("expected 'e' lines in a simple graph file");
        if (u == v) p.fail("loop not allowed in simple graph");
        es.push_back({u, v});
    });
    Graph g(p.n, p.name);
    for (auto [u, v] : es) {
        if (g.has_edge(u, v)) throw error("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(u, v);
    }
    return g;
}

Multigraph read_multigraph(std::istream& is) {
    Parser p{is};
    std::vector<std::tuple<int, int, long long>> es;
    p.run([&](char kind, int u, int v, long long m) {
        if (kind == 'a') p.fail("arc line in multigraph file");
        if (m < 0) p.fail("negative multiplicity");
        es.push_back({u, v, kind == 'e' ? 1 : m});
    });
    Multigraph h(p.n, p.name);
    for (auto [u, v, m] : es) h.add_edge(u, v, m);
    return h;
}

Digraph read_digraph(std::istream& is) {
    Parser p{is};
    std::vector<std::tuple<int, int, long long>> as;
    p.run([&](char kind, int u, int v, long long m) {
        if (kind != 'a') p.fail("expected 'a' lines in a digraph file");
        if (m < 0) p.fail("negative multiplicity");
        as.push_back({u, v, m});
    });
    Digraph d(p.n, p.name);
    for (auto [u, v, m] : as) d.add_arc(u, v, m);
    return d;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open graph file: " + path);
    try {
        return read_graph(in);
    } catch (const error& e) {
        throw error(path + ": " + e.what());
    }
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw error("cannot write graph file: " + path);
    write_graph(out, g);
}

}  // namespace boxperf
