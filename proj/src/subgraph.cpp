#include "boxperf/subgraph.hpp"

namespace boxperf {

std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern) {
    if (pattern.n > host.n) return std::nullopt;
    std::vector<int> map(pattern.n, -1);
    VertexSet used = 0;

    auto dfs = [&](auto&& self, int pv) -> bool {
        if (pv == pattern.n) return true;
        for (int hv = 0; hv < host.n; ++hv) {
            if (used & bit(hv)) continue;
            if (host.degree(hv) < pattern.degree(pv)) continue;
            bool ok = true;
            for (int q = 0; q < pv; ++q) {
                bool pe = pattern.has_edge(q, pv);
                if (pe != host.has_edge(map[q], hv)) { ok = false; break; }
            }
            if (!ok) continue;
            map[pv] = hv;
            used |= bit(hv);
            if (self(self, pv + 1)) return true;
            used &= ~bit(hv);
            map[pv] = -1;
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    return Embedding{map};
}

}  // namespace boxperf
