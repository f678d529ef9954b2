#pragma once

#include <optional>

#include "boxperf/graph.hpp"

namespace boxperf {

// Induced-subgraph search: an injective map preserving both adjacency and
// non-adjacency. Backtracks over pattern vertices in index order with host
// candidates ascending, so the returned embedding is the lexicographically
// least tuple (map[0], map[1], ...).
std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern);

}  // namespace boxperf
