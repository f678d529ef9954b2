#pragma once

#include <iosfwd>
#include <string>

#include "boxperf/graph.hpp"

namespace boxperf {

// Text format shared by the CLI and the test corpus:
//   graph <name>
//   n <count>
//   e <u> <v>            simple edge (0-based)
//   m <u> <v> <mult>     multigraph edge (loops allowed)
//   a <u> <v> <mult>     directed arc
// A file holds exactly one kind of incidence line. Parse errors carry line
// numbers.
void write_graph(std::ostream& os, const Graph& g);
void write_multigraph(std::ostream& os, const Multigraph& h);
void write_digraph(std::ostream& os, const Digraph& d);

Graph read_graph(std::istream& is);
Multigraph read_multigraph(std::istream& is);
Digraph read_digraph(std::istream& is);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace boxperf
