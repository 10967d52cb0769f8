#pragma once

#include <string>

#include "charnet/graph.hpp"

namespace charnet {

// GEXF 1.2, undirected, weighted. Node labels and edge weights survive a
// write/read round trip bit-exactly.
std::string write_gexf(const Graph& g);

// Parses the GEXF subset write_gexf emits (plus whitespace/attribute-order
// variations). Throws DataError on anything unrecognizable.
Graph read_gexf(const std::string& text);

}  // namespace charnet
