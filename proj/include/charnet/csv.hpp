#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "charnet/graph.hpp"

namespace charnet {

// RFC-4180 row reader: quoted fields, doubled quotes, embedded separators
// and newlines. CRLF and LF both accepted.
std::vector<std::vector<std::string>> read_csv(std::istream& in);
std::vector<std::vector<std::string>> read_csv_file(const std::string& path);

// Quotes the field if it contains a comma, quote, or newline.
std::string csv_escape(const std::string& field);

// Node CSV header: Id,Label. Edge CSV header: Source,Target,Weight.
// Ids may be any distinct non-negative integers; they are renumbered to a
// dense 0..n-1 range in declaration order. Duplicate edge rows merge by
// summing weights; self-loop rows and unknown endpoints are errors.
Graph load_edge_csv(std::istream& nodes, std::istream& edges);
Graph load_edge_csv(const std::string& node_path, const std::string& edge_path);

// Loads an edge CSV without a node file: the node set is 0..max referenced
// id and labels are the id strings.
Graph load_edges_only(std::istream& edges);
Graph load_edges_only(const std::string& edge_path);

std::string node_csv(const Graph& g);
std::string edge_csv(const Graph& g);
void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace charnet
