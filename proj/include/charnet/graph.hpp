#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace charnet {

struct Neighbor {
  int to;
  double weight;
};

struct Edge {
  int u;  // u < v always
  int v;
  double weight;
};

class GraphBuilder;

// Undirected weighted simple graph. Node ids are dense 0..n-1, every edge
// has weight > 0, no self-loops, no parallel edges. Immutable once built,
// so instances are safe to share across concurrent readers.
class Graph {
 public:
  Graph() = default;

  int node_count() const { return static_cast<int>(labels_.size()); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Neighbors sorted by node id.
  std::span<const Neighbor> neighbors(int v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  int degree(int v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
  double weighted_degree(int v) const { return weighted_degree_[v]; }

  bool has_edge(int u, int v) const;
  // Sum of all edge weights.
  double total_weight() const { return total_weight_; }

  // Edges sorted by (u, v) with u < v.
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  friend class GraphBuilder;

  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;  // size n+1
  std::vector<Neighbor> adjacency_;
  std::vector<double> weighted_degree_;
  double total_weight_ = 0.0;
};

// Accumulates edges (merging duplicates by summing weights) and produces a
// validated Graph. Construction is single-threaded.
class GraphBuilder {
 public:
  explicit GraphBuilder(int node_count);

  void set_label(int v, std::string label);
  // Throws DataError on self-loops, out-of-range endpoints, weight <= 0.
  void add_edge(int u, int v, double weight = 1.0);

  Graph build();

 private:
  int node_count_;
  std::vector<std::string> labels_;
  std::vector<Edge> pending_;
};

struct GraphStats {
  int node_count = 0;
  std::size_t edge_count = 0;
  double avg_degree = 0.0;
  double avg_weighted_degree = 0.0;
  int diameter = 0;          // hop count, over the largest component
  double edge_density = 0.0; // |E| / C(n,2)
  double avg_distance = 0.0; // mean hop distance, over the largest component
  double clustering_coeff = 0.0;
  bool connected = true;
  // False when the graph has < 2 nodes (diameter/avg_distance reported as 0).
  bool distances_defined = true;
  int largest_component_size = 0;
};

// Distances are unweighted hop counts. For disconnected graphs, diameter and
// avg_distance cover the largest connected component and `connected` is
// cleared. Local clustering of degree < 2 nodes counts as 0 in the mean.
GraphStats global_stats(const Graph& g);

// Edge set is exactly the non-edges of g, all weights 1. Labels preserved.
Graph complement(const Graph& g);

// Connected component id per node, numbered 0.. in order of lowest member.
std::vector<int> connected_components(const Graph& g);

// Hop distances from source; -1 for unreachable nodes.
std::vector<int> bfs_distances(const Graph& g, int source);

}  // namespace charnet
