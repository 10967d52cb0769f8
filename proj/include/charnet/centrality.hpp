#pragma once

#include <string>
#include <vector>

#include "charnet/graph.hpp"

namespace charnet {

enum class Measure { weighted_degree, closeness, betweenness, eigencentrality, pagerank };

const char* measure_name(Measure m);

struct CentralityScores {
  Measure measure;
  std::vector<double> values;
};

// Sum of incident edge weights per node.
CentralityScores weighted_degree(const Graph& g);

// Mean hop distance from a node to every other node of its component.
// Lower is more central; singleton components score 0.
CentralityScores closeness(const Graph& g);

// Brandes accumulation over hop-count shortest paths, unordered pairs,
// unnormalized. OpenMP over blocks of source nodes; block partials are
// combined in block order, so results do not depend on the thread count.
CentralityScores betweenness(const Graph& g);
// Single-threaded reference used by tests and the benchmark.
CentralityScores betweenness_serial(const Graph& g);

// Principal eigenvector of the weighted adjacency matrix via power
// iteration (1e-10 max-norm stop), computed per component and scaled so the
// maximum value is 1. Isolated nodes score 0.
CentralityScores eigencentrality(const Graph& g);

// Random walk with uniform teleport; transition probability proportional to
// edge weight; isolated nodes redistribute uniformly. Values sum to 1.
CentralityScores pagerank(const Graph& g, double damping = 0.85, double tol = 1e-10);

}  // namespace charnet
