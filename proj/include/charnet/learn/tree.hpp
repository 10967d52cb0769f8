#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "charnet/learn/dataset.hpp"

namespace charnet::learn {

struct TreeParams {
  int max_depth = -1;     // -1: unlimited
  int min_leaf = 2;       // smallest allowed leaf
  int max_features = -1;  // candidate features per split; -1: all
  std::uint64_t seed = 0; // feature subsampling
};

// CART with weighted Gini impurity. Leaves store the weighted class
// distribution (sums to 1).
class DecisionTree {
 public:
  static DecisionTree train(const std::vector<std::vector<double>>& x, std::span<const int> y,
                            std::span<const double> weights, int class_count, const TreeParams& params);

  const std::vector<double>& predict_dist(std::span<const double> x) const;
  int predict(std::span<const double> x) const;

  int node_count() const { return static_cast<int>(nodes_.size()); }

 private:
  struct Node {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    std::vector<double> dist;
  };
  std::vector<Node> nodes_;
};

}  // namespace charnet::learn
