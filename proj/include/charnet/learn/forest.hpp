#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "charnet/learn/dataset.hpp"
#include "charnet/learn/tree.hpp"

namespace charnet::learn {

struct ForestModel {
  std::vector<DecisionTree> trees;
  int class_count = 0;
};

// Bagged CART trees: bootstrap sample and ceil(sqrt(d)) candidate features
// per split, grown to purity or min-leaf 2. Per-tree seeds derive from the
// master seed, so training parallelizes without losing reproducibility.
ForestModel train_forest(const Dataset& data, int tree_count, std::uint64_t seed);

// Mean of the per-tree leaf class distributions; sums to 1.
std::vector<double> forest_scores(const ForestModel& model, std::span<const double> x);

int forest_predict(const ForestModel& model, std::span<const double> x);

}  // namespace charnet::learn
