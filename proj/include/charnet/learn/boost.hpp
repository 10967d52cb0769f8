#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "charnet/learn/dataset.hpp"
#include "charnet/learn/tree.hpp"

namespace charnet::learn {

struct BoostStage {
  DecisionTree tree;
  double alpha = 0.0;
};

struct BoostModel {
  std::vector<BoostStage> stages;
  int class_count = 0;
};

// Multi-class AdaBoost (SAMME) over depth-limited CART stumps/trees.
// alpha = ln((1-err)/err) + ln(K-1); training stops early when a stage's
// weighted error reaches 1 - 1/K, or right after a perfect stage.
BoostModel train_adaboost(const Dataset& data, int rounds, int base_depth, std::uint64_t seed);

// Sum over stages of alpha * one-hot(stage prediction).
std::vector<double> boost_scores(const BoostModel& model, std::span<const double> x);

int boost_predict(const BoostModel& model, std::span<const double> x);

}  // namespace charnet::learn
