#include "charnet/learn/boost.hpp"

#include <algorithm>
#include <cmath>

#include "charnet/common.hpp"
#include "charnet/rng.hpp"

namespace charnet::learn {

BoostModel train_adaboost(const Dataset& data, int rounds, int base_depth, std::uint64_t seed) {
  if (rounds < 1) throw DataError("adaboost needs at least one round");
  if (data.size() == 0) throw DataError("cannot boost an empty set");
  const std::size_t n = data.size();
  const double k = data.class_count;

  BoostModel model;
  model.class_count = data.class_count;
  std::vector<double> weights(n, 1.0 / static_cast<double>(n));

  for (int round = 0; round < rounds; ++round) {
    TreeParams params;
    params.max_depth = base_depth;
    params.min_leaf = 1;
    params.max_features = -1;  // boosted trees see every feature
    params.seed = derive_seed(seed, static_cast<std::uint64_t>(round));
    DecisionTree tree = DecisionTree::train(data.x, data.y, weights, data.class_count, params);

    double err = 0.0;
    std::vector<int> predictions(n);
    for (std::size_t i = 0; i < n; ++i) {
      predictions[i] = tree.predict(data.x[i]);
      if (predictions[i] != data.y[i]) err += weights[i];
    }

    if (err >= 1.0 - 1.0 / k) break;  // worse than chance: stop

    constexpr double kErrFloor = 1e-12;
    double bounded = std::max(err, kErrFloor);
    double alpha = std::log((1.0 - bounded) / bounded) + std::log(k - 1.0);
    model.stages.push_back({std::move(tree), alpha});
    if (err <= kErrFloor) break;  // perfect stage: nothing left to correct

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (predictions[i] != data.y[i]) weights[i] *= std::exp(alpha);
      total += weights[i];
    }
    for (double& w : weights) w /= total;
  }

  if (model.stages.empty()) throw DataError("adaboost accepted no stage");
  return model;
}

std::vector<double> boost_scores(const BoostModel& model, std::span<const double> x) {
  std::vector<double> scores(model.class_count, 0.0);
  for (const auto& stage : model.stages) scores[stage.tree.predict(x)] += stage.alpha;
  return scores;
}

int boost_predict(const BoostModel& model, std::span<const double> x) {
  auto scores = boost_scores(model, x);
  return static_cast<int>(std::max_element(scores.begin(), scores.end()) - scores.begin());
}

}  // namespace charnet::learn
