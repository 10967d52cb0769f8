#include "charnet/learn/forest.hpp"

#include <algorithm>
#include <cmath>

#include "charnet/common.hpp"
#include "charnet/rng.hpp"

namespace charnet::learn {

ForestModel train_forest(const Dataset& data, int tree_count, std::uint64_t seed) {
  if (tree_count < 1) throw DataError("forest needs at least one tree");
  if (data.size() == 0) throw DataError("cannot train a forest on an empty set");
  const std::size_t n = data.size();
  const int dims = static_cast<int>(data.dims());
  const int max_features = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(dims))));

  ForestModel model;
  model.class_count = data.class_count;
  model.trees.resize(tree_count);

#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < tree_count; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    std::vector<std::vector<double>> bx;
    std::vector<int> by;
    bx.reserve(n);
    by.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t pick = rng.below(n);
      bx.push_back(data.x[pick]);
      by.push_back(data.y[pick]);
    }
    std::vector<double> weights(n, 1.0);
    TreeParams params;
    params.max_depth = -1;
    params.min_leaf = 2;
    params.max_features = max_features;
    params.seed = derive_seed(seed, 0x10000 + static_cast<std::uint64_t>(t));
    model.trees[t] = DecisionTree::train(bx, by, weights, data.class_count, params);
  }
  return model;
}

std::vector<double> forest_scores(const ForestModel& model, std::span<const double> x) {
  if (model.trees.empty()) throw DataError("empty forest");
  std::vector<double> scores(model.class_count, 0.0);
  for (const auto& tree : model.trees) {
    const auto& dist = tree.predict_dist(x);
    for (int c = 0; c < model.class_count; ++c) scores[c] += dist[c];
  }
  for (double& s : scores) s /= static_cast<double>(model.trees.size());
  return scores;
}

int forest_predict(const ForestModel& model, std::span<const double> x) {
  auto scores = forest_scores(model, x);
  return static_cast<int>(std::max_element(scores.begin(), scores.end()) - scores.begin());
}

}  // namespace charnet::learn
