#include "charnet/learn/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "charnet/common.hpp"
#include "charnet/rng.hpp"

namespace charnet::learn {

namespace {

struct BuildContext {
  const std::vector<std::vector<double>>& x;
  std::span<const int> y;
  std::span<const double> weights;
  int class_count;
  TreeParams params;
  Rng rng;
};

double gini(std::span<const double> class_weight, double total) {
  if (total <= 0.0) return 0.0;
  double sum_sq = 0.0;
  for (double cw : class_weight) {
    double p = cw / total;
    sum_sq += p * p;
  }
  return 1.0 - sum_sq;
}

struct Split {
  int feature = -1;
  double threshold = 0.0;
  double impurity = 0.0;  // weighted child impurity
};

// Best threshold on one feature by a sorted sweep. Returns impurity of the
// current best split or nothing better than `bound`.
void best_split_on_feature(const BuildContext& ctx, std::vector<std::size_t>& items, int feature,
                           Split& best) {
  std::sort(items.begin(), items.end(), [&](std::size_t a, std::size_t b) {
    return ctx.x[a][feature] < ctx.x[b][feature];
  });

  std::vector<double> left_cw(ctx.class_count, 0.0), right_cw(ctx.class_count, 0.0);
  double left_total = 0.0, right_total = 0.0;
  double left_count = 0.0, right_count = 0.0;
  for (std::size_t i : items) {
    right_cw[ctx.y[i]] += ctx.weights[i];
    right_total += ctx.weights[i];
    right_count += 1.0;
  }

  const auto min_leaf = static_cast<double>(ctx.params.min_leaf);
  for (std::size_t pos = 0; pos + 1 < items.size(); ++pos) {
    std::size_t i = items[pos];
    left_cw[ctx.y[i]] += ctx.weights[i];
    left_total += ctx.weights[i];
    left_count += 1.0;
    right_cw[ctx.y[i]] -= ctx.weights[i];
    right_total -= ctx.weights[i];
    right_count -= 1.0;

    double here = ctx.x[i][feature];
    double next = ctx.x[items[pos + 1]][feature];
    if (next <= here) continue;  // no threshold separates equal values
    if (left_count < min_leaf || right_count < min_leaf) continue;

    double impurity = left_total * gini(left_cw, left_total) + right_total * gini(right_cw, right_total);
    if (impurity < best.impurity) {
      best.feature = feature;
      best.threshold = 0.5 * (here + next);
      best.impurity = impurity;
    }
  }
}

}  // namespace

DecisionTree DecisionTree::train(const std::vector<std::vector<double>>& x, std::span<const int> y,
                                 std::span<const double> weights, int class_count,
                                 const TreeParams& params) {
  if (x.empty()) throw DataError("cannot train a tree on an empty set");
  const int dims = static_cast<int>(x[0].size());
  BuildContext ctx{x, y, weights, class_count, params, Rng(params.seed)};

  DecisionTree tree;
  struct Job {
    std::vector<std::size_t> items;
    int depth;
    int slot;  // index into nodes_
  };
  std::vector<Job> stack;
  std::vector<std::size_t> all(x.size());
  std::iota(all.begin(), all.end(), 0);
  tree.nodes_.emplace_back();
  stack.push_back({std::move(all), 0, 0});

  std::vector<int> features(dims);
  std::iota(features.begin(), features.end(), 0);

  while (!stack.empty()) {
    Job job = std::move(stack.back());
    stack.pop_back();

    std::vector<double> class_weight(class_count, 0.0);
    double total = 0.0;
    for (std::size_t i : job.items) {
      class_weight[ctx.y[i]] += ctx.weights[i];
      total += ctx.weights[i];
    }

    auto make_leaf = [&] {
      Node& node = tree.nodes_[job.slot];
      node.feature = -1;
      node.dist.assign(class_count, 0.0);
      if (total > 0.0)
        for (int c = 0; c < class_count; ++c) node.dist[c] = class_weight[c] / total;
      else
        node.dist[ctx.y[job.items[0]]] = 1.0;  // all-zero weights: fall back to counts
    };

    bool pure = std::count_if(class_weight.begin(), class_weight.end(),
                              [](double cw) { return cw > 0.0; }) <= 1;
    bool depth_stop = params.max_depth >= 0 && job.depth >= params.max_depth;
    if (pure || depth_stop || job.items.size() < 2 * static_cast<std::size_t>(params.min_leaf)) {
      make_leaf();
      continue;
    }

    // Candidate features: a seeded random subset when max_features is set.
    std::span<const int> candidates;
    std::vector<int> subset;
    if (params.max_features > 0 && params.max_features < dims) {
      subset = features;
      for (int pick = 0; pick < params.max_features; ++pick) {
        std::size_t j = pick + ctx.rng.below(subset.size() - pick);
        std::swap(subset[pick], subset[j]);
      }
      subset.resize(params.max_features);
      std::sort(subset.begin(), subset.end());  // deterministic sweep order
      candidates = subset;
    } else {
      candidates = features;
    }

    Split best;
    // Zero-gain splits are allowed (a split that merely partitions can still
    // enable a useful one below, e.g. on XOR-like data).
    best.impurity = total * gini(class_weight, total) + 1e-12;
    std::vector<std::size_t> items = job.items;
    for (int feature : candidates) best_split_on_feature(ctx, items, feature, best);

    if (best.feature < 0) {
      make_leaf();
      continue;
    }

    std::vector<std::size_t> left, right;
    for (std::size_t i : job.items)
      (x[i][best.feature] <= best.threshold ? left : right).push_back(i);

    // Reserve the child slots before taking any reference: emplace_back can
    // reallocate the node vector.
    const int left_slot = static_cast<int>(tree.nodes_.size());
    tree.nodes_.emplace_back();
    const int right_slot = static_cast<int>(tree.nodes_.size());
    tree.nodes_.emplace_back();
    Node& node = tree.nodes_[job.slot];
    node.feature = best.feature;
    node.threshold = best.threshold;
    node.left = left_slot;
    node.right = right_slot;
    stack.push_back({std::move(right), job.depth + 1, right_slot});
    stack.push_back({std::move(left), job.depth + 1, left_slot});
  }
  return tree;
}

const std::vector<double>& DecisionTree::predict_dist(std::span<const double> x) const {
  int at = 0;
  while (nodes_[at].feature >= 0)
    at = x[nodes_[at].feature] <= nodes_[at].threshold ? nodes_[at].left : nodes_[at].right;
  return nodes_[at].dist;
}

int DecisionTree::predict(std::span<const double> x) const {
  const auto& dist = predict_dist(x);
  return static_cast<int>(std::max_element(dist.begin(), dist.end()) - dist.begin());
}

}  // namespace charnet::learn
