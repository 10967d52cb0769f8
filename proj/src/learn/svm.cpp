#include "charnet/learn/svm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "charnet/common.hpp"
#include "charnet/rng.hpp"

namespace charnet::learn {

namespace {

constexpr int kEpochs = 300;
constexpr int kRestarts = 5;

// The bias rides along as an appended constant feature, so it picks up a
// small share of the regularizer; the objective below uses the same
// convention.
struct Hyperplane {
  std::vector<double> w;  // last entry is the bias slot
};

double hinge_sum(const Dataset& data, const std::vector<int>& y, const Hyperplane& h) {
  const std::size_t d = data.dims();
  double sum = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    double margin = h.w[d];
    for (std::size_t f = 0; f < d; ++f) margin += h.w[f] * data.x[i][f];
    margin *= y[i];
    if (margin < 1.0) sum += 1.0 - margin;
  }
  return sum;
}

double objective(const Dataset& data, const std::vector<int>& y, const Hyperplane& h, Reg reg,
                 double C) {
  double r = 0.0;
  for (double wi : h.w) r += reg == Reg::l2 ? 0.5 * wi * wi : std::fabs(wi);
  return r + C * hinge_sum(data, y, h);
}

Hyperplane train_binary(const Dataset& data, const std::vector<int>& y, Reg reg, double C,
                        std::uint64_t seed) {
  const std::size_t n = data.size();
  const std::size_t d = data.dims();
  const double lambda = 1.0 / (static_cast<double>(n) * C);

  Hyperplane best;
  double best_obj = 0.0;
  for (int restart = 0; restart < kRestarts; ++restart) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(restart)));
    Hyperplane h;
    h.w.assign(d + 1, 0.0);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);

    long long t = 0;
    for (int epoch = 0; epoch < kEpochs; ++epoch) {
      rng.shuffle(order);
      for (std::size_t i : order) {
        ++t;
        double margin = h.w[d];
        for (std::size_t f = 0; f < d; ++f) margin += h.w[f] * data.x[i][f];
        const bool violated = margin * y[i] < 1.0;

        if (reg == Reg::l2) {
          // Pegasos step with projection onto the 1/sqrt(lambda) ball.
          const double eta = 1.0 / (lambda * static_cast<double>(t));
          const double keep = 1.0 - 1.0 / static_cast<double>(t);
          for (double& wf : h.w) wf *= keep;
          if (violated) {
            const double step = eta * y[i];
            for (std::size_t f = 0; f < d; ++f) h.w[f] += step * data.x[i][f];
            h.w[d] += step;
          }
          double norm2 = 0.0;
          for (double wf : h.w) norm2 += wf * wf;
          const double cap = 1.0 / lambda;
          if (norm2 > cap) {
            const double scale = std::sqrt(cap / norm2);
            for (double& wf : h.w) wf *= scale;
          }
        } else {
          // FOBOS: hinge subgradient step, then l1 shrinkage.
          const double eta = (1.0 / C) / std::sqrt(static_cast<double>(t));
          if (violated) {
            const double step = eta * C * y[i];
            for (std::size_t f = 0; f < d; ++f) h.w[f] += step * data.x[i][f];
            h.w[d] += step;
          }
          const double shrink = eta / static_cast<double>(n);
          for (double& wf : h.w)
            wf = wf > shrink ? wf - shrink : (wf < -shrink ? wf + shrink : 0.0);
        }
      }
    }
    double obj = objective(data, y, h, reg, C);
    if (restart == 0 || obj < best_obj) {
      best_obj = obj;
      best = std::move(h);
    }
  }
  return best;
}

}  // namespace

LinearModel train_svm(const Dataset& data, Reg reg, double C, std::uint64_t seed) {
  if (data.size() < 2) throw DataError("SVM needs at least 2 samples");
  if (!(C > 0.0)) throw DataError("SVM C must be positive");
  std::vector<int> present(data.class_count, 0);
  for (int label : data.y) present[label] = 1;
  if (std::accumulate(present.begin(), present.end(), 0) < 2)
    throw DataError("SVM needs at least 2 classes present");

  LinearModel model;
  model.reg = reg;
  model.C = C;
  const std::size_t d = data.dims();
  std::vector<int> y(data.size());
  for (int c = 0; c < data.class_count; ++c) {
    for (std::size_t i = 0; i < data.size(); ++i) y[i] = data.y[i] == c ? 1 : -1;
    Hyperplane h = train_binary(data, y, reg, C, derive_seed(seed, 1000 + static_cast<std::uint64_t>(c)));
    model.bias.push_back(h.w[d]);
    h.w.pop_back();
    model.weights.push_back(std::move(h.w));
  }
  return model;
}

double svm_objective(const LinearModel& model, const Dataset& data, int c) {
  Hyperplane h;
  h.w = model.weights[c];
  h.w.push_back(model.bias[c]);
  std::vector<int> y(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) y[i] = data.y[i] == c ? 1 : -1;
  return objective(data, y, h, model.reg, model.C);
}

std::vector<double> svm_scores(const LinearModel& model, std::span<const double> x) {
  std::vector<double> scores;
  scores.reserve(model.weights.size());
  for (std::size_t c = 0; c < model.weights.size(); ++c) {
    const auto& w = model.weights[c];
    if (x.size() != w.size()) throw DataError("feature vector has wrong dimension");
    double dot = model.bias[c];
    double norm2 = 0.0;
    for (std::size_t f = 0; f < w.size(); ++f) {
      dot += w[f] * x[f];
      norm2 += w[f] * w[f];
    }
    // Degenerate hyperplane: report 0 rather than dividing by zero.
    scores.push_back(norm2 > 0.0 ? dot / std::sqrt(norm2) : 0.0);
  }
  return scores;
}

int svm_predict(const LinearModel& model, std::span<const double> x) {
  auto scores = svm_scores(model, x);
  return static_cast<int>(std::max_element(scores.begin(), scores.end()) - scores.begin());
}

}  // namespace charnet::learn
