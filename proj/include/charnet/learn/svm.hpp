#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "charnet/learn/dataset.hpp"

namespace charnet::learn {

enum class Reg { l1, l2 };

// One-versus-rest linear classifier. Each class gets a hyperplane trained
// on the binary problem (this class = +1, rest = -1) by minimizing
// reg(w) + C * sum hinge.
struct LinearModel {
  std::vector<std::vector<double>> weights;  // per class
  std::vector<double> bias;
  Reg reg = Reg::l2;
  double C = 1.0;
};

// Deterministic epoch-based subgradient descent (Pegasos schedule for l2,
// FOBOS soft-thresholding for l1) with seeded shuffling. Runs 5 seeded
// restarts and keeps the one with the lowest final objective.
LinearModel train_svm(const Dataset& data, Reg reg, double C, std::uint64_t seed);

// reg(w) + C * sum of hinge losses of the given class-c hyperplane.
double svm_objective(const LinearModel& model, const Dataset& data, int c);

// Signed distance to each hyperplane: (w.x + b)/||w||_2. A zero weight
// vector scores 0.
std::vector<double> svm_scores(const LinearModel& model, std::span<const double> x);

int svm_predict(const LinearModel& model, std::span<const double> x);

}  // namespace charnet::learn
