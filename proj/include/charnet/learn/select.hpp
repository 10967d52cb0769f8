#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "charnet/features.hpp"
#include "charnet/genmodels.hpp"
#include "charnet/graph.hpp"
#include "charnet/learn/boost.hpp"
#include "charnet/learn/forest.hpp"
#include "charnet/learn/svm.hpp"

namespace charnet::learn {

enum class ClassifierKind { svm_l2, svm_l1, forest, adaboost };
inline constexpr std::array<ClassifierKind, 4> kClassifierOrder = {
    ClassifierKind::svm_l2, ClassifierKind::svm_l1, ClassifierKind::forest,
    ClassifierKind::adaboost};

const char* classifier_name(ClassifierKind kind);

struct Hyper {
  double C = 1.0;   // SVMs
  int trees = 100;  // forest
  int rounds = 50;  // adaboost
  int depth = 2;    // adaboost base tree depth
};

// Mean validation accuracy over stratified 5-fold CV; the best grid point
// wins. Ties break toward the stronger regularization, i.e. the earlier
// grid point (grids are listed strongest first).
Hyper cross_validate_over(const Dataset& data, ClassifierKind kind, std::span<const Hyper> grid,
                          std::uint64_t seed);

// Default grids: C in {0.01,0.1,1,10,100}; trees in {50,100,200}; rounds in
// {25,50,100} x depth {1,2}.
Hyper cross_validate_select(const Dataset& data, ClassifierKind kind, std::uint64_t seed);

// A trained classifier of any of the four families behind one interface.
class Classifier {
 public:
  static Classifier train(const Dataset& data, ClassifierKind kind, const Hyper& hyper,
                          std::uint64_t seed);

  std::vector<double> scores(std::span<const double> x) const;
  int predict(std::span<const double> x) const;
  ClassifierKind kind() const { return kind_; }

 private:
  ClassifierKind kind_ = ClassifierKind::svm_l2;
  LinearModel svm_;
  ForestModel forest_;
  BoostModel boost_;
};

struct HoldoutMetrics {
  std::array<double, 4> precision{};
  std::array<double, 4> recall{};
  std::array<double, 4> f1{};
  double macro_f1 = 0.0;
};

struct ClassifierReport {
  ClassifierKind kind;
  Hyper hyper;
  std::array<double, 4> scores{};  // PA, CL, ER, CFG
  ModelKind selected = ModelKind::CL;
  HoldoutMetrics holdout;
};

struct SelectionReport {
  FeatureMode mode = FeatureMode::full;
  std::uint64_t seed = 0;
  int samples = 100;
  std::array<ModelParams, 4> params;  // in kModelOrder
  std::array<ClassifierReport, 4> classifiers;
};

struct SelectConfig {
  FeatureMode mode = FeatureMode::full;
  std::uint64_t seed = 0;
  int samples = 100;
};

// The full protocol: match parameters for the four models, generate
// `samples` graphs per model with derived seeds, extract features, fit the
// standardizer on all rows, pick hyperparameters by cross validation, train
// each classifier family on all rows, and score the target graph. A
// stratified half/half holdout run with the same hyperparameters records
// per-class precision/recall/F1.
SelectionReport select_model(const Graph& g, const SelectConfig& config);

std::string report_json(const SelectionReport& report);
// Table-shaped matrix: one row per classifier, score per model, selection.
std::string report_csv(const SelectionReport& report);

}  // namespace charnet::learn
