#include "charnet/learn/select.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "charnet/common.hpp"
#include "charnet/rng.hpp"

namespace charnet::learn {

using json = nlohmann::ordered_json;

const char* classifier_name(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::svm_l2: return "SVM-l2";
    case ClassifierKind::svm_l1: return "SVM-l1";
    case ClassifierKind::forest: return "Forest";
    case ClassifierKind::adaboost: return "AdaBoost";
  }
  return "?";
}

Classifier Classifier::train(const Dataset& data, ClassifierKind kind, const Hyper& hyper,
                             std::uint64_t seed) {
  Classifier c;
  c.kind_ = kind;
  switch (kind) {
    case ClassifierKind::svm_l2:
      c.svm_ = train_svm(data, Reg::l2, hyper.C, seed);
      break;
    case ClassifierKind::svm_l1:
      c.svm_ = train_svm(data, Reg::l1, hyper.C, seed);
      break;
    case ClassifierKind::forest:
      c.forest_ = train_forest(data, hyper.trees, seed);
      break;
    case ClassifierKind::adaboost:
      c.boost_ = train_adaboost(data, hyper.rounds, hyper.depth, seed);
      break;
  }
  return c;
}

std::vector<double> Classifier::scores(std::span<const double> x) const {
  switch (kind_) {
    case ClassifierKind::svm_l2:
    case ClassifierKind::svm_l1:
      return svm_scores(svm_, x);
    case ClassifierKind::forest:
      return forest_scores(forest_, x);
    case ClassifierKind::adaboost:
      return boost_scores(boost_, x);
  }
  throw InternalError("unreachable classifier kind");
}

int Classifier::predict(std::span<const double> x) const {
  auto s = scores(x);
  return static_cast<int>(std::max_element(s.begin(), s.end()) - s.begin());
}

namespace {

double cv_accuracy(const Dataset& data, ClassifierKind kind, const Hyper& hyper,
                   const std::vector<int>& fold, int k, std::uint64_t seed) {
  double accuracy_sum = 0.0;
  for (int f = 0; f < k; ++f) {
    std::vector<std::size_t> train_idx, val_idx;
    for (std::size_t i = 0; i < data.size(); ++i)
      (fold[i] == f ? val_idx : train_idx).push_back(i);
    Dataset train = data.subset(train_idx);
    Classifier c = Classifier::train(train, kind, hyper, derive_seed(seed, static_cast<std::uint64_t>(f)));
    int hits = 0;
    for (std::size_t i : val_idx)
      if (c.predict(data.x[i]) == data.y[i]) ++hits;
    accuracy_sum += static_cast<double>(hits) / static_cast<double>(val_idx.size());
  }
  return accuracy_sum / k;
}

}  // namespace

Hyper cross_validate_over(const Dataset& data, ClassifierKind kind, std::span<const Hyper> grid,
                          std::uint64_t seed) {
  if (grid.empty()) throw DataError("empty hyperparameter grid");
  constexpr int kFolds = 5;
  auto fold = stratified_kfold(data.y, kFolds, derive_seed(seed, 0xf01d));
  Hyper best = grid[0];
  double best_accuracy = -1.0;
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    double accuracy = cv_accuracy(data, kind, grid[gi], fold, kFolds, derive_seed(seed, 100 + gi));
    if (accuracy > best_accuracy) {
      best_accuracy = accuracy;
      best = grid[gi];
    }
  }
  return best;
}

Hyper cross_validate_select(const Dataset& data, ClassifierKind kind, std::uint64_t seed) {
  // Grids ordered strongest regularization first; strict improvement keeps
  // the earlier point on ties.
  std::vector<Hyper> grid;
  switch (kind) {
    case ClassifierKind::svm_l2:
    case ClassifierKind::svm_l1:
      for (double C : {0.01, 0.1, 1.0, 10.0, 100.0}) grid.push_back({.C = C});
      break;
    case ClassifierKind::forest:
      for (int trees : {50, 100, 200}) grid.push_back({.trees = trees});
      break;
    case ClassifierKind::adaboost:
      for (int rounds : {25, 50, 100})
        for (int depth : {1, 2}) grid.push_back({.rounds = rounds, .depth = depth});
      break;
  }
  return cross_validate_over(data, kind, grid, seed);
}

namespace {

HoldoutMetrics holdout_eval(const Dataset& data, ClassifierKind kind, const Hyper& hyper,
                            std::uint64_t seed) {
  // Half training, half holdout, stratified.
  auto fold = stratified_kfold(data.y, 2, derive_seed(seed, 0x401d));
  std::vector<std::size_t> train_idx, held_idx;
  for (std::size_t i = 0; i < data.size(); ++i)
    (fold[i] == 0 ? train_idx : held_idx).push_back(i);
  Dataset train = data.subset(train_idx);
  Classifier c = Classifier::train(train, kind, hyper, derive_seed(seed, 0x7e57));

  std::array<std::array<long, 4>, 4> confusion{};  // [truth][prediction]
  for (std::size_t i : held_idx) ++confusion[data.y[i]][c.predict(data.x[i])];

  HoldoutMetrics metrics;
  for (int cls = 0; cls < 4; ++cls) {
    long tp = confusion[cls][cls];
    long fn = 0, fp = 0;
    for (int other = 0; other < 4; ++other) {
      if (other == cls) continue;
      fn += confusion[cls][other];
      fp += confusion[other][cls];
    }
    metrics.precision[cls] = tp + fp > 0 ? static_cast<double>(tp) / (tp + fp) : 0.0;
    metrics.recall[cls] = tp + fn > 0 ? static_cast<double>(tp) / (tp + fn) : 0.0;
    double pr = metrics.precision[cls] + metrics.recall[cls];
    metrics.f1[cls] = pr > 0.0 ? 2.0 * metrics.precision[cls] * metrics.recall[cls] / pr : 0.0;
    metrics.macro_f1 += metrics.f1[cls] / 4.0;
  }
  return metrics;
}

}  // namespace

SelectionReport select_model(const Graph& g, const SelectConfig& config) {
  if (g.node_count() < 5) throw DataError("model selection needs at least 5 nodes");
  if (config.samples < 10) throw DataError("model selection needs at least 10 samples per model");

  SelectionReport report;
  report.mode = config.mode;
  report.seed = config.seed;
  report.samples = config.samples;
  for (int mi = 0; mi < 4; ++mi) report.params[mi] = match_parameters(g, kModelOrder[mi]);

  const int total = 4 * config.samples;
  std::vector<std::vector<double>> rows(total);
  std::vector<int> labels(total);

#pragma omp parallel for schedule(dynamic)
  for (int idx = 0; idx < total; ++idx) {
    int mi = idx / config.samples;
    Graph sampled = sample_model(report.params[mi], derive_seed(config.seed, static_cast<std::uint64_t>(idx)));
    rows[idx] = feature_vector(sampled, config.mode).values;
    labels[idx] = mi;
  }

  Dataset data = make_dataset(rows, std::move(labels), 4);
  std::vector<double> target = data.standardizer.apply(feature_vector(g, config.mode).values);

  for (int ci = 0; ci < 4; ++ci) {
    ClassifierKind kind = kClassifierOrder[ci];
    ClassifierReport& cr = report.classifiers[ci];
    cr.kind = kind;
    std::uint64_t kind_seed = derive_seed(config.seed, 0xc1a0 + static_cast<std::uint64_t>(ci));
    cr.hyper = cross_validate_select(data, kind, kind_seed);
    Classifier trained = Classifier::train(data, kind, cr.hyper, derive_seed(kind_seed, 1));
    auto scores = trained.scores(target);
    std::copy(scores.begin(), scores.end(), cr.scores.begin());
    cr.selected = kModelOrder[std::max_element(scores.begin(), scores.end()) - scores.begin()];
    cr.holdout = holdout_eval(data, kind, cr.hyper, kind_seed);
  }
  return report;
}

namespace {

json params_json(const ModelParams& params) {
  json out;
  out["n"] = params.n;
  switch (params.model) {
    case ModelKind::PA: out["m"] = params.m; break;
    case ModelKind::ER: out["p"] = params.p; break;
    case ModelKind::CL:
    case ModelKind::CFG: out["w"] = params.w; break;
  }
  return out;
}

}  // namespace

std::string report_json(const SelectionReport& report) {
  json out;
  out["mode"] = feature_mode_name(report.mode);
  out["seed"] = report.seed;
  out["samples"] = report.samples;

  json classifiers;
  json holdout;
  for (const auto& cr : report.classifiers) {
    json scores;
    for (int mi = 0; mi < 4; ++mi) scores[model_name(kModelOrder[mi])] = cr.scores[mi];
    json entry;
    entry["scores"] = std::move(scores);
    entry["selected"] = model_name(cr.selected);
    switch (cr.kind) {
      case ClassifierKind::svm_l2:
      case ClassifierKind::svm_l1: entry["hyperparameters"] = {{"C", cr.hyper.C}}; break;
      case ClassifierKind::forest: entry["hyperparameters"] = {{"trees", cr.hyper.trees}}; break;
      case ClassifierKind::adaboost:
        entry["hyperparameters"] = {{"rounds", cr.hyper.rounds}, {"depth", cr.hyper.depth}};
        break;
    }
    classifiers[classifier_name(cr.kind)] = std::move(entry);

    json h;
    for (const char* metric : {"precision", "recall", "f1"}) {
      json per_class;
      for (int mi = 0; mi < 4; ++mi) {
        const auto& source = std::string(metric) == "precision" ? cr.holdout.precision
                             : std::string(metric) == "recall"  ? cr.holdout.recall
                                                                : cr.holdout.f1;
        per_class[model_name(kModelOrder[mi])] = source[mi];
      }
      h[metric] = std::move(per_class);
    }
    h["macro_f1"] = cr.holdout.macro_f1;
    holdout[classifier_name(cr.kind)] = std::move(h);
  }
  out["classifiers"] = std::move(classifiers);
  out["holdout"] = std::move(holdout);

  json params;
  for (int mi = 0; mi < 4; ++mi)
    params[model_name(kModelOrder[mi])] = params_json(report.params[mi]);
  out["params"] = std::move(params);
  return out.dump(2) + "\n";
}

std::string report_csv(const SelectionReport& report) {
  std::string out = "Classifier,PA,CL,ER,CFG,Selected\n";
  for (const auto& cr : report.classifiers) {
    out += classifier_name(cr.kind);
    for (int mi = 0; mi < 4; ++mi) {
      out += ',';
      out += format_double(cr.scores[mi]);
    }
    out += ',';
    out += model_name(cr.selected);
    out += '\n';
  }
  return out;
}

}  // namespace charnet::learn
