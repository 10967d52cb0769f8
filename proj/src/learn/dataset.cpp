#include "charnet/learn/dataset.hpp"

#include <cmath>

#include "charnet/common.hpp"
#include "charnet/rng.hpp"

namespace charnet::learn {

std::vector<double> Standardizer::apply(std::span<const double> row) const {
  if (row.size() != mean.size()) throw DataError("feature row has wrong dimension");
  std::vector<double> out(row.size());
  for (std::size_t d = 0; d < row.size(); ++d) out[d] = (row[d] - mean[d]) / stddev[d];
  return out;
}

Standardizer standardize_fit(const std::vector<std::vector<double>>& rows) {
  if (rows.size() < 2) throw DataError("standardization needs at least 2 rows");
  const std::size_t dims = rows[0].size();
  for (const auto& row : rows)
    if (row.size() != dims) throw DataError("ragged feature rows");

  Standardizer s;
  s.mean.assign(dims, 0.0);
  s.stddev.assign(dims, 0.0);
  for (const auto& row : rows)
    for (std::size_t d = 0; d < dims; ++d) s.mean[d] += row[d];
  for (double& m : s.mean) m /= static_cast<double>(rows.size());
  for (const auto& row : rows)
    for (std::size_t d = 0; d < dims; ++d) {
      double diff = row[d] - s.mean[d];
      s.stddev[d] += diff * diff;
    }
  for (double& v : s.stddev) {
    v = std::sqrt(v / static_cast<double>(rows.size()));
    if (v < 1e-12) v = 1.0;
  }
  return s;
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  Dataset out;
  out.class_count = class_count;
  out.standardizer = standardizer;
  out.x.reserve(indices.size());
  out.y.reserve(indices.size());
  for (std::size_t i : indices) {
    out.x.push_back(x[i]);
    out.y.push_back(y[i]);
  }
  return out;
}

Dataset make_dataset(const std::vector<std::vector<double>>& rows, std::vector<int> labels,
                     int class_count) {
  if (rows.size() != labels.size()) throw DataError("rows and labels differ in length");
  Dataset data;
  data.class_count = class_count;
  data.standardizer = standardize_fit(rows);
  data.x.reserve(rows.size());
  for (const auto& row : rows) data.x.push_back(data.standardizer.apply(row));
  data.y = std::move(labels);
  for (int label : data.y)
    if (label < 0 || label >= class_count) throw DataError("label out of range");
  return data;
}

std::vector<int> stratified_kfold(std::span<const int> labels, int k, std::uint64_t seed) {
  if (k < 2) throw DataError("k-fold needs k >= 2");
  int class_count = 0;
  for (int label : labels) class_count = std::max(class_count, label + 1);

  std::vector<std::vector<std::size_t>> by_class(class_count);
  for (std::size_t i = 0; i < labels.size(); ++i) by_class[labels[i]].push_back(i);

  Rng rng(seed);
  std::vector<int> fold(labels.size(), -1);
  for (int c = 0; c < class_count; ++c) {
    auto& members = by_class[c];
    if (static_cast<int>(members.size()) < k)
      throw DataError("class " + std::to_string(c) + " has fewer members than folds");
    rng.shuffle(members);
    for (std::size_t i = 0; i < members.size(); ++i)
      fold[members[i]] = static_cast<int>(i % static_cast<std::size_t>(k));
  }
  return fold;
}

}  // namespace charnet::learn
