#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace charnet::learn {

// Per-dimension affine transform fitted on training rows. Dimensions whose
// std falls below 1e-12 keep std 1, so constant features pass through
// centered instead of blowing up.
struct Standardizer {
  std::vector<double> mean;
  std::vector<double> stddev;

  std::vector<double> apply(std::span<const double> row) const;
};

Standardizer standardize_fit(const std::vector<std::vector<double>>& rows);

struct Dataset {
  std::vector<std::vector<double>> x;  // standardized feature rows
  std::vector<int> y;                  // labels 0..class_count-1
  int class_count = 0;
  Standardizer standardizer;

  std::size_t size() const { return x.size(); }
  std::size_t dims() const { return x.empty() ? 0 : x[0].size(); }

  Dataset subset(std::span<const std::size_t> indices) const;
};

// Fits the standardizer on the rows and returns the standardized dataset.
Dataset make_dataset(const std::vector<std::vector<double>>& rows, std::vector<int> labels,
                     int class_count);

// Fold id (0..k-1) per sample. Each class's members are shuffled by the
// seed, then dealt round-robin, so per-fold class counts differ by at most
// one from the ideal proportion. Classes smaller than k are an error.
std::vector<int> stratified_kfold(std::span<const int> labels, int k, std::uint64_t seed);

}  // namespace charnet::learn
