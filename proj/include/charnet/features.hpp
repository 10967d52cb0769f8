#pragma once

#include <string>
#include <vector>

#include "charnet/graph.hpp"

namespace charnet {

enum class FeatureMode { full, profiles_only };

FeatureMode feature_mode_from_name(const std::string& name);
const char* feature_mode_name(FeatureMode mode);

// Label-invariant graph summary: H0..H3, F0..F10, then (full mode) the five
// spectral bins. Raw counts; standardization happens at training time.
struct FeatureVector {
  FeatureMode mode = FeatureMode::full;
  std::vector<double> values;  // 20 in full mode, 15 in profiles_only
};

FeatureVector feature_vector(const Graph& g, FeatureMode mode);

// Column names: H0..H3, F0..F10, B1..B5.
std::vector<std::string> feature_names(FeatureMode mode);

}  // namespace charnet
