#include "charnet/features.hpp"

#include "charnet/common.hpp"
#include "charnet/profiles.hpp"
#include "charnet/spectrum.hpp"

namespace charnet {

FeatureMode feature_mode_from_name(const std::string& name) {
  if (name == "full") return FeatureMode::full;
  if (name == "profiles" || name == "profiles_only") return FeatureMode::profiles_only;
  throw DataError("unknown feature mode '" + name + "' (expected full|profiles)");
}

const char* feature_mode_name(FeatureMode mode) {
  return mode == FeatureMode::full ? "full" : "profiles";
}

FeatureVector feature_vector(const Graph& g, FeatureMode mode) {
  if (g.node_count() < 4) throw DataError("feature vector needs at least 4 nodes");
  FeatureVector fv;
  fv.mode = mode;
  fv.values.reserve(mode == FeatureMode::full ? 20 : 15);

  Profile3 p3 = profile3(g);
  for (auto c : p3.counts) fv.values.push_back(static_cast<double>(c));
  Profile4 p4 = profile4(g);
  for (auto c : p4.counts) fv.values.push_back(static_cast<double>(c));

  if (mode == FeatureMode::full) {
    auto hist = spectral_histogram(laplacian_spectrum(g));
    for (int b : hist.bins) fv.values.push_back(static_cast<double>(b));
  }
  return fv;
}

std::vector<std::string> feature_names(FeatureMode mode) {
  std::vector<std::string> names;
  for (int i = 0; i < 4; ++i) names.push_back("H" + std::to_string(i));
  for (int i = 0; i < 11; ++i) names.push_back("F" + std::to_string(i));
  if (mode == FeatureMode::full)
    for (int i = 1; i <= 5; ++i) names.push_back("B" + std::to_string(i));
  return names;
}

}  // namespace charnet
