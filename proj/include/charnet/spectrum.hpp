#pragma once

#include <array>
#include <span>
#include <vector>

#include "charnet/graph.hpp"

namespace charnet {

// Eigenvalues of the normalized Laplacian I - D^{-1/2} A D^{-1/2} of the
// unweighted adjacency (model selection ignores weights), ascending.
// Isolated nodes contribute eigenvalue 0.
std::vector<double> laplacian_spectrum(const Graph& g);

// Five equally spaced bins over [0,2]: half-open except the last, which
// includes 2. Eigenvalues are clamped within a 1e-9 tolerance; anything
// further outside [0,2] is an error.
struct SpectralHistogram {
  std::array<int, 5> bins{};
  static constexpr std::array<double, 6> edges = {0.0, 0.4, 0.8, 1.2, 1.6, 2.0};
};

SpectralHistogram spectral_histogram(std::span<const double> eigenvalues);

}  // namespace charnet
