#include "charnet/spectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "charnet/common.hpp"

namespace charnet {

std::vector<double> laplacian_spectrum(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> alive;  // non-isolated nodes
  alive.reserve(n);
  std::vector<int> index(n, -1);
  for (int v = 0; v < n; ++v)
    if (g.degree(v) > 0) {
      index[v] = static_cast<int>(alive.size());
      alive.push_back(v);
    }

  const int m = static_cast<int>(alive.size());
  std::vector<double> eigs;
  eigs.reserve(n);
  // Isolated nodes: L acts as zero on their coordinates.
  eigs.assign(static_cast<std::size_t>(n - m), 0.0);

  if (m > 0) {
    Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(m, m);
    for (const Edge& e : g.edges()) {
      int a = index[e.u], b = index[e.v];
      double value = -1.0 / std::sqrt(static_cast<double>(g.degree(e.u)) * g.degree(e.v));
      lap(a, b) = value;
      lap(b, a) = value;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw InternalError("eigensolver failed to converge");
    for (int i = 0; i < m; ++i) eigs.push_back(solver.eigenvalues()[i]);
  }
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

SpectralHistogram spectral_histogram(std::span<const double> eigenvalues) {
  constexpr double kTol = 1e-9;
  SpectralHistogram hist;
  for (double raw : eigenvalues) {
    if (raw < -kTol || raw > 2.0 + kTol)
      throw DataError("normalized Laplacian eigenvalue " + format_double(raw) + " outside [0,2]");
    double lambda = std::clamp(raw, 0.0, 2.0);
    int bin = lambda >= 2.0 ? 4 : static_cast<int>(lambda / 0.4);
    ++hist.bins[static_cast<std::size_t>(bin)];
  }
  return hist;
}

}  // namespace charnet
