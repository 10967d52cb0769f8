// Compares the OpenMP census/centrality kernels against their serial
// reference implementations: verifies equal results, reports timings.
//
//   ./charnet_bench [max_n]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "charnet/centrality.hpp"
#include "charnet/genmodels.hpp"
#include "charnet/profiles.hpp"

using namespace charnet;

namespace {

template <typename F>
double time_of(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  int max_n = argc > 1 ? std::atoi(argv[1]) : 400;
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP\n");
#endif

  std::printf("\n4-profile census (ER p=0.1)\n");
  std::printf("%6s %12s %12s %9s\n", "n", "serial[s]", "parallel[s]", "speedup");
  for (int n = 100; n <= max_n; n *= 2) {
    Graph g = gen_er(n, 0.1, 42);
    Profile4 serial, parallel;
    double ts = time_of([&] { serial = profile4_serial(g); });
    double tp = time_of([&] { parallel = profile4(g); });
    if (serial.counts != parallel.counts) {
      std::printf("MISMATCH at n=%d\n", n);
      return 1;
    }
    std::printf("%6d %12.3f %12.3f %8.2fx\n", n, ts, tp, ts / tp);
  }

  std::printf("\nbetweenness centrality (ER p=0.05)\n");
  std::printf("%6s %12s %12s %9s\n", "n", "serial[s]", "parallel[s]", "speedup");
  for (int n = 250; n <= 2 * max_n; n *= 2) {
    Graph g = gen_er(n, 0.05, 43);
    CentralityScores serial, parallel;
    double ts = time_of([&] { serial = betweenness_serial(g); });
    double tp = time_of([&] { parallel = betweenness(g); });
    double max_diff = 0.0;
    for (int v = 0; v < n; ++v)
      max_diff = std::max(max_diff, std::abs(serial.values[v] - parallel.values[v]));
    if (max_diff > 1e-9) {
      std::printf("MISMATCH at n=%d (max diff %g)\n", n, max_diff);
      return 1;
    }
    std::printf("%6d %12.3f %12.3f %8.2fx\n", n, ts, tp, ts / tp);
  }
  return 0;
}
