#pragma once

// Independent reference implementations used by the unit and acceptance
// suites. These deliberately avoid the library's algorithmic shortcuts:
// betweenness is recomputed from raw path counts instead of dependency
// accumulation.

#include <queue>
#include <vector>

#include "charnet/graph.hpp"

namespace charnet::oracles {

inline void count_paths(const Graph& g, int source, std::vector<int>& dist,
                        std::vector<double>& sigma) {
  dist.assign(g.node_count(), -1);
  sigma.assign(g.node_count(), 0.0);
  std::queue<int> q;
  dist[source] = 0;
  sigma[source] = 1.0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (const Neighbor& nb : g.neighbors(u)) {
      if (dist[nb.to] < 0) {
        dist[nb.to] = dist[u] + 1;
        q.push(nb.to);
      }
      if (dist[nb.to] == dist[u] + 1) sigma[nb.to] += sigma[u];
    }
  }
}

// All-pairs enumeration: sigma_st(u) = sigma_s(u) * sigma_t(u) whenever u
// lies on a shortest s-t path.
inline std::vector<double> betweenness_brute_force(const Graph& g) {
  const int n = g.node_count();
  std::vector<double> result(n, 0.0);
  std::vector<std::vector<int>> dist(n);
  std::vector<std::vector<double>> sigma(n);
  for (int v = 0; v < n; ++v) count_paths(g, v, dist[v], sigma[v]);
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      if (dist[s][t] < 0) continue;
      for (int u = 0; u < n; ++u) {
        if (u == s || u == t) continue;
        if (dist[s][u] < 0 || dist[t][u] < 0) continue;
        if (dist[s][u] + dist[t][u] != dist[s][t]) continue;
        result[u] += sigma[s][u] * sigma[t][u] / sigma[s][t];
      }
    }
  return result;
}

}  // namespace charnet::oracles
