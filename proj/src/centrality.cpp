#include "charnet/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "charnet/common.hpp"

namespace charnet {

const char* measure_name(Measure m) {
  switch (m) {
    case Measure::weighted_degree: return "weighted_degree";
    case Measure::closeness: return "closeness";
    case Measure::betweenness: return "betweenness";
    case Measure::eigencentrality: return "eigencentrality";
    case Measure::pagerank: return "pagerank";
  }
  return "?";
}

CentralityScores weighted_degree(const Graph& g) {
  CentralityScores s{Measure::weighted_degree, std::vector<double>(g.node_count())};
  for (int v = 0; v < g.node_count(); ++v) s.values[v] = g.weighted_degree(v);
  return s;
}

CentralityScores closeness(const Graph& g) {
  const int n = g.node_count();
  CentralityScores s{Measure::closeness, std::vector<double>(n, 0.0)};
  for (int v = 0; v < n; ++v) {
    auto dist = bfs_distances(g, v);
    long long sum = 0;
    int reached = 0;
    for (int u = 0; u < n; ++u) {
      if (u == v || dist[u] < 0) continue;
      sum += dist[u];
      ++reached;
    }
    s.values[v] = reached > 0 ? static_cast<double>(sum) / reached : 0.0;
  }
  return s;
}

namespace {

// Brandes dependency accumulation for one source; adds into `acc`.
void brandes_from_source(const Graph& g, int source, std::vector<double>& acc) {
  const int n = g.node_count();
  std::vector<int> dist(n, -1);
  std::vector<double> sigma(n, 0.0), delta(n, 0.0);
  std::vector<int> order;
  order.reserve(n);

  std::queue<int> queue;
  dist[source] = 0;
  sigma[source] = 1.0;
  queue.push(source);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    order.push_back(u);
    for (const Neighbor& nb : g.neighbors(u)) {
      int w = nb.to;
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
      if (dist[w] == dist[u] + 1) sigma[w] += sigma[u];
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int w = *it;
    for (const Neighbor& nb : g.neighbors(w)) {
      int u = nb.to;
      if (dist[u] == dist[w] - 1) delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
    }
    if (w != source) acc[w] += delta[w];
  }
}

}  // namespace

CentralityScores betweenness_serial(const Graph& g) {
  const int n = g.node_count();
  std::vector<double> acc(n, 0.0);
  for (int s = 0; s < n; ++s) brandes_from_source(g, s, acc);
  // Each unordered pair was accumulated from both endpoints.
  CentralityScores out{Measure::betweenness, std::move(acc)};
  for (double& v : out.values) v *= 0.5;
  return out;
}

CentralityScores betweenness(const Graph& g) {
  const int n = g.node_count();
  constexpr int kBlock = 64;
  const int blocks = (n + kBlock - 1) / kBlock;
  std::vector<std::vector<double>> partial(blocks);

#pragma omp parallel for schedule(dynamic)
  for (int b = 0; b < blocks; ++b) {
    std::vector<double> acc(n, 0.0);
    int lo = b * kBlock, hi = std::min(n, lo + kBlock);
    for (int s = lo; s < hi; ++s) brandes_from_source(g, s, acc);
    partial[b] = std::move(acc);
  }

  // Fixed block-order reduction keeps the float sums identical whatever the
  // thread count was.
  std::vector<double> acc(n, 0.0);
  for (int b = 0; b < blocks; ++b)
    for (int v = 0; v < n; ++v) acc[v] += partial[b][v];
  CentralityScores out{Measure::betweenness, std::move(acc)};
  for (double& v : out.values) v *= 0.5;
  return out;
}

CentralityScores eigencentrality(const Graph& g) {
  const int n = g.node_count();
  if (n == 0) throw DataError("eigencentrality of empty graph");
  CentralityScores out{Measure::eigencentrality, std::vector<double>(n, 0.0)};

  double max_wdeg = 0.0;
  for (int v = 0; v < n; ++v) max_wdeg = std::max(max_wdeg, g.weighted_degree(v));
  if (max_wdeg == 0.0) return out;  // edgeless graph
  // Shift by the max weighted degree: keeps the Perron vector, damps the
  // oscillation on bipartite components, and scales with the weights so the
  // iteration is invariant under uniform weight rescaling.
  const double shift = max_wdeg;

  auto comp = connected_components(g);
  int comp_total = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<int>> members(comp_total);
  for (int v = 0; v < n; ++v) members[comp[v]].push_back(v);

  std::vector<double> x(n), next(n);
  for (const auto& nodes : members) {
    if (nodes.size() < 2) continue;  // isolated node: score 0
    for (int v : nodes) x[v] = 1.0;
    double diff = 1.0;
    for (int iter = 0; iter < 100000 && diff > 1e-10; ++iter) {
      double norm = 0.0;
      for (int v : nodes) {
        double sum = shift * x[v];
        for (const Neighbor& nb : g.neighbors(v)) sum += nb.weight * x[nb.to];
        next[v] = sum;
        norm = std::max(norm, sum);
      }
      diff = 0.0;
      for (int v : nodes) {
        next[v] /= norm;
        diff = std::max(diff, std::fabs(next[v] - x[v]));
        x[v] = next[v];
      }
    }
    double comp_max = 0.0;
    for (int v : nodes) comp_max = std::max(comp_max, x[v]);
    for (int v : nodes) out.values[v] = x[v] / comp_max;
  }
  return out;
}

CentralityScores pagerank(const Graph& g, double damping, double tol) {
  const int n = g.node_count();
  CentralityScores out{Measure::pagerank, std::vector<double>(n)};
  if (n == 0) return out;
  if (!(damping > 0.0 && damping < 1.0)) throw DataError("pagerank damping must be in (0,1)");

  std::vector<double> p(n, 1.0 / n), next(n);
  for (int iter = 0; iter < 1000000; ++iter) {
    double dangling = 0.0;
    for (int v = 0; v < n; ++v)
      if (g.weighted_degree(v) == 0.0) dangling += p[v];
    double base = (1.0 - damping) / n + damping * dangling / n;
    std::fill(next.begin(), next.end(), base);
    for (int v = 0; v < n; ++v) {
      double wd = g.weighted_degree(v);
      if (wd == 0.0) continue;
      double share = damping * p[v] / wd;
      for (const Neighbor& nb : g.neighbors(v)) next[nb.to] += share * nb.weight;
    }
    double delta = 0.0;
    for (int v = 0; v < n; ++v) delta += std::fabs(next[v] - p[v]);
    p.swap(next);
    if (delta < tol) break;
  }
  out.values = std::move(p);
  return out;
}

}  // namespace charnet
