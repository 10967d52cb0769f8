#include "charnet/graph.hpp"

#include <algorithm>
#include <queue>

#include "charnet/common.hpp"

namespace charnet {

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  // Probe the smaller adjacency list.
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                             [](const Neighbor& a, int b) { return a.to < b; });
  return it != nbrs.end() && it->to == v;
}

GraphBuilder::GraphBuilder(int node_count) : node_count_(node_count) {
  if (node_count < 0) throw DataError("negative node count");
  labels_.resize(node_count);
  for (int v = 0; v < node_count; ++v) labels_[v] = std::to_string(v);
}

void GraphBuilder::set_label(int v, std::string label) {
  if (v < 0 || v >= node_count_) throw DataError("label for unknown node id " + std::to_string(v));
  labels_[v] = std::move(label);
}

void GraphBuilder::add_edge(int u, int v, double weight) {
  if (u < 0 || u >= node_count_ || v < 0 || v >= node_count_)
    throw DataError("edge endpoint out of range: (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  if (u == v) throw DataError("self-loop on node " + std::to_string(u));
  if (!(weight > 0.0)) throw DataError("non-positive edge weight " + format_double(weight));
  if (u > v) std::swap(u, v);
  pending_.push_back({u, v, weight});
}

Graph GraphBuilder::build() {
  std::sort(pending_.begin(), pending_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });

  Graph g;
  g.labels_ = std::move(labels_);
  g.edges_.reserve(pending_.size());
  for (const Edge& e : pending_) {
    if (!g.edges_.empty() && g.edges_.back().u == e.u && g.edges_.back().v == e.v)
      g.edges_.back().weight += e.weight;  // duplicate rows merge additively
    else
      g.edges_.push_back(e);
  }
  pending_.clear();

  const int n = node_count_;
  std::vector<std::size_t> deg(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.adjacency_[cursor[e.u]++] = {e.v, e.weight};
    g.adjacency_[cursor[e.v]++] = {e.u, e.weight};
  }
  // Edges were sorted by (u, v), so each adjacency list is already sorted
  // for the forward direction; the backward fills can be out of order.
  for (int v = 0; v < n; ++v) {
    auto begin = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto end = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(begin, end, [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
  }

  g.weighted_degree_.assign(n, 0.0);
  g.total_weight_ = 0.0;
  for (const Edge& e : g.edges_) {
    g.weighted_degree_[e.u] += e.weight;
    g.weighted_degree_[e.v] += e.weight;
    g.total_weight_ += e.weight;
  }
  return g;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.node_count(), -1);
  std::queue<int> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (const Neighbor& nb : g.neighbors(u)) {
      if (dist[nb.to] < 0) {
        dist[nb.to] = dist[u] + 1;
        queue.push(nb.to);
      }
    }
  }
  return dist;
}

std::vector<int> connected_components(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (comp[v] >= 0) continue;
    comp[v] = next;
    std::queue<int> queue;
    queue.push(v);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (const Neighbor& nb : g.neighbors(u))
        if (comp[nb.to] < 0) {
          comp[nb.to] = next;
          queue.push(nb.to);
        }
    }
    ++next;
  }
  return comp;
}

namespace {

double local_clustering(const Graph& g, int v) {
  int d = g.degree(v);
  if (d < 2) return 0.0;
  auto nbrs = g.neighbors(v);
  int links = 0;
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      if (g.has_edge(nbrs[i].to, nbrs[j].to)) ++links;
  return 2.0 * links / (static_cast<double>(d) * (d - 1));
}

}  // namespace

GraphStats global_stats(const Graph& g) {
  GraphStats s;
  const int n = g.node_count();
  s.node_count = n;
  s.edge_count = g.edge_count();
  if (n > 0) {
    s.avg_degree = 2.0 * static_cast<double>(s.edge_count) / n;
    s.avg_weighted_degree = 2.0 * g.total_weight() / n;
  }
  if (n > 1) s.edge_density = static_cast<double>(s.edge_count) / (0.5 * n * (n - 1));

  double cc_sum = 0.0;
  for (int v = 0; v < n; ++v) cc_sum += local_clustering(g, v);
  if (n > 0) s.clustering_coeff = cc_sum / n;

  auto comp = connected_components(g);
  int comp_total = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  s.connected = comp_total <= 1;
  std::vector<int> sizes(comp_total, 0);
  for (int c : comp) ++sizes[c];
  int largest = 0;
  for (int c = 1; c < comp_total; ++c)
    if (sizes[c] > sizes[largest]) largest = c;
  s.largest_component_size = comp_total == 0 ? 0 : sizes[largest];

  if (s.largest_component_size < 2) {
    s.distances_defined = false;
    return s;
  }
  long long pair_count = 0;
  long long dist_sum = 0;
  int diameter = 0;
  for (int v = 0; v < n; ++v) {
    if (comp[v] != largest) continue;
    auto dist = bfs_distances(g, v);
    for (int u = 0; u < n; ++u) {
      if (u == v || comp[u] != largest) continue;
      dist_sum += dist[u];
      ++pair_count;
      diameter = std::max(diameter, dist[u]);
    }
  }
  s.diameter = diameter;
  s.avg_distance = static_cast<double>(dist_sum) / static_cast<double>(pair_count);
  return s;
}

Graph complement(const Graph& g) {
  const int n = g.node_count();
  GraphBuilder builder(n);
  for (int v = 0; v < n; ++v) builder.set_label(v, g.label(v));
  for (int u = 0; u < n; ++u) {
    auto nbrs = g.neighbors(u);
    std::size_t idx = 0;
    for (int v = u + 1; v < n; ++v) {
      while (idx < nbrs.size() && nbrs[idx].to < v) ++idx;
      bool adjacent = idx < nbrs.size() && nbrs[idx].to == v;
      if (!adjacent) builder.add_edge(u, v, 1.0);
    }
  }
  return builder.build();
}

}  // namespace charnet
