#include "charnet/community.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "charnet/common.hpp"
#include "charnet/rng.hpp"

namespace charnet {

double modularity(const Graph& g, const std::vector<int>& assignment) {
  const int n = g.node_count();
  if (static_cast<int>(assignment.size()) != n) throw DataError("assignment does not cover all nodes");
  int k = 0;
  for (int c : assignment) {
    if (c < 0) throw DataError("unassigned node in partition");
    k = std::max(k, c + 1);
  }
  const double total = g.total_weight();
  if (total <= 0.0) return 0.0;

  std::vector<double> intra(k, 0.0), degree_sum(k, 0.0);
  for (const Edge& e : g.edges())
    if (assignment[e.u] == assignment[e.v]) intra[assignment[e.u]] += e.weight;
  for (int v = 0; v < n; ++v) degree_sum[assignment[v]] += g.weighted_degree(v);

  double q = 0.0;
  for (int c = 0; c < k; ++c) {
    double frac = degree_sum[c] / (2.0 * total);
    q += intra[c] / total - frac * frac;
  }
  return q;
}

namespace {

constexpr double kGainEps = 1e-9;

// One aggregation level. Self-loops carry the internal weight of collapsed
// communities; a self-loop of weight w adds 2w to the node's degree.
struct LevelGraph {
  std::vector<std::vector<Neighbor>> adj;
  std::vector<double> loop;
  std::vector<double> degree;  // weighted, self-loops doubled
  double total = 0.0;          // W: total edge weight including loops

  int size() const { return static_cast<int>(adj.size()); }
};

LevelGraph level_from_graph(const Graph& g) {
  LevelGraph lg;
  lg.adj.resize(g.node_count());
  lg.loop.assign(g.node_count(), 0.0);
  lg.degree.resize(g.node_count());
  for (int v = 0; v < g.node_count(); ++v) {
    auto nbrs = g.neighbors(v);
    lg.adj[v].assign(nbrs.begin(), nbrs.end());
    lg.degree[v] = g.weighted_degree(v);
  }
  lg.total = g.total_weight();
  return lg;
}

struct LocalMoveResult {
  std::vector<int> community;  // dense 0..k-1
  int count = 0;
  bool moved = false;
};

LocalMoveResult local_moves(const LevelGraph& lg, Rng& rng) {
  const int n = lg.size();
  std::vector<int> community(n);
  std::iota(community.begin(), community.end(), 0);
  std::vector<double> comm_degree(lg.degree);  // S_c

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);

  const double w = lg.total;
  LocalMoveResult result;
  if (w <= 0.0) {
    result.community = community;
    result.count = n;
    return result;
  }

  bool improved = true;
  while (improved) {
    improved = false;
    for (int v : order) {
      int original = community[v];
      // Links from v into each adjacent community (ordered map: candidate
      // communities are visited in ascending id, which settles gain ties).
      std::map<int, double> links;
      links[original];  // moving back is always a candidate
      for (const Neighbor& nb : lg.adj[v]) links[community[nb.to]] += nb.weight;

      comm_degree[original] -= lg.degree[v];
      community[v] = -1;

      int best = original;
      double best_gain = links[original] / w - comm_degree[original] * lg.degree[v] / (2.0 * w * w);
      double original_gain = best_gain;
      for (const auto& [c, k_in] : links) {
        if (c == original) continue;
        double gain = k_in / w - comm_degree[c] * lg.degree[v] / (2.0 * w * w);
        if (gain > best_gain) {
          best_gain = gain;
          best = c;
        }
      }
      community[v] = best;
      comm_degree[best] += lg.degree[v];
      if (best != original && best_gain - original_gain > kGainEps) {
        improved = true;
        result.moved = true;
      }
    }
  }

  // Renumber to dense ids ordered by first appearance.
  std::vector<int> remap(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (remap[community[v]] < 0) remap[community[v]] = next++;
    community[v] = remap[community[v]];
  }
  result.community = std::move(community);
  result.count = next;
  return result;
}

LevelGraph aggregate(const LevelGraph& lg, const std::vector<int>& community, int count) {
  LevelGraph out;
  out.adj.resize(count);
  out.loop.assign(count, 0.0);
  out.degree.assign(count, 0.0);
  out.total = lg.total;

  std::vector<std::map<int, double>> between(count);
  for (int v = 0; v < lg.size(); ++v) {
    int cv = community[v];
    out.loop[cv] += lg.loop[v];
    for (const Neighbor& nb : lg.adj[v]) {
      int cu = community[nb.to];
      if (cu == cv) {
        if (nb.to > v) out.loop[cv] += nb.weight;  // each internal edge once
      } else {
        between[cv][cu] += nb.weight;
      }
    }
  }
  for (int c = 0; c < count; ++c) {
    out.adj[c].reserve(between[c].size());
    for (const auto& [to, weight] : between[c]) out.adj[c].push_back({to, weight});
    out.degree[c] = 2.0 * out.loop[c];
    for (const Neighbor& nb : out.adj[c]) out.degree[c] += nb.weight;
  }
  return out;
}

double level_modularity(const LevelGraph& lg, const std::vector<int>& community, int count) {
  if (lg.total <= 0.0) return 0.0;
  std::vector<double> intra(count, 0.0), degree_sum(count, 0.0);
  for (int v = 0; v < lg.size(); ++v) {
    intra[community[v]] += lg.loop[v];
    degree_sum[community[v]] += lg.degree[v];
    for (const Neighbor& nb : lg.adj[v])
      if (nb.to > v && community[nb.to] == community[v]) intra[community[v]] += nb.weight;
  }
  double q = 0.0;
  for (int c = 0; c < count; ++c) {
    double frac = degree_sum[c] / (2.0 * lg.total);
    q += intra[c] / lg.total - frac * frac;
  }
  return q;
}

}  // namespace

Partition louvain(const Graph& g, std::uint64_t seed) {
  const int n = g.node_count();
  Partition part;
  part.assignment.resize(n);
  std::iota(part.assignment.begin(), part.assignment.end(), 0);
  part.community_count = n;
  if (n == 0) return part;

  Rng rng(seed);
  LevelGraph level = level_from_graph(g);
  std::vector<int> node_to_super(n);
  std::iota(node_to_super.begin(), node_to_super.end(), 0);

  double q = level_modularity(level, node_to_super, n);
  for (;;) {
    auto moves = local_moves(level, rng);
    double new_q = level_modularity(level, moves.community, moves.count);
    if (!moves.moved || new_q - q <= kGainEps) break;
    q = new_q;
    for (int v = 0; v < n; ++v) node_to_super[v] = moves.community[node_to_super[v]];
    level = aggregate(level, moves.community, moves.count);
  }

  // Renumber by first appearance in node-id order.
  std::vector<int> remap(level.size(), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (remap[node_to_super[v]] < 0) remap[node_to_super[v]] = next++;
    part.assignment[v] = remap[node_to_super[v]];
  }
  part.community_count = next;
  part.q = q;
  return part;
}

}  // namespace charnet
