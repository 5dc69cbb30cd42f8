#include "hodgelab/graph_probes.hpp"

#include <limits>
#include <queue>

namespace hodgelab {

bool Skeleton::connected() const {
  if (adjacency.empty()) return true;
  std::vector<char> seen(adjacency.size(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int visited = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (const auto& [w, len] : adjacency[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        q.push(w);
      }
  }
  return visited == vertex_count();
}

std::vector<double> Skeleton::distances(int source) const {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(adjacency.size(), inf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[source] = 0;
  pq.emplace(0.0, source);
  while (!pq.empty()) {
    const auto [d, v] = pq.top();
    pq.pop();
    if (d > dist[v]) continue;
    for (const auto& [w, len] : adjacency[v]) {
      const double nd = d + len;
      if (nd < dist[w]) {
        dist[w] = nd;
        pq.emplace(nd, w);
      }
    }
  }
  return dist;
}

Skeleton build_skeleton(const SimplicialComplex& cx, const GeometryResolver* res) {
  Skeleton g;
  g.adjacency.resize(cx.count(0));
  for (int e = 0; e < cx.count(1); ++e) {
    const auto& verts = cx.simplex(1, e).vertices;
    const int a = cx.index_of(0, {verts[0]});
    const int b = cx.index_of(0, {verts[1]});
    double len = 1.0;
    if (res) {
      const auto pts = res->local_coords(1, e);
      len = (pts[1] - pts[0]).norm();
    }
    g.adjacency[a].emplace_back(b, len);
    g.adjacency[b].emplace_back(a, len);
  }
  return g;
}

double largeness_radius(const Skeleton& g, const std::set<int>& X) {
  if (X.empty()) throw InvalidInput("largeness_radius: empty vertex subset");
  if (!g.connected()) throw InvalidInput("largeness_radius: skeleton is disconnected");
  double best = 0;
  for (int x : X) {
    const auto dist = g.distances(x);
    double exit_dist = std::numeric_limits<double>::infinity();
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!X.count(v)) exit_dist = std::min(exit_dist, dist[v]);
    // Largest realized distance strictly below the nearest exit: the closed
    // ball of that radius is still contained in X.
    double radius = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (dist[v] < exit_dist) radius = std::max(radius, dist[v]);
    best = std::max(best, radius);
  }
  return best;
}

std::map<double, int> ball_volume_growth(const Skeleton& g, const std::vector<double>& radii) {
  if (!g.connected()) throw InvalidInput("ball_volume_growth: skeleton is disconnected");
  std::map<double, int> w;
  std::vector<std::vector<double>> all;
  all.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) all.push_back(g.distances(v));
  for (double r : radii) {
    int best = std::numeric_limits<int>::max();
    for (int v = 0; v < g.vertex_count(); ++v) {
      int c = 0;
      for (double d : all[v])
        if (d <= r) ++c;
      best = std::min(best, c);
    }
    w[r] = best;
  }
  return w;
}

}  // namespace hodgelab
