#ifndef HODGELAB_GRAPH_PROBES_HPP
#define HODGELAB_GRAPH_PROBES_HPP

#include <map>
#include <set>
#include <vector>

#include "hodgelab/geometry.hpp"

namespace hodgelab {

/// Weighted 1-skeleton.  Vertices are indexed as in the complex (dimension 0
/// order); closed metric balls B(x, r) = { y : d(x, y) <= r }.
struct Skeleton {
  std::vector<std::vector<std::pair<int, double>>> adjacency;  // (neighbor, length)

  int vertex_count() const { return static_cast<int>(adjacency.size()); }
  bool connected() const;
  /// Shortest-path distances from `source` to every vertex.
  std::vector<double> distances(int source) const;
};

/// Edge lengths from geometry when supplied, unit lengths otherwise.
Skeleton build_skeleton(const SimplicialComplex& cx, const GeometryResolver* res);

/// Largest realized radius R such that some closed ball B(x, R) with x in X
/// stays inside X; radii range over the realized distance values.  X holds
/// vertex indices.  Throws InvalidInput for empty X or a disconnected skeleton.
double largeness_radius(const Skeleton& g, const std::set<int>& X);

/// w(r) = min over vertices x of #B(x, r), for each requested radius.
std::map<double, int> ball_volume_growth(const Skeleton& g, const std::vector<double>& radii);

}  // namespace hodgelab

#endif
