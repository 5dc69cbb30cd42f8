#ifndef HODGELAB_GEOMETRY_HPP
#define HODGELAB_GEOMETRY_HPP

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <vector>

#include "hodgelab/complex.hpp"

namespace hodgelab {

/// Euclidean vertex coordinates in d-space (d >= top dimension), with
/// optional per-top-simplex chart overrides.  Charts carry locally consistent
/// coordinates for meshes that do not embed globally (the flat torus: cells
/// crossing the periodic seam get unwrapped copies of their vertex positions).
struct Geometry {
  int ambient_dim = 0;
  std::map<int, Eigen::VectorXd> coords;  // vertex id -> position
  /// chart[top index] = positions of the top simplex vertices, aligned with
  /// the sorted vertex order of that top simplex.
  std::map<int, std::vector<Eigen::VectorXd>> charts;

  bool has_coordinates() const { return !coords.empty() || !charts.empty(); }
};

/// Resolves local coordinates of arbitrary simplices of a complex, routing
/// through the chart of the first containing top simplex when one exists.
class GeometryResolver {
public:
  GeometryResolver(const SimplicialComplex& cx, const Geometry& geom);

  const SimplicialComplex& complex() const { return *cx_; }
  int ambient_dim() const { return geom_->ambient_dim; }

  /// Coordinates of the vertices of simplex (dim, index), in sorted vertex order.
  std::vector<Eigen::VectorXd> local_coords(int dim, int index) const;

  /// Coordinates of the top simplex `t`, in sorted vertex order.
  const std::vector<Eigen::VectorXd>& top_coords(int t) const { return top_coords_[t]; }

private:
  const SimplicialComplex* cx_;
  const Geometry* geom_;
  std::vector<std::vector<Eigen::VectorXd>> top_coords_;  // per top simplex
};

/// k-dimensional Hausdorff volume of the simplex spanned by the given points,
/// via the Gram determinant of its edge vectors.  Throws GeometryError when
/// the volume falls below 1e-12 * (max edge length)^k.
double simplex_volume(const std::vector<Eigen::VectorXd>& points);

/// Volume of simplex (dim, index) of the resolved complex.
double simplex_volume(const GeometryResolver& res, int dim, int index);

/// Barycentric coordinate gradients on the top simplex spanned by `points`:
/// row i is the (constant) gradient of the hat function of vertex i.
Eigen::MatrixXd barycentric_gradients(const std::vector<Eigen::VectorXd>& points);

/// Quality constants of a triangulation: nu = min top-simplex volume,
/// K = max top-simplex diameter, c = max barycentric gradient norm.
struct MeshQualityReport {
  double nu = 0;
  double K = 0;
  double c = 0;
};

MeshQualityReport mesh_quality(const GeometryResolver& res);

/// nu >= nu0 and K <= K0 and c <= c0.
bool validate_g_bounded(const MeshQualityReport& report, double nu0, double K0, double c0);

}  // namespace hodgelab

#endif
