#include "hodgelab/geometry.hpp"

#include <cmath>

namespace hodgelab {

GeometryResolver::GeometryResolver(const SimplicialComplex& cx, const Geometry& geom)
    : cx_(&cx), geom_(&geom) {
  if (!geom.has_coordinates()) throw GeometryError("geometry has no coordinates");
  if (geom.ambient_dim < cx.top_dimension())
    throw GeometryError("ambient dimension " + std::to_string(geom.ambient_dim) +
                        " below top dimension " + std::to_string(cx.top_dimension()));
  const int m = cx.top_dimension();
  top_coords_.resize(cx.count(m));
  for (int t = 0; t < cx.count(m); ++t) {
    auto chart = geom.charts.find(t);
    if (chart != geom.charts.end()) {
      if (static_cast<int>(chart->second.size()) != m + 1)
        throw GeometryError("chart of top simplex " + std::to_string(t) + " has wrong arity");
      top_coords_[t] = chart->second;
    } else {
      const auto& verts = cx.simplex(m, t).vertices;
      top_coords_[t].reserve(verts.size());
      for (int v : verts) {
        auto it = geom.coords.find(v);
        if (it == geom.coords.end())
          throw GeometryError("vertex " + std::to_string(v) + " has no coordinates");
        top_coords_[t].push_back(it->second);
      }
    }
    for (const auto& x : top_coords_[t])
      if (x.size() != geom.ambient_dim)
        throw GeometryError("coordinate arity mismatch in top simplex " + std::to_string(t));
  }
}

std::vector<Eigen::VectorXd> GeometryResolver::local_coords(int dim, int index) const {
  const int m = cx_->top_dimension();
  if (dim == m) return top_coords_[index];
  const auto& tops = cx_->cofacet_tops(dim, index);
  if (tops.empty()) throw GeometryError("simplex has no containing top simplex");
  const int t = tops.front();
  const auto& tverts = cx_->simplex(m, t).vertices;
  const auto& sverts = cx_->simplex(dim, index).vertices;
  std::vector<Eigen::VectorXd> out;
  out.reserve(sverts.size());
  for (int v : sverts) {
    const auto it = std::lower_bound(tverts.begin(), tverts.end(), v);
    out.push_back(top_coords_[t][it - tverts.begin()]);
  }
  return out;
}

double simplex_volume(const std::vector<Eigen::VectorXd>& points) {
  const int k = static_cast<int>(points.size()) - 1;
  if (k == 0) return 1.0;
  Eigen::MatrixXd E(k, points[0].size());
  double max_edge = 0;
  for (int i = 1; i <= k; ++i) E.row(i - 1) = (points[i] - points[0]).transpose();
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      max_edge = std::max(max_edge, (points[i] - points[j]).norm());
  const Eigen::MatrixXd g = E * E.transpose();
  double det = g.determinant();
  if (det < 0) det = 0;
  double vol = std::sqrt(det);
  for (int i = 2; i <= k; ++i) vol /= i;
  if (vol < 1e-12 * std::pow(max_edge, k) || max_edge == 0)
    throw GeometryError("degenerate simplex: volume " + std::to_string(vol) + " below threshold");
  return vol;
}

double simplex_volume(const GeometryResolver& res, int dim, int index) {
  return simplex_volume(res.local_coords(dim, index));
}

Eigen::MatrixXd barycentric_gradients(const std::vector<Eigen::VectorXd>& points) {
  const int m = static_cast<int>(points.size()) - 1;
  const int d = static_cast<int>(points[0].size());
  Eigen::MatrixXd E(d, m);
  for (int i = 1; i <= m; ++i) E.col(i - 1) = points[i] - points[0];
  // gradients of lambda_1..lambda_m are the rows of (E^T E)^{-1} E^T;
  // lambda_0 = 1 - sum of the others.
  const Eigen::MatrixXd gram = E.transpose() * E;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
  if (ldlt.info() != Eigen::Success)
    throw GeometryError("degenerate simplex: singular edge Gram matrix");
  const Eigen::MatrixXd grads = ldlt.solve(E.transpose());  // m x d
  Eigen::MatrixXd all(m + 1, d);
  all.row(0) = -grads.colwise().sum();
  all.bottomRows(m) = grads;
  return all;
}

MeshQualityReport mesh_quality(const GeometryResolver& res) {
  const SimplicialComplex& cx = res.complex();
  const int m = cx.top_dimension();
  if (cx.count(m) == 0) throw InvalidInput("empty complex");
  MeshQualityReport r;
  r.nu = std::numeric_limits<double>::infinity();
  for (int t = 0; t < cx.count(m); ++t) {
    const auto& pts = res.top_coords(t);
    r.nu = std::min(r.nu, simplex_volume(pts));
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j)
        r.K = std::max(r.K, (pts[i] - pts[j]).norm());
    const Eigen::MatrixXd grads = barycentric_gradients(pts);
    for (int i = 0; i <= m; ++i) r.c = std::max(r.c, grads.row(i).norm());
  }
  return r;
}

bool validate_g_bounded(const MeshQualityReport& report, double nu0, double K0, double c0) {
  return report.nu >= nu0 && report.K <= K0 && report.c <= c0;
}

}  // namespace hodgelab
