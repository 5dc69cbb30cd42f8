#include "hodgelab/curvature.hpp"

#include <algorithm>

#include "hodgelab/whitney.hpp"

namespace hodgelab {

Eigen::MatrixXd boundary_tensor(const Eigen::VectorXd& lambda, int p) {
  const int m = static_cast<int>(lambda.size()) + 1;
  if (p < 1 || p > m) throw InvalidInput("boundary_tensor needs 1 <= p <= m");
  const auto tangential = subsets_of(m - 1, p);
  const auto with_normal = subsets_of(m - 1, p - 1);
  const int n = static_cast<int>(tangential.size() + with_normal.size());
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(n, n);
  for (size_t a = 0; a < with_normal.size(); ++a) {
    double sum = 0;
    size_t cursor = 0;
    for (int r = 0; r < m - 1; ++r) {
      if (cursor < with_normal[a].size() && with_normal[a][cursor] == r) {
        ++cursor;
        continue;
      }
      sum += lambda(r);
    }
    const int idx = static_cast<int>(tangential.size() + a);
    S(idx, idx) = -sum;
  }
  return S;
}

bool s_p_nonpositive(const Eigen::VectorXd& lambda, int p) {
  const int m = static_cast<int>(lambda.size()) + 1;
  if (p < 1 || p > m) throw InvalidInput("s_p_nonpositive needs 1 <= p <= m");
  std::vector<double> sorted(lambda.data(), lambda.data() + lambda.size());
  std::sort(sorted.begin(), sorted.end());
  double sum = 0;
  for (int i = 0; i < m - p; ++i) sum += sorted[i];
  return sum >= 0;
}

BochnerVerdict bochner_screen(const std::vector<CurvatureSample>& samples, int p,
                              const BochnerOptions& options) {
  if (samples.empty()) throw InvalidInput("bochner_screen needs at least one sample");
  int m = 0;
  for (const auto& s : samples) {
    if (m == 0) m = s.manifold_dim;
    if (s.manifold_dim != m) throw InvalidInput("samples disagree on the manifold dimension");
    if (s.shape_eigenvalues && s.shape_eigenvalues->size() != m - 1)
      throw InvalidInput("boundary sample needs m-1 shape eigenvalues");
  }
  if (p < 1 || p > m) throw InvalidInput("bochner_screen needs 1 <= p <= m");

  BochnerVerdict v;
  v.degree = p;
  v.absolute = options.absolute_variant;
  if (!options.infinite_volume) v.failed_preconditions.push_back("infinite volume not asserted");

  // Interior condition: an explicit attestation always suffices; at p = 1 the
  // Ricci samples decide on their own since the interior term is minus Ricci.
  bool interior_ok = options.interior_term_nonpositive_attested;
  if (!interior_ok && p == 1) {
    bool any_interior = false;
    bool ricci_ok = true;
    for (const auto& s : samples)
      if (s.ricci_lower) {
        any_interior = true;
        if (*s.ricci_lower < 0) ricci_ok = false;
      }
    if (!any_interior)
      v.failed_preconditions.push_back("no interior Ricci samples");
    else if (!ricci_ok)
      v.failed_preconditions.push_back("Ricci lower bound negative at an interior sample");
    else
      interior_ok = true;
  } else if (!interior_ok) {
    v.failed_preconditions.push_back(
        "interior Weitzenboeck term not attested nonpositive for degree " + std::to_string(p));
  }

  const int boundary_degree = options.absolute_variant ? m - p : p;
  if (boundary_degree >= 1) {
    for (size_t i = 0; i < samples.size(); ++i) {
      if (!samples[i].shape_eigenvalues) continue;
      if (!s_p_nonpositive(*samples[i].shape_eigenvalues, boundary_degree)) {
        v.failed_preconditions.push_back("S_" + std::to_string(boundary_degree) +
                                         " criterion fails at boundary sample " +
                                         std::to_string(i));
        break;
      }
    }
  }
  v.conclusion = v.failed_preconditions.empty() ? BochnerVerdict::Conclusion::vanishes
                                                : BochnerVerdict::Conclusion::no_conclusion;
  return v;
}

double weitzenboeck_flat_residual(const GeometryResolver& res, const BoundaryLabeling& labels,
                                  const FlatFormSamplers& samplers, int order) {
  const SimplicialComplex& cx = res.complex();
  if (cx.top_dimension() != 2 || res.ambient_dim() != 2)
    throw InvalidInput("weitzenboeck_flat_residual expects a flat planar mesh");

  // Relative boundary trace spot check: the tangential component of omega
  // must vanish at the quadrature nodes of every M1 edge.
  const QuadratureRule edge_rule = QuadratureRule::make(1, order);
  for (int e = 0; e < cx.count(1); ++e) {
    if (!labels.m1.contains(1, e)) continue;
    const auto pts = res.local_coords(1, e);
    const Eigen::VectorXd tangent = (pts[1] - pts[0]).normalized();
    for (size_t k = 0; k < edge_rule.nodes.size(); ++k) {
      const Eigen::VectorXd x = edge_rule.nodes[k](0) * pts[0] + edge_rule.nodes[k](1) * pts[1];
      if (std::abs(samplers.omega(x).dot(tangent)) > 1e-10)
        throw InvalidInput("boundary trace spot check failed: omega has a tangential component "
                           "on a relative boundary edge");
    }
  }

  const QuadratureRule rule = QuadratureRule::make(2, order);
  double grad2 = 0, d2 = 0, delta2 = 0;
  for (int t = 0; t < cx.count(2); ++t) {
    const auto& pts = res.top_coords(t);
    Eigen::MatrixXd T(2, 2);
    T.col(0) = pts[1] - pts[0];
    T.col(1) = pts[2] - pts[0];
    const double jac = std::abs(T.determinant());
    for (size_t k = 0; k < rule.nodes.size(); ++k) {
      Eigen::VectorXd x = Eigen::VectorXd::Zero(2);
      for (int v = 0; v < 3; ++v) x += rule.nodes[k](v) * pts[v];
      const double w = rule.weights[k] * jac;  // weights carry the reference measure
      grad2 += w * samplers.gradient(x).squaredNorm();
      const double dv = samplers.d(x);
      d2 += w * dv * dv;
      const double del = samplers.delta(x);
      delta2 += w * del * del;
    }
  }
  if (grad2 == 0) return 0;
  return std::abs(grad2 - d2 - delta2) / grad2;
}

}  // namespace hodgelab
