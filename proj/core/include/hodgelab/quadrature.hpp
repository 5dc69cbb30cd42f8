#ifndef HODGELAB_QUADRATURE_HPP
#define HODGELAB_QUADRATURE_HPP

#include <Eigen/Dense>
#include <vector>

#include "hodgelab/errors.hpp"

namespace hodgelab {

/// Quadrature on the reference p-simplex in barycentric coordinates.  Weights
/// sum to the reference volume 1/p!; exactness on all polynomials of total
/// degree <= order is verified at construction.  Realized with Gauss-Legendre
/// points on segments and collapsed tensor rules on triangles, which are
/// exact well beyond the requested order.
struct QuadratureRule {
  int simplex_dim = 0;
  int order = 0;
  std::vector<Eigen::VectorXd> nodes;  // barycentric, length p+1
  std::vector<double> weights;

  static QuadratureRule make(int simplex_dim, int order);
};

/// Exact integral of the barycentric monomial prod lambda_i^{alpha_i} over
/// the reference simplex: alpha! p! / (|alpha| + p)! * vol(ref).
double barycentric_monomial_integral(const std::vector<int>& alpha);

}  // namespace hodgelab

#endif
