#ifndef HODGELAB_WHITNEY_HPP
#define HODGELAB_WHITNEY_HPP

#include <Eigen/Dense>
#include <vector>

#include "hodgelab/geometry.hpp"

namespace hodgelab {

enum class MetricKind { whitney, lumped, identity };

/// Per-degree symmetric positive definite Gram matrices: the discrete L2
/// inner product on cochains.
struct CochainMetric {
  MetricKind kind = MetricKind::identity;
  std::vector<Eigen::MatrixXd> gram;  // gram[p] is count(p) x count(p)

  const Eigen::MatrixXd& operator[](int p) const { return gram[p]; }
  int degrees() const { return static_cast<int>(gram.size()); }
};

/// Local L2 inner products of the lowest-order Whitney p-forms of one affine
/// top simplex: entry (a, b) pairs the a-th and b-th (p+1)-subsets of the
/// vertex slots, subsets enumerated in lexicographic order.
Eigen::MatrixXd whitney_local_gram(const std::vector<Eigen::VectorXd>& points, int p);

/// The (p+1)-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_of(int n, int k);

/// Global Whitney Gram matrix for degree p: entry (sigma, tau) integrates
/// <W_sigma, W_tau> over the mesh.  SPD; sparsity limited to simplices
/// sharing a top simplex.
Eigen::MatrixXd whitney_gram(const GeometryResolver& res, int p);

/// Diagonal alternative: entry(sigma) = |dual cell of sigma| / |sigma|, with
/// barycentric dual volumes.
Eigen::MatrixXd lumped_gram(const GeometryResolver& res, int p);

/// Barycentric dual volume contributed by one top simplex to each of its
/// p-faces, faces enumerated as the lexicographic (p+1)-subsets of the slots.
std::vector<double> dual_volumes_local(const std::vector<Eigen::VectorXd>& points, int p);

/// All degrees 0..m of the chosen kind; verifies positive definiteness of
/// every degree (throws NumericalError otherwise).  `identity` needs no
/// geometry and is used for purely combinatorial meshes.
CochainMetric build_metric(const SimplicialComplex& cx, const GeometryResolver* res,
                           MetricKind kind);

/// Smallest eigenvalue of the degree-p Gram (SPD check support).
double smallest_gram_eigenvalue(const CochainMetric& metric, int p);

}  // namespace hodgelab

#endif
