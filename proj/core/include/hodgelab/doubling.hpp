#ifndef HODGELAB_DOUBLING_HPP
#define HODGELAB_DOUBLING_HPP

#include <array>

#include "hodgelab/hodge.hpp"

namespace hodgelab {

/// Signed simplicial map action on cochains: simplex i of the domain maps to
/// simplex `image[i]` with orientation `sign[i]`.
struct SignedPermutation {
  std::vector<int> image;
  std::vector<int> sign;

  /// Pullback matrix on p-cochains: (T w)(s) = sign(s) * w(image(s)).
  Eigen::MatrixXd pullback_matrix() const;
};

/// Four copies of a complex glued along M1 (copies 0|1 and 2|3) and M2
/// (copies 0|2 and 1|3), with the commuting flip involutions tau1, tau2 and
/// the Gram transported through the copy maps so that the V4 action is
/// isometric.  When the labeling covers the whole boundary, W is closed.
struct QuadrupleComplex {
  SimplicialComplex W;
  std::vector<int> tau1_vertices;  // vertex permutation on W
  std::vector<int> tau2_vertices;
  std::vector<SignedPermutation> tau1;  // per degree, simplex action
  std::vector<SignedPermutation> tau2;
  /// copy_map[c][dim][idx] = (index in W, orientation sign) of simplex idx of
  /// the source complex under the c-th copy inclusion.
  std::array<std::vector<std::vector<std::pair<int, int>>>, 4> copy_map;
  CochainMetric metric;  // mirrored; identity when built without geometry
};

/// Builds the quadruple.  Requires M1 and M2 to jointly cover the manifold
/// boundary.  Rejects meshes where gluing would identify two distinct
/// simplices (a simplex outside M1 with all vertices in M1, or the M2
/// analogue): such inputs need refinement first.  With geometry, the metric
/// is the Whitney (or lumped) Gram of the source mesh transported through
/// the copy maps; without, the identity.
QuadrupleComplex double_complex(const SimplicialComplex& cx, const BoundaryLabeling& labels,
                                const GeometryResolver* res = nullptr,
                                MetricKind kind = MetricKind::whitney);

/// Simplex-level signed action of a vertex permutation, per degree.  Throws
/// when the permutation does not map the complex to itself.
std::vector<SignedPermutation> simplex_actions(const SimplicialComplex& cx,
                                               const std::vector<int>& vertex_perm);

/// P = 1/4 (1 + e1 tau1*)(1 + e2 tau2*) on p-cochains of W; e1, e2 in {+1,-1}.
Eigen::MatrixXd eigenspace_projector(const QuadrupleComplex& q, int e1, int e2, int p);

/// Dimension of (ker Delta_p on W) intersected with the (-,+) eigenspace of
/// the V4 action; equals the relative Betti number betti_p(cx, M1).
int minusplus_betti(const QuadrupleComplex& q, int p, double rank_tol = 1e-9);

/// Same computation for a doubled mesh reloaded from file: W plus the two
/// involution vertex tables and any metric on W.
int minusplus_betti(const SimplicialComplex& W, const CochainMetric& metric,
                    const std::vector<int>& tau1_vertices, const std::vector<int>& tau2_vertices,
                    int p, double rank_tol = 1e-9);

/// Pullback of a W-cochain to copy 0.  The input must lie in the (-,+)
/// eigenspace (within `tol` relative); the result vanishes on M1 simplices.
Cochain restrict_to_copy(const QuadrupleComplex& q, const SimplicialComplex& cx,
                         const BoundaryLabeling& labels, const Cochain& omega,
                         double tol = 1e-9);

}  // namespace hodgelab

#endif
