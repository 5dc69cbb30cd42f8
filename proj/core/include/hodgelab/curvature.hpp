#ifndef HODGELAB_CURVATURE_HPP
#define HODGELAB_CURVATURE_HPP

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "hodgelab/geometry.hpp"
#include "hodgelab/quadrature.hpp"

namespace hodgelab {

/// Pointwise curvature data: eigenvalues of the second fundamental form at a
/// boundary point (with respect to the inward unit normal, units 1/length),
/// or a Ricci lower bound at an interior point (1/length^2).
struct CurvatureSample {
  int manifold_dim = 0;
  std::optional<Eigen::VectorXd> shape_eigenvalues;  // length m-1, boundary sample
  std::optional<double> ricci_lower;                 // interior sample
};

/// The boundary Weitzenboeck tensor S_p in the eigenbasis of the second
/// fundamental form: zero on tangential components; each component containing
/// the normal carries the diagonal value -(sum of the shape eigenvalues
/// outside its tangential index set).  Basis order: the p-subsets of the
/// tangential directions first, then the normal-containing ones.
Eigen::MatrixXd boundary_tensor(const Eigen::VectorXd& shape_eigenvalues, int p);

/// True iff the sum of the m-p smallest shape eigenvalues is >= 0; equivalent
/// to boundary_tensor being negative semidefinite.
bool s_p_nonpositive(const Eigen::VectorXd& shape_eigenvalues, int p);

struct BochnerVerdict {
  enum class Conclusion { vanishes, no_conclusion };
  Conclusion conclusion = Conclusion::no_conclusion;
  int degree = 0;
  bool absolute = false;  // criterion applied to S_{m-p} for the absolute space
  std::vector<std::string> failed_preconditions;
};

struct BochnerOptions {
  bool infinite_volume = false;
  bool absolute_variant = false;
  /// Attestation that the interior Weitzenboeck term is <= 0 for this degree;
  /// required for p >= 2 where the Ricci bound alone does not decide.
  bool interior_term_nonpositive_attested = false;
};

/// Vanishing screen for the degree-p harmonic space with the everywhere
/// conditions: infinite volume, nonpositive interior Weitzenboeck term
/// (Ricci >= 0 suffices at p = 1), and S_p <= 0 at every boundary sample
/// (S_{m-p} for the absolute variant).  Never concludes past a failed
/// precondition.
BochnerVerdict bochner_screen(const std::vector<CurvatureSample>& samples, int p,
                              const BochnerOptions& options);

/// Samplers of a smooth 1-form on a flat planar domain: the form itself, its
/// full derivative matrix (entry (i,j) = d_i omega_j), the exterior
/// derivative, and the codifferential.
struct FlatFormSamplers {
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> omega;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> gradient;
  std::function<double(const Eigen::VectorXd&)> d;      // coefficient of dx^dy
  std::function<double(const Eigen::VectorXd&)> delta;
};

/// | ||grad omega||^2 - ||d omega||^2 - ||delta omega||^2 | / ||grad omega||^2
/// by quadrature over a flat 2-dimensional mesh.  On flat domains with
/// straight boundary the three terms balance exactly for forms whose
/// tangential trace vanishes on the relative boundary; the trace is
/// spot-checked at the boundary quadrature nodes and a violation throws.
double weitzenboeck_flat_residual(const GeometryResolver& res, const BoundaryLabeling& labels,
                                  const FlatFormSamplers& samplers, int order);

}  // namespace hodgelab

#endif
