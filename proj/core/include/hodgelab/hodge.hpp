#ifndef HODGELAB_HODGE_HPP
#define HODGELAB_HODGE_HPP

#include <Eigen/Dense>
#include <memory>
#include <optional>
#include <vector>

#include "hodgelab/complex.hpp"
#include "hodgelab/whitney.hpp"

namespace hodgelab {

/// A real cochain in full indexing; relative cochains vanish on all
/// M1-indexed entries.
struct Cochain {
  int degree = 0;
  Eigen::VectorXd values;
};

struct HodgeDecomposition {
  Cochain harmonic;
  Cochain exact;    // in the image of d
  Cochain coexact;  // in the image of delta
  double residual = 0;  // relative reconstruction error
};

struct SpectralData {
  int degree = 0;
  Eigen::VectorXd eigenvalues;  // ascending
  double lambda1 = 0;           // smallest nonzero eigenvalue (0 when none)
  int harmonic_dim = 0;
  bool rank_tolerance_warning = false;  // eigenvalue close to the zero cutoff
};

/// Codifferential delta_{p+1} = G_p^{-1} d_p^T G_{p+1} for arbitrary
/// compatible matrices; the formal adjoint of d w.r.t. the Gram pair.
Eigen::MatrixXd codifferential(const Eigen::MatrixXd& d_p, const Eigen::MatrixXd& gram_p,
                               const Eigen::MatrixXd& gram_p1);

/// Discrete L2 Hodge machinery on the relative cochain spaces of one
/// (complex, labeling, metric) triple.  All matrix blocks are indexed by the
/// relative simplex lists (see relative_indices); Cochain arguments and
/// results use full indexing with zeros on M1.
///
/// The solver keeps references to its constructor arguments; they must
/// outlive it.
///
/// Everything is computed with dense symmetric eigensolves; complexes with
/// more than `dense_limit` simplices in some degree are rejected.
class HodgeSolver {
public:
  HodgeSolver(const SimplicialComplex& cx, const BoundaryLabeling& labels,
              const CochainMetric& metric, double rank_tol = 1e-9);
  ~HodgeSolver();
  HodgeSolver(HodgeSolver&&) noexcept;
  HodgeSolver& operator=(HodgeSolver&&) noexcept;

  const SimplicialComplex& complex() const { return *cx_; }
  const BoundaryLabeling& labels() const { return *labels_; }
  const CochainMetric& metric() const { return *metric_; }
  double rank_tolerance() const { return rank_tol_; }

  int top_dimension() const { return cx_->top_dimension(); }
  int reduced_dim(int p) const { return static_cast<int>(keep_[p].size()); }
  const std::vector<int>& keep(int p) const { return keep_[p]; }

  /// Relative coboundary d_p as a double matrix (reduced x reduced).
  const Eigen::MatrixXd& coboundary(int p) const;
  /// Relative Gram of degree p.
  const Eigen::MatrixXd& gram(int p) const;
  /// delta_p : C^p -> C^{p-1} on the relative spaces.
  Eigen::MatrixXd codifferential(int p) const;
  /// Laplacian Delta_p = delta_{p+1} d_p + d_{p-1} delta_p (reduced).
  Eigen::MatrixXd laplacian(int p) const;

  SpectralData spectrum(int p) const;
  /// G-orthonormal basis of ker Delta_p, reduced coordinates (columns).
  const Eigen::MatrixXd& harmonic_basis_reduced(int p) const;
  /// Same basis embedded into full cochains.
  std::vector<Cochain> harmonic_basis(int p) const;
  int betti(int p) const;
  std::vector<int> betti_table() const;

  HodgeDecomposition decompose(const Cochain& omega) const;
  Cochain heat_flow(const Cochain& omega, double t) const;
  /// G-orthogonal projection onto the harmonic space.
  Cochain harmonic_projection(const Cochain& omega) const;

  /// || e^{-t Delta} omega - P omega ||_G and || omega - P omega ||_G,
  /// evaluated in the spectral coordinates where the subtraction is exact.
  /// The black-box route through heat_flow() cancels catastrophically once
  /// e^{-lambda1 t} drops under the rounding floor; this is the same quantity
  /// in a stable form.
  struct HeatDecay {
    double distance = 0;
    double base = 0;
    double lambda1 = 0;
  };
  HeatDecay heat_decay(const Cochain& omega, double t) const;

  /// <a, b> in the relative degree-p Gram.
  double inner(int p, const Eigen::VectorXd& a_reduced, const Eigen::VectorXd& b_reduced) const;
  double norm(int p, const Eigen::VectorXd& a_reduced) const;

  Eigen::VectorXd reduce(const Cochain& omega) const;
  Cochain embed(int p, const Eigen::VectorXd& reduced) const;

  static constexpr int dense_limit = 5000;

private:
  struct DegreeCache;
  const DegreeCache& basic(int p) const;
  const DegreeCache& cache(int p) const;
  const SimplicialComplex* cx_;
  const BoundaryLabeling* labels_;
  const CochainMetric* metric_;
  double rank_tol_;
  std::vector<std::vector<int>> keep_;
  mutable std::vector<std::unique_ptr<DegreeCache>> cache_;
};

/// Restriction of the metric-B harmonic projection to the metric-A harmonic
/// space, in the coordinates of the two harmonic bases, together with its
/// companion inverse.  Both solvers must share complex and labeling.
struct MetricChangeProjection {
  Eigen::MatrixXd forward;   // coordinates: H_A -> H_B
  Eigen::MatrixXd backward;  // H_B -> H_A
  /// || backward * forward - I ||, max-norm; the composite must be the
  /// identity on the metric-A harmonic space.
  double composite_residual = 0;
};

MetricChangeProjection metric_change_projection(const HodgeSolver& a, const HodgeSolver& b, int p);

}  // namespace hodgelab

#endif
