#ifndef HODGELAB_DERHAM_HPP
#define HODGELAB_DERHAM_HPP

#include "hodgelab/forms.hpp"
#include "hodgelab/hodge.hpp"
#include "hodgelab/quadrature.hpp"

namespace hodgelab {

/// Integration of a p-form over every p-simplex: the discrete shadow of the
/// smooth form.  Exact when the coefficients are polynomials of total degree
/// <= order - degree.
Cochain derham_map(const GeometryResolver& res, const AnalyticForm& form, int order);

/// || A(d omega) - d(A omega) ||_G in the degree p+1 Gram of `metric`;
/// zero up to quadrature accuracy.  The form needs a derivative sampler.
double stokes_residual(const GeometryResolver& res, const CochainMetric& metric,
                       const AnalyticForm& form, int order);

struct PairingResult {
  Eigen::MatrixXd matrix;          // forms x harmonic basis
  Eigen::VectorXd singular_values;  // descending
  int rank = 0;
};

/// Pairing <A(omega_j), h_k>_G of closed forms against the harmonic basis of
/// degree p.  Full rank certifies that the integrated forms span the
/// cohomology seen by the mesh.
PairingResult harmonic_pairing(const HodgeSolver& solver, const GeometryResolver& res,
                               const std::vector<AnalyticForm>& forms, int p, int order);

/// For each metric-A harmonic representative, checks that its metric-B
/// harmonic projection differs from it by an exact cochain: the metric-B
/// harmonic and coexact parts of the difference must vanish.  Returns the
/// largest relative residual.
double class_invariance(const HodgeSolver& a, const HodgeSolver& b, int p);

}  // namespace hodgelab

#endif
