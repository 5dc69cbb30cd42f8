#include "hodgelab/hodge.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace hodgelab {

Eigen::MatrixXd codifferential(const Eigen::MatrixXd& d_p, const Eigen::MatrixXd& gram_p,
                               const Eigen::MatrixXd& gram_p1) {
  if (d_p.cols() != gram_p.rows() || d_p.rows() != gram_p1.rows())
    throw InvalidInput("codifferential: incompatible shapes");
  Eigen::LLT<Eigen::MatrixXd> llt(gram_p);
  if (llt.info() != Eigen::Success) throw NumericalError("codifferential: Gram is not SPD");
  return llt.solve(d_p.transpose() * gram_p1);
}

// Stage one: per-degree reduced operators, no cross-degree dependencies.
// Stage two: symmetrized Laplacian eigendecomposition, touching only the
// stage-one data of the neighboring degrees.
struct HodgeSolver::DegreeCache {
  // stage one
  Eigen::MatrixXd d;  // reduced coboundary p -> p+1
  Eigen::MatrixXd G;  // reduced Gram
  Eigen::MatrixXd L;  // Cholesky factor, G = L L^T
  // stage two
  bool spectral_ready = false;
  Eigen::VectorXd evals;     // ascending
  Eigen::MatrixXd evecs;     // of L^T Delta L^{-T}
  Eigen::MatrixXd harmonic;  // G-orthonormal kernel basis, reduced coordinates
  double zero_threshold = 0;
  double lambda1 = 0;
  bool warning = false;
};

HodgeSolver::~HodgeSolver() = default;
HodgeSolver::HodgeSolver(HodgeSolver&&) noexcept = default;
HodgeSolver& HodgeSolver::operator=(HodgeSolver&&) noexcept = default;

HodgeSolver::HodgeSolver(const SimplicialComplex& cx, const BoundaryLabeling& labels,
                         const CochainMetric& metric, double rank_tol)
    : cx_(&cx), labels_(&labels), metric_(&metric), rank_tol_(rank_tol) {
  validate_labeling(cx, labels);
  if (metric.degrees() != cx.top_dimension() + 1)
    throw InvalidInput("metric does not cover all degrees");
  if (rank_tol <= 0) throw InvalidInput("rank tolerance must be positive");
  keep_.resize(cx.top_dimension() + 1);
  for (int p = 0; p <= cx.top_dimension(); ++p) {
    keep_[p] = relative_indices(cx, labels, p);
    if (static_cast<int>(keep_[p].size()) > dense_limit)
      throw InvalidInput("complex exceeds the dense solver limit of " +
                         std::to_string(dense_limit) + " simplices per degree");
  }
  cache_.resize(cx.top_dimension() + 1);
}

const HodgeSolver::DegreeCache& HodgeSolver::basic(int p) const {
  if (p < 0 || p > top_dimension()) throw InvalidInput("degree out of range");
  if (cache_[p]) return *cache_[p];
  auto c = std::make_unique<DegreeCache>();
  const int n = reduced_dim(p);
  c->G.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c->G(i, j) = (*metric_)[p](keep_[p][i], keep_[p][j]);
  Eigen::LLT<Eigen::MatrixXd> llt(c->G);
  if (n > 0 && llt.info() != Eigen::Success)
    throw NumericalError("relative Gram of degree " + std::to_string(p) + " is not SPD");
  c->L = llt.matrixL();
  if (p < top_dimension()) {
    c->d = relative_coboundary(*cx_, *labels_, p).cast<double>();
  } else {
    c->d.resize(0, n);
  }
  cache_[p] = std::move(c);
  return *cache_[p];
}

const HodgeSolver::DegreeCache& HodgeSolver::cache(int p) const {
  DegreeCache& c = const_cast<DegreeCache&>(basic(p));
  if (c.spectral_ready) return c;
  const int n = reduced_dim(p);

  // sym = A^T A + B^T B with A = L_{p+1}^T d_p L_p^{-T} and
  // B = L_{p-1}^{-1} d_{p-1}^T L_p: similar to Delta_p, exactly symmetric PSD.
  Eigen::MatrixXd sym = Eigen::MatrixXd::Zero(n, n);
  const Eigen::MatrixXd Linv_t =
      c.L.triangularView<Eigen::Lower>().transpose().solve(Eigen::MatrixXd::Identity(n, n));
  if (p < top_dimension() && c.d.rows() > 0) {
    const DegreeCache& up = basic(p + 1);
    const Eigen::MatrixXd A = up.L.transpose() * c.d * Linv_t;
    sym += A.transpose() * A;
  }
  if (p > 0) {
    const DegreeCache& down = basic(p - 1);
    if (down.d.rows() > 0 && down.d.cols() > 0) {
      const Eigen::MatrixXd B =
          down.L.triangularView<Eigen::Lower>().solve(down.d.transpose() * c.L);
      sym += B.transpose() * B;
    }
  }

  if (n > 0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
    if (es.info() != Eigen::Success) throw NumericalError("eigensolver failed");
    c.evals = es.eigenvalues();
    c.evecs = es.eigenvectors();
    const double lmax = c.evals(n - 1);
    c.zero_threshold = rank_tol_ * (lmax > 0 ? lmax : 1.0);
    int kdim = 0;
    while (kdim < n && c.evals(kdim) < c.zero_threshold) ++kdim;
    for (int i = 0; i < n; ++i) {
      const double ratio = c.evals(i) / c.zero_threshold;
      if (ratio > 0.01 && ratio < 100) c.warning = true;
    }
    c.harmonic = Linv_t * c.evecs.leftCols(kdim);
    c.lambda1 = (kdim < n) ? c.evals(kdim) : 0.0;
  }
  c.spectral_ready = true;
  return c;
}

const Eigen::MatrixXd& HodgeSolver::coboundary(int p) const { return basic(p).d; }
const Eigen::MatrixXd& HodgeSolver::gram(int p) const { return basic(p).G; }

Eigen::MatrixXd HodgeSolver::codifferential(int p) const {
  if (p <= 0) return Eigen::MatrixXd::Zero(0, reduced_dim(p));
  return hodgelab::codifferential(basic(p - 1).d, basic(p - 1).G, basic(p).G);
}

Eigen::MatrixXd HodgeSolver::laplacian(int p) const {
  const int n = reduced_dim(p);
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  if (p < top_dimension()) {
    const Eigen::MatrixXd up_delta =
        hodgelab::codifferential(basic(p).d, basic(p).G, basic(p + 1).G);
    lap += up_delta * basic(p).d;
  }
  if (p > 0) lap += basic(p - 1).d * codifferential(p);
  return lap;
}

SpectralData HodgeSolver::spectrum(int p) const {
  const DegreeCache& c = cache(p);
  SpectralData s;
  s.degree = p;
  s.eigenvalues = c.evals;
  s.lambda1 = c.lambda1;
  s.harmonic_dim = static_cast<int>(c.harmonic.cols());
  s.rank_tolerance_warning = c.warning;
  return s;
}

const Eigen::MatrixXd& HodgeSolver::harmonic_basis_reduced(int p) const {
  return cache(p).harmonic;
}

std::vector<Cochain> HodgeSolver::harmonic_basis(int p) const {
  const Eigen::MatrixXd& h = cache(p).harmonic;
  std::vector<Cochain> out;
  for (int k = 0; k < h.cols(); ++k) out.push_back(embed(p, h.col(k)));
  return out;
}

int HodgeSolver::betti(int p) const { return static_cast<int>(cache(p).harmonic.cols()); }

std::vector<int> HodgeSolver::betti_table() const {
  std::vector<int> b;
  for (int p = 0; p <= top_dimension(); ++p) b.push_back(betti(p));
  return b;
}

Eigen::VectorXd HodgeSolver::reduce(const Cochain& omega) const {
  const int p = omega.degree;
  if (p < 0 || p > top_dimension()) throw InvalidInput("cochain degree out of range");
  if (omega.values.size() != cx_->count(p))
    throw InvalidInput("cochain length does not match the number of p-simplices");
  const double scale = omega.values.size() ? omega.values.cwiseAbs().maxCoeff() : 0.0;
  for (int i = 0; i < cx_->count(p); ++i)
    if (labels_->in_m1(p, i) && std::abs(omega.values(i)) > 1e-12 * scale)
      throw InvalidInput("cochain is not relative: nonzero entry on an M1 simplex");
  Eigen::VectorXd x(reduced_dim(p));
  for (int i = 0; i < reduced_dim(p); ++i) x(i) = omega.values(keep_[p][i]);
  return x;
}

Cochain HodgeSolver::embed(int p, const Eigen::VectorXd& reduced) const {
  Cochain c;
  c.degree = p;
  c.values = Eigen::VectorXd::Zero(cx_->count(p));
  for (int i = 0; i < reduced_dim(p); ++i) c.values(keep_[p][i]) = reduced(i);
  return c;
}

double HodgeSolver::inner(int p, const Eigen::VectorXd& a, const Eigen::VectorXd& b) const {
  return a.dot(basic(p).G * b);
}

double HodgeSolver::norm(int p, const Eigen::VectorXd& a) const {
  return std::sqrt(std::max(0.0, inner(p, a, a)));
}

namespace {

// Orthogonal projection of `rhs` onto the column space of `span`, through the
// thin Q factor of a rank-revealing QR.  The spans here (images of d and
// delta) are rank-deficient, so a plain least-squares solve is not enough.
Eigen::VectorXd project_onto_span(const Eigen::MatrixXd& span, const Eigen::VectorXd& rhs,
                                  double threshold) {
  if (span.size() == 0) return Eigen::VectorXd::Zero(rhs.size());
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(span);
  qr.setThreshold(threshold);
  const int r = static_cast<int>(qr.rank());
  if (r == 0) return Eigen::VectorXd::Zero(rhs.size());
  const Eigen::MatrixXd q =
      qr.householderQ() * Eigen::MatrixXd::Identity(span.rows(), r);
  return q * (q.transpose() * rhs);
}

}  // namespace

HodgeDecomposition HodgeSolver::decompose(const Cochain& omega) const {
  const int p = omega.degree;
  const DegreeCache& c = cache(p);
  const Eigen::VectorXd x = reduce(omega);
  const int n = reduced_dim(p);
  const Eigen::VectorXd white_x = c.L.transpose() * x;

  Eigen::VectorXd h = Eigen::VectorXd::Zero(n);
  if (c.harmonic.cols() > 0) h = c.harmonic * (c.harmonic.transpose() * (c.G * x));

  // Exact part: G-orthogonal projection onto im d_{p-1}, in Cholesky-whitened
  // coordinates where the G-projection is the Euclidean one.
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
  if (p > 0 && basic(p - 1).d.size() > 0) {
    const Eigen::VectorXd white_e =
        project_onto_span(c.L.transpose() * basic(p - 1).d, white_x, rank_tol_);
    e = c.L.triangularView<Eigen::Lower>().transpose().solve(white_e);
  }

  // Coexact part: im delta_{p+1} = G^{-1} d_p^T G' whitens to L^{-1} d_p^T G'.
  Eigen::VectorXd co = Eigen::VectorXd::Zero(n);
  if (p < top_dimension() && c.d.size() > 0) {
    const Eigen::MatrixXd span =
        c.L.triangularView<Eigen::Lower>().solve(c.d.transpose() * basic(p + 1).G);
    const Eigen::VectorXd white_co = project_onto_span(span, white_x, rank_tol_);
    co = c.L.triangularView<Eigen::Lower>().transpose().solve(white_co);
  }

  HodgeDecomposition out;
  out.harmonic = embed(p, h);
  out.exact = embed(p, e);
  out.coexact = embed(p, co);
  const double nx = norm(p, x);
  out.residual = nx > 0 ? norm(p, x - h - e - co) / nx : 0.0;
  return out;
}

Cochain HodgeSolver::heat_flow(const Cochain& omega, double t) const {
  if (t < 0) throw InvalidInput("heat flow requires t >= 0");
  const int p = omega.degree;
  const DegreeCache& c = cache(p);
  const Eigen::VectorXd x = reduce(omega);
  // e^{-t Delta} = L^{-T} U e^{-t Lambda} U^T L^T.
  const Eigen::VectorXd y = c.evecs.transpose() * (c.L.transpose() * x);
  const Eigen::VectorXd damped = (-t * c.evals.array()).exp() * y.array();
  const Eigen::VectorXd result =
      c.L.triangularView<Eigen::Lower>().transpose().solve(c.evecs * damped);
  return embed(p, result);
}

HodgeSolver::HeatDecay HodgeSolver::heat_decay(const Cochain& omega, double t) const {
  if (t < 0) throw InvalidInput("heat flow requires t >= 0");
  const int p = omega.degree;
  const DegreeCache& c = cache(p);
  const Eigen::VectorXd y = c.evecs.transpose() * (c.L.transpose() * reduce(omega));
  const int kdim = static_cast<int>(c.harmonic.cols());
  HeatDecay out;
  out.lambda1 = c.lambda1;
  double dist2 = 0, base2 = 0;
  for (int i = kdim; i < y.size(); ++i) {
    const double damped = std::exp(-t * c.evals(i)) * y(i);
    dist2 += damped * damped;
    base2 += y(i) * y(i);
  }
  out.distance = std::sqrt(dist2);
  out.base = std::sqrt(base2);
  return out;
}

Cochain HodgeSolver::harmonic_projection(const Cochain& omega) const {
  const int p = omega.degree;
  const DegreeCache& c = cache(p);
  const Eigen::VectorXd x = reduce(omega);
  Eigen::VectorXd h = Eigen::VectorXd::Zero(reduced_dim(p));
  if (c.harmonic.cols() > 0) h = c.harmonic * (c.harmonic.transpose() * (c.G * x));
  return embed(p, h);
}

MetricChangeProjection metric_change_projection(const HodgeSolver& a, const HodgeSolver& b,
                                                int p) {
  if (&a.complex() != &b.complex() || &a.labels() != &b.labels())
    throw InvalidInput("metric_change_projection: solvers must share complex and labeling");
  const Eigen::MatrixXd& ha = a.harmonic_basis_reduced(p);
  const Eigen::MatrixXd& hb = b.harmonic_basis_reduced(p);
  if (ha.cols() != hb.cols())
    throw NumericalError("harmonic dimensions differ between metrics (" +
                         std::to_string(ha.cols()) + " vs " + std::to_string(hb.cols()) +
                         "): rank-tolerance failure");
  MetricChangeProjection out;
  // pr_b(h) = H_b H_b^T G_b h for G_b-orthonormal H_b; in basis coordinates
  // the map H_a -> H_b is H_b^T G_b H_a.
  out.forward = hb.transpose() * b.gram(p) * ha;
  out.backward = ha.transpose() * a.gram(p) * hb;
  const int k = static_cast<int>(ha.cols());
  out.composite_residual =
      k ? (out.backward * out.forward - Eigen::MatrixXd::Identity(k, k)).cwiseAbs().maxCoeff()
        : 0.0;
  return out;
}

}  // namespace hodgelab
