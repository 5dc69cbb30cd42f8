#include "hodgelab/derham.hpp"

#include <Eigen/SVD>

namespace hodgelab {

namespace {

// Minors of the tangent matrix for each lexicographic p-subset of the
// ambient axes: the constant pullback factors of the affine parameterization.
Eigen::VectorXd tangent_minors(const std::vector<Eigen::VectorXd>& pts, int p,
                               const std::vector<std::vector<int>>& combos) {
  const int d = static_cast<int>(pts[0].size());
  Eigen::MatrixXd T(d, p);
  for (int j = 1; j <= p; ++j) T.col(j - 1) = pts[j] - pts[0];
  Eigen::VectorXd minors(combos.size());
  for (size_t c = 0; c < combos.size(); ++c) {
    Eigen::MatrixXd sub(p, p);
    for (int r = 0; r < p; ++r) sub.row(r) = T.row(combos[c][r]);
    minors(c) = p == 0 ? 1.0 : sub.determinant();
  }
  return minors;
}

}  // namespace

Cochain derham_map(const GeometryResolver& res, const AnalyticForm& form, int order) {
  const SimplicialComplex& cx = res.complex();
  const int p = form.degree;
  if (p < 0 || p > cx.top_dimension())
    throw InvalidInput("form degree exceeds the top dimension");
  if (form.ambient_dim != res.ambient_dim())
    throw InvalidInput("form ambient dimension does not match the geometry");
  Cochain out;
  out.degree = p;
  out.values.resize(cx.count(p));
  if (p == 0) {
    for (int i = 0; i < cx.count(p); ++i) {
      const auto pts = res.local_coords(0, i);
      out.values(i) = form.components(pts[0])(0);
    }
    return out;
  }
  const QuadratureRule rule = QuadratureRule::make(p, order);
  const auto combos = subsets_of(form.ambient_dim, p);
  for (int i = 0; i < cx.count(p); ++i) {
    const auto pts = res.local_coords(p, i);
    simplex_volume(pts);  // reject degenerate simplices
    const Eigen::VectorXd minors = tangent_minors(pts, p, combos);
    // pullback density through the affine parameterization; the weights carry
    // the reference measure, so the sum is the simplex integral itself
    double sum = 0;
    for (size_t k = 0; k < rule.nodes.size(); ++k) {
      Eigen::VectorXd x = Eigen::VectorXd::Zero(form.ambient_dim);
      for (int v = 0; v <= p; ++v) x += rule.nodes[k](v) * pts[v];
      sum += rule.weights[k] * form.components(x).dot(minors);
    }
    out.values(i) = sum;
  }
  return out;
}

double stokes_residual(const GeometryResolver& res, const CochainMetric& metric,
                       const AnalyticForm& form, int order) {
  const int p = form.degree;
  const SimplicialComplex& cx = res.complex();
  if (p >= cx.top_dimension())
    throw InvalidInput("stokes_residual needs degree below the top dimension");
  const Cochain a_domega = derham_map(res, form.d(), order);
  const Cochain a_omega = derham_map(res, form, order);
  const Eigen::MatrixXd d = cx.coboundary(p).cast<double>();
  const Eigen::VectorXd diff = a_domega.values - d * a_omega.values;
  return std::sqrt(std::max(0.0, diff.dot(metric[p + 1] * diff)));
}

PairingResult harmonic_pairing(const HodgeSolver& solver, const GeometryResolver& res,
                               const std::vector<AnalyticForm>& forms, int p, int order) {
  const auto basis = solver.harmonic_basis(p);
  PairingResult out;
  out.matrix.resize(forms.size(), basis.size());
  for (size_t j = 0; j < forms.size(); ++j) {
    if (forms[j].degree != p) throw InvalidInput("pairing form of wrong degree");
    const Cochain a = derham_map(res, forms[j], order);
    const Eigen::VectorXd a_red = [&] {
      Eigen::VectorXd r(solver.reduced_dim(p));
      for (int i = 0; i < solver.reduced_dim(p); ++i) r(i) = a.values(solver.keep(p)[i]);
      return r;
    }();
    for (size_t k = 0; k < basis.size(); ++k)
      out.matrix(j, k) = solver.inner(p, a_red, solver.reduce(basis[k]));
  }
  if (out.matrix.size() > 0) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(out.matrix);
    out.singular_values = svd.singularValues();
    const double smax = out.singular_values.size() ? out.singular_values(0) : 0.0;
    for (int i = 0; i < out.singular_values.size(); ++i)
      if (smax > 0 && out.singular_values(i) > solver.rank_tolerance() * smax) ++out.rank;
  }
  return out;
}

double class_invariance(const HodgeSolver& a, const HodgeSolver& b, int p) {
  const auto basis_a = a.harmonic_basis(p);
  double worst = 0;
  for (const Cochain& h1 : basis_a) {
    const Cochain h2 = b.harmonic_projection(h1);
    Cochain diff;
    diff.degree = p;
    diff.values = h1.values - h2.values;
    const HodgeDecomposition dec = b.decompose(diff);
    const Eigen::VectorXd harm = b.reduce(dec.harmonic);
    const Eigen::VectorXd coex = b.reduce(dec.coexact);
    const double scale = b.norm(p, b.reduce(h1));
    const double bad = b.norm(p, harm) + b.norm(p, coex);
    worst = std::max(worst, scale > 0 ? bad / scale : bad);
  }
  return worst;
}

}  // namespace hodgelab
