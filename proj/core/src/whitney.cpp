#include "hodgelab/whitney.hpp"

#include <Eigen/Eigenvalues>

namespace hodgelab {

std::vector<std::vector<int>> subsets_of(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

// det of the p x p matrix of gradient inner products <g_A[r], g_B[s]>.
double gradient_wedge_det(const Eigen::MatrixXd& gg, const std::vector<int>& A,
                          const std::vector<int>& B) {
  const int p = static_cast<int>(A.size());
  if (p == 0) return 1.0;
  Eigen::MatrixXd M(p, p);
  for (int r = 0; r < p; ++r)
    for (int s = 0; s < p; ++s) M(r, s) = gg(A[r], B[s]);
  return M.determinant();
}

}  // namespace

Eigen::MatrixXd whitney_local_gram(const std::vector<Eigen::VectorXd>& points, int p) {
  const int m = static_cast<int>(points.size()) - 1;
  const double vol = simplex_volume(points);
  const auto subs = subsets_of(m + 1, p + 1);
  const int n = static_cast<int>(subs.size());
  Eigen::MatrixXd L(n, n);
  if (p == 0) {
    // <phi_i, phi_j> = vol * (1 + delta_ij) / ((m+1)(m+2))
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j <= m; ++j) L(i, j) = vol * (i == j ? 2.0 : 1.0) / ((m + 1) * (m + 2));
    return L;
  }
  const Eigen::MatrixXd grads = barycentric_gradients(points);
  const Eigen::MatrixXd gg = grads * grads.transpose();  // (m+1)x(m+1) gradient inner products
  double pfact = 1;
  for (int i = 2; i <= p; ++i) pfact *= i;
  const double scale = pfact * pfact;
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      const auto& S = subs[a];
      const auto& T = subs[b];
      double sum = 0;
      std::vector<int> Sdrop(p), Tdrop(p);
      for (int i = 0; i <= p; ++i) {
        for (int k = 0, w = 0; k <= p; ++k)
          if (k != i) Sdrop[w++] = S[k];
        for (int j = 0; j <= p; ++j) {
          for (int k = 0, w = 0; k <= p; ++k)
            if (k != j) Tdrop[w++] = T[k];
          const double phiphi = vol * (S[i] == T[j] ? 2.0 : 1.0) / ((m + 1) * (m + 2));
          const double sgn = ((i + j) % 2 == 0) ? 1.0 : -1.0;
          sum += sgn * phiphi * gradient_wedge_det(gg, Sdrop, Tdrop);
        }
      }
      L(a, b) = scale * sum;
      L(b, a) = L(a, b);
    }
  }
  return L;
}

Eigen::MatrixXd whitney_gram(const GeometryResolver& res, int p) {
  const SimplicialComplex& cx = res.complex();
  const int m = cx.top_dimension();
  if (p < 0 || p > m) throw InvalidInput("whitney_gram degree out of range");
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(cx.count(p), cx.count(p));
  const auto subs = subsets_of(m + 1, p + 1);
  for (int t = 0; t < cx.count(m); ++t) {
    const auto& pts = res.top_coords(t);
    const auto& tverts = cx.simplex(m, t).vertices;
    const Eigen::MatrixXd L = whitney_local_gram(pts, p);
    std::vector<int> global(subs.size());
    for (size_t a = 0; a < subs.size(); ++a) {
      std::vector<int> verts(p + 1);
      for (int k = 0; k <= p; ++k) verts[k] = tverts[subs[a][k]];
      global[a] = cx.index_of(p, verts);
    }
    for (size_t a = 0; a < subs.size(); ++a)
      for (size_t b = 0; b < subs.size(); ++b) G(global[a], global[b]) += L(a, b);
  }
  return G;
}

namespace {

Eigen::VectorXd barycenter(const std::vector<Eigen::VectorXd>& pts, const std::vector<int>& slots) {
  Eigen::VectorXd b = Eigen::VectorXd::Zero(pts[0].size());
  for (int s : slots) b += pts[s];
  return b / static_cast<double>(slots.size());
}

// Volume of the barycentric dual cell of the face with the given slots,
// inside one top simplex: sum over ascending slot-set chains up to the full
// simplex of the volume spanned by the chain barycenters.
double dual_volume_in_top(const std::vector<Eigen::VectorXd>& pts, std::vector<std::vector<int>>& chain,
                          const std::vector<int>& current) {
  const int m = static_cast<int>(pts.size()) - 1;
  chain.push_back(current);
  double total = 0;
  if (static_cast<int>(current.size()) == m + 1) {
    std::vector<Eigen::VectorXd> corners;
    for (const auto& s : chain) corners.push_back(barycenter(pts, s));
    const int k = static_cast<int>(corners.size()) - 1;
    if (k == 0) {
      total = 1.0;
    } else {
      Eigen::MatrixXd E(k, corners[0].size());
      for (int i = 1; i <= k; ++i) E.row(i - 1) = (corners[i] - corners[0]).transpose();
      double det = (E * E.transpose()).determinant();
      if (det < 0) det = 0;
      total = std::sqrt(det);
      for (int i = 2; i <= k; ++i) total /= i;
    }
  } else {
    for (int s = 0; s <= m; ++s) {
      if (std::find(current.begin(), current.end(), s) != current.end()) continue;
      std::vector<int> next = current;
      next.insert(std::lower_bound(next.begin(), next.end(), s), s);
      total += dual_volume_in_top(pts, chain, next);
    }
  }
  chain.pop_back();
  return total;
}

}  // namespace

std::vector<double> dual_volumes_local(const std::vector<Eigen::VectorXd>& points, int p) {
  const int m = static_cast<int>(points.size()) - 1;
  const auto subs = subsets_of(m + 1, p + 1);
  std::vector<double> out;
  out.reserve(subs.size());
  for (const auto& S : subs) {
    std::vector<std::vector<int>> chain;
    out.push_back(dual_volume_in_top(points, chain, S));
  }
  return out;
}

Eigen::MatrixXd lumped_gram(const GeometryResolver& res, int p) {
  const SimplicialComplex& cx = res.complex();
  const int m = cx.top_dimension();
  if (p < 0 || p > m) throw InvalidInput("lumped_gram degree out of range");
  Eigen::VectorXd dual = Eigen::VectorXd::Zero(cx.count(p));
  const auto subs = subsets_of(m + 1, p + 1);
  for (int t = 0; t < cx.count(m); ++t) {
    const auto& pts = res.top_coords(t);
    const auto& tverts = cx.simplex(m, t).vertices;
    const std::vector<double> local = dual_volumes_local(pts, p);
    for (size_t a = 0; a < subs.size(); ++a) {
      std::vector<int> verts(p + 1);
      for (int k = 0; k <= p; ++k) verts[k] = tverts[subs[a][k]];
      dual[cx.index_of(p, verts)] += local[a];
    }
  }
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(cx.count(p), cx.count(p));
  for (int i = 0; i < cx.count(p); ++i) {
    const double primal = simplex_volume(res, p, i);
    G(i, i) = dual[i] / primal;
  }
  return G;
}

CochainMetric build_metric(const SimplicialComplex& cx, const GeometryResolver* res,
                           MetricKind kind) {
  CochainMetric metric;
  metric.kind = kind;
  const int m = cx.top_dimension();
  metric.gram.resize(m + 1);
  for (int p = 0; p <= m; ++p) {
    switch (kind) {
      case MetricKind::identity:
        metric.gram[p] = Eigen::MatrixXd::Identity(cx.count(p), cx.count(p));
        break;
      case MetricKind::whitney:
        if (!res) throw GeometryError("whitney metric requires geometry");
        metric.gram[p] = whitney_gram(*res, p);
        break;
      case MetricKind::lumped:
        if (!res) throw GeometryError("lumped metric requires geometry");
        metric.gram[p] = lumped_gram(*res, p);
        break;
    }
    if (metric.gram[p].size() > 0) {
      Eigen::LLT<Eigen::MatrixXd> llt(metric.gram[p]);
      if (llt.info() != Eigen::Success)
        throw NumericalError("degree-" + std::to_string(p) + " Gram matrix is not SPD");
    }
  }
  return metric;
}

double smallest_gram_eigenvalue(const CochainMetric& metric, int p) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(metric.gram[p], Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace hodgelab
