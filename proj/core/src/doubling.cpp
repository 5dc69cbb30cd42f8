#include "hodgelab/doubling.hpp"

#include <algorithm>
#include <map>

namespace hodgelab {

namespace {

// Sorts `verts` in place and returns the sign of the sorting permutation.
int sort_with_sign(std::vector<int>& verts) {
  int sign = 1;
  for (size_t i = 1; i < verts.size(); ++i)
    for (size_t j = i; j > 0 && verts[j - 1] > verts[j]; --j) {
      std::swap(verts[j - 1], verts[j]);
      sign = -sign;
    }
  return sign;
}

int apply_tau_copy(int c, int which) {
  // tau1 = (01)(23) on copy labels, tau2 = (02)(13).
  static const int t1[4] = {1, 0, 3, 2};
  static const int t2[4] = {2, 3, 0, 1};
  return which == 1 ? t1[c] : t2[c];
}

}  // namespace

Eigen::MatrixXd SignedPermutation::pullback_matrix() const {
  const int n = static_cast<int>(image.size());
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) T(i, image[i]) = sign[i];
  return T;
}

QuadrupleComplex double_complex(const SimplicialComplex& cx, const BoundaryLabeling& labels,
                                const GeometryResolver* res, MetricKind kind) {
  validate_labeling(cx, labels);
  const int m = cx.top_dimension();

  // Vertex classes.  A vertex on M1 is shared between copies 0|1 and 2|3; a
  // vertex on M2 between 0|2 and 1|3; M1 and M2 are disjoint, so no vertex is
  // glued across all four copies.
  std::vector<int> vkind(cx.count(0), 0);  // 0 interior, 1 on M1, 2 on M2
  for (int v = 0; v < cx.count(0); ++v) {
    if (labels.m1.contains(0, v)) vkind[v] = 1;
    else if (labels.m2.contains(0, v)) vkind[v] = 2;
  }

  // Gluing must never identify two distinct simplices: a simplex outside M1
  // whose vertices all lie on M1 would collapse with its mirror (same for M2).
  for (int d = 1; d <= m; ++d) {
    for (int i = 0; i < cx.count(d); ++i) {
      const auto& verts = cx.simplex(d, i).vertices;
      for (int which = 1; which <= 2; ++which) {
        const auto& part = which == 1 ? labels.m1 : labels.m2;
        if (part.contains(d, i)) continue;
        bool all = true;
        for (int v : verts)
          if (vkind[cx.index_of(0, {v})] != which) { all = false; break; }
        if (all)
          throw InvalidInput(
              "complex cannot be doubled: simplex of dimension " + std::to_string(d) +
              " has all vertices on M" + std::to_string(which) +
              " but is not part of it; refine the mesh");
      }
    }
  }

  // New vertex ids: classes keyed by (vertex, representative copy), ordered
  // by vertex id then copy.
  auto rep_copy = [&](int c, int v) {
    const int k = vkind[v];
    if (k == 1) return c <= 1 ? 0 : 2;  // copies {0,1} and {2,3} share
    if (k == 2) return c == 0 || c == 2 ? 0 : 1;  // copies {0,2} and {1,3} share
    return c;
  };
  std::map<std::pair<int, int>, int> vid;  // (vertex index, rep copy) -> new id
  {
    int next = 0;
    for (int v = 0; v < cx.count(0); ++v)
      for (int c = 0; c < 4; ++c)
        if (rep_copy(c, v) == c) vid[{v, c}] = next++;
  }
  auto new_vertex = [&](int c, int v) { return vid.at({v, rep_copy(c, v)}); };

  // Top simplices of W, in copy-major order.
  std::vector<std::vector<int>> tops;
  for (int c = 0; c < 4; ++c) {
    for (int t = 0; t < cx.count(m); ++t) {
      const auto& verts = cx.simplex(m, t).vertices;
      std::vector<int> image;
      image.reserve(verts.size());
      for (int v : verts) image.push_back(new_vertex(c, cx.index_of(0, {v})));
      std::sort(image.begin(), image.end());
      tops.push_back(std::move(image));
    }
  }
  // M1-glued tops would surface as duplicates in build_complex; the collision
  // check above already rules that out, so any duplicate is internal misuse.
  QuadrupleComplex q;
  q.W = build_complex(tops);

  // Copy maps with orientation signs.
  for (int c = 0; c < 4; ++c) {
    q.copy_map[c].resize(m + 1);
    for (int d = 0; d <= m; ++d) {
      q.copy_map[c][d].resize(cx.count(d));
      for (int i = 0; i < cx.count(d); ++i) {
        std::vector<int> image;
        for (int v : cx.simplex(d, i).vertices)
          image.push_back(new_vertex(c, cx.index_of(0, {v})));
        const int sign = sort_with_sign(image);
        q.copy_map[c][d][i] = {q.W.index_of(d, image), sign};
      }
    }
  }

  // Vertex permutations of the involutions.
  const int nw = q.W.count(0);
  q.tau1_vertices.resize(nw);
  q.tau2_vertices.resize(nw);
  for (const auto& [key, id] : vid) {
    const auto [v, c] = key;
    q.tau1_vertices[id] = vid.at({v, rep_copy(apply_tau_copy(c, 1), v)});
    q.tau2_vertices[id] = vid.at({v, rep_copy(apply_tau_copy(c, 2), v)});
  }

  q.tau1 = simplex_actions(q.W, q.tau1_vertices);
  q.tau2 = simplex_actions(q.W, q.tau2_vertices);

  // Mirrored metric: assemble the Gram of W by running the local integrals of
  // the source mesh once per copy, signs from the copy maps.  Local Whitney
  // pairings and dual volumes are invariant under the (isometric) copy maps,
  // so this is the transported metric.
  q.metric.kind = res ? kind : MetricKind::identity;
  q.metric.gram.resize(m + 1);
  for (int p = 0; p <= m; ++p) {
    const int nw = q.W.count(p);
    if (!res) {
      q.metric.gram[p] = Eigen::MatrixXd::Identity(nw, nw);
      continue;
    }
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(nw, nw);
    Eigen::VectorXd dual = Eigen::VectorXd::Zero(nw);
    Eigen::VectorXd primal = Eigen::VectorXd::Zero(nw);
    const auto subs = subsets_of(m + 1, p + 1);
    for (int t = 0; t < cx.count(m); ++t) {
      const auto& pts = res->top_coords(t);
      const auto& tverts = cx.simplex(m, t).vertices;
      std::vector<int> src(subs.size());
      for (size_t a = 0; a < subs.size(); ++a) {
        std::vector<int> verts(p + 1);
        for (int k = 0; k <= p; ++k) verts[k] = tverts[subs[a][k]];
        src[a] = cx.index_of(p, verts);
      }
      if (kind == MetricKind::whitney) {
        const Eigen::MatrixXd L = whitney_local_gram(pts, p);
        for (int c = 0; c < 4; ++c)
          for (size_t a = 0; a < subs.size(); ++a) {
            const auto [ia, sa] = q.copy_map[c][p][src[a]];
            for (size_t b = 0; b < subs.size(); ++b) {
              const auto [ib, sb] = q.copy_map[c][p][src[b]];
              G(ia, ib) += sa * sb * L(a, b);
            }
          }
      } else {
        const std::vector<double> local = dual_volumes_local(pts, p);
        for (int c = 0; c < 4; ++c)
          for (size_t a = 0; a < subs.size(); ++a) {
            const int iw = q.copy_map[c][p][src[a]].first;
            dual(iw) += local[a];
            primal(iw) = simplex_volume(*res, p, src[a]);
          }
      }
    }
    if (kind == MetricKind::lumped)
      for (int i = 0; i < nw; ++i) G(i, i) = dual(i) / primal(i);
    q.metric.gram[p] = G;
  }
  return q;
}

std::vector<SignedPermutation> simplex_actions(const SimplicialComplex& cx,
                                               const std::vector<int>& vperm) {
  if (static_cast<int>(vperm.size()) != cx.count(0))
    throw InvalidInput("vertex permutation table has the wrong size");
  const int m = cx.top_dimension();
  std::vector<SignedPermutation> action(m + 1);
  for (int d = 0; d <= m; ++d) {
    action[d].image.resize(cx.count(d));
    action[d].sign.resize(cx.count(d));
    for (int i = 0; i < cx.count(d); ++i) {
      std::vector<int> image;
      for (int v : cx.simplex(d, i).vertices) image.push_back(vperm[v]);
      const int sign = sort_with_sign(image);
      const int target = cx.index_of(d, image);
      if (target < 0) throw InvalidInput("permutation does not map the complex to itself");
      action[d].image[i] = target;
      action[d].sign[i] = sign;
    }
  }
  return action;
}

namespace {

Eigen::MatrixXd projector_from_actions(const SignedPermutation& t1, const SignedPermutation& t2,
                                       int e1, int e2) {
  if ((e1 != 1 && e1 != -1) || (e2 != 1 && e2 != -1))
    throw InvalidInput("eigenspace signs must be +1 or -1");
  const int n = static_cast<int>(t1.image.size());
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  return 0.25 * (I + e1 * t1.pullback_matrix()) * (I + e2 * t2.pullback_matrix());
}

int minusplus_rank(const HodgeSolver& solver, const Eigen::MatrixXd& P, int p) {
  const Eigen::MatrixXd& H = solver.harmonic_basis_reduced(p);
  if (H.cols() == 0) return 0;
  const Eigen::MatrixXd projected = P * H;
  Eigen::LLT<Eigen::MatrixXd> llt(solver.gram(p));
  const Eigen::MatrixXd white = Eigen::MatrixXd(llt.matrixL()).transpose() * projected;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(white);
  const auto& sv = svd.singularValues();
  // The whitened singular values are exactly 0 or 1: the projector commutes
  // with the Laplacian and restricts to an orthogonal projector of its kernel.
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > 0.5) ++rank;
  return rank;
}

}  // namespace

Eigen::MatrixXd eigenspace_projector(const QuadrupleComplex& q, int e1, int e2, int p) {
  return projector_from_actions(q.tau1[p], q.tau2[p], e1, e2);
}

int minusplus_betti(const QuadrupleComplex& q, int p, double rank_tol) {
  const BoundaryLabeling closed = make_labeling(q.W, SimplexSet::empty(q.W));
  HodgeSolver solver(q.W, closed, q.metric, rank_tol);
  return minusplus_rank(solver, eigenspace_projector(q, -1, +1, p), p);
}

int minusplus_betti(const SimplicialComplex& W, const CochainMetric& metric,
                    const std::vector<int>& tau1_vertices, const std::vector<int>& tau2_vertices,
                    int p, double rank_tol) {
  const BoundaryLabeling closed = make_labeling(W, SimplexSet::empty(W));
  HodgeSolver solver(W, closed, metric, rank_tol);
  const auto a1 = simplex_actions(W, tau1_vertices);
  const auto a2 = simplex_actions(W, tau2_vertices);
  return minusplus_rank(solver, projector_from_actions(a1[p], a2[p], -1, +1), p);
}

Cochain restrict_to_copy(const QuadrupleComplex& q, const SimplicialComplex& cx,
                         const BoundaryLabeling& labels, const Cochain& omega, double tol) {
  const int p = omega.degree;
  if (omega.values.size() != q.W.count(p))
    throw InvalidInput("cochain length does not match the doubled complex");
  const Eigen::MatrixXd P = eigenspace_projector(q, -1, +1, p);
  const double scale = omega.values.size() ? omega.values.norm() : 0.0;
  if (scale > 0 && (P * omega.values - omega.values).norm() > tol * scale)
    throw InvalidInput("cochain is not in the (-,+) eigenspace");
  Cochain out;
  out.degree = p;
  out.values = Eigen::VectorXd::Zero(cx.count(p));
  for (int i = 0; i < cx.count(p); ++i) {
    const auto [iw, sw] = q.copy_map[0][p][i];
    out.values(i) = sw * omega.values(iw);
    // tau1-antisymmetry forces exact zeros over M1; clamp the rounding dust
    if (labels.in_m1(p, i)) out.values(i) = 0.0;
  }
  return out;
}

}  // namespace hodgelab
