#include "hodgelab/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <functional>

namespace hodgelab {

namespace {

// Gauss-Legendre nodes/weights on [0,1] via the Golub-Welsch tridiagonal.
void gauss_legendre01(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    const double b = i / std::sqrt(4.0 * i * i - 1.0);
    J(i, i - 1) = b;
    J(i - 1, i) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    nodes[i] = (es.eigenvalues()(i) + 1.0) / 2.0;
    const double v = es.eigenvectors()(0, i);
    weights[i] = v * v;  // on [-1,1] the weights are 2 v^2; halved for [0,1]
  }
}

void verify_exactness(const QuadratureRule& rule) {
  const int p = rule.simplex_dim;
  std::vector<int> alpha(p + 1, 0);
  // enumerate all monomials of total degree <= order
  std::vector<std::vector<int>> all;
  std::vector<int> cur(p + 1, 0);
  std::function<void(int, int)> rec = [&](int slot, int budget) {
    if (slot == p) {
      cur[slot] = 0;
      for (int d = 0; d <= budget; ++d) {
        cur[slot] = d;
        all.push_back(cur);
      }
      return;
    }
    for (int d = 0; d <= budget; ++d) {
      cur[slot] = d;
      rec(slot + 1, budget - d);
    }
  };
  rec(0, rule.order);
  for (const auto& a : all) {
    const double exact = barycentric_monomial_integral(a);
    double approx = 0;
    for (size_t k = 0; k < rule.nodes.size(); ++k) {
      double v = rule.weights[k];
      for (int i = 0; i <= p; ++i) v *= std::pow(rule.nodes[k](i), a[i]);
      approx += v;
    }
    if (std::abs(approx - exact) > 1e-13 * std::max(1.0, std::abs(exact)))
      throw NumericalError("quadrature rule failed its exactness check");
  }
}

}  // namespace

double barycentric_monomial_integral(const std::vector<int>& alpha) {
  const int p = static_cast<int>(alpha.size()) - 1;
  int total = 0;
  for (int a : alpha) total += a;
  // alpha! / (|alpha| + p)!  (the p! of the formula cancels the 1/p! volume)
  double value = 1.0;
  for (int a : alpha)
    for (int i = 2; i <= a; ++i) value *= i;
  for (int i = 2; i <= total + p; ++i) value /= i;
  return value;
}

QuadratureRule QuadratureRule::make(int simplex_dim, int order) {
  if (order < 1) throw InvalidInput("quadrature order must be >= 1");
  QuadratureRule rule;
  rule.simplex_dim = simplex_dim;
  rule.order = order;
  if (simplex_dim == 0) {
    rule.nodes.push_back(Eigen::VectorXd::Ones(1));
    rule.weights.push_back(1.0);
  } else if (simplex_dim == 1) {
    std::vector<double> t, w;
    gauss_legendre01(order, t, w);
    for (int k = 0; k < order; ++k) {
      Eigen::VectorXd lambda(2);
      lambda << 1.0 - t[k], t[k];
      rule.nodes.push_back(lambda);
      rule.weights.push_back(w[k]);
    }
  } else if (simplex_dim == 2) {
    if (order == 1) {
      Eigen::VectorXd lambda(3);
      lambda << 1.0 / 3, 1.0 / 3, 1.0 / 3;
      rule.nodes.push_back(lambda);
      rule.weights.push_back(0.5);
    } else {
      // collapsed tensor rule: lambda1 = u, lambda2 = v (1-u), Jacobian (1-u)
      std::vector<double> u, wu;
      gauss_legendre01(order, u, wu);
      for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) {
          Eigen::VectorXd lambda(3);
          const double l1 = u[i];
          const double l2 = u[j] * (1.0 - u[i]);
          lambda << 1.0 - l1 - l2, l1, l2;
          rule.nodes.push_back(lambda);
          rule.weights.push_back(wu[i] * wu[j] * (1.0 - u[i]));
        }
    }
  } else {
    throw InvalidInput("quadrature tables cover simplex dimension <= 2");
  }
  verify_exactness(rule);
  return rule;
}

}  // namespace hodgelab
