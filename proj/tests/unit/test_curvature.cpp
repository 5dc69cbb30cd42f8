#include "doctest.h"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "hodgelab/catalog.hpp"
#include "hodgelab/curvature.hpp"
#include "hodgelab/rng.hpp"

using namespace hodgelab;

namespace {

Eigen::VectorXd lam(std::initializer_list<double> xs) {
  Eigen::VectorXd v(xs.size());
  int i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

CurvatureSample boundary_sample(int m, const Eigen::VectorXd& lambda) {
  CurvatureSample s;
  s.manifold_dim = m;
  s.shape_eigenvalues = lambda;
  return s;
}

CurvatureSample interior_sample(int m, double ric) {
  CurvatureSample s;
  s.manifold_dim = m;
  s.ricci_lower = ric;
  return s;
}

FlatFormSamplers sin_sin_dx() {
  FlatFormSamplers s;
  s.omega = [](const Eigen::VectorXd& x) {
    Eigen::VectorXd v(2);
    v << std::sin(M_PI * x(0)) * std::sin(M_PI * x(1)), 0.0;
    return v.eval();
  };
  s.gradient = [](const Eigen::VectorXd& x) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2, 2);
    g(0, 0) = M_PI * std::cos(M_PI * x(0)) * std::sin(M_PI * x(1));
    g(1, 0) = M_PI * std::sin(M_PI * x(0)) * std::cos(M_PI * x(1));
    return g.eval();
  };
  s.d = [](const Eigen::VectorXd& x) {
    return -M_PI * std::sin(M_PI * x(0)) * std::cos(M_PI * x(1));
  };
  s.delta = [](const Eigen::VectorXd& x) {
    return -M_PI * std::cos(M_PI * x(0)) * std::sin(M_PI * x(1));
  };
  return s;
}

// f dx + g dy with f = sin(pi x) sin(pi y), g = sin(2 pi x) sin(pi y): both
// components vanish on the square's boundary and the pointwise cross terms of
// the identity no longer cancel, so the residual is quadrature-limited.
FlatFormSamplers mixed_form() {
  auto f = [](const Eigen::VectorXd& x) { return std::sin(M_PI * x(0)) * std::sin(M_PI * x(1)); };
  auto fx = [](const Eigen::VectorXd& x) {
    return M_PI * std::cos(M_PI * x(0)) * std::sin(M_PI * x(1));
  };
  auto fy = [](const Eigen::VectorXd& x) {
    return M_PI * std::sin(M_PI * x(0)) * std::cos(M_PI * x(1));
  };
  auto g = [](const Eigen::VectorXd& x) { return std::sin(2 * M_PI * x(0)) * std::sin(M_PI * x(1)); };
  auto gx = [](const Eigen::VectorXd& x) {
    return 2 * M_PI * std::cos(2 * M_PI * x(0)) * std::sin(M_PI * x(1));
  };
  auto gy = [](const Eigen::VectorXd& x) {
    return M_PI * std::sin(2 * M_PI * x(0)) * std::cos(M_PI * x(1));
  };
  FlatFormSamplers s;
  s.omega = [=](const Eigen::VectorXd& x) {
    Eigen::VectorXd v(2);
    v << f(x), g(x);
    return v.eval();
  };
  s.gradient = [=](const Eigen::VectorXd& x) {
    Eigen::MatrixXd m(2, 2);
    m(0, 0) = fx(x);
    m(1, 0) = fy(x);
    m(0, 1) = gx(x);
    m(1, 1) = gy(x);
    return m.eval();
  };
  s.d = [=](const Eigen::VectorXd& x) { return gx(x) - fy(x); };
  s.delta = [=](const Eigen::VectorXd& x) { return -(fx(x) + gy(x)); };
  return s;
}

}  // namespace

TEST_CASE("boundary tensor") {
  SUBCASE("m=3, p=1, lambda=(2,-1): diagonal (0, 0 | -1)") {
    const Eigen::MatrixXd S = boundary_tensor(lam({2, -1}), 1);
    CHECK(S.rows() == 3);
    CHECK(S(0, 0) == 0);
    CHECK(S(1, 1) == 0);
    CHECK(S(2, 2) == doctest::Approx(-1.0));
    CHECK(S.cwiseAbs().sum() == doctest::Approx(1.0));  // purely diagonal
  }
  SUBCASE("zero shape operator gives the zero tensor") {
    CHECK(boundary_tensor(lam({0, 0, 0}), 2).cwiseAbs().maxCoeff() == 0);
  }
  SUBCASE("m=3, p=2: normal components carry -b and -a") {
    const double a = 1.25, b = -0.5;
    const Eigen::MatrixXd S = boundary_tensor(lam({a, b}), 2);
    CHECK(S.rows() == 3);  // one tangential 2-subset, two normal components
    CHECK(S(0, 0) == 0);
    CHECK(S(1, 1) == doctest::Approx(-b));  // nu ^ e_1: complement {2}
    CHECK(S(2, 2) == doctest::Approx(-a));  // nu ^ e_2: complement {1}
  }
  SUBCASE("p=m: single normal component, empty complement sum") {
    const Eigen::MatrixXd S = boundary_tensor(lam({3, -7}), 3);
    CHECK(S.rows() == 1);
    CHECK(S(0, 0) == 0);
  }
}

TEST_CASE("sign criterion") {
  SUBCASE("nonnegative shape operator passes for every degree") {
    for (int p = 1; p <= 4; ++p) CHECK(s_p_nonpositive(lam({0.5, 1, 2}), p));
  }
  SUBCASE("m=3, p=1, lambda=(2,-1): sum of two smallest is 1 >= 0") {
    CHECK(s_p_nonpositive(lam({2, -1}), 1));
  }
  SUBCASE("m=4, p=1, lambda=(-3,1,1): negative trace fails") {
    CHECK_FALSE(s_p_nonpositive(lam({-3, 1, 1}), 1));
  }
  SUBCASE("p=1 is the trace criterion") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
      Eigen::VectorXd lambda(3);
      for (int i = 0; i < 3; ++i) lambda(i) = rng.uniform(-2, 2);
      CHECK(s_p_nonpositive(lambda, 1) == (lambda.sum() >= 0));
    }
  }
  SUBCASE("criterion equals negative semidefiniteness of the tensor, exactly") {
    Rng rng(37);
    int disagreements = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const int m = 2 + static_cast<int>(rng.uniform() * 5);  // 2..6
      Eigen::VectorXd lambda(m - 1);
      for (int i = 0; i < m - 1; ++i) lambda(i) = rng.uniform(-2, 2);
      for (int p = 1; p <= m; ++p) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(boundary_tensor(lambda, p),
                                                          Eigen::EigenvaluesOnly);
        const bool nsd = es.eigenvalues().maxCoeff() <= 1e-12;
        if (nsd != s_p_nonpositive(lambda, p)) ++disagreements;
      }
    }
    CHECK(disagreements == 0);
  }
  SUBCASE("monotone: raising an eigenvalue never breaks the criterion") {
    Rng rng(43);
    for (int trial = 0; trial < 300; ++trial) {
      const int m = 2 + static_cast<int>(rng.uniform() * 5);
      Eigen::VectorXd lambda(m - 1);
      for (int i = 0; i < m - 1; ++i) lambda(i) = rng.uniform(-2, 2);
      const int p = 1 + static_cast<int>(rng.uniform() * m);
      if (!s_p_nonpositive(lambda, p)) continue;
      Eigen::VectorXd raised = lambda;
      raised(static_cast<int>(rng.uniform() * (m - 1))) += rng.uniform(0, 3);
      CHECK(s_p_nonpositive(raised, p));
    }
  }
}

TEST_CASE("bochner screen") {
  SUBCASE("convex boundary, nonnegative Ricci, infinite volume: vanishes") {
    BochnerOptions opt;
    opt.infinite_volume = true;
    const std::vector<CurvatureSample> samples = {
        boundary_sample(3, lam({0.5, 1})), boundary_sample(3, lam({0, 2})), interior_sample(3, 0.0)};
    const BochnerVerdict v = bochner_screen(samples, 1, opt);
    CHECK(v.conclusion == BochnerVerdict::Conclusion::vanishes);
    CHECK(v.failed_preconditions.empty());
  }
  SUBCASE("flat torus data without infinite volume: gated") {
    BochnerOptions opt;
    opt.infinite_volume = false;
    const std::vector<CurvatureSample> samples = {interior_sample(2, 0.0)};
    const BochnerVerdict v = bochner_screen(samples, 1, opt);
    CHECK(v.conclusion == BochnerVerdict::Conclusion::no_conclusion);
    REQUIRE(v.failed_preconditions.size() == 1);
    CHECK(v.failed_preconditions[0].find("infinite volume") != std::string::npos);
  }
  SUBCASE("failing S_1 criterion is reported") {
    BochnerOptions opt;
    opt.infinite_volume = true;
    const std::vector<CurvatureSample> samples = {boundary_sample(4, lam({-3, 1, 1})),
                                                  interior_sample(4, 0.5)};
    const BochnerVerdict v = bochner_screen(samples, 1, opt);
    CHECK(v.conclusion == BochnerVerdict::Conclusion::no_conclusion);
    REQUIRE(v.failed_preconditions.size() == 1);
    CHECK(v.failed_preconditions[0].find("S_1") != std::string::npos);
  }
  SUBCASE("degree >= 2 needs the interior attestation") {
    BochnerOptions opt;
    opt.infinite_volume = true;
    const std::vector<CurvatureSample> samples = {boundary_sample(3, lam({1, 1}))};
    CHECK(bochner_screen(samples, 2, opt).conclusion ==
          BochnerVerdict::Conclusion::no_conclusion);
    opt.interior_term_nonpositive_attested = true;
    CHECK(bochner_screen(samples, 2, opt).conclusion == BochnerVerdict::Conclusion::vanishes);
  }
  SUBCASE("absolute variant swaps the boundary degree to m-p") {
    // lambda = (-1, 2), m = 3: S_1 needs the sum of the 2 smallest (= 1 >= 0, ok),
    // S_2 needs the single smallest (= -1 < 0, fails).
    BochnerOptions opt;
    opt.infinite_volume = true;
    opt.interior_term_nonpositive_attested = true;
    const std::vector<CurvatureSample> samples = {boundary_sample(3, lam({-1, 2}))};
    CHECK(bochner_screen(samples, 1, opt).conclusion == BochnerVerdict::Conclusion::vanishes);
    opt.absolute_variant = true;
    const BochnerVerdict v = bochner_screen(samples, 1, opt);  // checks S_{m-1} = S_2
    CHECK(v.conclusion == BochnerVerdict::Conclusion::no_conclusion);
  }
  SUBCASE("never vanishes with any failed precondition") {
    Rng rng(53);
    for (int trial = 0; trial < 300; ++trial) {
      BochnerOptions opt;
      opt.infinite_volume = rng.uniform() < 0.5;
      opt.interior_term_nonpositive_attested = rng.uniform() < 0.5;
      const int m = 2 + static_cast<int>(rng.uniform() * 4);
      std::vector<CurvatureSample> samples;
      const int ns = 1 + static_cast<int>(rng.uniform() * 4);
      for (int i = 0; i < ns; ++i) {
        if (rng.uniform() < 0.5) {
          Eigen::VectorXd lambda(m - 1);
          for (int k = 0; k < m - 1; ++k) lambda(k) = rng.uniform(-2, 2);
          samples.push_back(boundary_sample(m, lambda));
        } else {
          samples.push_back(interior_sample(m, rng.uniform(-1, 1)));
        }
      }
      const int p = 1 + static_cast<int>(rng.uniform() * m);
      const BochnerVerdict v = bochner_screen(samples, p, opt);
      if (v.conclusion == BochnerVerdict::Conclusion::vanishes)
        CHECK(v.failed_preconditions.empty());
      else
        CHECK_FALSE(v.failed_preconditions.empty());
    }
  }
}

TEST_CASE("flat weitzenboeck residual") {
  const CatalogMesh square = make_catalog_mesh("square-8");
  const GeometryResolver res(square.complex, square.geometry);
  const auto labels = make_labeling(square.complex, manifold_boundary(square.complex));

  SUBCASE("zero form gives zero") {
    FlatFormSamplers zero;
    zero.omega = [](const Eigen::VectorXd&) { return Eigen::VectorXd::Zero(2).eval(); };
    zero.gradient = [](const Eigen::VectorXd&) { return Eigen::MatrixXd::Zero(2, 2).eval(); };
    zero.d = [](const Eigen::VectorXd&) { return 0.0; };
    zero.delta = [](const Eigen::VectorXd&) { return 0.0; };
    CHECK(weitzenboeck_flat_residual(res, labels, zero, 2) == 0.0);
  }
  SUBCASE("parallel form on the closed flat torus: all terms vanish") {
    const CatalogMesh torus = make_catalog_mesh("torus-4x4");
    const GeometryResolver tres(torus.complex, torus.geometry);
    const auto tlabels = make_labeling(torus.complex, SimplexSet::empty(torus.complex));
    FlatFormSamplers parallel;
    parallel.omega = [](const Eigen::VectorXd&) {
      Eigen::VectorXd v(2);
      v << 0.75, 0.0;
      return v.eval();
    };
    parallel.gradient = [](const Eigen::VectorXd&) { return Eigen::MatrixXd::Zero(2, 2).eval(); };
    parallel.d = [](const Eigen::VectorXd&) { return 0.0; };
    parallel.delta = [](const Eigen::VectorXd&) { return 0.0; };
    CHECK(weitzenboeck_flat_residual(tres, tlabels, parallel, 2) == 0.0);
  }
  SUBCASE("sin(pi x) sin(pi y) dx at order 6, with the symbolic term values") {
    CHECK(weitzenboeck_flat_residual(res, labels, sin_sin_dx(), 6) < 1e-6);
    // the three quadratic terms against their closed forms pi^2/2, pi^2/4, pi^2/4
    const QuadratureRule rule = QuadratureRule::make(2, 6);
    double grad2 = 0, d2 = 0, delta2 = 0;
    const FlatFormSamplers s = sin_sin_dx();
    for (int t = 0; t < square.complex.count(2); ++t) {
      const auto& pts = res.top_coords(t);
      Eigen::MatrixXd T(2, 2);
      T.col(0) = pts[1] - pts[0];
      T.col(1) = pts[2] - pts[0];
      const double jac = std::abs(T.determinant());
      for (size_t k = 0; k < rule.nodes.size(); ++k) {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(2);
        for (int v = 0; v < 3; ++v) x += rule.nodes[k](v) * pts[v];
        grad2 += rule.weights[k] * jac * s.gradient(x).squaredNorm();
        d2 += rule.weights[k] * jac * s.d(x) * s.d(x);
        delta2 += rule.weights[k] * jac * s.delta(x) * s.delta(x);
      }
    }
    CHECK(grad2 == doctest::Approx(M_PI * M_PI / 2).epsilon(1e-8));
    CHECK(d2 == doctest::Approx(M_PI * M_PI / 4).epsilon(1e-8));
    CHECK(delta2 == doctest::Approx(M_PI * M_PI / 4).epsilon(1e-8));
  }
  SUBCASE("residual decreases across orders 2, 4, 6 for the mixed form") {
    // an off-center fan of the unit square: on the symmetric grid meshes the
    // cross-term quadrature errors cancel and the residual sits at rounding
    // level for every order
    CatalogMesh fan;
    fan.complex = build_complex({{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 3, 4}});
    fan.geometry.ambient_dim = 2;
    auto v2 = [](double x, double y) {
      Eigen::VectorXd v(2);
      v << x, y;
      return v;
    };
    fan.geometry.coords[0] = v2(0, 0);
    fan.geometry.coords[1] = v2(1, 0);
    fan.geometry.coords[2] = v2(1, 1);
    fan.geometry.coords[3] = v2(0, 1);
    fan.geometry.coords[4] = v2(0.37, 0.61);
    const GeometryResolver cres(fan.complex, fan.geometry);
    const auto clabels = make_labeling(fan.complex, manifold_boundary(fan.complex));
    double prev = std::numeric_limits<double>::infinity();
    for (int q : {2, 4, 6}) {
      const double r = weitzenboeck_flat_residual(cres, clabels, mixed_form(), q);
      CHECK(r < prev);
      prev = r;
    }
  }
  SUBCASE("boundary trace violation throws") {
    FlatFormSamplers bad;
    bad.omega = [](const Eigen::VectorXd&) {
      Eigen::VectorXd v(2);
      v << 1.0, 0.0;  // dx has a tangential trace on the horizontal sides
      return v.eval();
    };
    bad.gradient = [](const Eigen::VectorXd&) { return Eigen::MatrixXd::Zero(2, 2).eval(); };
    bad.d = [](const Eigen::VectorXd&) { return 0.0; };
    bad.delta = [](const Eigen::VectorXd&) { return 0.0; };
    CHECK_THROWS_AS(weitzenboeck_flat_residual(res, labels, bad, 2), InvalidInput);
  }
}
