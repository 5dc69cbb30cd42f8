#include "doctest.h"

#include <cmath>

#include "hodgelab/catalog.hpp"
#include "hodgelab/derham.hpp"
#include "hodgelab/rng.hpp"

using namespace hodgelab;

namespace {

struct Ctx {
  CatalogMesh mesh;
  std::unique_ptr<GeometryResolver> res;
  BoundaryLabeling labels;
  CochainMetric metric;

  // heap-held: the resolver points into the mesh, so the fixture must not move
  static std::unique_ptr<Ctx> make(const std::string& name) {
    auto c = std::make_unique<Ctx>();
    c->mesh = make_catalog_mesh(name);
    c->res = std::make_unique<GeometryResolver>(c->mesh.complex, c->mesh.geometry);
    c->labels = make_labeling(c->mesh.complex, SimplexSet::empty(c->mesh.complex));
    c->metric = build_metric(c->mesh.complex, c->res.get(), MetricKind::whitney);
    return c;
  }
};

// Exact integral of a monomial-coefficient 1-form over a straight segment,
// for the quadrature-exactness oracle: int_e x^a y^b (dx-component e_x + ...)
double monomial_edge_integral(const Eigen::VectorXd& p0, const Eigen::VectorXd& p1, int a, int b,
                              int axis, int steps = 20001) {
  // high-resolution Simpson on the parameterization; independent of the
  // production quadrature tables
  const Eigen::VectorXd d = p1 - p0;
  auto f = [&](double t) {
    const Eigen::VectorXd x = p0 + t * d;
    return std::pow(x(0), a) * std::pow(x(1), b) * d(axis);
  };
  double sum = f(0) + f(1);
  for (int i = 1; i < steps - 1; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(i / double(steps - 1));
  return sum / (3.0 * (steps - 1));
}

}  // namespace

TEST_CASE("quadrature rules") {
  for (int p : {1, 2})
    for (int q : {1, 2, 3, 4, 6, 8}) {
      const QuadratureRule rule = QuadratureRule::make(p, q);
      double total = 0;
      for (double w : rule.weights) total += w;
      const double ref_vol = p == 1 ? 1.0 : 0.5;
      CHECK(total == doctest::Approx(ref_vol).epsilon(1e-14));
    }
  CHECK_THROWS_AS(QuadratureRule::make(3, 2), InvalidInput);
  CHECK_THROWS_AS(QuadratureRule::make(1, 0), InvalidInput);
}

TEST_CASE("derham map basics") {
  SUBCASE("constant 0-form gives the all-ones vertex cochain") {
    auto c = Ctx::make("disk");
    const Cochain a = derham_map(*c->res, make_named_form("const", 2), 2);
    CHECK(a.degree == 0);
    CHECK((a.values - Eigen::VectorXd::Ones(a.values.size())).cwiseAbs().maxCoeff() == 0);
  }
  SUBCASE("dx integrates to the signed x-extent of each edge") {
    auto c = Ctx::make("square-2");
    const Cochain a = derham_map(*c->res, make_named_form("dx", 2), 1);
    for (int e = 0; e < c->mesh.complex.count(1); ++e) {
      const auto pts = c->res->local_coords(1, e);
      CHECK(a.values(e) == doctest::Approx(pts[1](0) - pts[0](0)).epsilon(1e-14));
    }
  }
  SUBCASE("x dy over the diagonal edge of the unit triangle") {
    CatalogMesh mesh;
    mesh.complex = build_complex({{0, 1, 2}});
    mesh.geometry.ambient_dim = 2;
    Eigen::VectorXd p0(2), p1(2), p2(2);
    p0 << 0, 0;
    p1 << 1, 0;
    p2 << 0, 1;
    mesh.geometry.coords[0] = p0;
    mesh.geometry.coords[1] = p1;
    mesh.geometry.coords[2] = p2;
    const GeometryResolver res(mesh.complex, mesh.geometry);
    const Cochain a = derham_map(res, make_named_form("x-dy", 2), 2);
    const int diag = mesh.complex.index_of(1, {1, 2});
    CHECK(a.values(diag) == doctest::Approx(0.5).epsilon(1e-12));
    // the same at higher order: already exact at q = 2
    const Cochain a6 = derham_map(res, make_named_form("x-dy", 2), 6);
    CHECK(a6.values(diag) == doctest::Approx(a.values(diag)).epsilon(1e-14));
  }
  SUBCASE("linearity") {
    auto c = Ctx::make("torus-4x4");
    const AnalyticForm dx = make_named_form("dx", 2);
    const AnalyticForm sdy = make_named_form("sinpx-dy", 2);
    const Cochain sum = derham_map(*c->res, 2.5 * dx + sdy, 4);
    const Cochain adx = derham_map(*c->res, dx, 4);
    const Cochain asdy = derham_map(*c->res, sdy, 4);
    CHECK((sum.values - 2.5 * adx.values - asdy.values).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("polynomial exactness against an independent integrator") {
    auto c = Ctx::make("square-1");
    // omega = x^2 y dx: polynomial of total degree 3, exact at order >= 4
    AnalyticForm f;
    f.degree = 1;
    f.ambient_dim = 2;
    f.components = [](const Eigen::VectorXd& x) {
      Eigen::VectorXd v(2);
      v << x(0) * x(0) * x(1), 0.0;
      return v.eval();
    };
    const Cochain a = derham_map(*c->res, f, 4);
    for (int e = 0; e < c->mesh.complex.count(1); ++e) {
      const auto pts = c->res->local_coords(1, e);
      CHECK(a.values(e) ==
            doctest::Approx(monomial_edge_integral(pts[0], pts[1], 2, 1, 0)).epsilon(1e-10));
    }
  }
}

TEST_CASE("stokes residual") {
  SUBCASE("polynomial form within quadrature exactness") {
    auto c = Ctx::make("square-4");
    CHECK(stokes_residual(*c->res, c->metric, make_named_form("x-dy", 2), 4) < 1e-12);
  }
  SUBCASE("constant form") {
    auto c = Ctx::make("square-4");
    CHECK(stokes_residual(*c->res, c->metric, make_named_form("dx", 2), 2) < 1e-13);
  }
  SUBCASE("sin(2 pi x) dy on the 16x16 flat torus at order 4") {
    auto c = Ctx::make("torus-16x16");
    CHECK(stokes_residual(*c->res, c->metric, make_named_form("sinpx-dy", 2), 4) < 1e-6);
  }
  SUBCASE("monotone decrease under mesh refinement at fixed order") {
    double prev = std::numeric_limits<double>::infinity();
    for (const char* name : {"torus-4x4", "torus-8x8", "torus-16x16"}) {
      auto c = Ctx::make(name);
      const double r = stokes_residual(*c->res, c->metric, make_named_form("sinpx-dy", 2), 2);
      CHECK(r < prev);
      prev = r;
    }
  }
  SUBCASE("monotone decrease across orders 2, 4, 6") {
    auto c = Ctx::make("torus-16x16");
    double prev = std::numeric_limits<double>::infinity();
    for (int q : {2, 4, 6}) {
      const double r = stokes_residual(*c->res, c->metric, make_named_form("sinpx-dy", 2), q);
      CHECK(r < prev);
      prev = r;
    }
  }
}

TEST_CASE("harmonic pairing") {
  SUBCASE("flat torus with dx and dy has rank 2") {
    auto c = Ctx::make("torus-8x8");
    HodgeSolver solver(c->mesh.complex, c->labels, c->metric);
    const PairingResult pr = harmonic_pairing(
        solver, *c->res, {make_named_form("dx", 2), make_named_form("dy", 2)}, 1, 4);
    CHECK(pr.rank == 2);
    CHECK(pr.singular_values(1) > 0.1 * pr.singular_values(0));
    // on the structured grid the integrated coordinate forms are themselves
    // harmonic: strongest possible compatibility check of the whole chain
    const Cochain adx = derham_map(*c->res, make_named_form("dx", 2), 4);
    const Eigen::VectorXd x = solver.reduce(adx);
    const Eigen::MatrixXd lap = solver.laplacian(1);
    CHECK((lap * x).cwiseAbs().maxCoeff() < 1e-10);
  }
  SUBCASE("circle with dtheta has rank 1 and a harmonic image") {
    auto c = Ctx::make("circle-12");
    HodgeSolver solver(c->mesh.complex, c->labels, c->metric);
    const PairingResult pr =
        harmonic_pairing(solver, *c->res, {make_named_form("dtheta", 2)}, 1, 6);
    CHECK(pr.rank == 1);
    // the chord integrals of dtheta are all 2 pi / 12, the uniform cochain
    const Cochain a = derham_map(*c->res, make_named_form("dtheta", 2), 8);
    for (int e = 0; e < c->mesh.complex.count(1); ++e)
      CHECK(std::abs(a.values(e)) == doctest::Approx(2 * M_PI / 12).epsilon(1e-6));
  }
  SUBCASE("constant 0-form pairs with the harmonic 0-cochain at rank 1") {
    auto c = Ctx::make("sphere");
    HodgeSolver solver(c->mesh.complex, c->labels, c->metric);
    const PairingResult pr =
        harmonic_pairing(solver, *c->res, {make_named_form("const", 3)}, 0, 2);
    CHECK(pr.rank == 1);
  }
}

TEST_CASE("class invariance under metric change") {
  auto c = Ctx::make("torus-4x4");
  HodgeSolver whitney(c->mesh.complex, c->labels, c->metric);

  SUBCASE("same metric: zero residual") {
    CHECK(class_invariance(whitney, whitney, 1) < 1e-12);
  }
  SUBCASE("global scaling: harmonic spaces coincide") {
    CochainMetric scaled = c->metric;
    for (auto& g : scaled.gram) g *= 3.0;
    HodgeSolver other(c->mesh.complex, c->labels, scaled);
    CHECK(class_invariance(whitney, other, 1) < 1e-10);
  }
  SUBCASE("random SPD perturbation: representatives differ by an exact cochain") {
    Rng rng(41);
    CochainMetric perturbed = c->metric;
    for (auto& g : perturbed.gram) {
      const int n = static_cast<int>(g.rows());
      Eigen::MatrixXd r(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = rng.gaussian();
      const Eigen::MatrixXd sym = 0.5 * (r + r.transpose()) / n;
      const Eigen::MatrixXd factor =
          Eigen::MatrixXd::Identity(n, n) + 0.3 * sym / std::max(1.0, sym.cwiseAbs().maxCoeff());
      g = (factor.transpose() * g * factor).eval();
    }
    HodgeSolver other(c->mesh.complex, c->labels, perturbed);
    CHECK(class_invariance(whitney, other, 1) < 1e-8);
  }
}
