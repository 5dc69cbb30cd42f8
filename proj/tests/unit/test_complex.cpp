#include "doctest.h"

#include "exact_rank.hpp"
#include "hodgelab/catalog.hpp"
#include "hodgelab/complex.hpp"

using namespace hodgelab;

namespace {

// 7-vertex triangulation of the torus: triangles {i,i+1,i+3} and {i,i+2,i+3} mod 7.
std::vector<std::vector<int>> torus7_tops() {
  std::vector<std::vector<int>> tops;
  for (int i = 0; i < 7; ++i) {
    tops.push_back({i, (i + 1) % 7, (i + 3) % 7});
    tops.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return tops;
}

}  // namespace

TEST_CASE("build_complex f-vectors") {
  CHECK(build_complex({{0, 1, 2}}).f_vector() == std::vector<int>{3, 3, 1});
  CHECK(build_complex({{0, 1, 2}, {1, 2, 3}}).f_vector() == std::vector<int>{4, 5, 2});
  CHECK(build_complex(torus7_tops()).f_vector() == std::vector<int>{7, 21, 14});
}

TEST_CASE("build_complex rejects bad input") {
  CHECK_THROWS_AS(build_complex({{0, 1, 2}, {2, 1, 0}}), InvalidInput);  // duplicate
  CHECK_THROWS_AS(build_complex({{0, 1, 2}, {1, 2}}), InvalidInput);     // width mismatch
  CHECK_THROWS_AS(build_complex({{0, 1, 1}}), InvalidInput);             // repeated vertex
  CHECK_THROWS_AS(build_complex({}), InvalidInput);
}

TEST_CASE("coboundary squares to zero on every catalog mesh") {
  for (const char* name : {"interval", "circle-6", "disk", "annulus-6x2", "torus-4x4", "sphere"}) {
    const CatalogMesh mesh = make_catalog_mesh(name);
    const int m = mesh.complex.top_dimension();
    for (int p = 0; p + 1 < m; ++p) {
      const Eigen::MatrixXi dd = mesh.complex.coboundary(p + 1) * mesh.complex.coboundary(p);
      CHECK(dd.cwiseAbs().maxCoeff() == 0);
    }
  }
}

TEST_CASE("manifold boundary") {
  SUBCASE("single triangle: all edges and vertices") {
    const auto cx = build_complex({{0, 1, 2}});
    const SimplexSet bd = manifold_boundary(cx);
    CHECK(bd.count(1) == 3);
    CHECK(bd.count(0) == 3);
  }
  SUBCASE("7-vertex torus: empty") {
    const auto cx = build_complex(torus7_tops());
    CHECK(manifold_boundary(cx).total() == 0);
  }
  SUBCASE("path of two edges: the endpoints") {
    const auto cx = build_complex({{0, 1}, {1, 2}});
    const SimplexSet bd = manifold_boundary(cx);
    CHECK(bd.count(0) == 2);
    CHECK(bd.contains(0, cx.index_of(0, {0})));
    CHECK(bd.contains(0, cx.index_of(0, {2})));
  }
  SUBCASE("three triangles sharing an edge are non-manifold") {
    const auto cx = build_complex({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
    CHECK_THROWS_AS(manifold_boundary(cx), NonManifoldError);
  }
}

TEST_CASE("relative coboundary") {
  SUBCASE("circle, p=0, M1 empty: transpose of the signed boundary matrix") {
    const auto cx = build_complex({{0, 1}, {1, 2}, {0, 2}});
    const auto labels = make_labeling(cx, SimplexSet::empty(cx));
    const Eigen::MatrixXi d = relative_coboundary(cx, labels, 0);
    CHECK(d.rows() == 3);
    CHECK(d.cols() == 3);
    CHECK(d == cx.coboundary(0));
    // each edge row has one +1 and one -1
    for (int e = 0; e < 3; ++e) {
      CHECK(d.row(e).sum() == 0);
      CHECK(d.row(e).cwiseAbs().sum() == 2);
    }
  }
  SUBCASE("interval with both endpoints deleted: 2x1") {
    const auto cx = build_complex({{0, 1}, {1, 2}});
    SimplexSet m1 = SimplexSet::empty(cx);
    m1.insert(0, cx.index_of(0, {0}));
    m1.insert(0, cx.index_of(0, {2}));
    const auto labels = make_labeling(cx, m1);
    const Eigen::MatrixXi d = relative_coboundary(cx, labels, 0);
    CHECK(d.rows() == 2);
    CHECK(d.cols() == 1);
  }
  SUBCASE("annulus with inner circle relative: rank matches the exact oracle") {
    const CatalogMesh mesh = make_catalog_mesh("annulus-8x2");
    const SimplexSet inner = resolve_selector(mesh.complex, mesh.geometry, "inner");
    const auto labels = make_labeling(mesh.complex, inner);
    const Eigen::MatrixXi d1 = relative_coboundary(mesh.complex, labels, 1);
    // float rank via SVD against the exact integer rank
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(d1.cast<double>());
    int float_rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > 1e-9 * svd.singularValues()(0)) ++float_rank;
    CHECK(float_rank == testing::exact_rank(d1));
  }
  SUBCASE("relative d squares to zero for every catalog labeling") {
    for (const char* name : {"disk", "annulus-6x2"}) {
      const CatalogMesh mesh = make_catalog_mesh(name);
      for (const char* sel : {"none", "boundary", "inner"}) {
        if (std::string(name) == "disk" && std::string(sel) == "inner") continue;
        const auto labels =
            make_labeling(mesh.complex, resolve_selector(mesh.complex, mesh.geometry, sel));
        const Eigen::MatrixXi dd =
            relative_coboundary(mesh.complex, labels, 1) * relative_coboundary(mesh.complex, labels, 0);
        CHECK(dd.cwiseAbs().maxCoeff() == 0);
      }
    }
  }
}

TEST_CASE("euler characteristic") {
  const auto tri = build_complex({{0, 1, 2}});
  CHECK(euler_characteristic(tri, make_labeling(tri, SimplexSet::empty(tri))) == 1);

  const auto t7 = build_complex(torus7_tops());
  CHECK(euler_characteristic(t7, make_labeling(t7, SimplexSet::empty(t7))) == 0);

  const auto path = build_complex({{0, 1}, {1, 2}});
  SimplexSet ends = SimplexSet::empty(path);
  ends.insert(0, path.index_of(0, {0}));
  ends.insert(0, path.index_of(0, {2}));
  CHECK(euler_characteristic(path, make_labeling(path, ends)) == -1);
}

TEST_CASE("labeling validation") {
  const auto cx = build_complex({{0, 1}, {1, 2}});
  SUBCASE("M1 not on the boundary") {
    SimplexSet bad = SimplexSet::empty(cx);
    bad.insert(0, cx.index_of(0, {1}));  // interior vertex
    CHECK_THROWS_AS(make_labeling(cx, bad), LabelError);
  }
  SUBCASE("overlap between M1 and M2") {
    BoundaryLabeling labels;
    labels.m1 = manifold_boundary(cx);
    labels.m2 = manifold_boundary(cx);
    CHECK_THROWS_AS(validate_labeling(cx, labels), LabelError);
  }
  SUBCASE("incomplete cover") {
    BoundaryLabeling labels;
    labels.m1 = SimplexSet::empty(cx);
    labels.m2 = SimplexSet::empty(cx);
    labels.m1.insert(0, cx.index_of(0, {0}));
    CHECK_THROWS_AS(validate_labeling(cx, labels), LabelError);
  }
}

TEST_CASE("exact betti oracle sanity") {
  const auto t7 = build_complex(torus7_tops());
  CHECK(testing::exact_betti(t7, make_labeling(t7, SimplexSet::empty(t7))) ==
        std::vector<int>{1, 2, 1});
}
