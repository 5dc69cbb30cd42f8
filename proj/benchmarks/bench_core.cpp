#include <benchmark/benchmark.h>

#include <memory>

#include "hodgelab/catalog.hpp"
#include "hodgelab/derham.hpp"
#include "hodgelab/doubling.hpp"
#include "hodgelab/hodge.hpp"
#include "hodgelab/rng.hpp"

using namespace hodgelab;

namespace {

struct TorusFixture {
  CatalogMesh mesh;
  std::unique_ptr<GeometryResolver> res;
  BoundaryLabeling labels;
  CochainMetric metric;

  explicit TorusFixture(int n) {
    mesh = make_catalog_mesh("torus-" + std::to_string(n) + "x" + std::to_string(n));
    res = std::make_unique<GeometryResolver>(mesh.complex, mesh.geometry);
    labels = make_labeling(mesh.complex, SimplexSet::empty(mesh.complex));
    metric = build_metric(mesh.complex, res.get(), MetricKind::whitney);
  }
};

void BM_WhitneyAssembly(benchmark::State& state) {
  const TorusFixture fix(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Eigen::MatrixXd g = whitney_gram(*fix.res, 1);
    benchmark::DoNotOptimize(g.data());
  }
  state.SetComplexityN(fix.mesh.complex.count(1));
}
BENCHMARK(BM_WhitneyAssembly)->Arg(4)->Arg(8)->Arg(16)->Complexity();

void BM_LaplacianSpectrum(benchmark::State& state) {
  const TorusFixture fix(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    HodgeSolver solver(fix.mesh.complex, fix.labels, fix.metric);
    benchmark::DoNotOptimize(solver.spectrum(1).lambda1);
  }
  state.SetComplexityN(fix.mesh.complex.count(1));
}
BENCHMARK(BM_LaplacianSpectrum)->Arg(4)->Arg(8)->Arg(16)->Complexity();

void BM_HodgeDecompose(benchmark::State& state) {
  const TorusFixture fix(static_cast<int>(state.range(0)));
  HodgeSolver solver(fix.mesh.complex, fix.labels, fix.metric);
  Rng rng(1);
  const Cochain w = solver.embed(1, rng.gaussian_vector(solver.reduced_dim(1)));
  solver.decompose(w);  // warm the per-degree caches
  for (auto _ : state) {
    const HodgeDecomposition dec = solver.decompose(w);
    benchmark::DoNotOptimize(dec.residual);
  }
  state.SetComplexityN(fix.mesh.complex.count(1));
}
BENCHMARK(BM_HodgeDecompose)->Arg(4)->Arg(8)->Arg(16)->Complexity();

void BM_HeatFlow(benchmark::State& state) {
  const TorusFixture fix(8);
  HodgeSolver solver(fix.mesh.complex, fix.labels, fix.metric);
  Rng rng(2);
  const Cochain w = solver.embed(1, rng.gaussian_vector(solver.reduced_dim(1)));
  solver.heat_flow(w, 0.1);  // warm the eigendecomposition
  for (auto _ : state) {
    const Cochain flowed = solver.heat_flow(w, 0.5);
    benchmark::DoNotOptimize(flowed.values.data());
  }
}
BENCHMARK(BM_HeatFlow);

void BM_DoubleComplex(benchmark::State& state) {
  const CatalogMesh mesh = make_catalog_mesh("annulus-8x2");
  const GeometryResolver res(mesh.complex, mesh.geometry);
  const auto labels =
      make_labeling(mesh.complex, resolve_selector(mesh.complex, mesh.geometry, "boundary"));
  for (auto _ : state) {
    const QuadrupleComplex q = double_complex(mesh.complex, labels, &res);
    benchmark::DoNotOptimize(q.W.count(0));
  }
}
BENCHMARK(BM_DoubleComplex);

void BM_DerhamMap(benchmark::State& state) {
  const TorusFixture fix(16);
  const AnalyticForm form = make_named_form("sinpx-dy", 2);
  for (auto _ : state) {
    const Cochain a = derham_map(*fix.res, form, 4);
    benchmark::DoNotOptimize(a.values.data());
  }
}
BENCHMARK(BM_DerhamMap);

}  // namespace

BENCHMARK_MAIN();
