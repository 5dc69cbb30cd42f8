#include "hodgelab/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "hodgelab/catalog.hpp"
#include "hodgelab/complex.hpp"
#include "hodgelab/curvature.hpp"
#include "hodgelab/derham.hpp"
#include "hodgelab/doubling.hpp"
#include "hodgelab/forms.hpp"
#include "hodgelab/geometry.hpp"
#include "hodgelab/hodge.hpp"
#include "hodgelab/mesh_io.hpp"
#include "hodgelab/rng.hpp"

namespace hodgelab {

namespace {

struct LoadedMesh {
  SimplicialComplex complex;
  Geometry geometry;
  BoundaryLabeling labels;
  std::optional<std::vector<int>> tau1, tau2;
  std::string source;
};

LoadedMesh load_mesh(const RunConfig& cfg) {
  LoadedMesh out;
  if (!cfg.catalog.empty() && !cfg.mesh_path.empty())
    throw Error(Diagnostic::usage, "give either --catalog or --mesh, not both");
  if (!cfg.catalog.empty()) {
    CatalogMesh cat = make_catalog_mesh(cfg.catalog);
    out.complex = std::move(cat.complex);
    out.geometry = std::move(cat.geometry);
    out.source = "catalog:" + cfg.catalog;
  } else if (!cfg.mesh_path.empty()) {
    MeshDocument doc = parse_mesh_file(cfg.mesh_path);
    out.complex = std::move(doc.complex);
    out.geometry = std::move(doc.geometry);
    out.tau1 = doc.tau1;
    out.tau2 = doc.tau2;
    out.source = "file:" + cfg.mesh_path;
    if (cfg.m1_selector == "file" || (doc.has_m1_records && cfg.m1_selector == "none")) {
      out.labels = doc.labeling();
      return out;
    }
  } else {
    throw Error(Diagnostic::usage, "no mesh given: use --catalog <name> or --mesh <path>");
  }
  const SimplexSet m1 = resolve_selector(out.complex, out.geometry, cfg.m1_selector);
  if (cfg.m2_selector.empty()) {
    out.labels = make_labeling(out.complex, m1);
  } else {
    BoundaryLabeling labels;
    labels.m1 = m1;
    labels.m2 = resolve_selector(out.complex, out.geometry, cfg.m2_selector);
    validate_labeling(out.complex, labels);
    out.labels = labels;
  }
  return out;
}

struct MetricBundle {
  std::optional<GeometryResolver> resolver;
  CochainMetric metric;
  std::string description;
};

MetricBundle build_metric_bundle(const LoadedMesh& mesh, const RunConfig& cfg) {
  MetricBundle out;
  if (mesh.geometry.has_coordinates()) {
    out.resolver.emplace(mesh.complex, mesh.geometry);
    out.metric = build_metric(mesh.complex, &*out.resolver, cfg.metric);
    out.description = cfg.metric == MetricKind::whitney ? "whitney" : "lumped";
  } else {
    out.metric = build_metric(mesh.complex, nullptr, MetricKind::identity);
    out.description = "identity (no geometry)";
  }
  return out;
}

void echo_config(Report& report, const RunConfig& cfg, const LoadedMesh& mesh,
                 const std::string& metric_desc) {
  report.set("config", "command", cfg.command);
  report.set("config", "mesh", mesh.source);
  report.set("config", "m1", cfg.m1_selector);
  if (!cfg.m2_selector.empty()) report.set("config", "m2", cfg.m2_selector);
  report.set("config", "metric", metric_desc);
  report.set("config", "rank_tolerance", cfg.rank_tol);
  report.set("config", "quad_order", static_cast<long long>(cfg.quad_order));
  report.set("config", "threads", static_cast<long long>(cfg.threads));
  report.set("config", "fvector", mesh.complex.f_vector());
}

Cochain random_relative_cochain(const HodgeSolver& solver, int p, Rng& rng) {
  return solver.embed(p, rng.gaussian_vector(solver.reduced_dim(p)));
}

void run_betti(const RunConfig& cfg, const LoadedMesh& mesh, const MetricBundle& bundle,
               Report& report) {
  HodgeSolver solver(mesh.complex, mesh.labels, bundle.metric, cfg.rank_tol);
  const std::vector<int> betti = solver.betti_table();
  report.set("betti", "table", betti);
  int chi_b = 0, sign = 1;
  for (size_t p = 0; p < betti.size(); ++p, sign = -sign) chi_b += sign * betti[p];
  report.set("betti", "euler_from_betti", static_cast<long long>(chi_b));
  report.set("betti", "euler_from_fvector",
             static_cast<long long>(euler_characteristic(mesh.complex, mesh.labels)));
  for (int p = 0; p <= solver.top_dimension(); ++p)
    if (solver.spectrum(p).rank_tolerance_warning)
      report.set("betti", "rank_warning_degree_" + std::to_string(p),
                 std::string("eigenvalue near the zero cutoff"));
  if (mesh.tau1 && mesh.tau2) {
    std::vector<int> mp;
    for (int p = 0; p <= solver.top_dimension(); ++p)
      mp.push_back(minusplus_betti(mesh.complex, bundle.metric, *mesh.tau1, *mesh.tau2, p,
                                   cfg.rank_tol));
    report.set("betti", "minusplus_table", mp);
  }
}

void run_spectrum(const RunConfig& cfg, const LoadedMesh& mesh, const MetricBundle& bundle,
                  Report& report) {
  HodgeSolver solver(mesh.complex, mesh.labels, bundle.metric, cfg.rank_tol);
  for (int p = 0; p <= solver.top_dimension(); ++p) {
    if (cfg.degree >= 0 && p != cfg.degree) continue;
    const SpectralData s = solver.spectrum(p);
    const std::string sec = "spectrum.p" + std::to_string(p);
    report.set(sec, "dimension", static_cast<long long>(s.eigenvalues.size()));
    report.set(sec, "harmonic_dim", static_cast<long long>(s.harmonic_dim));
    if (s.eigenvalues.size() > 0) {
      report.set(sec, "min", s.eigenvalues(0));
      report.set(sec, "max", s.eigenvalues(s.eigenvalues.size() - 1));
    }
    report.set(sec, "lambda1", s.lambda1, cfg.rank_tol);
    if (s.rank_tolerance_warning)
      report.set(sec, "rank_warning", std::string("eigenvalue near the zero cutoff"));
  }
}

void run_hodge(const RunConfig& cfg, const LoadedMesh& mesh, const MetricBundle& bundle,
               Report& report) {
  HodgeSolver solver(mesh.complex, mesh.labels, bundle.metric, cfg.rank_tol);
  Rng rng(cfg.seed);
  for (int p = 0; p <= solver.top_dimension(); ++p) {
    if (cfg.degree >= 0 && p != cfg.degree) continue;
    if (solver.reduced_dim(p) == 0) continue;
    const Cochain omega = random_relative_cochain(solver, p, rng);
    const HodgeDecomposition dec = solver.decompose(omega);
    const std::string sec = "hodge.p" + std::to_string(p);
    const Eigen::VectorXd h = solver.reduce(dec.harmonic);
    const Eigen::VectorXd e = solver.reduce(dec.exact);
    const Eigen::VectorXd c = solver.reduce(dec.coexact);
    report.set(sec, "norm_harmonic", solver.norm(p, h));
    report.set(sec, "norm_exact", solver.norm(p, e));
    report.set(sec, "norm_coexact", solver.norm(p, c));
    report.set(sec, "residual", dec.residual, 1e-9);
    const double n2 = std::pow(solver.norm(p, solver.reduce(omega)), 2);
    const double ortho = (std::abs(solver.inner(p, h, e)) + std::abs(solver.inner(p, h, c)) +
                          std::abs(solver.inner(p, e, c))) /
                         (n2 > 0 ? n2 : 1.0);
    report.set(sec, "orthogonality", ortho, 1e-9);
  }
}

void run_heat(const RunConfig& cfg, const LoadedMesh& mesh, const MetricBundle& bundle,
              Report& report) {
  HodgeSolver solver(mesh.complex, mesh.labels, bundle.metric, cfg.rank_tol);
  Rng rng(cfg.seed);
  const int p = cfg.degree >= 0 ? cfg.degree : std::min(1, solver.top_dimension());
  if (solver.reduced_dim(p) == 0) throw InvalidInput("empty relative cochain space");
  const Cochain omega = random_relative_cochain(solver, p, rng);
  const std::string sec = "heat.p" + std::to_string(p);
  for (double t : cfg.heat_times) {
    const HodgeSolver::HeatDecay decay = solver.heat_decay(omega, t);
    if (t == cfg.heat_times.front()) {
      report.set(sec, "lambda1", decay.lambda1);
      report.set(sec, "initial_distance", decay.base);
    }
    const double bound = std::exp(-decay.lambda1 * t) * decay.base;
    std::ostringstream key;
    key << "t=" << t;
    report.set(sec, "distance_" + key.str(), decay.distance, bound * (1 + 1e-8));
  }
}

void run_quality(const RunConfig& cfg, const LoadedMesh& mesh, const MetricBundle& bundle,
                 Report& report) {
  if (!bundle.resolver) throw GeometryError("quality needs geometry");
  const MeshQualityReport q = mesh_quality(*bundle.resolver);
  report.set("quality", "nu", q.nu);
  report.set("quality", "K", q.K);
  report.set("quality", "c", q.c);
  report.set("quality", "fvector", mesh.complex.f_vector());
  if (cfg.nu0 && cfg.K0 && cfg.c0) {
    const bool ok = validate_g_bounded(q, *cfg.nu0, *cfg.K0, *cfg.c0);
    report.set("quality", "g_bounded", std::string(ok ? "true" : "false"));
  }
}

void run_double(const RunConfig& cfg, const LoadedMesh& mesh, const MetricBundle& bundle,
                Report& report, RunResult& result) {
  const QuadrupleComplex q =
      double_complex(mesh.complex, mesh.labels,
                     bundle.resolver ? &*bundle.resolver : nullptr, cfg.metric);
  report.set("double", "fvector", q.W.f_vector());
  std::vector<int> mp;
  for (int p = 0; p <= q.W.top_dimension(); ++p) mp.push_back(minusplus_betti(q, p, cfg.rank_tol));
  report.set("double", "minusplus_betti", mp);
  std::ostringstream mesh_text;
  emit_mesh(mesh_text, q.W, nullptr, nullptr, &q.tau1_vertices, &q.tau2_vertices);
  result.document = mesh_text.str();
}

void run_catalog(const LoadedMesh& mesh, Report& report, RunResult& result) {
  report.set("catalog", "fvector", mesh.complex.f_vector());
  std::ostringstream mesh_text;
  emit_mesh(mesh_text, mesh.complex, &mesh.geometry, &mesh.labels);
  result.document = mesh_text.str();
}

void run_derham(const RunConfig& cfg, const LoadedMesh& mesh, const MetricBundle& bundle,
                Report& report) {
  if (!bundle.resolver) throw GeometryError("derham needs geometry");
  std::vector<std::string> names = cfg.forms;
  if (names.empty()) names = {"dx", "dy"};
  std::vector<AnalyticForm> forms;
  for (const auto& n : names) forms.push_back(make_named_form(n, bundle.resolver->ambient_dim()));
  const int p = forms.front().degree;
  for (const auto& f : forms)
    if (f.degree != p) throw InvalidInput("derham forms must share one degree");
  HodgeSolver solver(mesh.complex, mesh.labels, bundle.metric, cfg.rank_tol);
  const PairingResult pairing =
      harmonic_pairing(solver, *bundle.resolver, forms, p, cfg.quad_order);
  report.set("derham", "degree", static_cast<long long>(p));
  report.set("derham", "betti", static_cast<long long>(solver.betti(p)));
  report.set("derham", "pairing_rank", static_cast<long long>(pairing.rank));
  std::vector<double> sv(pairing.singular_values.data(),
                         pairing.singular_values.data() + pairing.singular_values.size());
  report.set("derham", "singular_values", sv);
  for (size_t j = 0; j < forms.size(); ++j) {
    std::vector<double> row(pairing.matrix.cols());
    for (int k = 0; k < pairing.matrix.cols(); ++k) row[k] = pairing.matrix(j, k);
    report.set("derham", "pairing_" + names[j], row);
    if (forms[j].has_derivative() && p < mesh.complex.top_dimension())
      report.set("derham", "stokes_residual_" + names[j],
                 stokes_residual(*bundle.resolver, bundle.metric, forms[j], cfg.quad_order));
  }
}

std::vector<CurvatureSample> parse_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Diagnostic::usage, "cannot open samples file: " + path);
  std::vector<CurvatureSample> samples;
  std::string line;
  int lineno = 0;
  int m = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream is(line);
    std::string kind;
    if (!(is >> kind) || kind[0] == '#') continue;
    CurvatureSample s;
    if (kind == "b") {
      std::vector<double> lambda;
      double x;
      while (is >> x) lambda.push_back(x);
      if (lambda.empty()) throw ParseError("boundary sample needs eigenvalues", lineno, 1);
      if (m == 0) m = static_cast<int>(lambda.size()) + 1;
      s.manifold_dim = m;
      Eigen::VectorXd v(lambda.size());
      for (size_t i = 0; i < lambda.size(); ++i) v(i) = lambda[i];
      s.shape_eigenvalues = v;
    } else if (kind == "i") {
      double ric;
      if (!(is >> ric)) throw ParseError("interior sample needs a Ricci lower bound", lineno, 1);
      s.ricci_lower = ric;
      s.manifold_dim = m;  // patched below when m becomes known
    } else {
      throw ParseError("unknown sample record '" + kind + "'", lineno, 1);
    }
    samples.push_back(std::move(s));
  }
  if (m == 0) {
    // interior-only files: dimension is not derivable from the records
    throw ParseError("samples file has no boundary record to fix the dimension; "
                     "interior-only screens need at least one b record or --dim",
                     lineno + 1, 1);
  }
  for (auto& s : samples) s.manifold_dim = m;
  return samples;
}

void run_bochner(const RunConfig& cfg, Report& report) {
  if (cfg.samples_path.empty())
    throw Error(Diagnostic::usage, "bochner needs --samples <file>");
  if (cfg.degree < 1) throw Error(Diagnostic::usage, "bochner needs --p <degree>");
  const std::vector<CurvatureSample> samples = parse_samples(cfg.samples_path);
  BochnerOptions opt;
  opt.infinite_volume = cfg.infinite_volume;
  opt.absolute_variant = cfg.absolute;
  opt.interior_term_nonpositive_attested = cfg.rw_attested;
  const BochnerVerdict v = bochner_screen(samples, cfg.degree, opt);
  report.set("bochner", "degree", static_cast<long long>(v.degree));
  report.set("bochner", "variant", std::string(v.absolute ? "absolute" : "relative"));
  report.set("bochner", "conclusion",
             std::string(v.conclusion == BochnerVerdict::Conclusion::vanishes ? "vanishes"
                                                                              : "no-conclusion"));
  for (size_t i = 0; i < v.failed_preconditions.size(); ++i)
    report.set("bochner", "failed_" + std::to_string(i), v.failed_preconditions[i]);
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  Report& report = result.report;

  if (cfg.command == "bochner") {
    report.set("config", "command", cfg.command);
    run_bochner(cfg, report);
  } else {
    const LoadedMesh mesh = load_mesh(cfg);
    const MetricBundle bundle = build_metric_bundle(mesh, cfg);
    echo_config(report, cfg, mesh, bundle.description);
    if (cfg.command == "betti") run_betti(cfg, mesh, bundle, report);
    else if (cfg.command == "spectrum") run_spectrum(cfg, mesh, bundle, report);
    else if (cfg.command == "hodge") run_hodge(cfg, mesh, bundle, report);
    else if (cfg.command == "heat") run_heat(cfg, mesh, bundle, report);
    else if (cfg.command == "quality") run_quality(cfg, mesh, bundle, report);
    else if (cfg.command == "double") run_double(cfg, mesh, bundle, report, result);
    else if (cfg.command == "catalog") run_catalog(mesh, report, result);
    else if (cfg.command == "derham") run_derham(cfg, mesh, bundle, report);
    else throw Error(Diagnostic::usage, "unknown command: " + cfg.command);
  }

  if (cfg.timings) {
    const auto wall =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    report.set("timings", "wall_us", static_cast<long long>(wall.count()));
  }
  return result;
}

std::string render(const RunConfig& cfg, const RunResult& result) {
  if (result.document && !cfg.json) return *result.document;
  if (cfg.json) {
    if (result.document) {
      RunResult with_doc = result;
      with_doc.report.set("mesh_document", "text", *result.document);
      return with_doc.report.to_json();
    }
    return result.report.to_json();
  }
  return result.report.to_text();
}

}  // namespace hodgelab
