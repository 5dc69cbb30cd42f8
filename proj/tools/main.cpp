#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hodgelab/cli.hpp"
#include "hodgelab/errors.hpp"

namespace {

const char* diagnostic_name(hodgelab::Diagnostic code) {
  switch (code) {
    case hodgelab::Diagnostic::usage: return "usage";
    case hodgelab::Diagnostic::parse: return "parse";
    case hodgelab::Diagnostic::label: return "label";
    case hodgelab::Diagnostic::geometry: return "geometry";
    case hodgelab::Diagnostic::non_manifold: return "non-manifold";
    case hodgelab::Diagnostic::invalid_input: return "invalid-input";
    case hodgelab::Diagnostic::numerical: return "numerical";
  }
  return "unknown";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hodgelab: discrete L2 Hodge theory on boundary-labeled triangulations"};
  app.require_subcommand(1);

  hodgelab::RunConfig cfg;
  std::string metric_name = "whitney";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--catalog", cfg.catalog, "built-in mesh name");
    sub->add_option("--mesh", cfg.mesh_path, "mesh file path");
    sub->add_option("--m1", cfg.m1_selector,
                    "relative boundary selector: none|boundary|inner|outer|component:<i>|file");
    sub->add_option("--m2", cfg.m2_selector, "absolute boundary selector (default: the rest)");
    sub->add_option("--metric", metric_name, "cochain inner product: whitney|lumped")
        ->check(CLI::IsMember({"whitney", "lumped"}));
    sub->add_option("--tol-rank", cfg.rank_tol, "rank tolerance for kernel detection");
    sub->add_option("--quad-order", cfg.quad_order, "quadrature order")->check(CLI::Range(1, 12));
    sub->add_flag("--json", cfg.json, "emit a JSON report");
    sub->add_option("--threads", cfg.threads, "worker threads (results are thread-count independent)");
    sub->add_flag("--timings", cfg.timings, "append wall-clock timings (breaks byte determinism)");
    sub->add_option("--seed", cfg.seed, "seed for randomized probe cochains");
    return sub;
  };

  add_common(app.add_subcommand("betti", "Betti numbers of the relative complex"));
  add_common(app.add_subcommand("hodge", "Hodge decomposition of a seeded random cochain"))
      ->add_option("--p", cfg.degree, "restrict to one degree");
  add_common(app.add_subcommand("spectrum", "Laplacian spectra per degree"))
      ->add_option("--p", cfg.degree, "restrict to one degree");
  {
    auto* heat = add_common(app.add_subcommand("heat", "heat flow decay against the spectral bound"));
    heat->add_option("--p", cfg.degree, "cochain degree (default 1)");
    heat->add_option("--t", cfg.heat_times, "time grid");
  }
  add_common(app.add_subcommand("double", "glue the V4 quadruple and report its eigenspace Betti numbers"));
  {
    auto* derham = add_common(app.add_subcommand("derham", "integrate named forms and pair with the harmonic basis"));
    derham->add_option("--form", cfg.forms, "named forms: const|dx|dy|x-dy|dtheta|sinpx-dy");
  }
  {
    auto* quality = add_common(app.add_subcommand("quality", "mesh quality constants"));
    quality->add_option("--nu0", [&cfg](const CLI::results_t& r) { cfg.nu0 = std::stod(r[0]); return true; },
                        "minimum top-simplex volume threshold");
    quality->add_option("--K0", [&cfg](const CLI::results_t& r) { cfg.K0 = std::stod(r[0]); return true; },
                        "maximum diameter threshold");
    quality->add_option("--c0", [&cfg](const CLI::results_t& r) { cfg.c0 = std::stod(r[0]); return true; },
                        "maximum barycentric gradient threshold");
  }
  {
    auto* bochner = app.add_subcommand("bochner", "curvature-side vanishing screen");
    bochner->add_option("--samples", cfg.samples_path, "sample file: 'b l1 ... l_{m-1}' / 'i ric'")
        ->required();
    bochner->add_option("--p", cfg.degree, "form degree")->required();
    bochner->add_flag("--infinite-volume", cfg.infinite_volume, "assert infinite volume");
    bochner->add_flag("--absolute", cfg.absolute, "screen the absolute harmonic space (S_{m-p})");
    bochner->add_flag("--rw-nonpos", cfg.rw_attested,
                      "attest that the interior Weitzenboeck term is nonpositive");
    bochner->add_flag("--json", cfg.json, "emit a JSON report");
  }
  add_common(app.add_subcommand("catalog", "emit a built-in mesh"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : static_cast<int>(hodgelab::Diagnostic::usage);
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.metric = metric_name == "lumped" ? hodgelab::MetricKind::lumped
                                       : hodgelab::MetricKind::whitney;
  try {
    const hodgelab::RunResult result = hodgelab::run(cfg);
    std::cout << hodgelab::render(cfg, result);
    return 0;
  } catch (const hodgelab::Error& e) {
    std::cerr << "error[" << diagnostic_name(e.code()) << "]: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << "\n";
    return 70;
  }
}
