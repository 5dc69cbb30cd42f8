#ifndef HODGELAB_CLI_HPP
#define HODGELAB_CLI_HPP

#include <optional>
#include <string>
#include <vector>

#include "hodgelab/report.hpp"
#include "hodgelab/whitney.hpp"

namespace hodgelab {

/// One command per process.  Commands: betti, hodge, spectrum, heat, double,
/// derham, quality, bochner, catalog.
struct RunConfig {
  std::string command;
  std::string catalog;        // built-in mesh name
  std::string mesh_path;      // or a mesh file
  std::string m1_selector = "none";
  std::string m2_selector;    // optional; default is the rest of the boundary
  MetricKind metric = MetricKind::whitney;
  double rank_tol = 1e-9;
  int quad_order = 4;
  bool json = false;
  int threads = 1;
  bool timings = false;       // timings break byte determinism; off by default
  unsigned long long seed = 0;
  std::vector<double> heat_times = {0.1, 1.0, 10.0};
  std::vector<std::string> forms;
  int degree = -1;            // -1: all degrees where meaningful
  std::string samples_path;   // bochner input
  bool infinite_volume = false;
  bool absolute = false;
  bool rw_attested = false;
  std::optional<double> nu0, K0, c0;  // quality thresholds
};

struct RunResult {
  Report report;
  /// Mesh document produced by `catalog` and `double`; printed verbatim in
  /// text mode so the output re-parses as a mesh.
  std::optional<std::string> document;
};

RunResult run(const RunConfig& config);

/// Renders the result per config (document passthrough or report text/json).
std::string render(const RunConfig& config, const RunResult& result);

}  // namespace hodgelab

#endif
