#ifndef HODGELAB_REPORT_HPP
#define HODGELAB_REPORT_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hodgelab {

/// One entry of a report section.  Numeric entries that represent checks
/// carry the tolerance they were judged against.
struct ReportValue {
  std::variant<long long, double, std::string, std::vector<long long>, std::vector<double>> data;
  std::optional<double> tolerance;
};

struct ReportSection {
  std::string name;
  std::vector<std::pair<std::string, ReportValue>> entries;
};

/// Machine-readable run report: config echo plus per-command payload.
/// Rendering is byte-deterministic for a fixed configuration.
struct Report {
  std::vector<ReportSection> sections;

  ReportSection& section(const std::string& name);
  void set(const std::string& section, const std::string& key, long long value);
  void set(const std::string& section, const std::string& key, int value);
  void set(const std::string& section, const std::string& key, double value,
           std::optional<double> tolerance = std::nullopt);
  void set(const std::string& section, const std::string& key, const std::string& value);
  void set(const std::string& section, const std::string& key, const std::vector<long long>& value);
  void set(const std::string& section, const std::string& key, const std::vector<int>& value);
  void set(const std::string& section, const std::string& key, const std::vector<double>& value,
           std::optional<double> tolerance = std::nullopt);

  std::string to_text() const;
  std::string to_json() const;
};

}  // namespace hodgelab

#endif
