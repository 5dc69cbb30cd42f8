#include "hodgelab/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace hodgelab {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

ReportSection& Report::section(const std::string& name) {
  for (auto& s : sections)
    if (s.name == name) return s;
  sections.push_back(ReportSection{name, {}});
  return sections.back();
}

void Report::set(const std::string& sec, const std::string& key, long long value) {
  section(sec).entries.emplace_back(key, ReportValue{value, std::nullopt});
}
void Report::set(const std::string& sec, const std::string& key, int value) {
  set(sec, key, static_cast<long long>(value));
}
void Report::set(const std::string& sec, const std::string& key, double value,
                 std::optional<double> tolerance) {
  section(sec).entries.emplace_back(key, ReportValue{value, tolerance});
}
void Report::set(const std::string& sec, const std::string& key, const std::string& value) {
  section(sec).entries.emplace_back(key, ReportValue{value, std::nullopt});
}
void Report::set(const std::string& sec, const std::string& key,
                 const std::vector<long long>& value) {
  section(sec).entries.emplace_back(key, ReportValue{value, std::nullopt});
}
void Report::set(const std::string& sec, const std::string& key, const std::vector<int>& value) {
  std::vector<long long> v(value.begin(), value.end());
  set(sec, key, v);
}
void Report::set(const std::string& sec, const std::string& key, const std::vector<double>& value,
                 std::optional<double> tolerance) {
  section(sec).entries.emplace_back(key, ReportValue{value, tolerance});
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& sec : sections) {
    out << "[" << sec.name << "]\n";
    for (const auto& [key, value] : sec.entries) {
      out << key << " = ";
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, long long>) {
              out << v;
            } else if constexpr (std::is_same_v<T, double>) {
              out << fmt(v);
            } else if constexpr (std::is_same_v<T, std::string>) {
              out << v;
            } else if constexpr (std::is_same_v<T, std::vector<long long>>) {
              for (size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
            } else {
              for (size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << fmt(v[i]);
            }
          },
          value.data);
      if (value.tolerance) out << "  (tol " << fmt(*value.tolerance) << ")";
      out << "\n";
    }
  }
  return out.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json doc;
  for (const auto& sec : sections) {
    nlohmann::ordered_json node;
    for (const auto& [key, value] : sec.entries) {
      nlohmann::ordered_json item;
      std::visit([&](const auto& v) { item["value"] = v; }, value.data);
      if (value.tolerance) item["tolerance"] = *value.tolerance;
      node[key] = value.tolerance ? item : item["value"];
    }
    doc[sec.name] = node;
  }
  return doc.dump(2) + "\n";
}

}  // namespace hodgelab
