#include "hodgelab/mesh_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hodgelab {

namespace {

struct Tokenizer {
  const std::string& line;
  int lineno;
  size_t pos = 0;

  void skip_space() {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= line.size();
  }
  std::string_view next(const char* what) {
    skip_space();
    if (pos >= line.size())
      throw ParseError(std::string("expected ") + what, lineno, static_cast<int>(pos) + 1);
    const size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    return std::string_view(line).substr(start, pos - start);
  }
  int next_int(const char* what) {
    skip_space();
    const int col = static_cast<int>(pos) + 1;
    const std::string_view tok = next(what);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError(std::string("invalid integer for ") + what + ": '" + std::string(tok) + "'",
                       lineno, col);
    return value;
  }
  double next_double(const char* what) {
    skip_space();
    const int col = static_cast<int>(pos) + 1;
    const std::string_view tok = next(what);
    try {
      size_t used = 0;
      const double value = std::stod(std::string(tok), &used);
      if (used != tok.size()) throw std::invalid_argument("trailing");
      return value;
    } catch (const std::exception&) {
      throw ParseError(std::string("invalid number for ") + what + ": '" + std::string(tok) + "'",
                       lineno, col);
    }
  }
};

void format_double(std::ostream& out, double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  out << buf;
}

}  // namespace

BoundaryLabeling MeshDocument::labeling() const {
  if (!has_m1_records && !has_m2_records) return make_labeling(complex, SimplexSet::empty(complex));
  if (has_m2_records) {
    BoundaryLabeling explicit_labels;
    explicit_labels.m1 = m1;
    explicit_labels.m2 = m2;
    validate_labeling(complex, explicit_labels);
    return explicit_labels;
  }
  return make_labeling(complex, m1);
}

MeshDocument parse_mesh(std::istream& in) {
  std::vector<std::pair<int, Eigen::VectorXd>> vertices;
  std::vector<std::vector<int>> tops;
  std::vector<std::vector<int>> m1_facets, m2_facets;
  std::vector<std::tuple<int, int, Eigen::VectorXd>> charts;
  std::vector<std::pair<int, int>> p1, p2;

  std::string line;
  int lineno = 0;
  int coord_dim = -1;
  size_t top_width = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Tokenizer tok{line, lineno};
    if (tok.done()) continue;
    const std::string_view kind = tok.next("record type");
    if (kind[0] == '#') continue;
    if (kind == "v") {
      const int id = tok.next_int("vertex id");
      std::vector<double> xs;
      while (!tok.done()) xs.push_back(tok.next_double("coordinate"));
      if (!xs.empty()) {
        if (coord_dim == -1) coord_dim = static_cast<int>(xs.size());
        if (coord_dim != static_cast<int>(xs.size()))
          throw ParseError("inconsistent coordinate dimension", lineno, 1);
      }
      Eigen::VectorXd x(xs.size());
      for (size_t i = 0; i < xs.size(); ++i) x(i) = xs[i];
      vertices.emplace_back(id, std::move(x));
    } else if (kind == "s") {
      std::vector<int> verts;
      while (!tok.done()) verts.push_back(tok.next_int("vertex id"));
      if (verts.empty()) throw ParseError("empty top simplex", lineno, 1);
      if (top_width == 0) top_width = verts.size();
      tops.push_back(std::move(verts));
    } else if (kind == "m1" || kind == "m2") {
      std::vector<int> verts;
      while (!tok.done()) verts.push_back(tok.next_int("vertex id"));
      if (verts.empty()) throw ParseError("empty boundary facet", lineno, 1);
      std::sort(verts.begin(), verts.end());
      (kind == "m1" ? m1_facets : m2_facets).push_back(std::move(verts));
    } else if (kind == "c") {
      const int top = tok.next_int("top simplex index");
      const int slot = tok.next_int("vertex slot");
      std::vector<double> xs;
      while (!tok.done()) xs.push_back(tok.next_double("coordinate"));
      Eigen::VectorXd x(xs.size());
      for (size_t i = 0; i < xs.size(); ++i) x(i) = xs[i];
      charts.emplace_back(top, slot, std::move(x));
    } else if (kind == "p1" || kind == "p2") {
      const int v = tok.next_int("vertex id");
      const int image = tok.next_int("image vertex id");
      (kind == "p1" ? p1 : p2).emplace_back(v, image);
    } else {
      throw ParseError("unknown record type '" + std::string(kind) + "'", lineno, 1);
    }
  }
  if (tops.empty()) throw ParseError("mesh has no top simplices", lineno + 1, 1);

  MeshDocument doc;
  doc.complex = build_complex(tops);

  doc.geometry.ambient_dim = coord_dim > 0 ? coord_dim : 0;
  for (auto& [id, x] : vertices)
    if (x.size() > 0) {
      if (doc.complex.index_of(0, {id}) < 0)
        throw ParseError("vertex " + std::to_string(id) + " does not occur in any top simplex", 0, 1);
      doc.geometry.coords[id] = x;
    }
  for (auto& [top, slot, x] : charts) {
    if (top < 0 || top >= doc.complex.count(doc.complex.top_dimension()))
      throw ParseError("chart record for unknown top simplex " + std::to_string(top), 0, 1);
    auto& chart = doc.geometry.charts[top];
    if (chart.empty()) {
      // seed the chart from the global coordinates
      const auto& verts = doc.complex.simplex(doc.complex.top_dimension(), top).vertices;
      for (int v : verts) {
        auto it = doc.geometry.coords.find(v);
        chart.push_back(it == doc.geometry.coords.end() ? Eigen::VectorXd() : it->second);
      }
    }
    if (slot < 0 || slot >= static_cast<int>(chart.size()))
      throw ParseError("chart slot out of range", 0, 1);
    chart[slot] = x;
  }

  auto facet_set = [&](const std::vector<std::vector<int>>& facets) {
    SimplexSet set = SimplexSet::empty(doc.complex);
    const int fd = doc.complex.top_dimension() - 1;
    for (const auto& verts : facets) {
      if (static_cast<int>(verts.size()) != fd + 1)
        throw ParseError("boundary facet arity does not match the top dimension", 0, 1);
      const int idx = doc.complex.index_of(fd, verts);
      if (idx < 0) throw ParseError("boundary facet is not a simplex of the mesh", 0, 1);
      set.insert(fd, idx);
    }
    set.close_under_faces(doc.complex);
    return set;
  };
  doc.has_m1_records = !m1_facets.empty();
  doc.has_m2_records = !m2_facets.empty();
  doc.m1 = facet_set(m1_facets);
  doc.m2 = facet_set(m2_facets);

  auto perm_table = [&](const std::vector<std::pair<int, int>>& entries) {
    std::vector<int> table(doc.complex.count(0), -1);
    for (const auto& [v, image] : entries) {
      const int vi = doc.complex.index_of(0, {v});
      const int wi = doc.complex.index_of(0, {image});
      if (vi < 0 || wi < 0) throw ParseError("permutation record names an unknown vertex", 0, 1);
      table[vi] = wi;
    }
    for (int x : table)
      if (x < 0) throw ParseError("permutation table is incomplete", 0, 1);
    return table;
  };
  if (!p1.empty()) doc.tau1 = perm_table(p1);
  if (!p2.empty()) doc.tau2 = perm_table(p2);
  return doc;
}

MeshDocument parse_mesh_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Diagnostic::usage, "cannot open mesh file: " + path);
  return parse_mesh(in);
}

void emit_mesh(std::ostream& out, const SimplicialComplex& cx, const Geometry* geom,
               const BoundaryLabeling* labels, const std::vector<int>* tau1,
               const std::vector<int>* tau2) {
  const int m = cx.top_dimension();
  for (int i = 0; i < cx.count(0); ++i) {
    const int id = cx.simplex(0, i).vertices[0];
    out << "v " << id;
    if (geom) {
      auto it = geom->coords.find(id);
      if (it != geom->coords.end())
        for (int k = 0; k < it->second.size(); ++k) {
          out << ' ';
          format_double(out, it->second(k));
        }
    }
    out << '\n';
  }
  for (int t = 0; t < cx.count(m); ++t) {
    out << "s";
    for (int v : cx.simplex(m, t).vertices) out << ' ' << v;
    out << '\n';
  }
  if (geom) {
    for (const auto& [top, chart] : geom->charts) {
      const auto& verts = cx.simplex(m, top).vertices;
      for (size_t slot = 0; slot < chart.size(); ++slot) {
        auto it = geom->coords.find(verts[slot]);
        const bool differs = it == geom->coords.end() || it->second != chart[slot];
        if (!differs) continue;
        out << "c " << top << ' ' << slot;
        for (int k = 0; k < chart[slot].size(); ++k) {
          out << ' ';
          format_double(out, chart[slot](k));
        }
        out << '\n';
      }
    }
  }
  if (labels && m >= 1) {
    for (int which = 1; which <= 2; ++which) {
      const SimplexSet& set = which == 1 ? labels->m1 : labels->m2;
      for (int i = 0; i < cx.count(m - 1); ++i) {
        if (!set.contains(m - 1, i)) continue;
        out << 'm' << which;
        for (int v : cx.simplex(m - 1, i).vertices) out << ' ' << v;
        out << '\n';
      }
    }
  }
  auto emit_perm = [&](const char* name, const std::vector<int>& table) {
    for (int i = 0; i < cx.count(0); ++i)
      out << name << ' ' << cx.simplex(0, i).vertices[0] << ' '
          << cx.simplex(0, table[i]).vertices[0] << '\n';
  };
  if (tau1) emit_perm("p1", *tau1);
  if (tau2) emit_perm("p2", *tau2);
}

}  // namespace hodgelab
