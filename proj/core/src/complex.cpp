#include "hodgelab/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hodgelab {

namespace {

std::string joined(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

}  // namespace

Simplex::Simplex(std::vector<int> verts) : vertices(std::move(verts)) {
  if (vertices.empty()) throw InvalidInput("simplex must have at least one vertex");
  for (size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i - 1] >= vertices[i])
      throw InvalidInput("simplex vertices must be strictly increasing: " + joined(vertices));
}

int SimplicialComplex::count(int dim) const {
  if (dim < 0 || dim > top_dimension()) return 0;
  return static_cast<int>(by_dim_[dim].size());
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
  static const std::vector<Simplex> none;
  if (dim < 0 || dim > top_dimension()) return none;
  return by_dim_[dim];
}

int SimplicialComplex::index_of(int dim, const std::vector<int>& vertices) const {
  if (dim < 0 || dim > top_dimension()) return -1;
  auto it = index_[dim].find(vertices);
  return it == index_[dim].end() ? -1 : it->second;
}

std::vector<int> SimplicialComplex::f_vector() const {
  std::vector<int> f;
  for (int d = 0; d <= top_dimension(); ++d) f.push_back(count(d));
  return f;
}

Eigen::MatrixXi SimplicialComplex::coboundary(int p) const {
  if (p < 0 || p >= top_dimension())
    throw InvalidInput("coboundary degree out of range: p=" + std::to_string(p));
  Eigen::MatrixXi d = Eigen::MatrixXi::Zero(count(p + 1), count(p));
  for (int i = 0; i < count(p + 1); ++i)
    for (const auto& [face, sign] : faces_[p + 1][i]) d(i, face) = sign;
  return d;
}

const std::vector<std::pair<int, int>>& SimplicialComplex::faces_of(int dim, int index) const {
  return faces_[dim][index];
}

const std::vector<int>& SimplicialComplex::cofacet_tops(int dim, int index) const {
  return tops_of_[dim][index];
}

bool SimplicialComplex::is_pure() const {
  for (int d = 0; d <= top_dimension(); ++d)
    for (int i = 0; i < count(d); ++i)
      if (tops_of_[d][i].empty()) return false;
  return true;
}

SimplicialComplex build_complex(const std::vector<std::vector<int>>& top_simplices) {
  if (top_simplices.empty()) throw InvalidInput("empty list of top simplices");
  const size_t width = top_simplices.front().size();
  const int m = static_cast<int>(width) - 1;

  std::vector<std::vector<int>> tops;
  std::set<std::vector<int>> seen;
  for (const auto& tuple : top_simplices) {
    if (tuple.size() != width)
      throw InvalidInput("inconsistent top dimension: expected " + std::to_string(width) +
                         " vertices, got " + std::to_string(tuple.size()));
    std::vector<int> sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidInput("top simplex has a repeated vertex: " + joined(tuple));
    if (!seen.insert(sorted).second)
      throw InvalidInput("duplicate top simplex: " + joined(sorted));
    tops.push_back(std::move(sorted));
  }

  // Generate all faces of all tops.
  std::vector<std::set<std::vector<int>>> levels(m + 1);
  for (const auto& t : tops) {
    const int n = static_cast<int>(t.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> face;
      for (int b = 0; b < n; ++b)
        if (mask & (1u << b)) face.push_back(t[b]);
      levels[face.size() - 1].insert(std::move(face));
    }
  }

  SimplicialComplex cx;
  cx.by_dim_.resize(m + 1);
  cx.index_.resize(m + 1);
  for (int d = 0; d <= m; ++d) {
    for (const auto& verts : levels[d]) {
      cx.index_[d][verts] = static_cast<int>(cx.by_dim_[d].size());
      cx.by_dim_[d].push_back(Simplex(verts));
    }
  }

  // Signed faces: dropping the i-th vertex carries (-1)^i.
  cx.faces_.resize(m + 1);
  cx.faces_[0].resize(cx.by_dim_[0].size());
  for (int d = 1; d <= m; ++d) {
    cx.faces_[d].resize(cx.by_dim_[d].size());
    for (size_t s = 0; s < cx.by_dim_[d].size(); ++s) {
      const auto& verts = cx.by_dim_[d][s].vertices;
      int sign = 1;
      for (int i = 0; i <= d; ++i, sign = -sign) {
        std::vector<int> face;
        face.reserve(d);
        for (int j = 0; j <= d; ++j)
          if (j != i) face.push_back(verts[j]);
        cx.faces_[d][s].emplace_back(cx.index_[d - 1].at(face), sign);
      }
    }
  }

  // Top cofacets of every simplex.
  cx.tops_of_.resize(m + 1);
  for (int d = 0; d <= m; ++d) cx.tops_of_[d].resize(cx.by_dim_[d].size());
  for (size_t t = 0; t < cx.by_dim_[m].size(); ++t) {
    const auto& verts = cx.by_dim_[m][t].vertices;
    const int n = m + 1;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> face;
      for (int b = 0; b < n; ++b)
        if (mask & (1u << b)) face.push_back(verts[b]);
      const int d = static_cast<int>(face.size()) - 1;
      cx.tops_of_[d][cx.index_[d].at(face)].push_back(static_cast<int>(t));
    }
  }
  return cx;
}

SimplexSet SimplexSet::empty(const SimplicialComplex& cx) {
  SimplexSet s;
  s.member.resize(cx.top_dimension() + 1);
  for (int d = 0; d <= cx.top_dimension(); ++d) s.member[d].assign(cx.count(d), 0);
  return s;
}

int SimplexSet::count(int dim) const {
  if (dim < 0 || dim >= static_cast<int>(member.size())) return 0;
  int c = 0;
  for (char x : member[dim]) c += x;
  return c;
}

int SimplexSet::total() const {
  int c = 0;
  for (size_t d = 0; d < member.size(); ++d) c += count(static_cast<int>(d));
  return c;
}

bool SimplexSet::is_face_closed(const SimplicialComplex& cx) const {
  for (int d = 1; d <= cx.top_dimension(); ++d)
    for (int i = 0; i < cx.count(d); ++i)
      if (contains(d, i))
        for (const auto& [face, sign] : cx.faces_of(d, i))
          if (!contains(d - 1, face)) return false;
  return true;
}

void SimplexSet::close_under_faces(const SimplicialComplex& cx) {
  for (int d = cx.top_dimension(); d >= 1; --d)
    for (int i = 0; i < cx.count(d); ++i)
      if (contains(d, i))
        for (const auto& [face, sign] : cx.faces_of(d, i)) insert(d - 1, face);
}

SimplexSet manifold_boundary(const SimplicialComplex& cx) {
  const int m = cx.top_dimension();
  if (!cx.is_pure()) throw InvalidInput("manifold boundary requires a pure complex");
  SimplexSet bd = SimplexSet::empty(cx);
  if (m == 0) return bd;
  for (int i = 0; i < cx.count(m - 1); ++i) {
    const size_t incident = cx.cofacet_tops(m - 1, i).size();
    if (incident >= 3)
      throw NonManifoldError("facet " + std::to_string(i) + " of dimension " +
                             std::to_string(m - 1) + " lies on " + std::to_string(incident) +
                             " top simplices");
    if (incident == 1) bd.insert(m - 1, i);
  }
  bd.close_under_faces(cx);
  return bd;
}

BoundaryLabeling make_labeling(const SimplicialComplex& cx, const SimplexSet& m1) {
  BoundaryLabeling labels;
  labels.m1 = m1;
  labels.m2 = manifold_boundary(cx);
  for (size_t d = 0; d < labels.m2.member.size(); ++d)
    for (size_t i = 0; i < labels.m2.member[d].size(); ++i)
      if (m1.contains(static_cast<int>(d), static_cast<int>(i)))
        labels.m2.member[d][i] = 0;
  validate_labeling(cx, labels);
  return labels;
}

void validate_labeling(const SimplicialComplex& cx, const BoundaryLabeling& labels) {
  const SimplexSet bd = manifold_boundary(cx);
  for (int d = 0; d <= cx.top_dimension(); ++d) {
    for (int i = 0; i < cx.count(d); ++i) {
      const bool in1 = labels.m1.contains(d, i);
      const bool in2 = labels.m2.contains(d, i);
      if (in1 && in2)
        throw LabelError("simplex (" + std::to_string(d) + "," + std::to_string(i) +
                         ") labeled both M1 and M2");
      if ((in1 || in2) != bd.contains(d, i))
        throw LabelError("labels must cover exactly the manifold boundary; mismatch at (" +
                         std::to_string(d) + "," + std::to_string(i) + ")");
    }
  }
  if (!labels.m1.is_face_closed(cx)) throw LabelError("M1 is not closed under faces");
  if (!labels.m2.is_face_closed(cx)) throw LabelError("M2 is not closed under faces");
}

std::vector<int> relative_indices(const SimplicialComplex& cx, const BoundaryLabeling& labels,
                                  int p) {
  std::vector<int> keep;
  for (int i = 0; i < cx.count(p); ++i)
    if (!labels.in_m1(p, i)) keep.push_back(i);
  return keep;
}

Eigen::MatrixXi relative_coboundary(const SimplicialComplex& cx, const BoundaryLabeling& labels,
                                    int p) {
  if (p < 0 || p >= cx.top_dimension())
    throw InvalidInput("relative coboundary degree out of range: p=" + std::to_string(p));
  validate_labeling(cx, labels);
  const Eigen::MatrixXi full = cx.coboundary(p);
  const std::vector<int> rows = relative_indices(cx, labels, p + 1);
  const std::vector<int> cols = relative_indices(cx, labels, p);
  Eigen::MatrixXi d(rows.size(), cols.size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < cols.size(); ++c) d(r, c) = full(rows[r], cols[c]);
  return d;
}

int euler_characteristic(const SimplicialComplex& cx, const BoundaryLabeling& labels) {
  validate_labeling(cx, labels);
  int chi = 0;
  int sign = 1;
  for (int p = 0; p <= cx.top_dimension(); ++p, sign = -sign)
    chi += sign * static_cast<int>(relative_indices(cx, labels, p).size());
  return chi;
}

}  // namespace hodgelab
