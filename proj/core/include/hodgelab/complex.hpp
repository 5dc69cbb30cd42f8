#ifndef HODGELAB_COMPLEX_HPP
#define HODGELAB_COMPLEX_HPP

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "hodgelab/errors.hpp"

namespace hodgelab {

/// An abstract simplex: strictly increasing vertex identifiers.
/// The increasing order is the canonical orientation; all incidence signs
/// below refer to it.
struct Simplex {
  std::vector<int> vertices;

  Simplex() = default;
  explicit Simplex(std::vector<int> verts);

  int dimension() const { return static_cast<int>(vertices.size()) - 1; }
  bool operator==(const Simplex& o) const { return vertices == o.vertices; }
  bool operator<(const Simplex& o) const { return vertices < o.vertices; }
};

/// Reference to a simplex inside a complex: (dimension, index within dimension).
struct SimplexRef {
  int dim = 0;
  int index = 0;
  bool operator==(const SimplexRef&) const = default;
  auto operator<=>(const SimplexRef&) const = default;
};

/// A finite simplicial complex, closed under taking faces, with signed
/// incidence between consecutive dimensions.  Simplices are stored per
/// dimension in lexicographic vertex order; the coefficient of the i-th face
/// (drop the i-th vertex) is (-1)^i.  Incidence is integer-exact.
class SimplicialComplex {
public:
  int top_dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  int count(int dim) const;
  const std::vector<Simplex>& simplices(int dim) const;
  const Simplex& simplex(int dim, int index) const { return simplices(dim)[index]; }

  /// Index of a simplex given its sorted vertex list; -1 when absent.
  int index_of(int dim, const std::vector<int>& vertices) const;

  /// f-vector (#vertices, #edges, ...).
  std::vector<int> f_vector() const;

  /// Coboundary d_p as an integer matrix of shape count(p+1) x count(p).
  /// Requires 0 <= p < top_dimension().
  Eigen::MatrixXi coboundary(int p) const;

  /// Signed faces of a p-simplex: (face index in dimension p-1, sign).
  const std::vector<std::pair<int, int>>& faces_of(int dim, int index) const;

  /// Top simplices containing the given simplex, in increasing order.
  const std::vector<int>& cofacet_tops(int dim, int index) const;

  /// True when every simplex is the face of some top simplex.
  bool is_pure() const;

  friend SimplicialComplex build_complex(const std::vector<std::vector<int>>& top_simplices);

private:
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<std::vector<int>, int>> index_;          // per dim
  std::vector<std::vector<std::vector<std::pair<int, int>>>> faces_;  // [dim][idx] -> (face,sign)
  std::vector<std::vector<std::vector<int>>> tops_of_;          // [dim][idx] -> top indices
};

/// Builds the complex generated by the given top simplices.  Every tuple must
/// have the same length and distinct vertices; vertex order inside a tuple is
/// irrelevant (simplices are canonicalized to increasing order).
SimplicialComplex build_complex(const std::vector<std::vector<int>>& top_simplices);

/// A set of simplices of a complex, closed under faces or not; membership per
/// dimension.  Used for boundary labelings and the manifold boundary itself.
struct SimplexSet {
  std::vector<std::vector<char>> member;  // [dim][idx] in {0,1}

  static SimplexSet empty(const SimplicialComplex& cx);
  bool contains(int dim, int index) const { return member[dim][index] != 0; }
  void insert(int dim, int index) { member[dim][index] = 1; }
  int count(int dim) const;
  int total() const;
  bool is_face_closed(const SimplicialComplex& cx) const;
  /// Adds all faces of current members.
  void close_under_faces(const SimplicialComplex& cx);
};

/// The manifold boundary: all (m-1)-simplices incident to exactly one top
/// simplex, together with their faces.  Throws NonManifoldError when a facet
/// has three or more top cofacets and InvalidInput when the complex is not pure.
SimplexSet manifold_boundary(const SimplicialComplex& cx);

/// Partition of the manifold boundary into the relative part M1 and the
/// absolute part M2.  Invariants: disjoint, both face-closed, union equal to
/// the manifold boundary.
struct BoundaryLabeling {
  SimplexSet m1;
  SimplexSet m2;

  bool in_m1(int dim, int index) const { return m1.contains(dim, index); }
};

/// Builds a labeling from the M1 part alone; M2 becomes the rest of the
/// manifold boundary.  Validates all invariants.
BoundaryLabeling make_labeling(const SimplicialComplex& cx, const SimplexSet& m1);

/// Validates an explicit (M1, M2) pair against the labeling invariants.
void validate_labeling(const SimplicialComplex& cx, const BoundaryLabeling& labels);

/// Indices of the p-simplices outside M1, in increasing order.  These index
/// the relative cochain space C^p(K, K1).
std::vector<int> relative_indices(const SimplicialComplex& cx, const BoundaryLabeling& labels, int p);

/// Coboundary acting on relative cochains: rows and columns indexed only by
/// simplices outside M1.  d_{p+1} * d_p = 0 exactly over the integers.
Eigen::MatrixXi relative_coboundary(const SimplicialComplex& cx, const BoundaryLabeling& labels,
                                    int p);

/// Alternating count of the relative simplex numbers.
int euler_characteristic(const SimplicialComplex& cx, const BoundaryLabeling& labels);

}  // namespace hodgelab

#endif
