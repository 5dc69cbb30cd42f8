#ifndef HODGELAB_MESH_IO_HPP
#define HODGELAB_MESH_IO_HPP

#include <iostream>
#include <optional>
#include <string>

#include "hodgelab/complex.hpp"
#include "hodgelab/geometry.hpp"

namespace hodgelab {

/// Mesh document.  Text format, one record per line:
///   v  <id> [<x> <y> ...]        vertex, coordinates optional
///   s  <v0> ... <vm>             top simplex
///   m1 <v0> ... <v_{m-1}>        relative boundary facet, by vertex list
///   m2 <v0> ... <v_{m-1}>        absolute boundary facet
///   c  <top> <slot> <x ...>      chart override for one top-simplex vertex
///   p1 <v> <image>               involution tables of doubled meshes
///   p2 <v> <image>
/// Blank lines and lines starting with # are ignored.
struct MeshDocument {
  SimplicialComplex complex;
  Geometry geometry;  // empty coords when the mesh is combinatorial
  bool has_m1_records = false;
  bool has_m2_records = false;
  SimplexSet m1;  // facet records, face-closed
  SimplexSet m2;
  std::optional<std::vector<int>> tau1;  // by vertex index
  std::optional<std::vector<int>> tau2;

  /// Resolves the labeling: explicit records when present (M2 defaults to the
  /// rest of the boundary), empty M1 otherwise.
  BoundaryLabeling labeling() const;
};

MeshDocument parse_mesh(std::istream& in);
MeshDocument parse_mesh_file(const std::string& path);

/// Canonical emission: vertices in increasing id order, top simplices in the
/// complex order, labels as facet records, charts only where they override
/// the global coordinates.  Byte-deterministic.
void emit_mesh(std::ostream& out, const SimplicialComplex& cx, const Geometry* geom,
               const BoundaryLabeling* labels, const std::vector<int>* tau1 = nullptr,
               const std::vector<int>* tau2 = nullptr);

}  // namespace hodgelab

#endif
