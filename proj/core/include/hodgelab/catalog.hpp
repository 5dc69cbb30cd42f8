#ifndef HODGELAB_CATALOG_HPP
#define HODGELAB_CATALOG_HPP

#include <memory>
#include <string>

#include "hodgelab/complex.hpp"
#include "hodgelab/geometry.hpp"

namespace hodgelab {

/// A built-in mesh with pinned coordinates.
struct CatalogMesh {
  std::string name;
  SimplicialComplex complex;
  Geometry geometry;
};

/// Catalog names:
///   interval            two unit edges on a line
///   circle-<n>          n-gon inscribed in the unit circle (n >= 3)
///   disk                hexagonal fan around the origin
///   annulus-<n>x<k>     n angular sectors, k radial layers between radii 1 and 2
///   torus-<n>x<n>       flat unit torus, n x n grid with per-cell charts
///   sphere              octahedron on the coordinate axes
///   square-<n>          unit square, n x n grid
///   triangle            single unit equilateral triangle
CatalogMesh make_catalog_mesh(const std::string& name);

bool is_catalog_name(const std::string& name);

/// Resolves a labeling selector for the M1 part:
///   none       empty
///   boundary   the whole manifold boundary
///   inner      boundary component nearest the origin (annulus inner circle)
///   outer      boundary component farthest from the origin
///   component:<i>  i-th boundary component, ordered by smallest vertex id
SimplexSet resolve_selector(const SimplicialComplex& cx, const Geometry& geom,
                            const std::string& selector);

}  // namespace hodgelab

#endif
