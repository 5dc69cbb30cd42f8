#include "hodgelab/catalog.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace hodgelab {

namespace {

Eigen::VectorXd vec2(double x, double y) {
  Eigen::VectorXd v(2);
  v << x, y;
  return v;
}

CatalogMesh make_interval() {
  CatalogMesh m;
  m.complex = build_complex({{0, 1}, {1, 2}});
  m.geometry.ambient_dim = 1;
  for (int i = 0; i < 3; ++i) {
    Eigen::VectorXd x(1);
    x << static_cast<double>(i);
    m.geometry.coords[i] = x;
  }
  return m;
}

CatalogMesh make_circle(int n) {
  if (n < 3) throw InvalidInput("circle needs at least 3 vertices");
  CatalogMesh m;
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  m.complex = build_complex(edges);
  m.geometry.ambient_dim = 2;
  for (int i = 0; i < n; ++i) {
    const double a = 2 * std::numbers::pi * i / n;
    m.geometry.coords[i] = vec2(std::cos(a), std::sin(a));
  }
  return m;
}

CatalogMesh make_disk() {
  CatalogMesh m;
  std::vector<std::vector<int>> tris;
  for (int i = 0; i < 6; ++i) tris.push_back({0, 1 + i, 1 + (i + 1) % 6});
  m.complex = build_complex(tris);
  m.geometry.ambient_dim = 2;
  m.geometry.coords[0] = vec2(0, 0);
  for (int i = 0; i < 6; ++i) {
    const double a = 2 * std::numbers::pi * i / 6;
    m.geometry.coords[1 + i] = vec2(std::cos(a), std::sin(a));
  }
  return m;
}

CatalogMesh make_annulus(int n, int k) {
  if (n < 3 || k < 1) throw InvalidInput("annulus needs n >= 3 sectors and k >= 1 layers");
  CatalogMesh m;
  auto vid = [n](int ring, int i) { return ring * n + (i % n); };
  std::vector<std::vector<int>> tris;
  for (int r = 0; r < k; ++r)
    for (int i = 0; i < n; ++i) {
      tris.push_back({vid(r, i), vid(r, i + 1), vid(r + 1, i + 1)});
      tris.push_back({vid(r, i), vid(r + 1, i + 1), vid(r + 1, i)});
    }
  m.complex = build_complex(tris);
  m.geometry.ambient_dim = 2;
  for (int r = 0; r <= k; ++r) {
    const double radius = 1.0 + static_cast<double>(r) / k;
    for (int i = 0; i < n; ++i) {
      const double a = 2 * std::numbers::pi * i / n;
      m.geometry.coords[vid(r, i)] = vec2(radius * std::cos(a), radius * std::sin(a));
    }
  }
  return m;
}

CatalogMesh make_torus(int n) {
  if (n < 3) throw InvalidInput("torus grid needs n >= 3");
  CatalogMesh m;
  auto vid = [n](int i, int j) { return ((i % n + n) % n) * n + ((j % n + n) % n); };
  std::vector<std::vector<int>> tris;
  // cell (i,j): corners (i,j), (i+1,j), (i,j+1), (i+1,j+1); split on the diagonal
  std::vector<std::array<std::array<int, 2>, 3>> corner_grid;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      corner_grid.push_back({{{i, j}, {i + 1, j}, {i + 1, j + 1}}});
      corner_grid.push_back({{{i, j}, {i + 1, j + 1}, {i, j + 1}}});
    }
  for (const auto& tri : corner_grid)
    tris.push_back({vid(tri[0][0], tri[0][1]), vid(tri[1][0], tri[1][1]), vid(tri[2][0], tri[2][1])});
  m.complex = build_complex(tris);
  m.geometry.ambient_dim = 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.geometry.coords[vid(i, j)] = vec2(static_cast<double>(i) / n, static_cast<double>(j) / n);
  // every top simplex gets an unwrapped chart; cells away from the seam agree
  // with the global coordinates and need no override, but building the table
  // uniformly keeps the seam logic in one place
  for (size_t t = 0; t < corner_grid.size(); ++t) {
    const auto& tri = corner_grid[t];
    std::vector<int> ids = {vid(tri[0][0], tri[0][1]), vid(tri[1][0], tri[1][1]),
                            vid(tri[2][0], tri[2][1])};
    std::vector<Eigen::VectorXd> coords = {
        vec2(static_cast<double>(tri[0][0]) / n, static_cast<double>(tri[0][1]) / n),
        vec2(static_cast<double>(tri[1][0]) / n, static_cast<double>(tri[1][1]) / n),
        vec2(static_cast<double>(tri[2][0]) / n, static_cast<double>(tri[2][1]) / n)};
    std::vector<int> order = {0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int a, int b) { return ids[a] < ids[b]; });
    std::vector<int> sorted_ids;
    std::vector<Eigen::VectorXd> sorted_coords;
    for (int o : order) {
      sorted_ids.push_back(ids[o]);
      sorted_coords.push_back(coords[o]);
    }
    const int idx = m.complex.index_of(2, sorted_ids);
    bool wraps = false;
    for (int a = 0; a < 3; ++a)
      if (tri[a][0] >= n || tri[a][1] >= n) wraps = true;
    if (wraps) m.geometry.charts[idx] = sorted_coords;
  }
  return m;
}

CatalogMesh make_sphere() {
  CatalogMesh m;
  // octahedron: 0..5 = +x, -x, +y, -y, +z, -z
  m.complex = build_complex({{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
                             {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}});
  m.geometry.ambient_dim = 3;
  auto vec3 = [](double x, double y, double z) {
    Eigen::VectorXd v(3);
    v << x, y, z;
    return v;
  };
  m.geometry.coords[0] = vec3(1, 0, 0);
  m.geometry.coords[1] = vec3(-1, 0, 0);
  m.geometry.coords[2] = vec3(0, 1, 0);
  m.geometry.coords[3] = vec3(0, -1, 0);
  m.geometry.coords[4] = vec3(0, 0, 1);
  m.geometry.coords[5] = vec3(0, 0, -1);
  return m;
}

CatalogMesh make_square(int n) {
  if (n < 1) throw InvalidInput("square grid needs n >= 1");
  CatalogMesh m;
  auto vid = [n](int i, int j) { return i * (n + 1) + j; };
  std::vector<std::vector<int>> tris;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      tris.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
      tris.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
    }
  m.complex = build_complex(tris);
  m.geometry.ambient_dim = 2;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      m.geometry.coords[vid(i, j)] =
          vec2(static_cast<double>(i) / n, static_cast<double>(j) / n);
  return m;
}

CatalogMesh make_triangle() {
  CatalogMesh m;
  m.complex = build_complex({{0, 1, 2}});
  m.geometry.ambient_dim = 2;
  m.geometry.coords[0] = vec2(0, 0);
  m.geometry.coords[1] = vec2(1, 0);
  m.geometry.coords[2] = vec2(0.5, std::sqrt(3.0) / 2);
  return m;
}

bool parse_grid_suffix(const std::string& name, const std::string& prefix, int& a, int& b,
                       bool pair) {
  if (name.rfind(prefix, 0) != 0) return false;
  const std::string rest = name.substr(prefix.size());
  const size_t x = rest.find('x');
  try {
    if (pair) {
      if (x == std::string::npos) return false;
      a = std::stoi(rest.substr(0, x));
      b = std::stoi(rest.substr(x + 1));
    } else {
      if (x != std::string::npos) return false;
      a = std::stoi(rest);
      b = a;
    }
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

CatalogMesh make_catalog_mesh(const std::string& name) {
  CatalogMesh m;
  int a = 0, b = 0;
  if (name == "interval") m = make_interval();
  else if (name == "disk") m = make_disk();
  else if (name == "sphere") m = make_sphere();
  else if (name == "triangle") m = make_triangle();
  else if (parse_grid_suffix(name, "circle-", a, b, false)) m = make_circle(a);
  else if (parse_grid_suffix(name, "annulus-", a, b, true)) m = make_annulus(a, b);
  else if (parse_grid_suffix(name, "torus-", a, b, true)) {
    if (a != b) throw InvalidInput("torus grids are square: torus-<n>x<n>");
    m = make_torus(a);
  } else if (parse_grid_suffix(name, "square-", a, b, false)) m = make_square(a);
  else throw InvalidInput("unknown catalog mesh: " + name);
  m.name = name;
  return m;
}

bool is_catalog_name(const std::string& name) {
  try {
    make_catalog_mesh(name);
    return true;
  } catch (const Error&) {
    return false;
  }
}

SimplexSet resolve_selector(const SimplicialComplex& cx, const Geometry& geom,
                            const std::string& selector) {
  if (selector.empty() || selector == "none") return SimplexSet::empty(cx);
  const SimplexSet bd = manifold_boundary(cx);
  if (selector == "boundary") return bd;

  // Boundary components: connected components of the facet adjacency through
  // shared faces.
  const int fd = cx.top_dimension() - 1;
  if (fd < 0) throw LabelError("selector '" + selector + "' needs a positive-dimensional mesh");
  std::vector<int> comp(cx.count(fd), -1);
  int ncomp = 0;
  for (int seed = 0; seed < cx.count(fd); ++seed) {
    if (!bd.contains(fd, seed) || comp[seed] >= 0) continue;
    std::vector<int> stack = {seed};
    comp[seed] = ncomp;
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      // neighbors: boundary facets sharing a sub-face
      for (const auto& [sub, sign] : fd > 0 ? cx.faces_of(fd, f)
                                            : std::vector<std::pair<int, int>>{}) {
        for (int g = 0; g < cx.count(fd); ++g) {
          if (!bd.contains(fd, g) || comp[g] >= 0 || g == f) continue;
          for (const auto& [sub2, sign2] : cx.faces_of(fd, g))
            if (sub2 == sub) {
              comp[g] = ncomp;
              stack.push_back(g);
              break;
            }
        }
      }
    }
    ++ncomp;
  }
  if (ncomp == 0) throw LabelError("selector '" + selector + "': mesh has no boundary");

  int chosen = -1;
  if (selector == "inner" || selector == "outer") {
    if (!geom.has_coordinates())
      throw LabelError("selector '" + selector + "' needs geometry");
    std::vector<double> mean_radius(ncomp, 0);
    std::vector<int> counts(ncomp, 0);
    for (int f = 0; f < cx.count(fd); ++f) {
      if (comp[f] < 0) continue;
      for (int v : cx.simplex(fd, f).vertices) {
        mean_radius[comp[f]] += geom.coords.at(v).norm();
        counts[comp[f]] += 1;
      }
    }
    for (int c = 0; c < ncomp; ++c) mean_radius[c] /= counts[c];
    chosen = 0;
    for (int c = 1; c < ncomp; ++c) {
      const bool better =
          selector == "inner" ? mean_radius[c] < mean_radius[chosen] : mean_radius[c] > mean_radius[chosen];
      if (better) chosen = c;
    }
  } else if (selector.rfind("component:", 0) == 0) {
    try {
      chosen = std::stoi(selector.substr(10));
    } catch (const std::exception&) {
      throw LabelError("bad component selector: " + selector);
    }
    if (chosen < 0 || chosen >= ncomp)
      throw LabelError("component index out of range: mesh has " + std::to_string(ncomp) +
                       " boundary components");
  } else {
    throw LabelError("unknown labeling selector: " + selector);
  }

  SimplexSet out = SimplexSet::empty(cx);
  for (int f = 0; f < cx.count(fd); ++f)
    if (comp[f] == chosen) out.insert(fd, f);
  out.close_under_faces(cx);
  return out;
}

}  // namespace hodgelab
