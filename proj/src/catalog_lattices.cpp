#include <algorithm>
#include <map>

#include "polycx/catalog.hpp"

namespace polycx {

IncidenceComplex polyhedron_from_faces(std::size_t vertex_count, const std::vector<std::vector<int>>& faces) {
  std::map<std::pair<int, int>, int> edge_ids;
  std::vector<std::vector<std::vector<int>>> covers(3);
  std::vector<std::vector<std::string>> ids(3);
  covers[0].assign(vertex_count, {});
  for (std::size_t v = 0; v < vertex_count; ++v) ids[0].push_back("v" + std::to_string(v));
  for (std::size_t f = 0; f < faces.size(); ++f) {
    std::vector<int> cov;
    const auto& cyc = faces[f];
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
      auto key = std::minmax(a, b);
      auto [it, fresh] = edge_ids.emplace(key, static_cast<int>(covers[1].size()));
      if (fresh) {
        covers[1].push_back({key.first, key.second});
        ids[1].push_back("e" + std::to_string(it->second));
      }
      cov.push_back(it->second);
    }
    covers[2].push_back(std::move(cov));
    ids[2].push_back("f" + std::to_string(f));
  }
  return IncidenceComplex::from_covers(3, std::move(covers), std::move(ids));
}

IncidenceComplex polygon_lattice(int p) {
  if (p < 2) throw std::invalid_argument("polygon needs at least two vertices");
  std::vector<std::vector<std::vector<int>>> covers(2);
  covers[0].assign(p, {});
  for (int i = 0; i < p; ++i) covers[1].push_back({i, (i + 1) % p});
  return IncidenceComplex::from_covers(2, std::move(covers));
}

IncidenceComplex dual(const IncidenceComplex& c) {
  const int n = c.rank();
  std::vector<std::vector<std::vector<int>>> covers(n);
  std::vector<std::vector<std::string>> ids(n);
  for (int r = 0; r < n; ++r) {
    const int src = n - 1 - r;
    for (std::size_t i = 0; i < c.face_count(src); ++i) {
      covers[r].push_back(r == 0 ? std::vector<int>{} : c.covered_by(src, static_cast<int>(i)));
      ids[r].push_back(c.id(src, static_cast<int>(i)));
    }
  }
  return IncidenceComplex::from_covers(n, std::move(covers), std::move(ids));
}

const std::vector<std::string>& platonic_names() {
  static const std::vector<std::string> names{"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"};
  return names;
}

namespace {

// a + b*phi with phi^2 = phi + 1
struct Golden {
  long long a = 0, b = 0;
  Golden operator-(const Golden& o) const { return {a - o.a, b - o.b}; }
  Golden operator+(const Golden& o) const { return {a + o.a, b + o.b}; }
  Golden operator*(const Golden& o) const {
    return {a * o.a + b * o.b, a * o.b + b * o.a + b * o.b};
  }
  bool operator==(const Golden&) const = default;
};

IncidenceComplex icosahedron_lattice() {
  std::vector<std::array<Golden, 3>> v;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      for (int shift = 0; shift < 3; ++shift) {
        std::array<Golden, 3> p{Golden{0, 0}, Golden{s1, 0}, Golden{0, s2}};
        std::rotate(p.begin(), p.begin() + shift, p.end());
        v.push_back(p);
      }
  auto adjacent = [&](int i, int j) {
    Golden d2;
    for (int c = 0; c < 3; ++c) {
      Golden d = v[i][c] - v[j][c];
      d2 = d2 + d * d;
    }
    return d2 == Golden{4, 0};
  };
  std::vector<std::vector<int>> faces;
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (adjacent(i, j) && adjacent(j, k) && adjacent(i, k)) faces.push_back({i, j, k});
  return polyhedron_from_faces(v.size(), faces);
}

std::vector<std::vector<int>> cube_faces() {
  // vertex index x + 2y + 4z
  return {{0, 1, 3, 2}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 3, 7, 6}, {0, 2, 6, 4}, {1, 3, 7, 5}};
}

std::vector<std::vector<int>> octahedron_faces() {
  // vertices +e0, -e0, +e1, -e1, +e2, -e2
  std::vector<std::vector<int>> f;
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) f.push_back({a, b, c});
  return f;
}

}  // namespace

IncidenceComplex platonic_lattice(std::string_view name) {
  if (name == "tetrahedron") return polyhedron_from_faces(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  if (name == "cube") return polyhedron_from_faces(8, cube_faces());
  if (name == "octahedron") return polyhedron_from_faces(6, octahedron_faces());
  if (name == "icosahedron") return icosahedron_lattice();
  if (name == "dodecahedron") return dual(icosahedron_lattice());
  throw std::invalid_argument("unknown Platonic solid '" + std::string(name) + "'");
}

GeometricComplex platonic(std::string_view name) {
  std::vector<Vec3> pts;
  if (name == "tetrahedron") {
    pts = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  } else if (name == "cube") {
    for (int i = 0; i < 8; ++i) pts.push_back({i & 1, (i >> 1) & 1, (i >> 2) & 1});
  } else if (name == "octahedron") {
    pts = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  } else if (name == "dodecahedron" || name == "icosahedron") {
    throw IrrationalCoordinates(std::string(name) + " needs coordinates outside the rationals");
  } else {
    throw std::invalid_argument("unknown Platonic solid '" + std::string(name) + "'");
  }
  return realize(platonic_lattice(name), pts);
}

IncidenceComplex torus_map_3_6_2_0() {
  // Triangular lattice Z^2 modulo 2Z^2. Edge (v, d) joins v to v + dir[d].
  const int dir[3][2] = {{1, 0}, {0, 1}, {-1, 1}};
  auto vid = [](int i, int j) { return ((i % 2 + 2) % 2) + 2 * ((j % 2 + 2) % 2); };
  auto eid = [&](int i, int j, int d) { return 3 * vid(i, j) + d; };
  std::vector<std::vector<std::vector<int>>> covers(3);
  std::vector<std::vector<std::string>> ids(3);
  covers[0].assign(4, {});
  for (int v = 0; v < 4; ++v) ids[0].push_back("v" + std::to_string(v));
  covers[1].assign(12, {});
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i)
      for (int d = 0; d < 3; ++d) {
        covers[1][eid(i, j, d)] = {vid(i, j), vid(i + dir[d][0], j + dir[d][1])};
        ids[1].push_back("e" + std::to_string(eid(i, j, d)));
      }
  std::sort(ids[1].begin(), ids[1].end(), [](const std::string& a, const std::string& b) {
    return std::stoi(a.substr(1)) < std::stoi(b.substr(1));
  });
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) {
      covers[2].push_back({eid(i, j, 0), eid(i, j, 1), eid(i + 1, j, 2)});          // up
      covers[2].push_back({eid(i + 1, j, 1), eid(i, j + 1, 0), eid(i + 1, j, 2)});  // down
    }
  for (int f = 0; f < 8; ++f) ids[2].push_back("t" + std::to_string(f));
  return IncidenceComplex::from_covers(3, std::move(covers), std::move(ids));
}

GeometricComplex cube_petrial() {
  std::vector<Vec3> pts;
  for (int i = 0; i < 8; ++i) pts.push_back({i & 1, (i >> 1) & 1, (i >> 2) & 1});
  const std::vector<std::vector<int>> hexagons = {
      {0, 1, 3, 7, 6, 4}, {1, 3, 2, 6, 4, 5}, {0, 2, 3, 7, 5, 4}, {0, 1, 5, 7, 6, 2}};
  return realize(polyhedron_from_faces(8, hexagons), pts);
}

GeometricComplex three_fold_book() {
  // edge along (1,1,1); the apexes sit at 120 degrees around it
  const std::vector<Vec3> pts = {{0, 0, 0}, {1, 1, 1}, {1, -1, 0}, {0, 1, -1}, {-1, 0, 1}};
  return realize(polyhedron_from_faces(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}), pts);
}

}  // namespace polycx
