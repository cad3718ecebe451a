#include "polycx/catalog.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "polycx/flag_aut.hpp"

namespace polycx {

Polygon polygon_from_generators(const Isometry& a0, const Isometry& a1, const Vec3& o) {
  const Isometry r = a0 * a1;
  constexpr int kMaxOrder = 24;
  std::vector<Vec3> v{o};
  Isometry p = r;
  int k = 1;
  for (; k <= kMaxOrder; ++k, p = p * r) {
    if (p.linear == Mat3::identity()) break;
    v.push_back(p(o));
  }
  if (k > kMaxOrder) throw NonDiscreteGroup("polygon generators have no periodic power");
  const Vec3 t = p.translation;
  if (t.is_zero()) {
    // finite: the cycle closes at the first return to o
    auto it = std::find(v.begin() + 1, v.end(), o);
    return Polygon::finite({v.begin(), it});
  }
  auto vertex = [&](long long i) {
    long long q = i / k, m = i % k;
    if (m < 0) {
      m += k;
      --q;
    }
    return v[m] + Rational(q) * t;
  };
  for (int j = 1; j <= k; ++j) {
    const Vec3 s = vertex(j) - vertex(0);
    bool periodic = true;
    for (long long i = 0; i < 2 * k && periodic; ++i) periodic = vertex(i + j) - vertex(i) == s;
    if (periodic) return Polygon::apeirogon({v.begin(), v.begin() + j}, s);
  }
  throw std::logic_error("no period found");
}

CatalogEntry make_entry(std::string name, std::string petrie_name, std::string construction,
                        const std::array<Isometry, 4>& gens, const Vec3& base_vertex) {
  CatalogEntry e;
  e.name = std::move(name);
  e.petrie_name = std::move(petrie_name);
  e.construction = std::move(construction);
  e.generators = gens;
  e.base.vertex = base_vertex;
  e.base.edge_end = gens[0](base_vertex);
  e.base.face = polygon_from_generators(gens[0], gens[1], base_vertex);
  e.base.facet = Facet::from_group({gens[0], gens[1], gens[2]}, *e.base.face);
  return e;
}

namespace {

Isometry linear_map(const Mat3& m) { return Isometry::checked(m, {}); }

Mat3 rows(std::initializer_list<std::array<int, 3>> r) {
  Mat3 m;
  int i = 0;
  for (const auto& row : r) {
    for (int c = 0; c < 3; ++c) m(i, c) = Rational(row[c]);
    ++i;
  }
  return m;
}

const Mat3 kSwapXY = rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
const Mat3 kSwapYZ = rows({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
const Mat3 kNegX = rows({{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
const Mat3 kNegZ = rows({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}});
const Mat3 kTetraMirror = rows({{1, 0, 0}, {0, 0, -1}, {0, -1, 0}});  // (x, -z, -y)

struct PetriePair {
  const char* name;
  const char* petrie;
};

}  // namespace

CatalogEntry cubical_tessellation() {
  const Vec3 o{0, 0, 0};
  std::array<Isometry, 4> g{Isometry::reflection({1, 0, 0}, {Rational(1, 2), 0, 0}),
                            Isometry::reflection({1, -1, 0}, o), Isometry::reflection({0, 1, -1}, o),
                            Isometry::reflection({0, 0, 1}, o)};
  return make_entry("{4,3,4}", "{{4,6|4},{6,4}_3}", "reflections in x=1/2, x=y, y=z, z=0", g, o);
}

CatalogEntry apeir(std::string_view q) {
  const Vec3 o{0, 0, 0};
  Vec3 w;
  std::array<Mat3, 3> s;
  std::string name, petrie;
  if (q == "cube") {
    w = {1, 1, 1};
    s = {kNegX, kSwapXY, kSwapYZ};
    name = "{{inf,4}_4#{},{4,3}}";
    petrie = "{{inf,6}_3#{inf},{6,3}_4}";
  } else if (q == "tetrahedron") {
    w = {1, 1, 1};
    s = {kTetraMirror, kSwapXY, kSwapYZ};
    name = "{{inf,3}_6#{},{3,3}}";
    petrie = "{{inf,4}_4#{inf},{4,3}_3}";
  } else if (q == "octahedron") {
    w = {1, 0, 0};
    s = {kSwapXY, kSwapYZ, kNegZ};
    name = "{{inf,3}_6#{},{3,4}}";
    petrie = "{{inf,6}_3#{inf},{6,4}_3}";
  } else {
    throw std::invalid_argument("apeir needs tetrahedron, octahedron or cube, not '" + std::string(q) + "'");
  }
  std::array<Isometry, 4> g{Isometry::point_reflection(Rational(1, 2) * w), linear_map(s[0]), linear_map(s[1]),
                            linear_map(s[2])};
  return make_entry(name, petrie, "apeir(" + std::string(q) + "): point reflection through w/2 and the mirrors of " +
                                      std::string(q) + " at w = " + w.str(),
                    g, o);
}

CatalogEntry petrie_dual_4(const CatalogEntry& e) {
  auto g = e.generators;
  g[1] = g[1] * g[3];
  std::string construction = e.construction.rfind("petrie(", 0) == 0
                                 ? e.construction.substr(7, e.construction.size() - 8)
                                 : "petrie(" + e.construction + ")";
  return make_entry(e.petrie_name, e.name, construction, g, e.base.vertex);
}

std::vector<CatalogEntry> all_eight() {
  std::vector<CatalogEntry> out;
  for (auto e : {cubical_tessellation(), apeir("tetrahedron"), apeir("octahedron"), apeir("cube")}) {
    out.push_back(e);
    out.push_back(petrie_dual_4(e));
  }
  return out;
}

CatalogEntry find_entry(std::string_view name) {
  const std::pair<const char*, const char*> aliases[] = {
      {"apeir({3,3})", "apeir(tetrahedron)"}, {"apeir({3,4})", "apeir(octahedron)"}, {"apeir({4,3})", "apeir(cube)"}};
  std::string n(name);
  for (auto [a, b] : aliases)
    if (n == a) n = b;
  for (const char* q : {"tetrahedron", "octahedron", "cube"})
    if (n == std::string("apeir(") + q + ")") return apeir(q);
  if (n == "cubical" || n == "cubical-tessellation") return cubical_tessellation();
  if (n.rfind("petrie(", 0) == 0 && n.back() == ')') return petrie_dual_4(find_entry(n.substr(7, n.size() - 8)));
  for (auto& e : all_eight())
    if (e.name == n) return e;
  throw std::invalid_argument("unknown catalog entry '" + std::string(name) + "'");
}

OrbitComplex build_window(const CatalogEntry& e, int n) {
  if (n < 1) throw std::invalid_argument("window size must be positive");
  return orbit_complex(e.generator_list(), e.base, Box::symmetric(n));
}

bool EntryVerification::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

IncidenceComplex base_vertex_figure(const OrbitComplex& w) {
  return vertex_figure(w.complex.abstract, w.base_flag.faces[0]);
}

std::vector<Isometry> base_stabilizer(const OrbitComplex& w, int k) {
  std::vector<Isometry> out;
  const auto& s = w.symmetries;
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    bool fixes = true;
    for (int r = 0; r <= k && fixes; ++r) fixes = s.images[i].faces[r] == w.base_flag.faces[r];
    if (fixes) out.push_back(s.elements[i]);
  }
  return out;
}

EntryVerification verify_entry(const CatalogEntry& e, const OrbitComplex& w) {
  EntryVerification v;
  v.entry = e.name;
  const auto& g = w.complex;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    v.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  bool fixes_vertex = true;
  for (int i = 1; i < 4; ++i) fixes_vertex = fixes_vertex && e.generators[i](e.base.vertex) == e.base.vertex;
  add("r1, r2, r3 fix the base vertex", fixes_vertex);
  bool involutions = std::all_of(e.generators.begin(), e.generators.end(), [](const Isometry& x) {
    return x.is_involution() && !x.is_identity();
  });
  add("generators are involutions", involutions);

  auto report = validate_interior(g);
  add("interior axioms", report.passed,
      report.passed ? "" : std::string(axiom_name(report.violations.front().axiom)) + ": " + report.violations.front().detail);
  add("windowed flag-transitivity", windowed_flag_transitive(w));

  v.flag_stabilizer_order = base_stabilizer(w, 2).size();
  add("stabilizer of the base 2-flag has order 2", v.flag_stabilizer_order == 2,
      "order " + std::to_string(v.flag_stabilizer_order));

  auto mirror = plane_reflection(*e.base.face);
  add("r3 is the reflection in the base 2-face plane", mirror && *mirror == e.generators[3]);

  bool two_facets = true;
  std::size_t checked = 0;
  for (std::size_t f = 0; f < g.abstract.face_count(2); ++f)
    if (g.interior[2][f]) {
      ++checked;
      two_facets = two_facets && g.abstract.covered_by(2, static_cast<int>(f)).size() == 2;
    }
  add("two facets at every interior 2-face", two_facets && checked > 0, std::to_string(checked) + " faces");

  std::set<int> rs;
  for (int r : interior_edge_face_counts(g)) rs.insert(r);
  v.r_values.assign(rs.begin(), rs.end());
  add("uniform r in {3,4}", rs.size() == 1 && (*rs.begin() == 3 || *rs.begin() == 4));

  auto disc = discreteness_check(g, {Box{{0, 0, 0}, {1, 1, 1}}});
  add("no duplicate faces", disc.duplicates.empty());

  const bool squares = e.base.face->period_length() == 4 && !e.base.face->infinite();
  std::set<PolygonClass> classes;
  for (std::size_t f = 0; f < g.polygons.size(); ++f)
    if (g.interior[2][f]) classes.insert(classify_polygon(g.polygons[f]));
  const PolygonClass want = squares ? PolygonClass::PlanarFinite : PolygonClass::PlanarZigzag;
  add(std::string("2-faces are ") + std::string(polygon_class_name(want)),
      classes.size() == 1 && *classes.begin() == want);
  return v;
}

}  // namespace polycx
