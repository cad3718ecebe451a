#include "polycx/geometric.hpp"

#include <algorithm>
#include <map>

namespace polycx {

bool Box::contains(const Vec3& p) const {
  for (int c = 0; c < 3; ++c)
    if (p[c] < lo[c] || p[c] > hi[c]) return false;
  return true;
}

Box Box::symmetric(int n) {
  const Rational a(-n), b(n + 1);
  return {{a, a, a}, {b, b, b}};
}

Box Box::expanded(const Rational& m) const { return {lo - Vec3{m, m, m}, hi + Vec3{m, m, m}}; }

std::size_t GeometricComplex::interior_count(int r) const {
  return static_cast<std::size_t>(std::count(interior[r].begin(), interior[r].end(), 1));
}

std::optional<FaceKey> GeometricComplex::face_key(int r, int i) const {
  switch (r) {
    case 0: return vertex_key(coords[i]);
    case 1: return edge_key(edges[i].first, edges[i].second);
    case 2: return polygons[i].key();
    case 3:
      if (facets[i]) return facets[i]->key();
      return std::nullopt;
    default: return std::nullopt;
  }
}

const std::vector<int>& GeometricComplex::lookup(int r, const FaceKey& key) const {
  static const std::vector<int> none;
  if (r < 0 || r >= static_cast<int>(index_.size())) return none;
  auto it = index_[r].find(key);
  return it == index_[r].end() ? none : it->second;
}

std::vector<Vec3> GeometricComplex::face_points(int r, int i) const {
  if (r == 0) return {coords[i]};
  std::vector<Vec3> pts;
  for (int v : abstract.faces_below({r, i}, 0)) pts.push_back(coords[v]);
  return pts;
}

void GeometricComplex::build_index() {
  const int top = std::min(rank(), 4);
  index_.assign(top, {});
  for (int r = 0; r < top; ++r)
    for (std::size_t i = 0; i < abstract.face_count(r); ++i)
      if (r < 2 || (r == 2 && rank() >= 3) || (r == 3 && rank() >= 4))
        if (auto k = face_key(r, static_cast<int>(i))) index_[r][*k].push_back(static_cast<int>(i));
}

FaithfulnessReport faithfulness_check(const IncidenceComplex& c) {
  for (int r = 1; r < c.rank(); ++r) {
    std::map<std::vector<int>, int> seen;
    for (std::size_t i = 0; i < c.face_count(r); ++i) {
      auto [it, fresh] = seen.emplace(c.covers(r, static_cast<int>(i)), static_cast<int>(i));
      if (!fresh) return {false, r, c.id(r, it->second), c.id(r, static_cast<int>(i))};
    }
  }
  return {};
}

namespace {

Polygon polygon_from_edges(const GeometricComplex& g, int face) {
  const auto& c = g.abstract;
  std::map<int, std::vector<int>> adj;
  for (int e : c.covers(2, face)) {
    const auto& ends = c.covers(1, e);
    adj[ends[0]].push_back(ends[1]);
    adj[ends[1]].push_back(ends[0]);
  }
  const std::string what = "2-face " + c.id(2, face) + " is not a simple cycle";
  if (adj.size() < 2) throw RealizationError(what);
  for (const auto& [v, nb] : adj)
    if (nb.size() != 2) throw RealizationError(what);
  std::vector<Vec3> cycle;
  int prev = -1, cur = adj.begin()->first;
  do {
    cycle.push_back(g.coords[cur]);
    const auto& nb = adj[cur];
    int next = nb[0] != prev ? nb[0] : nb[1];
    if (nb[0] == nb[1]) next = nb[0];
    prev = cur;
    cur = next;
  } while (cur != adj.begin()->first && cycle.size() <= adj.size());
  if (cycle.size() != adj.size()) throw RealizationError(what);
  return Polygon::finite(std::move(cycle));
}

}  // namespace

GeometricComplex assemble(const IncidenceComplex& c, const std::vector<Vec3>& coords) {
  if (c.rank() > 4) throw RealizationError("realizations above rank 4 are not supported");
  if (coords.size() != c.face_count(0)) throw RealizationError("one point per vertex is required");
  GeometricComplex g;
  g.abstract = c;
  g.coords = coords;
  if (c.rank() >= 2)
    for (std::size_t e = 0; e < c.face_count(1); ++e) {
      const auto& ends = c.covers(1, static_cast<int>(e));
      if (ends.size() != 2 || coords[ends[0]] == coords[ends[1]])
        throw RealizationError("degenerate edge " + c.id(1, static_cast<int>(e)));
      g.edges.emplace_back(coords[ends[0]], coords[ends[1]]);
    }
  if (c.rank() >= 3)
    for (std::size_t f = 0; f < c.face_count(2); ++f) g.polygons.push_back(polygon_from_edges(g, static_cast<int>(f)));
  if (c.rank() >= 4)
    for (std::size_t f = 0; f < c.face_count(3); ++f) {
      std::vector<Polygon> faces;
      for (int p : c.covers(3, static_cast<int>(f))) faces.push_back(g.polygons[p]);
      g.facets.emplace_back(Facet::from_faces(faces));
    }
  g.interior.assign(c.rank(), {});
  for (int r = 0; r < c.rank(); ++r) g.interior[r].assign(c.face_count(r), 1);
  g.build_index();
  return g;
}

GeometricComplex realize(const IncidenceComplex& c, const std::vector<Vec3>& coords) {
  std::vector<Vec3> sorted = coords;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw RealizationError("vertex map is not injective");
  auto f = faithfulness_check(c);
  if (!f.ok)
    throw RealizationError("faithfulness violation: rank-" + std::to_string(f.rank) + " faces " + f.first + " and " +
                           f.second + " have the same boundary");
  return assemble(c, coords);
}

std::string_view polygon_class_name(PolygonClass c) {
  switch (c) {
    case PolygonClass::PlanarFinite: return "planar-finite";
    case PolygonClass::SkewFinite: return "skew-finite";
    case PolygonClass::PlanarZigzag: return "planar-zigzag";
    case PolygonClass::OtherInfinite: return "other-infinite";
    case PolygonClass::Indeterminate: return "indeterminate";
  }
  return "?";
}

PolygonClass classify_polygon(const Polygon& p) {
  if (p.vertices().empty()) return PolygonClass::Indeterminate;
  if (!p.infinite()) return p.planar() ? PolygonClass::PlanarFinite : PolygonClass::SkewFinite;
  if (!p.planar()) return PolygonClass::OtherInfinite;
  const Vec3 w = p.vertex(2) - p.vertex(0);
  if (w.is_zero() || cross(w, p.vertex(1) - p.vertex(0)).is_zero()) return PolygonClass::OtherInfinite;
  const long long k = static_cast<long long>(p.period_length());
  for (long long i = 0; i < 2 * k + 2; ++i)
    if (!(p.vertex(i + 2) - p.vertex(i) == w)) return PolygonClass::OtherInfinite;
  return PolygonClass::PlanarZigzag;
}

PolygonClass classify_polygon(const GeometricComplex& g, int face2) {
  if (g.rank() < 3 || face2 < 0 || face2 >= static_cast<int>(g.polygons.size()))
    throw std::out_of_range("not a 2-face");
  return classify_polygon(g.polygons[face2]);
}

bool is_symmetry(const GeometricComplex& g, const Isometry& t) {
  const int top = std::min(g.rank(), 4);
  const auto& box = g.window;
  for (int r = 0; r < top; ++r) {
    if ((r == 2 && g.rank() < 3) || (r == 3 && g.rank() < 4)) continue;
    for (std::size_t i = 0; i < g.abstract.face_count(r); ++i) {
      if (!g.interior[r][i]) continue;
      FaceKey key;
      bool visible = !box.has_value();
      if (r == 0) {
        Vec3 p = t(g.coords[i]);
        visible = visible || box->contains(p);
        key = vertex_key(p);
      } else if (r == 1) {
        Vec3 a = t(g.edges[i].first), b = t(g.edges[i].second);
        visible = visible || box->contains(a) || box->contains(b);
        key = edge_key(a, b);
      } else if (r == 2) {
        Polygon p = g.polygons[i].transformed(t);
        visible = visible || !p.vertices_in_box(box->lo, box->hi).empty();
        key = p.key();
      } else {
        if (!g.facets[i]) continue;
        if (!visible) {
          for (const auto& p : g.face_points(r, static_cast<int>(i)))
            if (box->contains(t(p))) {
              visible = true;
              break;
            }
        }
        if (!visible) continue;
        key = g.facets[i]->transformed(t).key();
      }
      if (!visible) continue;
      if (g.lookup(r, key).empty()) return false;
    }
  }
  return true;
}

std::optional<Isometry> plane_reflection(const Polygon& p) {
  auto n = p.plane_normal();
  if (!n) return std::nullopt;
  return Isometry::reflection(*n, p.vertices().front());
}

FaceMirrorReport face_mirrors(const GeometricComplex& g) {
  if (g.rank() < 3) throw std::invalid_argument("face mirrors need 2-faces");
  FaceMirrorReport rep;
  std::map<Isometry, bool> tested;
  for (std::size_t f = 0; f < g.polygons.size(); ++f) {
    if (!g.interior[2][f]) continue;
    auto refl = plane_reflection(g.polygons[f]);
    if (!refl) {
      rep.skipped_nonplanar.push_back(static_cast<int>(f));
      continue;
    }
    auto [it, fresh] = tested.emplace(*refl, false);
    if (fresh) it->second = is_symmetry(g, *refl);
    if (it->second) rep.mirrors.push_back({static_cast<int>(f), *refl});
  }
  return rep;
}

std::string_view angle_class_name(AngleClass c) {
  switch (c) {
    case AngleClass::Coincident: return "coincident";
    case AngleClass::Deg60: return "60";
    case AngleClass::Deg90: return "90";
    case AngleClass::Deg120: return "120";
    case AngleClass::Other: return "other";
  }
  return "?";
}

DihedralAngle half_plane_angle(const Vec3& b1, const Vec3& b2) {
  const Rational c = dot(b1, b2);
  const Rational c2 = c * c / (dot(b1, b1) * dot(b2, b2));
  DihedralAngle a;
  a.signed_cos2 = c.sign() < 0 ? -c2 : c2;
  if (c2 == Rational(1)) a.cls = AngleClass::Coincident;
  else if (c2.is_zero()) a.cls = AngleClass::Deg90;
  else if (a.signed_cos2 == Rational(1, 4)) a.cls = AngleClass::Deg60;
  else if (a.signed_cos2 == Rational(-1, 4)) a.cls = AngleClass::Deg120;
  else a.cls = AngleClass::Other;
  return a;
}

Vec3 half_plane_direction(const Polygon& p, const Vec3& v0, const Vec3& v1) {
  auto nb = p.neighbours(v0);
  if (!nb) throw std::invalid_argument("vertex not on polygon");
  const Vec3 other = nb->first == v1 ? nb->second : nb->first;
  const Vec3 d = other - v0, e = v1 - v0;
  return d - (dot(d, e) / dot(e, e)) * e;
}

std::vector<DihedralAngle> dihedral_angles_at_edge(const GeometricComplex& g, int edge) {
  if (g.rank() < 3) throw std::invalid_argument("dihedral angles need 2-faces");
  const auto& faces = g.abstract.covered_by(1, edge);
  const auto [v0, v1] = g.edges[edge];
  std::vector<Vec3> dirs;
  for (int f : faces) {
    if (!g.polygons[f].planar()) throw std::invalid_argument("non-planar 2-face " + g.abstract.id(2, f) + " at edge");
    dirs.push_back(half_plane_direction(g.polygons[f], v0, v1));
  }
  std::vector<DihedralAngle> out;
  for (std::size_t a = 0; a < faces.size(); ++a)
    for (std::size_t b = a + 1; b < faces.size(); ++b) {
      auto d = half_plane_angle(dirs[a], dirs[b]);
      d.face_a = faces[a];
      d.face_b = faces[b];
      out.push_back(d);
    }
  return out;
}

DiscretenessReport discreteness_check(const GeometricComplex& g, const std::vector<Box>& probes, std::size_t budget) {
  DiscretenessReport rep;
  const int top = std::min(g.rank(), 4);
  for (int r = 0; r < top; ++r)
    for (std::size_t i = 0; i < g.abstract.face_count(r); ++i) {
      if ((r == 2 && g.rank() < 3) || (r == 3 && g.rank() < 4)) continue;
      auto k = g.face_key(r, static_cast<int>(i));
      if (k && g.lookup(r, *k).size() > 1) rep.duplicates.emplace_back(r, static_cast<int>(i));
    }
  for (const auto& box : probes) {
    std::vector<std::size_t> counts(g.rank(), 0);
    std::size_t total = 0;
    for (int r = 0; r < g.rank(); ++r)
      for (std::size_t i = 0; i < g.abstract.face_count(r); ++i) {
        auto pts = g.face_points(r, static_cast<int>(i));
        if (std::any_of(pts.begin(), pts.end(), [&](const Vec3& p) { return box.contains(p); })) ++counts[r];
      }
    for (auto c : counts) total += c;
    if (total > budget) rep.ok = false;
    rep.counts.push_back(std::move(counts));
  }
  if (!rep.duplicates.empty()) rep.ok = false;
  return rep;
}

}  // namespace polycx
