#include "polycx/audit.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace polycx {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::NoRank4Extension: return "no-rank4-extension";
    case Verdict::Rank4Candidates: return "rank4-candidates";
    case Verdict::InconsistentInput: return "inconsistent-input";
  }
  return "?";
}

std::string_view edge_shape_name(EdgeStabilizerShape s) {
  switch (s) {
    case EdgeStabilizerShape::Trivial: return "trivial";
    case EdgeStabilizerShape::Order2: return "order-2";
    case EdgeStabilizerShape::Cyclic3: return "cyclic-3";
    case EdgeStabilizerShape::Dihedral3: return "dihedral-3";
    case EdgeStabilizerShape::Other: return "other";
  }
  return "?";
}

namespace {

struct Frame {
  Vec3 p0, a, b, c;
};

Vec3 other_end(const GeometricComplex& g, int edge, const Vec3& p) {
  return g.edges[edge].first == p ? g.edges[edge].second : g.edges[edge].first;
}

Frame frame_of(const GeometricComplex& g, const BaseFlag3& f) {
  Frame fr;
  fr.p0 = g.coords[f.vertex];
  const Vec3 p1 = other_end(g, f.edge, fr.p0);
  auto nb = g.polygons[f.face].neighbours(fr.p0);
  if (!nb) throw std::logic_error("flag vertex not on its 2-face");
  const Vec3 pm = nb->first == p1 ? nb->second : nb->first;
  fr.a = p1 - fr.p0;
  fr.b = pm - fr.p0;
  fr.c = cross(fr.a, fr.b);
  return fr;
}

std::optional<std::vector<Isometry>> finite_closure(const std::vector<Isometry>& gens, std::size_t limit) {
  std::vector<Isometry> out{Isometry::identity()};
  std::unordered_set<Isometry, IsometryHash> seen{out[0]};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& s : gens) {
      Isometry h = out[i] * s;
      if (seen.insert(h).second) {
        out.push_back(h);
        if (out.size() > limit) return std::nullopt;
      }
    }
  return out;
}

std::vector<int> faces_at_edge(const GeometricComplex& g, int edge) { return g.abstract.covered_by(1, edge); }

Vec3 center_of(const Box& b) { return Rational(1, 2) * (b.lo + b.hi); }

}  // namespace

BaseFlag3 choose_base_flag(const GeometricComplex& g) {
  const auto& c = g.abstract;
  if (c.rank() < 3) throw AuditError("audit needs a complex with 2-faces");
  std::optional<BaseFlag3> best;
  Rational best_d;
  Vec3 centre{};
  if (g.window) centre = center_of(*g.window);
  for (std::size_t v = 0; v < c.face_count(0); ++v) {
    if (!g.interior[0][v]) continue;
    const Vec3 d = g.coords[v] - centre;
    const Rational dist = dot(d, d);
    if (best && !(dist < best_d)) continue;
    for (int e : c.covered_by(0, static_cast<int>(v))) {
      if (!g.interior[1][e] || faces_at_edge(g, e).empty()) continue;
      best = BaseFlag3{static_cast<int>(v), e, faces_at_edge(g, e).front()};
      best_d = dist;
      break;
    }
  }
  if (!best) throw AuditError("window has no interior flag; it is too small to certify anything");
  return *best;
}

std::vector<Isometry> flag_maps(const GeometricComplex& g, const BaseFlag3& a, const BaseFlag3& b) {
  const Frame fa = frame_of(g, a), fb = frame_of(g, b);
  std::vector<Isometry> out;
  if (fa.c.is_zero() || fb.c.is_zero()) return out;
  const auto inv = Mat3::from_columns(fa.a, fa.b, fa.c).inverse();
  if (!inv) return out;
  for (int s : {1, -1}) {
    const Mat3 m = Mat3::from_columns(fb.a, fb.b, Rational(s) * fb.c) * *inv;
    if (!m.is_orthogonal()) continue;
    Isometry t{m, fb.p0 - m * fa.p0};
    if (is_symmetry(g, t)) out.push_back(t);
  }
  return out;
}

std::vector<BaseFlag3> adjacent_flags3(const GeometricComplex& g, const BaseFlag3& f, int i) {
  const auto& c = g.abstract;
  std::vector<BaseFlag3> out;
  if (i == 0) {
    for (int v : c.covers(1, f.edge))
      if (v != f.vertex) out.push_back({v, f.edge, f.face});
  } else if (i == 1) {
    const auto& star = c.covered_by(0, f.vertex);
    for (int e : c.covers(2, f.face))
      if (e != f.edge && std::binary_search(star.begin(), star.end(), e)) out.push_back({f.vertex, e, f.face});
  } else if (i == 2) {
    for (int h : c.covered_by(1, f.edge))
      if (h != f.face) out.push_back({f.vertex, f.edge, h});
  } else {
    throw std::out_of_range("rank-3 flags have adjacency 0, 1, 2");
  }
  return out;
}

std::vector<std::vector<Isometry>> distinguished_isometries(const GeometricComplex& g, const BaseFlag3& base) {
  std::vector<std::vector<Isometry>> R(4);
  R[0] = flag_maps(g, base, base);
  for (int i = 0; i < 3; ++i) {
    R[i + 1] = R[0];
    for (const auto& f : adjacent_flags3(g, base, i))
      for (auto& t : flag_maps(g, base, f)) R[i + 1].push_back(t);
  }
  return R;
}

int facet_r3(const GeometricComplex& k, int facet) {
  const auto& c = k.abstract;
  if (c.rank() < 4) throw AuditError("facet sections need a rank-4 complex");
  const auto faces = c.faces_below({3, facet}, 2);
  std::multiset<int> counts;
  for (int e : c.faces_below({3, facet}, 1)) {
    if (!k.interior[1][e]) continue;
    int n = 0;
    for (int f : c.covered_by(1, e)) n += std::binary_search(faces.begin(), faces.end(), f);
    counts.insert(n);
  }
  if (counts.empty()) throw AuditError("facet " + c.id(3, facet) + " has no interior edge");
  if (*counts.begin() != *counts.rbegin()) {
    std::string ms;
    for (int n : counts) ms += (ms.empty() ? "" : ",") + std::to_string(n);
    throw AuditError("non-uniform 2-face counts in facet section: {" + ms + "}");
  }
  return *counts.begin();
}

namespace {

EdgeStabilizerShape edge_shape(const GeometricComplex& g, const BaseFlag3& base,
                               const std::vector<std::vector<Isometry>>& R) {
  std::vector<Isometry> gens = R[1];
  gens.insert(gens.end(), R[3].begin(), R[3].end());
  auto group = finite_closure(gens, 1000);
  if (!group) return EdgeStabilizerShape::Other;
  const auto faces = faces_at_edge(g, base.edge);
  std::set<std::vector<int>> perms;
  for (const auto& h : *group) {
    std::vector<int> p;
    for (int f : faces) {
      const auto& hit = g.lookup(2, g.polygons[f].transformed(h).key());
      auto it = hit.empty() ? faces.end() : std::find(faces.begin(), faces.end(), hit.front());
      p.push_back(it == faces.end() ? -1 : static_cast<int>(it - faces.begin()));
    }
    perms.insert(p);
  }
  switch (perms.size()) {
    case 1: return EdgeStabilizerShape::Trivial;
    case 2: return EdgeStabilizerShape::Order2;
    case 3: return faces.size() == 3 ? EdgeStabilizerShape::Cyclic3 : EdgeStabilizerShape::Other;
    case 6: return faces.size() == 3 ? EdgeStabilizerShape::Dihedral3 : EdgeStabilizerShape::Other;
    default: return EdgeStabilizerShape::Other;
  }
}

Box bounding_box(const GeometricComplex& g) {
  Box b{g.coords.front(), g.coords.front()};
  for (const auto& p : g.coords)
    for (int c = 0; c < 3; ++c) {
      b.lo[c] = std::min(b.lo[c], p[c]);
      b.hi[c] = std::max(b.hi[c], p[c]);
    }
  return b;
}

}  // namespace

namespace {

std::vector<Rank4Candidate> rank4_candidates(const GeometricComplex& g, const BaseFlag3& base,
                                             const std::vector<std::vector<Isometry>>& R, const Isometry& rho3,
                                             std::vector<std::string>& notes) {
  const auto& c = g.abstract;
  const Vec3 p0 = g.coords[base.vertex];
  const Vec3 p1 = other_end(g, base.edge, p0);
  const Polygon& face = g.polygons[base.face];
  const std::size_t r = faces_at_edge(g, base.edge).size();
  const std::size_t degree = c.covered_by(0, base.vertex).size();
  const Box box = g.window ? *g.window : bounding_box(g);
  auto in_stabilizer = [&](const Isometry& x) { return std::find(R[0].begin(), R[0].end(), x) != R[0].end(); };
  auto choices = [&](int i) {
    std::vector<Isometry> out;
    for (const auto& x : R[i + 1])
      if (!in_stabilizer(x) && x.is_involution()) out.push_back(x);
    return out;
  };
  auto sq_id = [](const Isometry& a, const Isometry& b) { return ((a * b) * (a * b)).is_identity(); };

  std::vector<Rank4Candidate> accepted;
  std::set<FaceKey> tried_facets;
  std::size_t quads = 0, built = 0;
  for (const auto& a0 : choices(0))
    for (const auto& a1 : choices(1))
      for (const auto& a2 : choices(2)) {
        if (!sq_id(a0, a2) || !sq_id(a0, rho3) || !sq_id(a1, rho3)) continue;
        ++quads;
        try {
          if (!(polygon_from_generators(a0, a1, p0) == face)) continue;
          // the edge stabilizer must reach all r faces, the vertex stabilizer all edges
          auto es = finite_closure({a0, a2, rho3}, 512);
          auto vs = finite_closure({a1, a2, rho3}, 512);
          if (!es || !vs) continue;
          std::set<FaceKey> fo, eo;
          for (const auto& h : *es) fo.insert(face.transformed(h).key());
          for (const auto& h : *vs) eo.insert(edge_key(h(p0), h(p1)));
          if (fo.size() != r || eo.size() != degree) continue;
          Facet facet = Facet::from_group({a0, a1, a2}, face);
          if (!tried_facets.insert(facet.key()).second) continue;
          ++built;
          GeometricFlag gf{p0, p1, face, facet};
          auto oc = orbit_complex({a0, a1, a2, rho3}, gf, box);
          const auto& k = oc.complex;
          if (!same_faces(two_skeleton(k), g, 2)) continue;
          bool two = true;
          for (std::size_t f = 0; f < k.abstract.face_count(2); ++f)
            if (k.interior[2][f]) two = two && k.abstract.covered_by(2, static_cast<int>(f)).size() == 2;
          if (!two) continue;
          Rank4Candidate cand;
          cand.generators = {a0, a1, a2, rho3};
          cand.facet_r3 = facet_r3(k, oc.base_flag.faces[3]);
          if (cand.facet_r3 != 2) continue;
          cand.facets_finite = facet.finite();
          cand.facets_at_base_vertex = k.abstract.faces_above({0, oc.base_flag.faces[0]}, 3).size();
          for (std::size_t f = 0; f < k.abstract.face_count(3); ++f)
            cand.facets.push_back(*k.face_key(3, static_cast<int>(f)));
          std::sort(cand.facets.begin(), cand.facets.end());
          // the two facets at the base face give the same complex
          if (std::any_of(accepted.begin(), accepted.end(),
                          [&](const Rank4Candidate& a) { return a.facets == cand.facets; }))
            continue;
          accepted.push_back(std::move(cand));
        } catch (const NonDiscreteGroup&) {
        } catch (const FaceBudgetExceeded&) {
        } catch (const AuditError&) {
        }
      }
  notes.push_back(std::to_string(quads) + " generator quadruples, " + std::to_string(built) +
                  " distinct facets built, " + std::to_string(accepted.size()) + " accepted");
  return accepted;
}

}  // namespace

AuditReport audit(const GeometricComplex& input) {
  AuditReport rep;
  const GeometricComplex g = input.rank() > 3 ? two_skeleton(input) : input;
  if (input.rank() > 3) rep.notes.push_back("input reduced to its 2-skeleton");
  if (g.rank() != 3) throw AuditError("audit needs a rank-3 complex");
  const BaseFlag3 base = choose_base_flag(g);
  rep.window_certified = g.window.has_value();

  rep.planar_faces = true;
  for (std::size_t f = 0; f < g.polygons.size(); ++f)
    if (g.interior[2][f] && !g.polygons[f].planar()) rep.planar_faces = false;

  auto mirrors = face_mirrors(g);
  rep.face_mirrors_found = !mirrors.mirrors.empty();
  if (!mirrors.skipped_nonplanar.empty())
    rep.notes.push_back(std::to_string(mirrors.skipped_nonplanar.size()) + " non-planar 2-faces cannot have mirrors");

  const auto R = distinguished_isometries(g, base);
  for (const auto& x : R) rep.subgroup_orders.push_back(x.size());
  rep.flag_stabilizer_order = R[0].size();
  if (auto m = plane_reflection(g.polygons[base.face]))
    if (std::find(R[0].begin(), R[0].end(), *m) != R[0].end()) rep.rho3 = *m;

  std::set<int> rs;
  for (int n : interior_edge_face_counts(g)) rs.insert(n);
  if (rs.size() == 1) rep.r = *rs.begin();
  else rep.notes.push_back("2-face counts differ between interior edges");

  try {
    for (const auto& a : dihedral_angles_at_edge(g, base.edge)) {
      rep.edge_angle_classes.push_back(a.cls);
      rep.edge_angle_values.push_back(a.signed_cos2);
    }
  } catch (const std::invalid_argument& e) {
    rep.notes.push_back(e.what());
  }
  rep.edge_stabilizer_shape = edge_shape(g, base, R);

  if (!rep.face_mirrors_found) {
    rep.verdict = Verdict::NoRank4Extension;
    rep.notes.push_back("no face mirrors: a rank-4 extension would need a nontrivial R3 fixing a 2-face pointwise");
    return rep;
  }
  if (!rep.planar_faces || rep.flag_stabilizer_order != 2 || !rep.rho3 || !rep.r || (*rep.r != 3 && *rep.r != 4)) {
    rep.verdict = Verdict::InconsistentInput;
    rep.notes.push_back("mirrors present but planarity, stabilizer order 2 or r in {3,4} fails");
    return rep;
  }
  rep.candidates = rank4_candidates(g, base, R, *rep.rho3, rep.notes);
  std::set<int> r3s;
  for (const auto& c : rep.candidates) r3s.insert(c.facet_r3);
  if (r3s.size() == 1) rep.facet_r3 = *r3s.begin();
  rep.verdict = rep.candidates.size() == 2 ? Verdict::Rank4Candidates : Verdict::InconsistentInput;
  if (rep.candidates.size() != 2)
    rep.notes.push_back("expected exactly two rank-4 extensions, found " + std::to_string(rep.candidates.size()));
  return rep;
}

namespace {

Rank5Result rank5_from(std::size_t order, bool planar) {
  Rank5Result res;
  res.stabilizer_order = order;
  res.planar_base_face = planar;
  if (order == 2) {
    res.obstructed = true;
    res.branch = "R3 = R4 = <r3>";
  } else if (order == 1) {
    res.obstructed = true;
    res.branch = planar ? "trivial stabilizer" : "non-planar base face: R3, ..., R(n-1) trivial";
  } else {
    res.branch = "stabilizer larger than 2";
  }
  return res;
}

}  // namespace

Rank5Result rank5_obstruction(const CatalogEntry& e, int window) {
  auto w = build_window(e, window);
  if (w.complex.interior_count(0) == 0) throw AuditError("window too small");
  return rank5_from(base_stabilizer(w, 2).size(), e.base.face->planar());
}

Rank5Result rank5_obstruction(const GeometricComplex& input) {
  const GeometricComplex g = input.rank() > 3 ? two_skeleton(input) : input;
  const BaseFlag3 base = choose_base_flag(g);
  return rank5_from(flag_maps(g, base, base).size(), g.polygons[base.face].planar());
}

DihedralResult dihedral_obstruction(int r, int r3, const std::vector<AngleClass>& classes) {
  if (r != 3 && r != 4) throw std::invalid_argument("r must be 3 or 4");
  if (r3 > r) throw std::invalid_argument("r3 cannot exceed r");
  if (r3 < 2) throw std::invalid_argument("r3 must be at least 2");
  if (r3 == r) return {true, "connectedness"};
  if (r == 4 && r3 == 3) {
    const bool has120 = std::find(classes.begin(), classes.end(), AngleClass::Deg120) != classes.end();
    const bool only_90 = std::all_of(classes.begin(), classes.end(), [](AngleClass c) {
      return c == AngleClass::Coincident || c == AngleClass::Deg90;
    });
    if (!has120 && only_90) return {true, "dihedral"};
    return {false, "admissible"};
  }
  return {false, "admissible"};
}

}  // namespace polycx
