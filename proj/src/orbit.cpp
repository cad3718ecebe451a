#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "polycx/geometric.hpp"

namespace polycx {

std::size_t default_face_budget() {
  if (const char* env = std::getenv("POLYCX_FACE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

namespace {

struct Registry {
  std::unordered_map<FaceKey, int, FaceKeyHash> ids;
  std::size_t size() const { return ids.size(); }
};

class OrbitBuilder {
 public:
  OrbitBuilder(const std::vector<Isometry>& gens, const GeometricFlag& base, std::size_t budget)
      : gens_(gens), base_(base), n_(base.rank()), budget_(budget), reg_(n_) {
    if (!base.face && base.facet) throw std::invalid_argument("a facet needs a base 2-face");
    if (base.vertex == base.edge_end) throw std::invalid_argument("degenerate base edge");
    if (base.face && !base.face->has_edge(base.vertex, base.edge_end))
      throw std::invalid_argument("base faces are not incident: edge not on the 2-face");
    if (base.facet && !base.facet->contains_face(*base.face))
      throw std::invalid_argument("base faces are not incident: 2-face not in the facet");
    fixes_.assign(gens.size(), std::vector<char>(n_, 0));
    for (std::size_t s = 0; s < gens.size(); ++s)
      for (int r = 0; r < n_; ++r) fixes_[s][r] = key_of(r, gens[s]) == key_of(r, Isometry::identity());
  }

  FaceKey key_of(int r, const Isometry& g) {
    switch (r) {
      case 0: return vertex_key(g(base_.vertex));
      case 1: return edge_key(g(base_.vertex), g(base_.edge_end));
      case 2: return base_.face->transformed(g).key();
      default: return base_.facet->transformed(g).key();
    }
  }

  int face_id(int r, const Isometry& g) {
    FaceKey k = key_of(r, g);
    auto it = reg_[r].ids.find(k);
    if (it != reg_[r].ids.end()) return it->second;
    const int id = static_cast<int>(reg_[r].size());
    reg_[r].ids.emplace(std::move(k), id);
    owner_[r].push_back(g);
    if (++total_faces_ > budget_) throw FaceBudgetExceeded("face budget of " + std::to_string(budget_) + " exceeded");
    return id;
  }

  OrbitComplex run(const Box& window) {
    owner_.assign(n_, {});
    Rational margin;
    for (int c = 0; c < 3; ++c) margin = std::max(margin, abs(base_.edge_end[c] - base_.vertex[c]));
    const Box search = window.expanded(Rational(margin.floor() + 1));
    if (!window.contains(base_.vertex)) throw std::invalid_argument("base vertex outside the window");

    std::vector<Isometry> elems{Isometry::identity()};
    std::vector<std::vector<int>> ids;
    std::vector<int> id0(n_);
    for (int r = 0; r < n_; ++r) id0[r] = face_id(r, elems[0]);
    ids.push_back(id0);
    std::unordered_set<Isometry, IsometryHash> seen{elems[0]};
    for (std::size_t q = 0; q < elems.size(); ++q) {
      for (std::size_t s = 0; s < gens_.size(); ++s) {
        Isometry h = elems[q] * gens_[s];
        if (!search.contains(h(base_.vertex)) || seen.count(h)) continue;
        seen.insert(h);
        if (elems.size() >= budget_) throw FaceBudgetExceeded("orbit exceeds budget of " + std::to_string(budget_));
        std::vector<int> hid(n_);
        for (int r = 0; r < n_; ++r) hid[r] = fixes_[s][r] ? ids[q][r] : face_id(r, h);
        elems.push_back(std::move(h));
        ids.push_back(std::move(hid));
      }
    }

    // Keep flags whose vertex is in the window; compact face numbering.
    OrbitComplex out;
    out.symmetries.generators = gens_;
    std::vector<std::vector<int>> remap(n_);
    for (int r = 0; r < n_; ++r) remap[r].assign(reg_[r].size(), -1);
    std::vector<int> counts(n_, 0);
    std::vector<std::vector<Isometry>> rep(n_);
    std::set<std::vector<int>> flag_set;
    for (std::size_t e = 0; e < elems.size(); ++e) {
      if (!window.contains(elems[e](base_.vertex))) continue;
      Flag f;
      f.faces.resize(n_);
      for (int r = 0; r < n_; ++r) {
        int& m = remap[r][ids[e][r]];
        if (m == -1) {
          m = counts[r]++;
          rep[r].push_back(owner_[r][ids[e][r]]);
        }
        f.faces[r] = m;
      }
      out.symmetries.elements.push_back(elems[e]);
      out.symmetries.images.push_back(f);
      flag_set.insert(f.faces);
    }
    out.base_flag = out.symmetries.images.front();

    std::vector<std::vector<std::vector<int>>> covers(n_);
    for (int r = 0; r < n_; ++r) covers[r].assign(counts[r], {});
    for (const auto& f : flag_set)
      for (int r = 1; r < n_; ++r) covers[r][f[r]].push_back(f[r - 1]);
    auto& g = out.complex;
    g.abstract = IncidenceComplex::from_covers(n_, std::move(covers));
    for (const auto& x : rep[0]) g.coords.push_back(x(base_.vertex));
    for (const auto& x : rep[1]) g.edges.emplace_back(x(base_.vertex), x(base_.edge_end));
    if (n_ >= 3)
      for (const auto& x : rep[2]) g.polygons.push_back(base_.face->transformed(x));
    if (n_ >= 4)
      for (const auto& x : rep[3]) g.facets.emplace_back(base_.facet->transformed(x));
    g.window = window;
    mark_interior(g);
    g.build_index();
    return out;
  }

 private:
  const std::vector<Isometry>& gens_;
  const GeometricFlag& base_;
  int n_;
  std::size_t budget_;
  std::vector<Registry> reg_;
  std::vector<std::vector<Isometry>> owner_;
  std::vector<std::vector<char>> fixes_;
  std::size_t total_faces_ = 0;
};

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

OrbitComplex orbit_complex(const std::vector<Isometry>& generators, const GeometricFlag& base, const Box& window,
                           std::size_t face_budget) {
  OrbitBuilder b(generators, base, face_budget);
  return b.run(window);
}

void mark_interior(GeometricComplex& g) {
  const auto& c = g.abstract;
  const int n = c.rank();
  g.interior.assign(n, {});
  for (int r = 0; r < n; ++r) g.interior[r].assign(c.face_count(r), g.window ? 0 : 1);
  if (!g.window || n < 2) return;
  const std::size_t nv = c.face_count(0);
  std::vector<char> complete(nv, 1);
  for (std::size_t v = 0; v < nv; ++v)
    for (int e : c.covered_by(0, static_cast<int>(v)))
      if (c.covers(1, e).size() != 2) complete[v] = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    if (!complete[v] || !g.window->contains(g.coords[v])) continue;
    bool ok = true;
    for (int e : c.covered_by(0, static_cast<int>(v)))
      for (int u : c.covers(1, e)) ok = ok && complete[u];
    g.interior[0][v] = ok;
  }
  for (std::size_t e = 0; e < c.face_count(1); ++e) {
    const auto& ends = c.covers(1, static_cast<int>(e));
    g.interior[1][e] = ends.size() == 2 && g.interior[0][ends[0]] && g.interior[0][ends[1]];
  }
  for (int r = 2; r < n; ++r)
    for (std::size_t i = 0; i < c.face_count(r); ++i)
      for (int v : c.faces_below({r, static_cast<int>(i)}, 0))
        if (g.interior[0][v]) {
          g.interior[r][i] = 1;
          break;
        }
}

ValidationReport validate_interior(const GeometricComplex& g) {
  const auto& c = g.abstract;
  const int n = c.rank();
  ValidationReport rep;
  auto fail = [&](Axiom a, std::string detail, std::vector<std::string> witness) {
    rep.passed = false;
    rep.violations.push_back({a, std::move(detail), std::move(witness)});
  };
  for (int r = 0; r < n; ++r)
    for (std::size_t i = 0; i < c.face_count(r); ++i) {
      if (!g.interior[r][i]) continue;
      const int f = static_cast<int>(i);
      if (r > 0 && c.covers(r, f).empty()) fail(Axiom::FlagLength, "interior face covers nothing", {c.label({r, f})});
      if (r + 1 < n && c.covered_by(r, f).empty())
        fail(Axiom::FlagLength, "interior face is covered by nothing", {c.label({r, f})});
    }
  for (const auto& p : middle_pairs(c)) {
    const bool relevant = p.lower.rank == -1 ? (p.upper.rank < n && g.interior[p.upper.rank][p.upper.index])
                                             : g.interior[p.lower.rank][p.lower.index] != 0;
    if (relevant && p.count < 2)
      fail(Axiom::AtLeastTwo, "fewer than two middle faces", {c.label(p.lower), c.label(p.upper)});
  }
  for (std::size_t v = 0; v < c.face_count(0); ++v) {
    if (!g.interior[0][v]) continue;
    auto vf = validate_complex(vertex_figure(c, static_cast<int>(v)));
    for (auto& x : vf.violations) {
      x.detail = "vertex-figure at " + c.label({0, static_cast<int>(v)}) + ": " + x.detail;
      rep.passed = false;
      rep.violations.push_back(std::move(x));
    }
  }
  if (n >= 3)
    for (std::size_t f = 0; f < c.face_count(2); ++f) {
      if (!g.interior[2][f] || g.polygons.empty() || g.polygons[f].infinite()) continue;
      auto sec = section(c, {-1, 0}, {2, static_cast<int>(f)});
      if (sec.face_count(0) != g.polygons[f].period_length()) continue;  // truncated by the window
      auto r2 = validate_complex(sec);
      for (auto& x : r2.violations) {
        rep.passed = false;
        rep.violations.push_back(std::move(x));
      }
    }
  return rep;
}

bool windowed_flag_transitive(const OrbitComplex& oc) {
  const auto& g = oc.complex;
  for (const auto& s : oc.symmetries.generators)
    if (!is_symmetry(g, s)) return false;
  std::unordered_set<Flag, FlagHash> images(oc.symmetries.images.begin(), oc.symmetries.images.end());
  for (std::size_t v = 0; v < g.abstract.face_count(0); ++v) {
    if (!g.interior[0][v]) continue;
    for (const auto& f : flags_through(g.abstract, {0, static_cast<int>(v)}))
      if (!images.count(f)) return false;
  }
  return true;
}

PolygonalReport polygonal_conditions(const GeometricComplex& g) {
  const auto& c = g.abstract;
  if (c.rank() != 3) throw std::invalid_argument("polygonal conditions apply to rank 3");
  PolygonalReport rep;
  const std::size_t nv = c.face_count(0);
  UnionFind uf(nv);
  for (std::size_t e = 0; e < c.face_count(1); ++e) {
    if (!g.interior[1][e]) continue;
    const auto& ends = c.covers(1, static_cast<int>(e));
    uf.unite(ends[0], ends[1]);
    if (c.covered_by(1, static_cast<int>(e)).size() < 2) rep.edges_in_two_faces = false;
  }
  int root = -1;
  for (std::size_t v = 0; v < nv; ++v) {
    if (!g.interior[0][v]) continue;
    if (root == -1) root = uf.find(static_cast<int>(v));
    else if (uf.find(static_cast<int>(v)) != root) rep.edge_graph_connected = false;
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (!g.interior[0][v]) continue;
    const auto& star = c.covered_by(0, static_cast<int>(v));  // sorted edge indices
    UnionFind vf(star.size());
    std::map<std::pair<int, int>, int> mult;
    std::set<int> faces;
    for (int e : star)
      for (int f : c.covered_by(1, e)) faces.insert(f);
    for (int f : faces) {
      std::vector<int> at;
      for (int e : c.covers(2, f))
        if (std::binary_search(star.begin(), star.end(), e))
          at.push_back(static_cast<int>(std::lower_bound(star.begin(), star.end(), e) - star.begin()));
      if (at.size() != 2) continue;
      vf.unite(at[0], at[1]);
      rep.max_multiplicity = std::max(rep.max_multiplicity, ++mult[{at[0], at[1]}]);
    }
    for (std::size_t k = 1; k < star.size(); ++k)
      if (vf.find(static_cast<int>(k)) != vf.find(0)) rep.vertex_figures_connected = false;
  }
  return rep;
}

std::vector<int> interior_edge_face_counts(const GeometricComplex& g) {
  std::vector<int> out;
  for (std::size_t e = 0; e < g.abstract.face_count(1); ++e)
    if (g.interior[1][e]) out.push_back(static_cast<int>(g.abstract.covered_by(1, static_cast<int>(e)).size()));
  return out;
}

GeometricComplex two_skeleton(const GeometricComplex& g) {
  if (g.rank() < 3) throw std::invalid_argument("complex has no 2-faces");
  GeometricComplex s;
  s.abstract = skeleton(g.abstract, 2);
  s.coords = g.coords;
  s.edges = g.edges;
  s.polygons = g.polygons;
  s.window = g.window;
  s.interior.assign(g.interior.begin(), g.interior.begin() + 3);
  s.build_index();
  return s;
}

namespace {

std::map<FaceKey, std::set<FaceKey>> face_table(const GeometricComplex& g, int r) {
  std::map<FaceKey, std::set<FaceKey>> t;
  for (std::size_t i = 0; i < g.abstract.face_count(r); ++i) {
    auto k = g.face_key(r, static_cast<int>(i));
    if (!k) continue;
    auto& below = t[*k];
    if (r > 0)
      for (int x : g.abstract.covers(r, static_cast<int>(i)))
        if (auto kx = g.face_key(r - 1, x)) below.insert(*kx);
  }
  return t;
}

}  // namespace

bool same_faces(const GeometricComplex& a, const GeometricComplex& b, int max_rank) {
  if (a.window.has_value() != b.window.has_value()) return false;
  if (a.window && !(a.window->lo == b.window->lo && a.window->hi == b.window->hi)) return false;
  for (int r = 0; r <= max_rank; ++r) {
    if (r >= a.rank() || r >= b.rank()) return false;
    if (face_table(a, r) != face_table(b, r)) return false;
  }
  return true;
}

}  // namespace polycx
