#include "polycx/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace polycx {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

// Non-empty lines with comments stripped, split on whitespace.
std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string raw(text.substr(pos, end - pos));
    ++number;
    pos = end + 1;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream in(raw);
    Line l{number, {}};
    for (std::string t; in >> t;) l.tokens.push_back(t);
    if (!l.tokens.empty()) out.push_back(std::move(l));
    if (end == text.size()) break;
  }
  return out;
}

void expect_header(const std::vector<Line>& ls, std::string_view magic) {
  if (ls.empty()) throw ParseError(1, "empty input, expected '" + std::string(magic) + " 1'");
  const auto& h = ls.front();
  if (h.tokens.size() != 2 || h.tokens[0] != magic || h.tokens[1] != "1")
    throw ParseError(h.number, "expected header '" + std::string(magic) + " 1'");
}

long long to_int(const Line& l, const std::string& t) {
  long long v = 0;
  std::size_t used = 0;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    throw ParseError(l.number, "expected an integer, got '" + t + "'");
  }
  if (used != t.size()) throw ParseError(l.number, "expected an integer, got '" + t + "'");
  return v;
}

Rational to_rational(const Line& l, const std::string& t) {
  try {
    return Rational::parse(t);
  } catch (const RationalOverflow&) {
    throw ParseError(l.number, "rational out of range: '" + t + "'");
  } catch (const std::invalid_argument&) {
    throw ParseError(l.number, "expected an exact rational p/q, got '" + t + "'");
  }
}

// "<rank> <id> : <covers...>"
bool incidence_line(const Line& l, std::vector<FaceRecord>& out) {
  const auto& t = l.tokens;
  if (t[0].empty() || !(std::isdigit(static_cast<unsigned char>(t[0][0])) || t[0][0] == '-')) return false;
  if (t.size() < 3 || t[2] != ":") throw ParseError(l.number, "expected '<rank> <id> : <covered ids>'");
  FaceRecord rec;
  rec.rank = static_cast<int>(to_int(l, t[0]));
  rec.id = t[1];
  rec.covers.assign(t.begin() + 3, t.end());
  out.push_back(std::move(rec));
  return true;
}

int rank_line(const Line& l) {
  if (l.tokens.size() != 2 || l.tokens[0] != "rank") throw ParseError(l.number, "expected 'rank <n>'");
  long long n = to_int(l, l.tokens[1]);
  if (n < 0 || n > 64) throw ParseError(l.number, "rank out of range");
  return static_cast<int>(n);
}

void append_incidence(std::string& out, const IncidenceComplex& c) {
  for (const auto& rec : c.records()) {
    out += std::to_string(rec.rank) + " " + rec.id + " :";
    for (const auto& x : rec.covers) out += " " + x;
    out += "\n";
  }
}

}  // namespace

std::string write_icx(const IncidenceComplex& c) {
  std::string out = "ICX 1\nrank " + std::to_string(c.rank()) + "\n";
  append_incidence(out, c);
  return out;
}

IncidenceComplex parse_icx(std::string_view text) {
  auto ls = lines_of(text);
  expect_header(ls, "ICX");
  if (ls.size() < 2) throw ParseError(ls.front().number + 1, "missing 'rank <n>' line");
  const int n = rank_line(ls[1]);
  std::vector<FaceRecord> recs;
  for (std::size_t i = 2; i < ls.size(); ++i)
    if (!incidence_line(ls[i], recs)) throw ParseError(ls[i].number, "unexpected line '" + ls[i].tokens[0] + "'");
  return IncidenceComplex::from_records(n, recs);
}

std::string write_sgs(const SubgroupSystem& s) {
  std::string out = "SGS 1\ndegree " + std::to_string(s.degree) + "\ngroup:\n";
  for (const auto& p : s.group) out += cycle_string(p) + "\n";
  for (int i = -1; i <= s.rank; ++i) {
    out += "R " + std::to_string(i) + ":\n";
    for (const auto& p : s.R(i)) out += cycle_string(p) + "\n";
  }
  return out;
}

SubgroupSystem parse_sgs(std::string_view text) {
  auto ls = lines_of(text);
  expect_header(ls, "SGS");
  if (ls.size() < 2 || ls[1].tokens.size() != 2 || ls[1].tokens[0] != "degree")
    throw ParseError(ls.size() < 2 ? 2 : ls[1].number, "expected 'degree <d>'");
  const long long d = to_int(ls[1], ls[1].tokens[1]);
  if (d < 1 || d > 1'000'000) throw ParseError(ls[1].number, "degree out of range");
  SubgroupSystem s;
  s.degree = static_cast<std::size_t>(d);
  std::map<int, std::vector<Perm>> sections;
  std::vector<Perm>* current = nullptr;
  bool have_group = false;
  for (std::size_t i = 2; i < ls.size(); ++i) {
    const auto& l = ls[i];
    const auto& t = l.tokens;
    if (t.size() == 1 && t[0] == "group:") {
      if (have_group) throw ParseError(l.number, "second 'group:' section");
      have_group = true;
      current = &s.group;
    } else if (t[0] == "R") {
      if (t.size() != 2 || t[1].size() < 2 || t[1].back() != ':') throw ParseError(l.number, "expected 'R <i>:'");
      const int idx = static_cast<int>(to_int(l, t[1].substr(0, t[1].size() - 1)));
      if (idx < -1) throw ParseError(l.number, "subgroup index below -1");
      if (sections.count(idx)) throw ParseError(l.number, "repeated section R " + std::to_string(idx));
      current = &sections[idx];
    } else {
      if (!current) throw ParseError(l.number, "generator outside a section");
      std::string joined;
      for (const auto& x : t) joined += x + " ";
      try {
        current->push_back(parse_cycles(joined, s.degree));
      } catch (const std::invalid_argument& e) {
        throw ParseError(l.number, e.what());
      }
    }
  }
  if (!have_group) throw ParseError(ls.back().number, "missing 'group:' section");
  if (sections.empty()) throw ParseError(ls.back().number, "missing 'R <i>:' sections");
  const int n = sections.rbegin()->first;
  for (int i = -1; i <= n; ++i)
    if (!sections.count(i)) throw ParseError(ls.back().number, "missing section R " + std::to_string(i));
  s.rank = n;
  for (auto& [i, gens] : sections) s.subgroups.push_back(std::move(gens));
  return s;
}

namespace {

std::string vec_text(const Vec3& v) { return v.x.str() + " " + v.y.str() + " " + v.z.str(); }

std::string polygon_text(const Polygon& p) {
  std::string out = p.infinite() ? "infinite " : "finite ";
  out += std::to_string(p.period_length());
  for (const auto& v : p.vertices()) out += " " + vec_text(v);
  if (p.infinite()) out += " " + vec_text(*p.period());
  return out;
}

struct Cursor {
  const Line& l;
  std::size_t i = 0;
  const std::string& next() {
    if (i >= l.tokens.size()) throw ParseError(l.number, "line ends early");
    return l.tokens[i++];
  }
  Rational rational() { return to_rational(l, next()); }
  Vec3 vec() {
    Vec3 v;
    v.x = rational();
    v.y = rational();
    v.z = rational();
    return v;
  }
  long long count(long long max) {
    long long k = to_int(l, next());
    if (k < 0 || k > max) throw ParseError(l.number, "count out of range");
    return k;
  }
  Polygon polygon() {
    const std::string kind = next();
    if (kind != "finite" && kind != "infinite") throw ParseError(l.number, "expected 'finite' or 'infinite'");
    const long long k = count(1'000'000);
    std::vector<Vec3> vs;
    for (long long j = 0; j < k; ++j) vs.push_back(vec());
    try {
      if (kind == "finite") return Polygon::finite(std::move(vs));
      const Vec3 t = vec();
      return Polygon::apeirogon(std::move(vs), t);
    } catch (const std::invalid_argument& e) {
      throw ParseError(l.number, e.what());
    }
  }
  void done() const {
    if (i != l.tokens.size()) throw ParseError(l.number, "trailing tokens");
  }
};

}  // namespace

std::string write_gcx(const GeometricComplex& g) {
  const auto& c = g.abstract;
  std::string out = "GCX 1\nrank " + std::to_string(c.rank()) + "\n";
  if (g.window)
    out += "window " + g.window->lo.x.str() + " " + g.window->hi.x.str() + " " + g.window->lo.y.str() + " " +
           g.window->hi.y.str() + " " + g.window->lo.z.str() + " " + g.window->hi.z.str() + "\n";
  for (std::size_t v = 0; v < g.coords.size(); ++v)
    out += "vertex " + c.id(0, static_cast<int>(v)) + " " + vec_text(g.coords[v]) + "\n";
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    out += "edge " + c.id(1, static_cast<int>(e)) + " " + vec_text(g.edges[e].first) + " " +
           vec_text(g.edges[e].second) + "\n";
  for (std::size_t f = 0; f < g.polygons.size(); ++f)
    out += "polygon " + c.id(2, static_cast<int>(f)) + " " + polygon_text(g.polygons[f]) + "\n";
  for (std::size_t f = 0; f < g.facets.size(); ++f) {
    out += "facet " + c.id(3, static_cast<int>(f));
    if (!g.facets[f]) {
      out += " none\n";
      continue;
    }
    const auto& L = g.facets[f]->lattice();
    out += " lattice " + std::to_string(L.rank());
    for (const auto& b : L.basis()) out += " " + vec_text(b);
    out += " faces " + std::to_string(g.facets[f]->face_representatives().size());
    for (const auto& p : g.facets[f]->face_representatives()) out += " " + polygon_text(p);
    out += "\n";
  }
  append_incidence(out, c);
  for (int r = 0; r < c.rank(); ++r) {
    out += "interior " + std::to_string(r) + ":";
    for (std::size_t i = 0; i < c.face_count(r); ++i)
      if (g.interior[r][i]) out += " " + c.id(r, static_cast<int>(i));
    out += "\n";
  }
  return out;
}

GeometricComplex parse_gcx(std::string_view text) {
  auto ls = lines_of(text);
  expect_header(ls, "GCX");
  if (ls.size() < 2) throw ParseError(ls.front().number + 1, "missing 'rank <n>' line");
  const int n = rank_line(ls[1]);
  if (n > 4) throw ParseError(ls[1].number, "geometric complexes above rank 4 are not supported");

  GeometricComplex g;
  std::vector<FaceRecord> recs;
  std::map<std::string, Vec3> verts;
  std::map<std::string, std::pair<Vec3, Vec3>> edges;
  std::map<std::string, Polygon> polys;
  std::map<std::string, std::optional<Facet>> facets;
  std::map<int, std::pair<std::size_t, std::vector<std::string>>> interior;
  auto fresh = [](auto& m, const Line& l, const std::string& id) {
    if (m.count(id)) throw ParseError(l.number, "duplicate geometry for '" + id + "'");
  };
  for (std::size_t i = 2; i < ls.size(); ++i) {
    const auto& l = ls[i];
    const auto& kw = l.tokens[0];
    Cursor cur{l, 1};
    if (kw == "window") {
      if (g.window) throw ParseError(l.number, "second window line");
      Rational x0 = cur.rational(), x1 = cur.rational(), y0 = cur.rational(), y1 = cur.rational(),
               z0 = cur.rational(), z1 = cur.rational();
      cur.done();
      if (x1 < x0 || y1 < y0 || z1 < z0) throw ParseError(l.number, "window bounds out of order");
      g.window = Box{{x0, y0, z0}, {x1, y1, z1}};
    } else if (kw == "vertex") {
      const std::string id = cur.next();
      fresh(verts, l, id);
      verts[id] = cur.vec();
      cur.done();
    } else if (kw == "edge") {
      const std::string id = cur.next();
      fresh(edges, l, id);
      Vec3 a = cur.vec(), b = cur.vec();
      cur.done();
      edges[id] = {a, b};
    } else if (kw == "polygon") {
      const std::string id = cur.next();
      fresh(polys, l, id);
      polys[id] = cur.polygon();
      cur.done();
    } else if (kw == "facet") {
      const std::string id = cur.next();
      fresh(facets, l, id);
      const std::string kind = cur.next();
      if (kind == "none") {
        facets[id] = std::nullopt;
      } else {
        if (kind != "lattice") throw ParseError(l.number, "expected 'lattice' or 'none'");
        const long long m = cur.count(3);
        std::vector<Vec3> basis;
        for (long long j = 0; j < m; ++j) basis.push_back(cur.vec());
        if (cur.next() != "faces") throw ParseError(l.number, "expected 'faces'");
        const long long k = cur.count(1'000'000);
        std::vector<Polygon> reps;
        for (long long j = 0; j < k; ++j) reps.push_back(cur.polygon());
        try {
          const Lattice L = Lattice::from_vectors(basis);
          if (L.rank() != m) throw ParseError(l.number, "lattice basis is dependent");
          facets[id] = Facet::from_parts(L, reps);
        } catch (const std::invalid_argument& e) {
          throw ParseError(l.number, e.what());
        }
      }
      cur.done();
    } else if (kw == "interior") {
      if (l.tokens.size() < 2 || l.tokens[1].back() != ':') throw ParseError(l.number, "expected 'interior <r>: ids'");
      const int r = static_cast<int>(to_int(l, l.tokens[1].substr(0, l.tokens[1].size() - 1)));
      if (r < 0 || r >= n) throw ParseError(l.number, "interior rank out of range");
      if (interior.count(r)) throw ParseError(l.number, "second interior line for rank " + std::to_string(r));
      interior[r] = {l.number, {l.tokens.begin() + 2, l.tokens.end()}};
    } else if (!incidence_line(l, recs)) {
      throw ParseError(l.number, "unexpected line '" + kw + "'");
    }
  }

  g.abstract = IncidenceComplex::from_records(n, recs);
  const auto& c = g.abstract;
  if (!c.well_formed()) throw ParseError(ls.back().number, c.structural_issues().front());
  auto need = [&](auto& m, int r, const char* what) {
    using T = typename std::decay_t<decltype(m)>::mapped_type;
    std::vector<T> out;
    if (m.size() != c.face_count(r))
      throw ParseError(ls.back().number, std::string("expected one ") + what + " line per rank-" + std::to_string(r) +
                                             " face");
    for (std::size_t i = 0; i < c.face_count(r); ++i) {
      auto it = m.find(c.id(r, static_cast<int>(i)));
      if (it == m.end())
        throw ParseError(ls.back().number, std::string("no ") + what + " line for '" + c.id(r, static_cast<int>(i)) + "'");
      out.push_back(it->second);
    }
    return out;
  };
  if (n >= 1) g.coords = need(verts, 0, "vertex");
  if (n >= 2) g.edges = need(edges, 1, "edge");
  if (n >= 3) g.polygons = need(polys, 2, "polygon");
  if (n >= 4) g.facets = need(facets, 3, "facet");
  g.interior.assign(n, {});
  for (int r = 0; r < n; ++r) {
    g.interior[r].assign(c.face_count(r), 0);
    auto it = interior.find(r);
    if (it == interior.end()) continue;
    for (const auto& id : it->second.second) {
      auto idx = c.find(r, id);
      if (!idx) throw ParseError(it->second.first, "interior id '" + id + "' is not a rank-" + std::to_string(r) + " face");
      g.interior[r][*idx] = 1;
    }
  }
  g.build_index();
  return g;
}

bool same_geometric(const GeometricComplex& a, const GeometricComplex& b) {
  if (!(a.abstract == b.abstract) || a.coords != b.coords || a.edges != b.edges || a.interior != b.interior)
    return false;
  if (a.window.has_value() != b.window.has_value()) return false;
  if (a.window && (a.window->lo != b.window->lo || a.window->hi != b.window->hi)) return false;
  if (a.polygons.size() != b.polygons.size() || a.facets.size() != b.facets.size()) return false;
  for (std::size_t i = 0; i < a.polygons.size(); ++i)
    if (!(a.polygons[i] == b.polygons[i])) return false;
  for (std::size_t i = 0; i < a.facets.size(); ++i) {
    if (a.facets[i].has_value() != b.facets[i].has_value()) return false;
    if (a.facets[i] && !(*a.facets[i] == *b.facets[i])) return false;
  }
  return true;
}

}  // namespace polycx

namespace polycx {

namespace {

std::string decimal(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", q.to_double());
  return buf;
}

// Runs of consecutive window vertices along a 2-face, taken from its edges
// that have both ends in the complex. Closed runs repeat their first vertex.
std::vector<std::vector<int>> vertex_runs(const GeometricComplex& g, int face) {
  const auto& c = g.abstract;
  std::map<int, std::vector<int>> adj;
  for (int e : c.covers(2, face)) {
    const auto& ends = c.covers(1, e);
    if (ends.size() != 2) continue;
    adj[ends[0]].push_back(ends[1]);
    adj[ends[1]].push_back(ends[0]);
  }
  std::set<int> seen;
  std::vector<std::vector<int>> runs;
  auto walk = [&](int start) {
    std::vector<int> run{start};
    seen.insert(start);
    int prev = -1, cur = start;
    while (true) {
      int next = -1;
      for (int x : adj[cur])
        if (x != prev && (!seen.count(x) || (x == start && run.size() > 2))) {
          next = x;
          break;
        }
      if (next < 0) break;
      run.push_back(next);
      if (next == start) break;
      seen.insert(next);
      prev = cur;
      cur = next;
    }
    runs.push_back(std::move(run));
  };
  for (auto& [v, nb] : adj)  // path ends first, then what is left is cycles
    if (nb.size() == 1 && !seen.count(v)) walk(v);
  for (auto& [v, nb] : adj)
    if (!seen.count(v)) walk(v);
  return runs;
}

bool closed(const std::vector<int>& run) { return run.size() > 3 && run.front() == run.back(); }

}  // namespace

std::string export_mesh(const GeometricComplex& g, MeshFormat format) {
  if (g.rank() < 3 || g.polygons.size() != g.abstract.face_count(2))
    throw MeshError("mesh export needs a complex of rank at least 3 with polygon geometry");
  const std::size_t nv = g.coords.size();
  std::vector<std::vector<int>> faces, lines;
  std::size_t dropped = 0;
  for (std::size_t f = 0; f < g.polygons.size(); ++f) {
    const Polygon& p = g.polygons[f];
    const bool planar_closed = !p.infinite() && p.planar();
    if (format == MeshFormat::Off && !planar_closed)
      throw MeshError(std::string("OFF holds only finite planar faces; face ") + g.abstract.id(2, static_cast<int>(f)) +
                      (p.infinite() ? " is an apeirogon" : " is skew") + ", use --format obj");
    auto runs = vertex_runs(g, static_cast<int>(f));
    if (planar_closed && runs.size() == 1 && closed(runs[0]) && runs[0].size() == p.period_length() + 1) {
      runs[0].pop_back();
      faces.push_back(runs[0]);
      continue;
    }
    if (format == MeshFormat::Off) {
      ++dropped;
      continue;
    }
    for (auto& r : runs)
      if (r.size() >= 2) lines.push_back(r);
  }

  std::string out;
  if (format == MeshFormat::Off) {
    out += "OFF\n";
    out += "# exact vertex coordinates, in the order of the vertex list below\n";
    for (std::size_t v = 0; v < nv; ++v) out += "# " + vec_text(g.coords[v]) + "\n";
    if (dropped) out += "# " + std::to_string(dropped) + " faces leaving the window omitted\n";
    out += std::to_string(nv) + " " + std::to_string(faces.size()) + " 0\n";
    for (const auto& p : g.coords) out += decimal(p.x) + " " + decimal(p.y) + " " + decimal(p.z) + "\n";
    for (const auto& f : faces) {
      out += std::to_string(f.size());
      for (int v : f) out += " " + std::to_string(v);
      out += "\n";
    }
  } else {
    out += "# exact vertex coordinates, in the order of the v lines below\n";
    for (std::size_t v = 0; v < nv; ++v) out += "# " + vec_text(g.coords[v]) + "\n";
    for (const auto& p : g.coords) out += "v " + decimal(p.x) + " " + decimal(p.y) + " " + decimal(p.z) + "\n";
    for (const auto& f : faces) {
      out += "f";
      for (int v : f) out += " " + std::to_string(v + 1);
      out += "\n";
    }
    for (const auto& l : lines) {
      out += "l";
      for (int v : l) out += " " + std::to_string(v + 1);
      out += "\n";
    }
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
  if (!out) throw std::invalid_argument("write failed for " + path);
}

}  // namespace polycx
