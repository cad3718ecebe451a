#include "polycx/complex.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace polycx {

namespace {

// Natural ordering: digit runs compare numerically, so "v2" < "v10".
bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      auto da = a.substr(i, i2 - i), db = b.substr(j, j2 - j);
      while (da.size() > 1 && da[0] == '0') da.remove_prefix(1);
      while (db.size() > 1 && db[0] == '0') db.remove_prefix(1);
      if (da.size() != db.size()) return da.size() < db.size();
      if (da != db) return da < db;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::size_t FlagHash::operator()(const Flag& f) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : f.faces) h = (h ^ static_cast<std::size_t>(x + 2)) * 1099511628211ull;
  return h;
}

IncidenceComplex IncidenceComplex::from_records(int rank, const std::vector<FaceRecord>& records) {
  IncidenceComplex c;
  if (rank < 0) throw std::invalid_argument("complex rank must be non-negative");
  c.rank_ = rank;
  c.ids_.assign(rank, {});
  std::vector<std::vector<const FaceRecord*>> by_rank(rank);
  for (const auto& rec : records) {
    if (rec.rank < 0 || rec.rank >= rank) {
      c.structural_.push_back("face '" + rec.id + "' has rank " + std::to_string(rec.rank) +
                              " outside 0.." + std::to_string(rank - 1));
      continue;
    }
    by_rank[rec.rank].push_back(&rec);
  }
  for (int r = 0; r < rank; ++r) {
    auto& v = by_rank[r];
    std::stable_sort(v.begin(), v.end(),
                     [](const FaceRecord* a, const FaceRecord* b) { return natural_less(a->id, b->id); });
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i]->id == v[i + 1]->id)
        c.structural_.push_back("duplicate id '" + v[i]->id + "' at rank " + std::to_string(r));
    }
    v.erase(std::unique(v.begin(), v.end(), [](auto* a, auto* b) { return a->id == b->id; }), v.end());
    for (auto* rec : v) c.ids_[r].push_back(rec->id);
  }
  c.down_.assign(rank, {});
  for (int r = 0; r < rank; ++r) {
    c.down_[r].resize(c.ids_[r].size());
    for (std::size_t i = 0; i < by_rank[r].size(); ++i) {
      const auto* rec = by_rank[r][i];
      if (r == 0) {
        if (!rec->covers.empty())
          c.structural_.push_back("vertex '" + rec->id + "' lists covered faces");
        continue;
      }
      for (const auto& cid : rec->covers) {
        auto idx = c.find(r - 1, cid);
        if (!idx) {
          c.structural_.push_back("face '" + rec->id + "' covers undefined rank-" + std::to_string(r - 1) +
                                  " id '" + cid + "'");
          continue;
        }
        c.down_[r][i].push_back(*idx);
      }
      auto& d = c.down_[r][i];
      std::sort(d.begin(), d.end());
      if (std::adjacent_find(d.begin(), d.end()) != d.end())
        c.structural_.push_back("face '" + rec->id + "' lists a covered face twice");
      d.erase(std::unique(d.begin(), d.end()), d.end());
    }
  }
  c.index_upward();
  return c;
}

IncidenceComplex IncidenceComplex::from_covers(int rank, std::vector<std::vector<std::vector<int>>> covers,
                                               std::vector<std::vector<std::string>> ids) {
  if (rank < 0 || static_cast<int>(covers.size()) != rank)
    throw std::invalid_argument("cover table does not match rank");
  IncidenceComplex c;
  c.rank_ = rank;
  c.down_ = std::move(covers);
  c.ids_.assign(rank, {});
  for (int r = 0; r < rank; ++r) {
    const auto n = c.down_[r].size();
    if (!ids.empty()) {
      if (ids[r].size() != n) throw std::invalid_argument("id table does not match cover table");
      c.ids_[r] = std::move(ids[r]);
    } else {
      c.ids_[r].reserve(n);
      for (std::size_t i = 0; i < n; ++i) c.ids_[r].push_back(std::to_string(i));
    }
    for (auto& d : c.down_[r]) {
      std::sort(d.begin(), d.end());
      d.erase(std::unique(d.begin(), d.end()), d.end());
      for (int x : d) {
        if (r == 0 || x < 0 || x >= static_cast<int>(c.down_[r - 1].size()))
          throw std::invalid_argument("cover index out of range");
      }
    }
  }
  c.index_upward();
  return c;
}

void IncidenceComplex::index_upward() {
  up_.assign(rank_, {});
  for (int r = 0; r < rank_; ++r) up_[r].assign(ids_[r].size(), {});
  for (int r = 1; r < rank_; ++r)
    for (std::size_t i = 0; i < down_[r].size(); ++i)
      for (int x : down_[r][i]) up_[r - 1][x].push_back(static_cast<int>(i));
}

std::size_t IncidenceComplex::face_count(int r) const {
  if (r == -1 || r == rank_) return 1;
  if (r < -1 || r > rank_) return 0;
  return ids_[r].size();
}

std::size_t IncidenceComplex::total_faces() const {
  std::size_t n = 0;
  for (const auto& v : ids_) n += v.size();
  return n;
}

std::string IncidenceComplex::label(FaceRef f) const {
  if (f.rank == -1) return "F(-1)";
  if (f.rank == rank_) return "F(" + std::to_string(rank_) + ")";
  return std::to_string(f.rank) + ":" + ids_[f.rank][f.index];
}

std::optional<int> IncidenceComplex::find(int r, std::string_view id) const {
  if (r < 0 || r >= rank_) return std::nullopt;
  const auto& v = ids_[r];
  auto it = std::lower_bound(v.begin(), v.end(), id,
                             [](const std::string& a, std::string_view b) { return natural_less(a, b); });
  if (it != v.end() && *it == id) return static_cast<int>(it - v.begin());
  // ids built through from_covers need not be naturally sorted
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == id) return static_cast<int>(i);
  return std::nullopt;
}

std::vector<int> IncidenceComplex::faces_below(FaceRef top, int r) const {
  std::vector<int> out;
  if (r < 0 || r > top.rank) return out;
  if (top.rank == rank_) {
    out.resize(face_count(r));
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  std::vector<int> cur{top.index};
  for (int s = top.rank; s > r; --s) {
    std::vector<char> mark(face_count(s - 1), 0);
    for (int x : cur)
      for (int y : down_[s][x]) mark[y] = 1;
    cur.clear();
    for (std::size_t i = 0; i < mark.size(); ++i)
      if (mark[i]) cur.push_back(static_cast<int>(i));
  }
  return cur;
}

std::vector<int> IncidenceComplex::faces_above(FaceRef bottom, int r) const {
  std::vector<int> out;
  if (r >= rank_ || r < bottom.rank || r < 0) return out;
  if (bottom.rank == -1) {
    out.resize(face_count(r));
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  std::vector<int> cur{bottom.index};
  for (int s = bottom.rank; s < r; ++s) {
    std::vector<char> mark(face_count(s + 1), 0);
    for (int x : cur)
      for (int y : up_[s][x]) mark[y] = 1;
    cur.clear();
    for (std::size_t i = 0; i < mark.size(); ++i)
      if (mark[i]) cur.push_back(static_cast<int>(i));
  }
  return cur;
}

bool IncidenceComplex::leq(FaceRef a, FaceRef b) const {
  if (a.rank == -1 || b.rank == rank_) return true;
  if (a.rank == rank_) return b.rank == rank_;
  if (b.rank == -1) return false;
  if (a.rank > b.rank) return false;
  if (a.rank == b.rank) return a.index == b.index;
  auto below = faces_below(b, a.rank);
  return std::binary_search(below.begin(), below.end(), a.index);
}

std::vector<FaceRecord> IncidenceComplex::records() const {
  std::vector<FaceRecord> out;
  for (int r = 0; r < rank_; ++r)
    for (std::size_t i = 0; i < ids_[r].size(); ++i) {
      FaceRecord rec{r, ids_[r][i], {}};
      for (int x : down_[r][i]) rec.covers.push_back(ids_[r - 1][x]);
      out.push_back(std::move(rec));
    }
  return out;
}

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Structural: return "structural";
    case Axiom::FlagLength: return "flag-length";
    case Axiom::AtLeastTwo: return "at-least-two";
    case Axiom::StronglyFlagConnected: return "strongly-flag-connected";
  }
  return "?";
}

bool ValidationReport::has(Axiom a) const {
  return std::any_of(violations.begin(), violations.end(), [a](const Violation& v) { return v.axiom == a; });
}

std::vector<MiddlePair> middle_pairs(const IncidenceComplex& c) {
  std::vector<MiddlePair> out;
  const int n = c.rank();
  for (int j = 0; j < n; ++j) {
    const int up_rank = j + 1;
    const std::size_t uppers = up_rank == n ? 1 : c.face_count(up_rank);
    for (std::size_t g = 0; g < uppers; ++g) {
      std::vector<int> middles;
      if (up_rank == n) {
        middles.resize(c.face_count(j));
        std::iota(middles.begin(), middles.end(), 0);
      } else {
        middles = c.covers(up_rank, static_cast<int>(g));
      }
      FaceRef upper{up_rank, up_rank == n ? 0 : static_cast<int>(g)};
      if (j == 0) {
        out.push_back({0, {-1, 0}, upper, static_cast<int>(middles.size())});
        continue;
      }
      std::map<int, int> counts;
      for (int h : middles)
        for (int f : c.covers(j, h)) ++counts[f];
      for (auto [f, k] : counts) out.push_back({j, {j - 1, f}, upper, k});
    }
  }
  return out;
}

namespace {

void chains_down(const IncidenceComplex& c, int r, int idx, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  cur[r] = idx;
  if (r == 0) {
    out.push_back(cur);
    return;
  }
  for (int x : c.covers(r, idx)) chains_down(c, r - 1, x, cur, out);
}

void chains_up(const IncidenceComplex& c, int r, int idx, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
  cur[r] = idx;
  if (r == c.rank() - 1) {
    out.push_back(cur);
    return;
  }
  for (int x : c.covered_by(r, idx)) chains_up(c, r + 1, x, cur, out);
}

}  // namespace

std::vector<Flag> flags(const IncidenceComplex& c) {
  std::vector<Flag> out;
  const int n = c.rank();
  if (n == 0) return {Flag{}};
  std::vector<std::vector<int>> raw;
  std::vector<int> cur(n, -1);
  for (std::size_t v = 0; v < c.face_count(0); ++v) chains_up(c, 0, static_cast<int>(v), cur, raw);
  out.reserve(raw.size());
  for (auto& r : raw) out.push_back(Flag{std::move(r)});
  return out;
}

std::vector<Flag> flags_through(const IncidenceComplex& c, FaceRef face) {
  const int n = c.rank();
  if (face.rank < 0 || face.rank >= n) return flags(c);
  std::vector<std::vector<int>> lower, upper;
  std::vector<int> cur(n, -1);
  chains_down(c, face.rank, face.index, cur, lower);
  cur.assign(n, -1);
  chains_up(c, face.rank, face.index, cur, upper);
  std::vector<Flag> out;
  for (const auto& lo : lower)
    for (const auto& hi : upper) {
      Flag f{lo};
      for (int r = face.rank; r < n; ++r) f.faces[r] = hi[r];
      out.push_back(std::move(f));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Flag> adjacent_flags(const IncidenceComplex& c, const Flag& f, int j) {
  const int n = c.rank();
  if (j < 0 || j >= n) throw std::out_of_range("adjacency rank out of range");
  std::vector<int> candidates;
  if (j + 1 < n) {
    candidates = c.covers(j + 1, f.faces[j + 1]);
  } else {
    candidates.resize(c.face_count(j));
    std::iota(candidates.begin(), candidates.end(), 0);
  }
  std::vector<Flag> out;
  for (int h : candidates) {
    if (h == f.faces[j]) continue;
    if (j > 0) {
      const auto& d = c.covers(j, h);
      if (!std::binary_search(d.begin(), d.end(), f.faces[j - 1])) continue;
    }
    Flag g = f;
    g.faces[j] = h;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<int> flag_components(const IncidenceComplex& c, const std::vector<Flag>& fl) {
  UnionFind uf(fl.size());
  for (int j = 0; j < c.rank(); ++j) {
    std::unordered_map<Flag, int, FlagHash> first;
    for (std::size_t i = 0; i < fl.size(); ++i) {
      Flag key = fl[i];
      key.faces[j] = -1;
      auto [it, inserted] = first.emplace(std::move(key), static_cast<int>(i));
      if (!inserted) uf.unite(it->second, static_cast<int>(i));
    }
  }
  std::vector<int> comp(fl.size());
  for (std::size_t i = 0; i < fl.size(); ++i) comp[i] = uf.find(static_cast<int>(i));
  return comp;
}

IncidenceComplex section(const IncidenceComplex& c, FaceRef lower, FaceRef upper) {
  if (!c.leq(lower, upper)) throw std::invalid_argument("section requires F <= G");
  const int m = upper.rank - lower.rank - 1;
  if (m < 0) throw std::invalid_argument("section requires F <= G");
  std::vector<std::vector<int>> members(m);
  for (int s = 0; s < m; ++s) {
    const int r = lower.rank + 1 + s;
    auto above = c.faces_above(lower, r);
    auto below = c.faces_below(upper, r);
    std::set_intersection(above.begin(), above.end(), below.begin(), below.end(),
                          std::back_inserter(members[s]));
  }
  std::vector<std::vector<std::vector<int>>> covers(m);
  std::vector<std::vector<std::string>> ids(m);
  for (int s = 0; s < m; ++s) {
    const int r = lower.rank + 1 + s;
    for (int h : members[s]) {
      ids[s].push_back(c.id(r, h));
      std::vector<int> cov;
      if (s > 0) {
        for (int x : c.covers(r, h)) {
          auto it = std::lower_bound(members[s - 1].begin(), members[s - 1].end(), x);
          if (it != members[s - 1].end() && *it == x) cov.push_back(static_cast<int>(it - members[s - 1].begin()));
        }
      }
      covers[s].push_back(std::move(cov));
    }
  }
  return IncidenceComplex::from_covers(m, std::move(covers), std::move(ids));
}

IncidenceComplex vertex_figure(const IncidenceComplex& c, int vertex) {
  return section(c, {0, vertex}, {c.rank(), 0});
}

IncidenceComplex skeleton(const IncidenceComplex& c, int k) {
  if (k < 0 || k >= c.rank()) throw std::out_of_range("skeleton rank out of range");
  std::vector<std::vector<std::vector<int>>> covers(k + 1);
  std::vector<std::vector<std::string>> ids(k + 1);
  for (int r = 0; r <= k; ++r)
    for (std::size_t i = 0; i < c.face_count(r); ++i) {
      covers[r].push_back(c.covers(r, static_cast<int>(i)));
      ids[r].push_back(c.id(r, static_cast<int>(i)));
    }
  return IncidenceComplex::from_covers(k + 1, std::move(covers), std::move(ids));
}

std::optional<std::vector<int>> uniform_middle_count(const IncidenceComplex& c) {
  std::vector<int> k(c.rank(), -1);
  for (const auto& p : middle_pairs(c)) {
    if (k[p.j] == -1) k[p.j] = p.count;
    else if (k[p.j] != p.count) return std::nullopt;
  }
  return k;
}

bool is_polytope(const IncidenceComplex& c) {
  auto pairs = middle_pairs(c);
  return std::all_of(pairs.begin(), pairs.end(), [](const MiddlePair& p) { return p.count == 2; });
}

ValidationReport validate_complex(const IncidenceComplex& c) {
  ValidationReport rep;
  auto add = [&](Axiom a, std::string detail, std::vector<std::string> witness) {
    rep.violations.push_back({a, std::move(detail), std::move(witness)});
  };
  if (!c.well_formed()) {
    for (const auto& s : c.structural_issues()) add(Axiom::Structural, s, {});
    rep.passed = false;
    return rep;
  }
  const int n = c.rank();
  for (int r = 0; r < n; ++r) {
    if (c.face_count(r) == 0) add(Axiom::FlagLength, "no faces of rank " + std::to_string(r), {});
    for (std::size_t i = 0; i < c.face_count(r); ++i) {
      FaceRef f{r, static_cast<int>(i)};
      if (r > 0 && c.covers(r, f.index).empty())
        add(Axiom::FlagLength, "face covers nothing; a chain through it is too short", {c.label(f)});
      if (r < n - 1 && c.covered_by(r, f.index).empty())
        add(Axiom::FlagLength, "face is covered by nothing; a chain through it is too short", {c.label(f)});
    }
  }
  for (const auto& p : middle_pairs(c)) {
    if (p.count < 2)
      add(Axiom::AtLeastTwo,
          "only " + std::to_string(p.count) + " face(s) of rank " + std::to_string(p.j) + " between",
          {c.label(p.lower), c.label(p.upper)});
  }
  if (!rep.has(Axiom::FlagLength)) {
    // Strong flag-connectedness holds iff every section of rank >= 2 is
    // flag-connected; rank <= 1 sections are connected automatically.
    for (int lo = -1; lo <= n - 3; ++lo) {
      const std::size_t nlo = c.face_count(lo);
      for (std::size_t a = 0; a < nlo; ++a) {
        FaceRef lower{lo, lo == -1 ? 0 : static_cast<int>(a)};
        for (int hi = lo + 3; hi <= n; ++hi) {
          std::vector<int> uppers = hi == n ? std::vector<int>{0} : c.faces_above(lower, hi);
          for (int b : uppers) {
            FaceRef upper{hi, b};
            auto sec = section(c, lower, upper);
            auto fl = flags(sec);
            if (fl.empty()) continue;
            auto comp = flag_components(sec, fl);
            auto other = std::find_if(comp.begin(), comp.end(), [&](int x) { return x != comp[0]; });
            if (other == comp.end()) continue;
            auto describe = [&](const Flag& f) {
              std::string s = "{";
              for (std::size_t r = 0; r < f.faces.size(); ++r) {
                if (r) s += ",";
                s += sec.id(static_cast<int>(r), f.faces[r]);
              }
              return s + "}";
            };
            add(Axiom::StronglyFlagConnected, "section flag graph is disconnected",
                {c.label(lower), c.label(upper), describe(fl[0]), describe(fl[other - comp.begin()])});
          }
        }
      }
    }
  }
  rep.passed = rep.violations.empty();
  return rep;
}

}  // namespace polycx
