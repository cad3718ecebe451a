#include "polycx/flag_aut.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace polycx {

namespace {

struct Slot {
  int rank;
  int index;
};

struct Neighbor {
  int rank;
  int index;
  bool below;  // neighbor is covered by the face
};

class IsoSearch {
 public:
  IsoSearch(const IncidenceComplex& a, const IncidenceComplex& b, std::size_t limit)
      : a_(a), b_(b), limit_(limit) {}

  std::vector<FaceMap> run() {
    const int n = a_.rank();
    if (b_.rank() != n) return {};
    for (int r = 0; r < n; ++r)
      if (a_.face_count(r) != b_.face_count(r)) return {};
    build_order();
    map_.assign(n, {});
    used_.assign(n, {});
    for (int r = 0; r < n; ++r) {
      map_[r].assign(a_.face_count(r), -1);
      used_[r].assign(b_.face_count(r), 0);
    }
    search(0);
    return std::move(results_);
  }

 private:
  void build_order() {
    const int n = a_.rank();
    std::vector<std::vector<char>> seen(n);
    for (int r = 0; r < n; ++r) seen[r].assign(a_.face_count(r), 0);
    for (int r0 = 0; r0 < n; ++r0) {
      for (std::size_t i0 = 0; i0 < a_.face_count(r0); ++i0) {
        if (seen[r0][i0]) continue;
        std::deque<Slot> q{{r0, static_cast<int>(i0)}};
        seen[r0][i0] = 1;
        while (!q.empty()) {
          Slot s = q.front();
          q.pop_front();
          order_.push_back(s);
          auto visit = [&](int r, int i) {
            if (!seen[r][i]) {
              seen[r][i] = 1;
              q.push_back({r, i});
            }
          };
          if (s.rank > 0)
            for (int x : a_.covers(s.rank, s.index)) visit(s.rank - 1, x);
          if (s.rank + 1 < n)
            for (int x : a_.covered_by(s.rank, s.index)) visit(s.rank + 1, x);
        }
      }
    }
    // earlier neighbors per position
    std::vector<std::vector<int>> pos(n);
    for (int r = 0; r < n; ++r) pos[r].assign(a_.face_count(r), -1);
    for (std::size_t k = 0; k < order_.size(); ++k) pos[order_[k].rank][order_[k].index] = static_cast<int>(k);
    earlier_.resize(order_.size());
    for (std::size_t k = 0; k < order_.size(); ++k) {
      auto [r, i] = order_[k];
      if (r > 0)
        for (int x : a_.covers(r, i))
          if (pos[r - 1][x] < static_cast<int>(k)) earlier_[k].push_back({r - 1, x, true});
      if (r + 1 < a_.rank())
        for (int x : a_.covered_by(r, i))
          if (pos[r + 1][x] < static_cast<int>(k)) earlier_[k].push_back({r + 1, x, false});
    }
  }

  bool same_shape(int r, int x, int y) const {
    if (r > 0 && a_.covers(r, x).size() != b_.covers(r, y).size()) return false;
    if (r + 1 < a_.rank() && a_.covered_by(r, x).size() != b_.covered_by(r, y).size()) return false;
    return true;
  }

  bool consistent(std::size_t k, int y) const {
    const int r = order_[k].rank;
    for (const auto& nb : earlier_[k]) {
      int img = map_[nb.rank][nb.index];
      if (nb.below) {
        const auto& d = b_.covers(r, y);
        if (!std::binary_search(d.begin(), d.end(), img)) return false;
      } else {
        const auto& d = b_.covers(nb.rank, img);
        if (!std::binary_search(d.begin(), d.end(), y)) return false;
      }
    }
    return true;
  }

  void search(std::size_t k) {
    if (results_.size() >= limit_) return;
    if (k == order_.size()) {
      if (verify()) results_.push_back(map_);
      return;
    }
    auto [r, x] = order_[k];
    std::vector<int> candidates;
    if (!earlier_[k].empty()) {
      const auto& nb = earlier_[k].front();
      int img = map_[nb.rank][nb.index];
      candidates = nb.below ? b_.covered_by(nb.rank, img) : b_.covers(nb.rank, img);
    } else {
      candidates.resize(b_.face_count(r));
      for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i] = static_cast<int>(i);
    }
    for (int y : candidates) {
      if (used_[r][y] || !same_shape(r, x, y) || !consistent(k, y)) continue;
      map_[r][x] = y;
      used_[r][y] = 1;
      search(k + 1);
      used_[r][y] = 0;
      map_[r][x] = -1;
      if (results_.size() >= limit_) return;
    }
  }

  bool verify() const {
    for (int r = 1; r < a_.rank(); ++r)
      for (std::size_t i = 0; i < a_.face_count(r); ++i) {
        std::vector<int> img;
        for (int x : a_.covers(r, static_cast<int>(i))) img.push_back(map_[r - 1][x]);
        std::sort(img.begin(), img.end());
        if (img != b_.covers(r, map_[r][i])) return false;
      }
    return true;
  }

  const IncidenceComplex& a_;
  const IncidenceComplex& b_;
  std::size_t limit_;
  std::vector<Slot> order_;
  std::vector<std::vector<Neighbor>> earlier_;
  FaceMap map_;
  std::vector<std::vector<char>> used_;
  std::vector<FaceMap> results_;
};

std::unordered_map<Flag, std::uint32_t, FlagHash> flag_index(const std::vector<Flag>& fl) {
  std::unordered_map<Flag, std::uint32_t, FlagHash> idx;
  idx.reserve(fl.size() * 2);
  for (std::size_t i = 0; i < fl.size(); ++i) idx.emplace(fl[i], static_cast<std::uint32_t>(i));
  return idx;
}

bool differs_only_at(const Flag& a, const Flag& b, int j) {
  for (std::size_t r = 0; r < a.faces.size(); ++r)
    if (static_cast<int>(r) != j && a.faces[r] != b.faces[r]) return false;
  return true;
}

}  // namespace

std::vector<FaceMap> isomorphisms(const IncidenceComplex& a, const IncidenceComplex& b, std::size_t limit) {
  return IsoSearch(a, b, limit).run();
}

bool are_isomorphic(const IncidenceComplex& a, const IncidenceComplex& b) {
  return !isomorphisms(a, b, 1).empty();
}

Perm flag_action(const std::vector<Flag>& fl, const FaceMap& map) {
  auto idx = flag_index(fl);
  Perm p(fl.size());
  for (std::size_t i = 0; i < fl.size(); ++i) {
    Flag img = fl[i];
    for (std::size_t r = 0; r < img.faces.size(); ++r) img.faces[r] = map[r][img.faces[r]];
    p[i] = idx.at(img);
  }
  return p;
}

bool preserves_adjacency(const IncidenceComplex& c, const std::vector<Flag>& fl, const Perm& p) {
  for (std::size_t i = 0; i < fl.size(); ++i)
    for (std::size_t k = i + 1; k < fl.size(); ++k)
      for (int j = 0; j < c.rank(); ++j) {
        bool adj = fl[i] != fl[k] && differs_only_at(fl[i], fl[k], j);
        bool adj_img = differs_only_at(fl[p[i]], fl[p[k]], j);
        if (adj != adj_img) return false;
      }
  return true;
}

FlagPermutationGroup automorphisms(const IncidenceComplex& c) {
  FlagPermutationGroup g;
  g.flags = flags(c);
  auto maps = isomorphisms(c, c);
  std::vector<Perm> perms;
  perms.reserve(maps.size());
  for (const auto& m : maps) perms.push_back(flag_action(g.flags, m));
  auto group = EnumeratedGroup::from_elements(g.flags.size(), std::move(perms));
  g.generators = group.small_generators();
  return g;
}

std::size_t flag_orbit_count(const FlagPermutationGroup& g) {
  std::vector<char> seen(g.flags.size(), 0);
  std::size_t count = 0;
  for (std::uint32_t i = 0; i < g.flags.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (auto x : orbit(i, g.generators)) seen[x] = 1;
  }
  return count;
}

bool is_regular(const IncidenceComplex& c) { return flag_orbit_count(automorphisms(c)) == 1; }

DistinguishedSystem distinguished_system(const IncidenceComplex& c, const FlagPermutationGroup& g,
                                         std::optional<std::size_t> base_index) {
  const int n = c.rank();
  const std::size_t base = base_index.value_or(0);
  if (base >= g.flags.size()) throw std::out_of_range("base flag index out of range");
  if (orbit(static_cast<std::uint32_t>(base), g.generators).size() != g.flags.size()) throw NotFlagTransitive();

  auto group = g.enumerate();
  const Flag& phi = g.flags[base];
  std::vector<std::vector<Perm>> members(n + 2);
  for (const auto& e : group.elements()) {
    const Flag& img = g.flags[e[base]];
    if (img == phi) {
      for (auto& m : members) m.push_back(e);
      continue;
    }
    for (int i = 0; i < n; ++i)
      if (differs_only_at(phi, img, i)) members[i + 1].push_back(e);
  }

  DistinguishedSystem ds;
  ds.rank = n;
  ds.degree = g.flags.size();
  ds.base_index = base;
  ds.base_flag = phi;
  ds.group_generators = g.generators;
  ds.group_order = group.order();
  for (auto& m : members) {
    auto sub = EnumeratedGroup::from_elements(g.flags.size(), m);
    ds.generators.push_back(sub.small_generators());
    ds.orders.push_back(sub.order());
  }

  std::vector<Perm> all;
  for (int i = 0; i < n; ++i) all.insert(all.end(), ds.R(i).begin(), ds.R(i).end());
  if (EnumeratedGroup(g.flags.size(), all).order() != group.order())
    throw std::logic_error("distinguished subgroups do not generate the group");

  // Stabilizer of every partial base flag Omega equals <R(i) | F(i) not in Omega>.
  for (unsigned omega = 0; omega < (1u << n); ++omega) {
    std::size_t stab = 0;
    for (const auto& e : group.elements()) {
      const Flag& img = g.flags[e[base]];
      bool fixes = true;
      for (int r = 0; r < n && fixes; ++r)
        if ((omega >> r & 1u) && img.faces[r] != phi.faces[r]) fixes = false;
      if (fixes) ++stab;
    }
    std::vector<Perm> gens = ds.R(-1);
    for (int i = 0; i < n; ++i)
      if (!(omega >> i & 1u)) gens.insert(gens.end(), ds.R(i).begin(), ds.R(i).end());
    if (EnumeratedGroup(g.flags.size(), gens).order() != stab)
      throw std::logic_error("partial-flag stabilizer differs from the generated subgroup");
  }
  return ds;
}

bool adjacency_count_check(const DistinguishedSystem& ds, const IncidenceComplex& c) {
  const std::size_t degree = ds.degree;
  const std::size_t stab = EnumeratedGroup(degree, ds.R(-1)).order();
  for (int i = 0; i < ds.rank; ++i) {
    const std::size_t ri = EnumeratedGroup(degree, ds.R(i)).order();
    if (ri % stab != 0) return false;
    const std::size_t adj = adjacent_flags(c, ds.base_flag, i).size();
    if (ri / stab - 1 != adj) return false;
  }
  return true;
}

}  // namespace polycx
