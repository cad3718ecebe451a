#pragma once

// Brute-force reference computations used to derive expected values. They
// share nothing with the library beyond the FaceRecord input type.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "polycx/complex.hpp"

namespace oracle {

// Faces as vertex sets, listed per rank (rank 0 = singletons).
struct SetComplex {
  int rank = 0;
  std::vector<std::vector<std::set<int>>> faces;
};

inline SetComplex cube_sets() {
  SetComplex s;
  s.rank = 3;
  s.faces.resize(3);
  for (int v = 0; v < 8; ++v) s.faces[0].push_back({v});
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      if (__builtin_popcount(a ^ b) == 1) s.faces[1].push_back({a, b});
  for (int axis = 0; axis < 3; ++axis)
    for (int side = 0; side < 2; ++side) {
      std::set<int> f;
      for (int v = 0; v < 8; ++v)
        if (((v >> axis) & 1) == side) f.insert(v);
      s.faces[2].push_back(f);
    }
  return s;
}

inline SetComplex polygon_sets(int p) {
  SetComplex s;
  s.rank = 2;
  s.faces.resize(2);
  for (int v = 0; v < p; ++v) s.faces[0].push_back({v});
  for (int v = 0; v < p; ++v) s.faces[1].push_back({v, (v + 1) % p});
  return s;
}

inline SetComplex from_cycles(int nv, const std::vector<std::vector<int>>& cycles) {
  SetComplex s;
  s.rank = 3;
  s.faces.resize(3);
  for (int v = 0; v < nv; ++v) s.faces[0].push_back({v});
  std::set<std::set<int>> edges;
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) edges.insert({c[i], c[(i + 1) % c.size()]});
  s.faces[1].assign(edges.begin(), edges.end());
  for (const auto& c : cycles) s.faces[2].push_back({c.begin(), c.end()});
  return s;
}

inline std::vector<polycx::FaceRecord> records_of(const SetComplex& s) {
  std::vector<polycx::FaceRecord> out;
  const char* prefix = "vefgh";
  for (int r = 0; r < s.rank; ++r)
    for (std::size_t i = 0; i < s.faces[r].size(); ++i) {
      polycx::FaceRecord rec{r, prefix[r] + std::to_string(i), {}};
      if (r > 0)
        for (std::size_t j = 0; j < s.faces[r - 1].size(); ++j) {
          const auto& big = s.faces[r][i];
          const auto& small = s.faces[r - 1][j];
          if (std::includes(big.begin(), big.end(), small.begin(), small.end()))
            rec.covers.push_back(prefix[r - 1] + std::to_string(j));
        }
      out.push_back(rec);
    }
  return out;
}

// ---------------------------------------------------------------- posets

// The poset of a record list with improper faces adjoined: node 0 is the
// minimal face, node 1 the maximal face.
struct Poset {
  std::vector<int> rank;
  std::vector<std::vector<char>> less;  // strict order
  int n = 0;                            // rank of the maximal face

  static Poset of(int n, const std::vector<polycx::FaceRecord>& recs) {
    Poset p;
    p.n = n;
    std::map<std::pair<int, std::string>, int> id;
    p.rank = {-1, n};
    for (const auto& r : recs) {
      id[{r.rank, r.id}] = static_cast<int>(p.rank.size());
      p.rank.push_back(r.rank);
    }
    const int m = static_cast<int>(p.rank.size());
    p.less.assign(m, std::vector<char>(m, 0));
    for (int i = 2; i < m; ++i) {
      p.less[0][i] = 1;
      p.less[i][1] = 1;
    }
    p.less[0][1] = 1;
    for (const auto& r : recs)
      for (const auto& c : r.covers)
        if (auto it = id.find({r.rank - 1, c}); it != id.end()) p.less[it->second][id[{r.rank, r.id}]] = 1;
    for (int k = 0; k < m; ++k)  // transitive closure
      for (int i = 0; i < m; ++i)
        if (p.less[i][k])
          for (int j = 0; j < m; ++j)
            if (p.less[k][j]) p.less[i][j] = 1;
    return p;
  }

  int size() const { return static_cast<int>(rank.size()); }

  // Maximal chains from a to b (inclusive), by depth-first search on the
  // order: a chain is extended by any element strictly between its top and
  // b that has nothing strictly between it and the current top.
  std::vector<std::vector<int>> chains(int a, int b) const {
    std::vector<std::vector<int>> out;
    std::vector<int> cur{a};
    std::function<void(int)> go = [&](int x) {
      bool extended = false;
      for (int y = 0; y < size(); ++y) {
        if (!less[x][y] || !less[y][b]) continue;
        bool cover = true;
        for (int z = 0; z < size() && cover; ++z)
          if (less[x][z] && less[z][y]) cover = false;
        if (!cover) continue;
        extended = true;
        cur.push_back(y);
        go(y);
        cur.pop_back();
      }
      if (!extended) {
        auto c = cur;
        c.push_back(b);
        out.push_back(c);
      }
    };
    if (a == b) return {{a}};
    go(a);
    return out;
  }
};

struct AxiomCheck {
  bool flag_length = true;
  bool at_least_two = true;
  bool strongly_connected = true;
  std::size_t flags = 0;
};

inline AxiomCheck check_axioms(int n, const std::vector<polycx::FaceRecord>& recs) {
  AxiomCheck res;
  const Poset p = Poset::of(n, recs);
  auto all = p.chains(0, 1);
  res.flags = all.size();
  for (const auto& c : all)
    if (static_cast<int>(c.size()) != n + 2) res.flag_length = false;
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      if (!p.less[a][b] && a != b) continue;
      if (p.rank[b] - p.rank[a] == 2) {
        int middle = 0;
        for (int x = 0; x < p.size(); ++x) middle += p.less[a][x] && p.less[x][b];
        if (middle < 2) res.at_least_two = false;
      }
      if (p.rank[b] - p.rank[a] >= 3 && res.flag_length) {
        auto fl = p.chains(a, b);
        // union-find over flags differing in exactly one face
        std::vector<int> parent(fl.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        for (std::size_t i = 0; i < fl.size(); ++i)
          for (std::size_t j = i + 1; j < fl.size(); ++j) {
            int diff = 0;
            for (std::size_t k = 0; k < fl[i].size(); ++k) diff += fl[i][k] != fl[j][k];
            if (diff == 1) parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
          }
        for (std::size_t i = 1; i < fl.size(); ++i)
          if (find(static_cast<int>(i)) != find(0)) res.strongly_connected = false;
      }
    }
  return res;
}

inline std::size_t flag_count(const SetComplex& s) {
  // chains of strictly increasing vertex sets, one per rank
  std::size_t count = 0;
  std::function<void(int, const std::set<int>*)> go = [&](int r, const std::set<int>* below) {
    if (r == s.rank) {
      ++count;
      return;
    }
    for (const auto& f : s.faces[r])
      if (!below || (f.size() > below->size() && std::includes(f.begin(), f.end(), below->begin(), below->end())))
        go(r + 1, &f);
  };
  go(0, nullptr);
  return count;
}

// Number of vertex permutations mapping every rank's face family onto
// itself; equals |Aut| for vertex-determined complexes.
inline std::size_t automorphism_count(const SetComplex& s) {
  const int nv = static_cast<int>(s.faces[0].size());
  std::vector<int> perm(nv);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::set<std::set<int>>> fam(s.rank);
  for (int r = 0; r < s.rank; ++r) fam[r] = {s.faces[r].begin(), s.faces[r].end()};
  std::size_t count = 0;
  do {
    bool ok = true;
    for (int r = 1; r < s.rank && ok; ++r)
      for (const auto& f : s.faces[r]) {
        std::set<int> img;
        for (int v : f) img.insert(perm[v]);
        if (!fam[r].count(img)) {
          ok = false;
          break;
        }
      }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace oracle
