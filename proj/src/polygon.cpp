#include <algorithm>

#include "polycx/euclid.hpp"

namespace polycx {

namespace {

bool lex_less(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Integer lambda with d = lambda * t, if any.
std::optional<long long> integer_multiple(const Vec3& d, const Vec3& t) {
  if (!cross(d, t).is_zero()) return std::nullopt;
  const Rational l = dot(d, t) / dot(t, t);
  if (!l.is_integer()) return std::nullopt;
  return l.num();
}

std::optional<long long> index_of(const Polygon& p, const Vec3& x) {
  const auto& v = p.vertices();
  const long long k = static_cast<long long>(v.size());
  for (long long r = 0; r < k; ++r) {
    if (!p.infinite()) {
      if (v[r] == x) return r;
      continue;
    }
    if (auto q = integer_multiple(x - v[r], *p.period())) return *q * k + r;
  }
  return std::nullopt;
}

}  // namespace

Polygon Polygon::finite(std::vector<Vec3> cycle) {
  if (cycle.size() < 2) throw std::invalid_argument("polygon needs at least two vertices");
  Polygon p;
  p.verts_ = std::move(cycle);
  p.canonicalize();
  return p;
}

Polygon Polygon::apeirogon(std::vector<Vec3> period, const Vec3& translation) {
  if (period.empty() || translation.is_zero()) throw std::invalid_argument("apeirogon needs a period and a translation");
  Polygon p;
  p.verts_ = std::move(period);
  p.period_ = translation;
  p.canonicalize();
  return p;
}

Vec3 Polygon::vertex(long long i) const {
  const long long k = static_cast<long long>(verts_.size());
  long long q = i / k, r = i % k;
  if (r < 0) {
    r += k;
    --q;
  }
  if (!period_) return verts_[r];
  return verts_[r] + Rational(q) * *period_;
}

void Polygon::canonicalize() {
  const std::size_t k = verts_.size();
  if (!period_) {
    std::vector<Vec3> best;
    for (std::size_t s = 0; s < k; ++s)
      for (int d : {1, -1}) {
        std::vector<Vec3> seq(k);
        for (std::size_t i = 0; i < k; ++i) seq[i] = vertex(static_cast<long long>(s) + d * static_cast<long long>(i));
        if (best.empty() || lex_less(seq, best)) best = std::move(seq);
      }
    verts_ = std::move(best);
    key_.data = {Rational(2), Rational(0), Rational(static_cast<std::int64_t>(k))};
  } else {
    Vec3 t = *period_;
    int dir = 1;
    if (t < Vec3{}) {
      t = -t;
      dir = -1;
    }
    const Rational tt = dot(t, t);
    std::vector<Vec3> best;
    for (std::size_t s = 0; s < k; ++s) {
      const long long start = dir * static_cast<long long>(s);
      const Vec3 u0 = vertex(start);
      const Rational shift((dot(u0, t) / tt).floor());
      std::vector<Vec3> seq(k);
      for (std::size_t i = 0; i < k; ++i) seq[i] = vertex(start + dir * static_cast<long long>(i)) - shift * t;
      if (best.empty() || lex_less(seq, best)) best = std::move(seq);
    }
    verts_ = std::move(best);
    period_ = t;
    key_.data = {Rational(2), Rational(1), Rational(static_cast<std::int64_t>(k)), t.x, t.y, t.z};
  }
  for (const auto& v : verts_) key_.data.insert(key_.data.end(), {v.x, v.y, v.z});
}

Polygon Polygon::transformed(const Isometry& g) const {
  std::vector<Vec3> v;
  v.reserve(verts_.size());
  for (const auto& x : verts_) v.push_back(g(x));
  if (!period_) return finite(std::move(v));
  return apeirogon(std::move(v), g.linear * *period_);
}

Polygon Polygon::translated(const Vec3& u) const { return transformed(Isometry::translation_by(u)); }

bool Polygon::has_vertex(const Vec3& p) const { return index_of(*this, p).has_value(); }

bool Polygon::has_edge(const Vec3& a, const Vec3& b) const {
  auto i = index_of(*this, a);
  if (!i) return false;
  return vertex(*i + 1) == b || vertex(*i - 1) == b;
}

std::optional<std::pair<Vec3, Vec3>> Polygon::neighbours(const Vec3& p) const {
  auto i = index_of(*this, p);
  if (!i) return std::nullopt;
  return std::make_pair(vertex(*i - 1), vertex(*i + 1));
}

std::vector<Vec3> Polygon::vertices_in_box(const Vec3& lo, const Vec3& hi) const {
  auto inside = [&](const Vec3& p) {
    for (int c = 0; c < 3; ++c)
      if (p[c] < lo[c] || p[c] > hi[c]) return false;
    return true;
  };
  std::vector<Vec3> out;
  if (!period_) {
    for (const auto& v : verts_)
      if (inside(v)) out.push_back(v);
    return out;
  }
  const Vec3& t = *period_;
  const long long k = static_cast<long long>(verts_.size());
  std::vector<long long> idx;
  for (long long r = 0; r < k; ++r) {
    // range of q with verts_[r] + q t inside the box
    std::int64_t qlo = INT64_MIN / 4, qhi = INT64_MAX / 4;
    bool empty = false;
    for (int c = 0; c < 3 && !empty; ++c) {
      const Rational& v = verts_[r][c];
      if (t[c].is_zero()) {
        if (v < lo[c] || v > hi[c]) empty = true;
        continue;
      }
      Rational a = (lo[c] - v) / t[c], b = (hi[c] - v) / t[c];
      if (b < a) std::swap(a, b);
      qlo = std::max(qlo, -((-a).floor()));
      qhi = std::min(qhi, b.floor());
    }
    if (empty) continue;
    for (std::int64_t q = qlo; q <= qhi; ++q) idx.push_back(q * k + r);
  }
  std::sort(idx.begin(), idx.end());
  for (long long i : idx) out.push_back(vertex(i));
  return out;
}

std::vector<Vec3> Polygon::sample_points() const {
  std::vector<Vec3> pts = verts_;
  if (period_)
    for (const auto& v : verts_) pts.push_back(v + *period_);
  return pts;
}

bool Polygon::planar() const { return coplanar(sample_points()); }

std::optional<Vec3> Polygon::plane_normal() const {
  auto pts = sample_points();
  if (!coplanar(pts)) return std::nullopt;
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Vec3 n = cross(pts[i] - pts[0], pts[j] - pts[0]);
      if (!n.is_zero()) return n;
    }
  return std::nullopt;
}

Polygon canonical_mod(const Polygon& p, const Lattice& L) {
  if (L.rank() == 0) return p;
  std::optional<Polygon> best;
  for (const auto& v : p.vertices()) {
    const Vec3 u = L.reduce(v) - v;
    Polygon q = u.is_zero() ? p : p.translated(u);
    if (!best || q.key() < best->key()) best = std::move(q);
  }
  return *best;
}

}  // namespace polycx
