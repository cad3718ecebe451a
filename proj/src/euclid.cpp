#include "polycx/euclid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace polycx {

std::string Vec3::str() const { return "(" + x.str() + ", " + y.str() + ", " + z.str() + ")"; }

Rational dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Mat3 Mat3::identity() {
  Mat3 m;
  m(0, 0) = m(1, 1) = m(2, 2) = Rational(1);
  return m;
}

Mat3 Mat3::from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
  Mat3 m;
  const Vec3* rows[3] = {&r0, &r1, &r2};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = (*rows[r])[c];
  return m;
}

Mat3 Mat3::from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  return from_rows(c0, c1, c2).transpose();
}

Vec3 Mat3::operator*(const Vec3& v) const {
  Vec3 out;
  for (int r = 0; r < 3; ++r) {
    Rational s;
    for (int c = 0; c < 3; ++c)
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

Mat3 Mat3::operator*(const Mat3& m) const {
  Mat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      Rational s;
      for (int k = 0; k < 3; ++k)
        if (!(*this)(r, k).is_zero() && !m(k, c).is_zero()) s += (*this)(r, k) * m(k, c);
      out(r, c) = s;
    }
  return out;
}

Mat3 Mat3::transpose() const {
  Mat3 t;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rational Mat3::det() const {
  const Mat3& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

std::optional<Mat3> Mat3::inverse() const {
  const Rational d = det();
  if (d.is_zero()) return std::nullopt;
  const Mat3& m = *this;
  Mat3 inv;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      // cofactor of (c, r)
      int r0 = (c + 1) % 3, r1 = (c + 2) % 3, c0 = (r + 1) % 3, c1 = (r + 2) % 3;
      inv(r, c) = (m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0)) / d;
    }
  return inv;
}

bool Mat3::is_orthogonal() const { return transpose() * (*this) == identity(); }

Isometry Isometry::reflection(const Vec3& normal, const Vec3& point) {
  const Rational nn = dot(normal, normal);
  if (nn.is_zero()) throw std::invalid_argument("reflection needs a nonzero normal");
  Isometry g;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) g.linear(r, c) = Rational(r == c ? 1 : 0) - Rational(2) * normal[r] * normal[c] / nn;
  g.translation = (Rational(2) * dot(point, normal) / nn) * normal;
  return g;
}

Isometry Isometry::point_reflection(const Vec3& center) {
  Isometry g;
  g.linear = Mat3::identity();
  for (int i = 0; i < 3; ++i) g.linear(i, i) = Rational(-1);
  g.translation = Rational(2) * center;
  return g;
}

Isometry Isometry::checked(const Mat3& linear, const Vec3& translation) {
  if (!linear.is_orthogonal()) throw std::invalid_argument("linear part is not orthogonal");
  return {linear, translation};
}

Isometry Isometry::inverse() const {
  Mat3 t = linear.transpose();
  return {t, -(t * translation)};
}

std::string Isometry::str() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < 3; ++r) {
    if (r) os << "; ";
    for (int c = 0; c < 3; ++c) os << (c ? " " : "") << linear(r, c);
  }
  os << " | " << translation.x << " " << translation.y << " " << translation.z << "]";
  return os.str();
}

std::size_t IsometryHash::operator()(const Isometry& g) const noexcept {
  std::size_t h = 0;
  for (const auto& x : g.linear.a) h = h * 31 + x.hash();
  return h ^ (Vec3Hash{}(g.translation) * 0x9e3779b97f4a7c15ull);
}

bool collinear(const std::vector<Vec3>& pts) {
  if (pts.size() < 3) return true;
  std::size_t k = 1;
  while (k < pts.size() && pts[k] == pts[0]) ++k;
  if (k == pts.size()) return true;
  const Vec3 d = pts[k] - pts[0];
  for (const auto& p : pts)
    if (!cross(d, p - pts[0]).is_zero()) return false;
  return true;
}

bool coplanar(const std::vector<Vec3>& pts) {
  if (pts.size() < 4 || collinear(pts)) return true;
  std::size_t k = 1;
  while (pts[k] == pts[0]) ++k;
  const Vec3 d = pts[k] - pts[0];
  Vec3 n;
  for (const auto& p : pts) {
    n = cross(d, p - pts[0]);
    if (!n.is_zero()) break;
  }
  for (const auto& p : pts)
    if (!dot(n, p - pts[0]).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------- lattices

Lattice Lattice::from_vectors(const std::vector<Vec3>& vectors) {
  // Scale to integers, compute the Hermite normal form by row reduction,
  // then scale back.
  std::int64_t D = 1;
  for (const auto& v : vectors)
    for (int c = 0; c < 3; ++c) D = std::lcm(D, v[c].den());
  std::vector<std::array<Rational, 3>> rows;
  for (const auto& v : vectors) {
    std::array<Rational, 3> row{v.x * Rational(D), v.y * Rational(D), v.z * Rational(D)};
    if (!(row[0].is_zero() && row[1].is_zero() && row[2].is_zero())) rows.push_back(row);
  }
  auto sub = [](std::array<Rational, 3>& a, const std::array<Rational, 3>& b, const Rational& q) {
    for (int c = 0; c < 3; ++c) a[c] -= q * b[c];
  };
  Lattice L;
  std::size_t p = 0;
  for (int c = 0; c < 3 && p < rows.size(); ++c) {
    for (;;) {
      // smallest nonzero |entry| in column c among rows p..
      std::size_t best = rows.size();
      for (std::size_t r = p; r < rows.size(); ++r)
        if (!rows[r][c].is_zero() && (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c]))) best = r;
      if (best == rows.size()) break;
      std::swap(rows[p], rows[best]);
      bool done = true;
      for (std::size_t r = p + 1; r < rows.size(); ++r) {
        if (rows[r][c].is_zero()) continue;
        sub(rows[r], rows[p], Rational((rows[r][c] / rows[p][c]).floor()));
        if (!rows[r][c].is_zero()) done = false;
      }
      if (done) break;
    }
    if (p < rows.size() && !rows[p][c].is_zero()) {
      if (rows[p][c].sign() < 0)
        for (auto& x : rows[p]) x = -x;
      for (std::size_t r = 0; r < p; ++r) sub(rows[r], rows[p], Rational((rows[r][c] / rows[p][c]).floor()));
      L.pivots_.push_back(c);
      ++p;
    }
  }
  const Rational inv(1, D);
  for (std::size_t r = 0; r < p; ++r) L.basis_.push_back({rows[r][0] * inv, rows[r][1] * inv, rows[r][2] * inv});
  return L;
}

Vec3 Lattice::reduce(Vec3 x) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const int c = pivots_[i];
    const Rational q((x[c] / basis_[i][c]).floor());
    if (!q.is_zero()) x = x - q * basis_[i];
  }
  return x;
}

Lattice Lattice::transformed(const Mat3& m) const {
  std::vector<Vec3> v;
  for (const auto& b : basis_) v.push_back(m * b);
  return from_vectors(v);
}

// ---------------------------------------------------------------- keys

std::size_t FaceKeyHash::operator()(const FaceKey& k) const noexcept {
  std::size_t h = k.data.size();
  for (const auto& x : k.data) h = h * 1000003u ^ x.hash();
  return h;
}

FaceKey vertex_key(const Vec3& p) { return {{Rational(0), p.x, p.y, p.z}}; }

FaceKey edge_key(const Vec3& a, const Vec3& b) {
  const Vec3& lo = std::min(a, b);
  const Vec3& hi = std::max(a, b);
  return {{Rational(1), lo.x, lo.y, lo.z, hi.x, hi.y, hi.z}};
}

}  // namespace polycx
