#pragma once

// Exact Euclidean 3-space: rational points, affine isometries, translation
// lattices, and canonical forms for (possibly infinite) polygons and for
// facets given as periodic families of polygons.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "polycx/rational.hpp"

namespace polycx {

struct Vec3 {
  Rational x, y, z;

  const Rational& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  Rational& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(const Rational& s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
  friend std::strong_ordering operator<=>(const Vec3& a, const Vec3& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.z <=> b.z;
  }
  bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
  std::string str() const;
};

using QPoint = Vec3;

Rational dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);

struct Vec3Hash {
  std::size_t operator()(const Vec3& v) const noexcept {
    return v.x.hash() * 73856093u ^ v.y.hash() * 19349663u ^ v.z.hash() * 83492791u;
  }
};

struct Mat3 {
  std::array<Rational, 9> a{};  // row major

  static Mat3 identity();
  static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2);
  static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);
  const Rational& operator()(int r, int c) const { return a[3 * r + c]; }
  Rational& operator()(int r, int c) { return a[3 * r + c]; }
  Vec3 operator*(const Vec3& v) const;
  Mat3 operator*(const Mat3& m) const;
  Mat3 transpose() const;
  Rational det() const;
  std::optional<Mat3> inverse() const;
  bool is_orthogonal() const;
  friend bool operator==(const Mat3&, const Mat3&) = default;
  friend auto operator<=>(const Mat3& l, const Mat3& r) { return l.a <=> r.a; }
};

/// x -> linear * x + translation, with an orthogonal linear part.
struct Isometry {
  Mat3 linear = Mat3::identity();
  Vec3 translation{};

  static Isometry identity() { return {}; }
  static Isometry translation_by(const Vec3& t) { return {Mat3::identity(), t}; }
  /// Reflection in the plane through `point` with normal `normal`.
  static Isometry reflection(const Vec3& normal, const Vec3& point);
  /// Point reflection x -> 2c - x.
  static Isometry point_reflection(const Vec3& center);
  /// Builds from linear part and translation, throwing if not orthogonal.
  static Isometry checked(const Mat3& linear, const Vec3& translation);

  Vec3 operator()(const Vec3& p) const { return linear * p + translation; }
  /// Function composition: (a * b)(p) = a(b(p)).
  friend Isometry operator*(const Isometry& a, const Isometry& b) {
    return {a.linear * b.linear, a.linear * b.translation + a.translation};
  }
  Isometry inverse() const;
  bool is_identity() const { return linear == Mat3::identity() && translation.is_zero(); }
  bool is_involution() const { return ((*this) * (*this)).is_identity(); }
  friend bool operator==(const Isometry&, const Isometry&) = default;
  friend auto operator<=>(const Isometry& l, const Isometry& r) {
    if (auto c = l.linear <=> r.linear; c != 0) return c;
    return l.translation <=> r.translation;
  }
  std::string str() const;
};

struct IsometryHash {
  std::size_t operator()(const Isometry& g) const noexcept;
};

/// Affine hull test: true iff all points lie in one plane (or line).
bool coplanar(const std::vector<Vec3>& pts);
bool collinear(const std::vector<Vec3>& pts);

/// A discrete subgroup of translations, kept in Hermite normal form so that
/// both the basis and coset representatives are canonical.
class Lattice {
 public:
  Lattice() = default;
  static Lattice from_vectors(const std::vector<Vec3>& vectors);

  const std::vector<Vec3>& basis() const { return basis_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  /// Canonical representative of x + lattice.
  Vec3 reduce(Vec3 x) const;
  bool contains(const Vec3& x) const { return reduce(x).is_zero(); }
  Lattice transformed(const Mat3& m) const;
  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  std::vector<Vec3> basis_;
  std::vector<int> pivots_;
};

/// Exact canonical key of a geometric face, usable for hashing and equality.
struct FaceKey {
  std::vector<Rational> data;
  friend bool operator==(const FaceKey&, const FaceKey&) = default;
  friend auto operator<=>(const FaceKey& l, const FaceKey& r) { return l.data <=> r.data; }
};

struct FaceKeyHash {
  std::size_t operator()(const FaceKey& k) const noexcept;
};

FaceKey vertex_key(const Vec3& p);
FaceKey edge_key(const Vec3& a, const Vec3& b);

/// A finite polygon (closed vertex cycle) or an apeirogon given by one period
/// of vertices v0..v(k-1) and the translation t with v(i+k) = v(i) + t.
class Polygon {
 public:
  Polygon() = default;
  static Polygon finite(std::vector<Vec3> cycle);
  static Polygon apeirogon(std::vector<Vec3> period, const Vec3& translation);

  bool infinite() const { return period_.has_value(); }
  const std::vector<Vec3>& vertices() const { return verts_; }
  const std::optional<Vec3>& period() const { return period_; }
  /// Vertex i of the infinite sequence (indices taken modulo the cycle when finite).
  Vec3 vertex(long long i) const;
  std::size_t period_length() const { return verts_.size(); }

  Polygon transformed(const Isometry& g) const;
  Polygon translated(const Vec3& u) const;

  bool has_vertex(const Vec3& p) const;
  bool has_edge(const Vec3& a, const Vec3& b) const;
  /// The two neighbours of vertex p along the polygon.
  std::optional<std::pair<Vec3, Vec3>> neighbours(const Vec3& p) const;
  /// Consecutive run of vertices lying in the closed box [lo, hi].
  std::vector<Vec3> vertices_in_box(const Vec3& lo, const Vec3& hi) const;
  /// A few vertices spanning the affine hull.
  std::vector<Vec3> sample_points() const;
  bool planar() const;
  /// Normal of the supporting plane, if planar and not collinear.
  std::optional<Vec3> plane_normal() const;

  const FaceKey& key() const { return key_; }
  friend bool operator==(const Polygon& a, const Polygon& b) { return a.key_ == b.key_; }

 private:
  void canonicalize();

  std::vector<Vec3> verts_;
  std::optional<Vec3> period_;
  FaceKey key_;
};

/// Canonical representative of the family { p + l : l in L }; requires the
/// polygon's own period (if any) to lie in L.
Polygon canonical_mod(const Polygon& p, const Lattice& L);

class NonDiscreteGroup : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite point group plus translation lattice describing a discrete group
/// of isometries: every element is rep + l for a unique rep and l in L.
struct CrystallographicClosure {
  Lattice lattice;
  std::vector<Isometry> representatives;  // one per linear part, translations reduced

  static CrystallographicClosure of(const std::vector<Isometry>& generators, std::size_t max_point_group = 48);
  bool contains(const Isometry& g) const;
};

/// A 3-face: the orbit of a polygon under a discrete group, stored as a
/// translation lattice and canonical polygon representatives modulo it.
class Facet {
 public:
  Facet() = default;
  static Facet from_group(const std::vector<Isometry>& generators, const Polygon& base_face);
  static Facet from_faces(const std::vector<Polygon>& faces);
  /// Lattice plus representatives; representatives are reduced modulo it.
  static Facet from_parts(const Lattice& lattice, const std::vector<Polygon>& faces);

  const Lattice& lattice() const { return lattice_; }
  const std::vector<Polygon>& face_representatives() const { return faces_; }
  bool finite() const { return lattice_.rank() == 0; }
  bool contains_face(const Polygon& p) const;
  Facet transformed(const Isometry& g) const;
  const FaceKey& key() const { return key_; }
  friend bool operator==(const Facet& a, const Facet& b) { return a.key_ == b.key_; }

 private:
  void finish();

  Lattice lattice_;
  std::vector<Polygon> faces_;
  FaceKey key_;
};

}  // namespace polycx
