#include <random>
#include <set>

#include "doctest.h"
#include "polycx/catalog.hpp"
#include "polycx/euclid.hpp"

using namespace polycx;

namespace {

// all 48 signed permutation matrices
std::vector<Mat3> signed_permutations() {
  std::vector<Mat3> out;
  int p[3] = {0, 1, 2};
  do {
    for (int s = 0; s < 8; ++s) {
      Mat3 m;
      for (int r = 0; r < 3; ++r) m(r, p[r]) = (s >> r) & 1 ? -1 : 1;
      out.push_back(m);
    }
  } while (std::next_permutation(p, p + 3));
  return out;
}

}  // namespace

TEST_CASE("matrices and isometries") {
  const auto mats = signed_permutations();
  CHECK(mats.size() == 48);
  for (const auto& m : mats) {
    CHECK(m.is_orthogonal());
    auto inv = m.inverse();
    REQUIRE(inv);
    CHECK(*inv * m == Mat3::identity());
    CHECK(*inv == m.transpose());
  }
  const Mat3 shear = Mat3::from_rows({1, 1, 0}, {0, 1, 0}, {0, 0, 1});
  CHECK_FALSE(shear.is_orthogonal());
  CHECK_THROWS(Isometry::checked(shear, {}));
  CHECK_FALSE(Mat3::from_rows({1, 2, 3}, {2, 4, 6}, {0, 0, 1}).inverse());

  const Isometry r = Isometry::reflection({0, 0, 1}, {0, 0, 1});  // plane z = 1
  CHECK(r.is_involution());
  CHECK(r(Vec3{5, 6, 3}) == Vec3{5, 6, -1});
  const Isometry t = Isometry::translation_by({1, 0, 0});
  // (a * b)(p) = a(b(p))
  const Vec3 p{1, 2, 3};
  CHECK((t * r)(p) == t(r(p)));
  CHECK((r * t)(p) == r(t(p)));
  CHECK((t * t.inverse()).is_identity());
  CHECK(Isometry::point_reflection({1, 1, 1})(Vec3{0, 0, 0}) == Vec3{2, 2, 2});
  const Isometry oblique = Isometry::reflection({1, 1, 0}, {0, 0, 0});
  CHECK(oblique(Vec3{1, 0, 0}) == Vec3{0, -1, 0});
}

TEST_CASE("coplanarity") {
  CHECK(coplanar({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {5, 7, 0}}));
  CHECK_FALSE(coplanar({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(collinear({{0, 0, 0}, {1, 1, 1}, {-2, -2, -2}}));
  CHECK_FALSE(collinear({{0, 0, 0}, {1, 1, 1}, {1, 0, 0}}));
}

TEST_CASE("lattices agree with brute-force membership") {
  const Lattice a = Lattice::from_vectors({{1, 1, 0}, {1, -1, 0}});
  const Lattice b = Lattice::from_vectors({{2, 0, 0}, {1, 1, 0}, {3, 1, 0}});
  CHECK(a == b);
  CHECK(a.rank() == 2);
  // oracle: integer combinations with small coefficients
  std::set<Vec3> members;
  for (int i = -6; i <= 6; ++i)
    for (int j = -6; j <= 6; ++j) members.insert(Vec3{i + j, i - j, 0});
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y)
      for (int z = -1; z <= 1; ++z) {
        const Vec3 v{x, y, z};
        CHECK(a.contains(v) == (members.count(v) > 0));
      }
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int t = 0; t < 200; ++t) {
    const Vec3 x{Rational(d(rng), 2), Rational(d(rng), 3), d(rng)};
    const int i = d(rng), j = d(rng);
    const Vec3 l{i + j, i - j, 0};
    CHECK(a.contains(a.reduce(x) - x));
    CHECK(a.reduce(x + l) == a.reduce(x));
  }
  CHECK(Lattice::from_vectors({}).rank() == 0);
  CHECK(Lattice::from_vectors({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}).rank() == 3);
}

TEST_CASE("polygon canonical forms ignore start and direction") {
  const std::vector<Vec3> sq = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  const Polygon p = Polygon::finite(sq);
  for (int s = 0; s < 4; ++s) {
    std::vector<Vec3> rot, rev;
    for (int i = 0; i < 4; ++i) {
      rot.push_back(sq[(s + i) % 4]);
      rev.push_back(sq[(s + 4 - i) % 4]);
    }
    CHECK(Polygon::finite(rot) == p);
    CHECK(Polygon::finite(rev) == p);
  }
  CHECK_FALSE(Polygon::finite({{0, 0, 0}, {1, 1, 0}, {1, 0, 0}, {0, 1, 0}}) == p);
  CHECK(p.planar());
  CHECK(p.has_edge({1, 1, 0}, {1, 0, 0}));
  CHECK_FALSE(p.has_edge({0, 0, 0}, {1, 1, 0}));

  // zigzag: (i, i mod 2, 0), period 2 with translation (2, 0, 0)
  const Polygon z = Polygon::apeirogon({{0, 0, 0}, {1, 1, 0}}, {2, 0, 0});
  const Polygon z2 = Polygon::apeirogon({{5, 1, 0}, {4, 0, 0}}, {-2, 0, 0});
  CHECK(z == z2);
  CHECK(z.infinite());
  CHECK(z.vertex(7) == Vec3{7, 1, 0});
  CHECK(z.translated({2, 0, 0}) == z);
  CHECK_FALSE(z.translated({1, 0, 0}) == z);
  CHECK(z.transformed(Isometry::reflection({0, 0, 1}, {0, 0, 0})) == z);
}

TEST_CASE("canonical representatives modulo a lattice") {
  const Lattice L = Lattice::from_vectors({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  const Polygon sq = Polygon::finite({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}});
  const Polygon moved = sq.translated({4, -2, 6});
  CHECK(canonical_mod(sq, L) == canonical_mod(moved, L));
  CHECK_FALSE(canonical_mod(sq, L) == canonical_mod(sq.translated({1, 0, 0}), L));
}

TEST_CASE("facets and crystallographic closures of the cubical tessellation") {
  const auto e = cubical_tessellation();
  const auto cc = CrystallographicClosure::of(e.generator_list());
  CHECK(cc.representatives.size() == 48);
  CHECK(cc.lattice == Lattice::from_vectors({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  for (const auto& g : e.generators) CHECK(cc.contains(g));
  CHECK_FALSE(cc.contains(Isometry::translation_by({Rational(1, 2), 0, 0})));
  REQUIRE(e.base.facet);
  CHECK(e.base.facet->finite());
  CHECK(e.base.facet->face_representatives().size() == 6);
  CHECK(e.base.facet->contains_face(*e.base.face));
  // the facet group of the Petrie dual is crystallographic with a lattice
  const auto p = petrie_dual_4(e);
  CHECK_FALSE(p.base.facet->finite());
  CHECK(p.base.facet->contains_face(*p.base.face));
  // a non-crystallographic rotation is refused
  const Mat3 rot = Mat3::from_rows({Rational(3, 5), Rational(-4, 5), 0}, {Rational(4, 5), Rational(3, 5), 0}, {0, 0, 1});
  CHECK_THROWS_AS(CrystallographicClosure::of({Isometry::checked(rot, {})}), NonDiscreteGroup);
}
