#include <set>

#include "doctest.h"
#include "polycx/audit.hpp"
#include "polycx/catalog.hpp"

using namespace polycx;

namespace {

const GeometricComplex& cubic_skeleton() {
  static const GeometricComplex g = two_skeleton(build_window(cubical_tessellation(), 2).complex);
  return g;
}

std::vector<AngleClass> cubic_edge_classes() {
  const auto& g = cubic_skeleton();
  const auto base = choose_base_flag(g);
  std::vector<AngleClass> out;
  for (const auto& a : dihedral_angles_at_edge(g, base.edge)) out.push_back(a.cls);
  return out;
}

}  // namespace

TEST_CASE("dihedral obstruction") {
  const auto classes = cubic_edge_classes();
  const std::set<AngleClass> distinct(classes.begin(), classes.end());
  CHECK(distinct == std::set<AngleClass>{AngleClass::Coincident, AngleClass::Deg90});
  const auto ex = dihedral_obstruction(4, 3, classes);
  CHECK(ex.excluded);
  CHECK(ex.branch == "dihedral");
  const auto adm = dihedral_obstruction(4, 2, classes);
  CHECK_FALSE(adm.excluded);
  CHECK(adm.branch == "admissible");
  const auto conn = dihedral_obstruction(3, 3, {});
  CHECK(conn.excluded);
  CHECK(conn.branch == "connectedness");
  CHECK_THROWS(dihedral_obstruction(4, 5, classes));
  CHECK_THROWS(dihedral_obstruction(5, 3, classes));
  CHECK_THROWS(dihedral_obstruction(3, 1, classes));
  // with a 120 degree class present the r3 = 3 scenario is not refuted
  CHECK_FALSE(dihedral_obstruction(4, 3, {AngleClass::Deg120}).excluded);
}

TEST_CASE("audit of the cubical 2-skeleton") {
  const auto rep = audit(cubic_skeleton());
  CHECK(rep.verdict == Verdict::Rank4Candidates);
  CHECK(rep.planar_faces);
  CHECK(rep.face_mirrors_found);
  REQUIRE(rep.r);
  CHECK(*rep.r == 4);
  CHECK(rep.window_certified);
  REQUIRE(rep.candidates.size() == 2);
  std::set<int> r3s;
  for (const auto& c : rep.candidates) r3s.insert(c.facet_r3);
  CHECK(r3s == std::set<int>{2});
  REQUIRE(rep.rho3);
  CHECK(*rep.rho3 == cubical_tessellation().generators[3]);
}

TEST_CASE("audit of finite polyhedra") {
  CHECK(audit(platonic("cube")).verdict == Verdict::NoRank4Extension);
  // skew faces have no plane reflection
  const auto p = audit(cube_petrial());
  CHECK_FALSE(p.planar_faces);
  CHECK(p.verdict == Verdict::NoRank4Extension);
}

TEST_CASE("audit is invariant under an isometry") {
  const Isometry move = Isometry::translation_by({3, -1, 2}) * Isometry::reflection({1, -1, 0}, {0, 0, 0});
  const auto cube = platonic("cube");
  std::vector<Vec3> pts;
  for (const auto& p : cube.coords) pts.push_back(move(p));
  CHECK(audit(realize(cube.abstract, pts)).verdict == Verdict::NoRank4Extension);
}

TEST_CASE("facet sections") {
  for (const auto& e : {cubical_tessellation(), petrie_dual_4(cubical_tessellation()), apeir("tetrahedron")}) {
    INFO(e.name);
    const auto w = build_window(e, 2);
    const auto& g = w.complex;
    const int base_facet = w.base_flag.faces[3];
    CHECK(facet_r3(g, base_facet) == 2);
  }
}

TEST_CASE("rank-5 obstruction") {
  const auto r = rank5_obstruction(cubical_tessellation(), 2);
  CHECK(r.obstructed);
  CHECK(r.stabilizer_order == 2);
  CHECK(r.planar_base_face);
  const auto skew = rank5_obstruction(cube_petrial());
  CHECK(skew.obstructed);
  CHECK_FALSE(skew.planar_base_face);
  CHECK(skew.stabilizer_order == 1);
}

TEST_CASE("a window without interior flags is refused") {
  CHECK_THROWS_AS(audit(two_skeleton(build_window(cubical_tessellation(), 1).complex)), AuditError);
}
