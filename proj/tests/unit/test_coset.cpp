#include "doctest.h"
#include "oracle.hpp"
#include "polycx/catalog.hpp"
#include "polycx/coset.hpp"

using namespace polycx;

namespace {

SubgroupSystem system_of(const IncidenceComplex& c) { return system_from(distinguished_system(c, automorphisms(c))); }

SubgroupSystem perm_system(std::size_t degree, const std::vector<std::string>& group,
                           const std::vector<std::vector<std::string>>& subgroups) {
  SubgroupSystem s;
  s.degree = degree;
  s.rank = static_cast<int>(subgroups.size()) - 2;
  for (const auto& g : group) s.group.push_back(parse_cycles(g, degree));
  for (const auto& sub : subgroups) {
    s.subgroups.emplace_back();
    for (const auto& g : sub) s.subgroups.back().push_back(parse_cycles(g, degree));
  }
  return s;
}

}  // namespace

TEST_CASE("cube system satisfies both conditions and rebuilds the cube") {
  const auto cube = platonic_lattice("cube");
  const auto s = system_of(cube);
  CHECK(check_products(s).ok);
  CHECK(check_intersection(s).ok);
  const auto rebuilt = complex_from_system(s);
  CHECK(rebuilt.face_count(0) == 8);
  CHECK(rebuilt.face_count(1) == 12);
  CHECK(rebuilt.face_count(2) == 6);
  CHECK(are_isomorphic(rebuilt, cube));
}

TEST_CASE("non-commuting subgroup products are caught with a witness") {
  // S4 with R(0) = <(1,2)>, R(2) = <(2,3)>: (1,2)(2,3) lies in R0 R2 only
  const auto s = perm_system(4, {"(1,2)", "(2,3)", "(3,4)"}, {{}, {"(1,2)"}, {"(3,4)"}, {"(2,3)"}, {}});
  const auto r = check_products(s);
  CHECK_FALSE(r.ok);
  CHECK(r.i == 0);
  CHECK(r.j == 2);
  REQUIRE(r.witness);
  // the witness is a product of the two transpositions: a 3-cycle on 1, 2, 3
  const Perm& w = *r.witness;
  CHECK(w[3] == 3);
  CHECK_FALSE(is_identity(w));
  CHECK(is_identity(compose(compose(w, w), w)));
  CHECK_THROWS_AS(complex_from_system(s), ConstructionRefused);
}

TEST_CASE("intersection condition on small systems") {
  // S3, R(0) = <(1,2)>, R(1) = <(1,3)>, trivial R(-1) = R(2)
  const auto s3 = perm_system(3, {"(1,2)", "(1,3)"}, {{}, {"(1,2)"}, {"(1,3)"}, {}});
  CHECK(check_intersection(s3).ok);
  const auto tri = complex_from_system(s3);
  CHECK(tri.face_count(0) == 3);
  CHECK(tri.face_count(1) == 3);
  // rank 1: only the empty and full index sets
  const auto seg = perm_system(2, {"(1,2)"}, {{}, {"(1,2)"}, {}});
  CHECK(check_intersection(seg).ok);
  // every subgroup equal to R(-1): all products coincide
  const auto flat = perm_system(3, {"(1,2)"}, {{"(1,2)"}, {"(1,2)"}, {"(1,2)"}, {"(1,2)"}});
  CHECK(check_products(flat).ok);
}

TEST_CASE("square and torus systems") {
  const auto square = complex_from_system(system_of(polygon_lattice(4)));
  CHECK(square.face_count(0) == 4);
  CHECK(square.face_count(1) == 4);
  const auto torus = complex_from_system(system_of(torus_map_3_6_2_0()));
  CHECK(flags(torus).size() == 48);
  CHECK(is_regular(torus));
  CHECK(are_isomorphic(torus, torus_map_3_6_2_0()));
}

TEST_CASE("incidence test") {
  const auto s = system_of(platonic_lattice("cube"));
  CosetContext ctx(s);
  const auto& G = ctx.group();
  const Perm id = identity_perm(s.degree);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) CHECK(incidence_test(ctx, i, id, j, id));
  // vertices of the base square: 4 vertices, each a coset of a
  // vertex stabilizer of order 6
  std::size_t on_square = 0;
  for (const auto& phi : G.elements()) on_square += incidence_test(ctx, 0, phi, 2, id);
  CHECK(on_square == 24);
  std::size_t same_vertex = 0;
  for (const auto& phi : G.elements()) same_vertex += incidence_test(ctx, 0, phi, 0, id);
  CHECK(same_vertex == 6);
  CHECK_THROWS_AS(incidence_test(ctx, 2, id, 0, id), std::invalid_argument);
}

TEST_CASE("round trips") {
  for (const auto& name : platonic_names()) {
    INFO(name);
    CHECK(round_trip(platonic_lattice(name)));
  }
  CHECK(round_trip(torus_map_3_6_2_0()));
  CHECK(round_trip(polygon_lattice(5)));
}
