#include "doctest.h"
#include "oracle.hpp"
#include "polycx/catalog.hpp"
#include "polycx/flag_aut.hpp"

using namespace polycx;

namespace {

IncidenceComplex from_sets(const oracle::SetComplex& s) {
  return IncidenceComplex::from_records(s.rank, oracle::records_of(s));
}

// the cube with vertex 0 cut off; the cut points on edges 0-1, 0-2, 0-4 are
// renumbered 0, 8, 9
oracle::SetComplex truncated_cube() {
  return oracle::from_cycles(10, {{0, 1, 3, 2, 8}, {0, 1, 5, 4, 9}, {8, 2, 6, 4, 9},
                                  {1, 3, 7, 5}, {2, 3, 7, 6}, {4, 5, 7, 6}, {0, 8, 9}});
}

}  // namespace

TEST_CASE("permutation basics") {
  const Perm p = parse_cycles("(1,2,3)(4 5)", 5);
  CHECK(cycle_string(p) == "(1,2,3)(4,5)");
  CHECK(is_identity(compose(p, inverse(p))));
  // left-to-right: (1,2) then (2,3) sends 1 -> 2 -> 3
  const Perm q = compose(parse_cycles("(1,2)", 3), parse_cycles("(2,3)", 3));
  CHECK(q[0] == 2);
  CHECK(cycle_string(identity_perm(4)) == "()");
  CHECK_THROWS_AS(parse_cycles("(1,1)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(1,4)", 3), std::invalid_argument);
  const EnumeratedGroup s4(4, {parse_cycles("(1,2)", 4), parse_cycles("(1,2,3,4)", 4)});
  CHECK(s4.order() == 24);
  CHECK_THROWS_AS(EnumeratedGroup(6, {parse_cycles("(1,2)", 6), parse_cycles("(1,2,3,4,5,6)", 6)}, 100),
                  GroupTooLarge);
}

TEST_CASE("automorphism group orders match vertex-permutation enumeration") {
  const auto cube = oracle::cube_sets();
  const auto square = oracle::polygon_sets(4);
  CHECK(oracle::automorphism_count(cube) == 48);
  CHECK(automorphisms(from_sets(cube)).enumerate().order() == oracle::automorphism_count(cube));
  CHECK(automorphisms(from_sets(square)).enumerate().order() == oracle::automorphism_count(square));
  CHECK(oracle::automorphism_count(square) == 8);
}

TEST_CASE("an asymmetric tree has a trivial group") {
  // spider with legs of length 1, 2 and 3 around vertex 0
  oracle::SetComplex s;
  s.rank = 2;
  s.faces.resize(2);
  for (int v = 0; v < 7; ++v) s.faces[0].push_back({v});
  s.faces[1] = {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}};
  CHECK(oracle::automorphism_count(s) == 1);
  const auto g = automorphisms(from_sets(s));
  CHECK(g.enumerate().order() == 1);
  CHECK_FALSE(is_regular(from_sets(s)));
}

TEST_CASE("regularity") {
  CHECK(is_regular(from_sets(oracle::cube_sets())));
  CHECK(is_regular(torus_map_3_6_2_0()));
  const auto t = truncated_cube();
  const auto tc = from_sets(t);
  CHECK(validate_complex(tc).passed);
  CHECK_FALSE(is_regular(tc));
  const auto g = automorphisms(tc);
  CHECK(g.enumerate().order() == oracle::automorphism_count(t));
  CHECK(flag_orbit_count(g) == flags(tc).size() / oracle::automorphism_count(t));
  CHECK(automorphisms(torus_map_3_6_2_0()).enumerate().order() == 48);
}

TEST_CASE("distinguished subgroups of the cube") {
  const auto c = from_sets(oracle::cube_sets());
  const auto g = automorphisms(c);
  const auto ds = distinguished_system(c, g);
  CHECK(ds.group_order == 48);
  CHECK(ds.order_of(-1) == 1);
  for (int i = 0; i < 3; ++i) CHECK(ds.order_of(i) == 2);
  CHECK(ds.order_of(3) == 1);
  CHECK(adjacency_count_check(ds, c));
  auto broken = ds;
  broken.generators[3].clear();  // drop the generator of R(2)
  CHECK_FALSE(adjacency_count_check(broken, c));
  // every base flag gives the same orders
  for (std::size_t b : {std::size_t{5}, std::size_t{47}}) {
    const auto other = distinguished_system(c, g, b);
    for (int i = -1; i <= 3; ++i) CHECK(other.order_of(i) == ds.order_of(i));
  }
  CHECK_THROWS_AS(distinguished_system(from_sets(truncated_cube()), automorphisms(from_sets(truncated_cube()))),
                  NotFlagTransitive);
}

TEST_CASE("square distinguished subgroups") {
  const auto sq = from_sets(oracle::polygon_sets(4));
  const auto ds = distinguished_system(sq, automorphisms(sq));
  CHECK(ds.order_of(0) == 2);
  CHECK(ds.order_of(1) == 2);
  CHECK(ds.group_order == 8);
}

TEST_CASE("isomorphism search") {
  const auto a = from_sets(oracle::cube_sets());
  const auto b = platonic_lattice("cube");
  CHECK(are_isomorphic(a, b));
  CHECK_FALSE(are_isomorphic(a, platonic_lattice("octahedron")));
  CHECK(are_isomorphic(dual(platonic_lattice("octahedron")), b));
  CHECK(isomorphisms(a, b).size() == 48);
}
