#include <sstream>

#include "random_fixtures.hpp"
#include "doctest.h"
#include "polycx/flag_aut.hpp"
#include "polycx/io.hpp"

using namespace polycx;

namespace {

std::size_t count_prefix(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);)
    if (line.rfind(prefix, 0) == 0) ++n;
  return n;
}

std::size_t parse_error_line(auto&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("randomized round trips") {
  fixtures::Rng rng(20261015);
  for (int t = 0; t < 40; ++t) {
    const auto c = fixtures::random_icx(rng);
    const auto text = write_icx(c);
    CHECK(parse_icx(text) == c);
    CHECK(write_icx(parse_icx(text)) == text);

    const auto s = fixtures::random_sgs(rng);
    CHECK(fixtures::same_system(parse_sgs(write_sgs(s)), s));

    const auto g = fixtures::random_gcx(rng);
    const auto gt = write_gcx(g);
    CHECK(same_geometric(parse_gcx(gt), g));
    CHECK(write_gcx(parse_gcx(gt)) == gt);
  }
}

TEST_CASE("icx details") {
  const auto c = parse_icx("ICX 1\n# a segment\nrank 1\n0 a :\n0 b :  # trailing comment\n");
  CHECK(c.face_count(0) == 2);
  CHECK(validate_complex(c).passed);
  // dangling ids survive parsing and are reported by validation
  const auto d = parse_icx("ICX 1\nrank 2\n0 a :\n1 e : a zz\n");
  CHECK_FALSE(d.well_formed());
  CHECK(parse_error_line([] { parse_icx("ICX 2\nrank 1\n"); }) == 1);
  CHECK(parse_error_line([] { parse_icx("ICX 1\nrank x\n"); }) == 2);
  CHECK(parse_error_line([] { parse_icx("ICX 1\nrank 1\n0 a :\nbogus\n"); }) == 4);
  CHECK(parse_error_line([] { parse_icx(""); }) == 1);
}

TEST_CASE("sgs details") {
  const auto s = parse_sgs("SGS 1\ndegree 3\ngroup:\n(1,2)\n(1, 3)\nR -1:\nR 0:\n(1 2)\nR 1:\n(1,3)\nR 2:\n");
  CHECK(s.rank == 2);
  CHECK(s.R(0).front() == parse_cycles("(1,2)", 3));
  CHECK(s.R(1).front() == parse_cycles("(1,3)", 3));
  CHECK(parse_error_line([] { parse_sgs("SGS 1\ndegree 3\nR 0:\n"); }) > 0);
  CHECK(parse_error_line([] { parse_sgs("SGS 1\ndegree 3\ngroup:\n(1,4)\nR -1:\nR 0:\n"); }) == 4);
  CHECK(parse_error_line([] { parse_sgs("SGS 1\ndegree 3\ngroup:\nR -1:\nR 1:\n"); }) > 0);
}

TEST_CASE("gcx rejects inexact coordinates") {
  const std::string head = "GCX 1\nrank 1\n";
  CHECK(parse_error_line([&] { parse_gcx(head + "vertex a 0.5 0 0\n"); }) == 3);
  CHECK(parse_error_line([&] { parse_gcx(head + "vertex a 1e3 0 0\n"); }) == 3);
  CHECK(parse_error_line([&] { parse_gcx(head + "vertex a 1/0 0 0\n"); }) == 3);
  const auto g = parse_gcx(head + "vertex a 1/2 -3/4 2\nvertex b 0 0 0\n0 a :\n0 b :\n");
  CHECK(g.coords[0] == Vec3{Rational(1, 2), Rational(-3, 4), 2});
}

TEST_CASE("mesh export") {
  const auto off = export_mesh(platonic("cube"), MeshFormat::Off);
  std::istringstream in(off);
  std::string line;
  do std::getline(in, line);
  while (line.empty() || line[0] == '#');
  CHECK(line == "OFF");
  do std::getline(in, line);
  while (line.empty() || line[0] == '#');
  CHECK(line.rfind("8 6 ", 0) == 0);

  const auto apeir_window = build_window(apeir("tetrahedron"), 1).complex;
  CHECK_THROWS_AS(export_mesh(apeir_window, MeshFormat::Off), MeshError);
  const auto obj = export_mesh(apeir_window, MeshFormat::Obj);
  CHECK(count_prefix(obj, "v ") == apeir_window.coords.size());
  CHECK(count_prefix(obj, "f ") == 0);
  CHECK(count_prefix(obj, "l ") > 0);

  const auto petrial = export_mesh(cube_petrial(), MeshFormat::Obj);
  CHECK(count_prefix(petrial, "l ") == 4);
  CHECK_THROWS_AS(export_mesh(cube_petrial(), MeshFormat::Off), MeshError);
}
