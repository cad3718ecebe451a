#pragma once

// The verification corpus: Platonic solids, the torus map {3,6}_(2,0), the
// cubical tessellation and the apeirotopes built from generator quadruples,
// together with the rank-4 Petrie operation.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "polycx/complex.hpp"
#include "polycx/geometric.hpp"

namespace polycx {

/// Rank-3 complex from vertex cycles; edges are the consecutive pairs.
IncidenceComplex polyhedron_from_faces(std::size_t vertex_count, const std::vector<std::vector<int>>& faces);

/// Rank-2 lattice of a p-gon.
IncidenceComplex polygon_lattice(int p);

/// Order-reversing dual (face ranks flipped).
IncidenceComplex dual(const IncidenceComplex& c);

const std::vector<std::string>& platonic_names();

/// Face lattice of any of the five solids; the dodecahedron and icosahedron
/// are derived combinatorially from exact golden-ratio coordinates.
IncidenceComplex platonic_lattice(std::string_view name);

class IrrationalCoordinates : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact geometric solid. Only the tetrahedron, cube and octahedron have
/// rational coordinates; the other two throw IrrationalCoordinates.
GeometricComplex platonic(std::string_view name);

/// The Petrial of the cube, {6,3}_4: four skew hexagons on the cube's vertices.
GeometricComplex cube_petrial();

/// Three triangles sharing one edge, pairwise at 120 degrees.
GeometricComplex three_fold_book();

/// Triangulated torus with 4 vertices, 12 edges and 8 triangles.
IncidenceComplex torus_map_3_6_2_0();

/// The polygon with vertices r^i(o), r = a0 a1 (a1 applied first).
Polygon polygon_from_generators(const Isometry& a0, const Isometry& a1, const Vec3& o);

struct CatalogEntry {
  std::string name;
  std::string petrie_name;
  std::string construction;
  std::array<Isometry, 4> generators;
  GeometricFlag base;

  std::vector<Isometry> generator_list() const { return {generators.begin(), generators.end()}; }
};

/// Derives the base 2-face and facet from generators and base vertex.
CatalogEntry make_entry(std::string name, std::string petrie_name, std::string construction,
                        const std::array<Isometry, 4>& gens, const Vec3& base_vertex);

CatalogEntry cubical_tessellation();

/// q in {tetrahedron, octahedron, cube}.
CatalogEntry apeir(std::string_view q);

/// Generators (r0, r1 r3, r2, r3): same 2-skeleton, Petrial vertex-figure.
/// Involutive since r1 and r3 commute. Names are swapped.
CatalogEntry petrie_dual_4(const CatalogEntry& e);

/// The four pairs, each entry followed by its Petrie dual.
std::vector<CatalogEntry> all_eight();

/// Lookup by display name or alias such as "apeir(cube)".
CatalogEntry find_entry(std::string_view name);

constexpr int kDefaultWindow = 3;

OrbitComplex build_window(const CatalogEntry& e, int n = kDefaultWindow);

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct EntryVerification {
  std::string entry;
  std::vector<Check> checks;
  std::size_t flag_stabilizer_order = 0;
  std::vector<int> r_values;  // distinct 2-face counts over interior edges
  bool ok() const;
};

/// Full invariant suite on a window of the entry.
EntryVerification verify_entry(const CatalogEntry& e, const OrbitComplex& w);

/// Vertex-figure of the rank-4 window at the base vertex.
IncidenceComplex base_vertex_figure(const OrbitComplex& w);

/// Elements of the window's symmetry set fixing every face of the base flag
/// up to rank k (inclusive).
std::vector<Isometry> base_stabilizer(const OrbitComplex& w, int k);

}  // namespace polycx
