#pragma once

// Geometric complexes in E^3: exact realizations of incidence complexes,
// windowed orbits of crystallographic generator sets, and the geometric
// queries used by the audit (mirrors, angles, discreteness).

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "polycx/complex.hpp"
#include "polycx/euclid.hpp"

namespace polycx {

struct Box {
  Vec3 lo, hi;
  bool contains(const Vec3& p) const;
  /// The box [-n, n+1]^3.
  static Box symmetric(int n);
  Box expanded(const Rational& margin) const;
};

class GeometricComplex {
 public:
  IncidenceComplex abstract;
  std::vector<Vec3> coords;                      // rank 0
  std::vector<std::pair<Vec3, Vec3>> edges;      // rank 1, endpoints (may leave the window)
  std::vector<Polygon> polygons;                 // rank 2, when rank >= 3
  std::vector<std::optional<Facet>> facets;      // rank 3, when rank >= 4
  std::optional<Box> window;
  std::vector<std::vector<char>> interior;       // per rank

  int rank() const { return abstract.rank(); }
  bool is_interior(int r, int i) const { return interior[r][i] != 0; }
  std::size_t interior_count(int r) const;

  /// Canonical geometric key; nullopt for a facet without a descriptor.
  std::optional<FaceKey> face_key(int r, int i) const;
  /// Faces of rank r with the given key (more than one means duplicates).
  const std::vector<int>& lookup(int r, const FaceKey& key) const;
  /// Points of the rank-0 faces below a face, as stored.
  std::vector<Vec3> face_points(int r, int i) const;
  void build_index();

 private:
  std::vector<std::unordered_map<FaceKey, std::vector<int>, FaceKeyHash>> index_;
};

struct FaithfulnessReport {
  bool ok = true;
  int rank = -1;              // rank of the offending pair
  std::string first, second;  // their ids
};

/// No two distinct (j+1)-faces may have the same set of j-faces.
FaithfulnessReport faithfulness_check(const IncidenceComplex& c);

class RealizationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Builds the geometric faces rank by rank without the faithfulness test;
/// used for deliberately degenerate fixtures. Every face is interior.
GeometricComplex assemble(const IncidenceComplex& c, const std::vector<Vec3>& coords);

/// Full realization: beta injective, faithful complex, proper edges and
/// polygons. Throws RealizationError.
GeometricComplex realize(const IncidenceComplex& c, const std::vector<Vec3>& coords);

enum class PolygonClass { PlanarFinite, SkewFinite, PlanarZigzag, OtherInfinite, Indeterminate };
std::string_view polygon_class_name(PolygonClass c);

PolygonClass classify_polygon(const Polygon& p);
PolygonClass classify_polygon(const GeometricComplex& g, int face2);

/// True iff t maps every interior face onto a face of g. With a window, an
/// interior face whose image has no vertex in the window is not checked.
bool is_symmetry(const GeometricComplex& g, const Isometry& t);

struct FaceMirror {
  int face = 0;
  Isometry reflection;
};

struct FaceMirrorReport {
  std::vector<FaceMirror> mirrors;
  std::vector<int> skipped_nonplanar;
};

/// Reflection in the plane of a planar polygon.
std::optional<Isometry> plane_reflection(const Polygon& p);

FaceMirrorReport face_mirrors(const GeometricComplex& g);

/// Coincident covers both 0 and 180 degrees: the two faces span one plane.
enum class AngleClass { Coincident, Deg60, Deg90, Deg120, Other };
std::string_view angle_class_name(AngleClass c);

struct DihedralAngle {
  int face_a = 0, face_b = 0;
  AngleClass cls = AngleClass::Other;
  Rational signed_cos2;  // sign(cos) * cos^2
};

/// Classifies the angle between half-plane directions b1, b2 (both
/// perpendicular to a common edge).
DihedralAngle half_plane_angle(const Vec3& b1, const Vec3& b2);

/// Half-plane direction of a polygon at the edge (v0, v1): the component of
/// the other neighbour of v0 perpendicular to the edge.
Vec3 half_plane_direction(const Polygon& p, const Vec3& v0, const Vec3& v1);

/// Pairwise angles between the 2-faces at an edge. Throws on a skew face.
std::vector<DihedralAngle> dihedral_angles_at_edge(const GeometricComplex& g, int edge);

struct DiscretenessReport {
  bool ok = true;
  /// Per probe, the number of faces of each rank with a vertex in the probe.
  std::vector<std::vector<std::size_t>> counts;
  std::vector<std::pair<int, int>> duplicates;      // (rank, index) of repeated faces
};

DiscretenessReport discreteness_check(const GeometricComplex& g, const std::vector<Box>& probes,
                                      std::size_t budget = 1'000'000);

// ------------------------------------------------------------------ orbits

class FaceBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default face budget, overridable through POLYCX_FACE_BUDGET.
std::size_t default_face_budget();

/// Base faces of a geometric flag. The polygon is absent for rank 2, the
/// facet absent for rank 3.
struct GeometricFlag {
  Vec3 vertex;
  Vec3 edge_end;
  std::optional<Polygon> face;
  std::optional<Facet> facet;
  int rank() const { return 2 + (face ? 1 : 0) + (facet ? 1 : 0); }
};

struct SymmetrySet {
  std::vector<Isometry> generators;
  /// Group elements (words in the generators) mapping the base vertex into
  /// the window, with the base flag's image as face indices.
  std::vector<Isometry> elements;
  std::vector<Flag> images;
};

struct OrbitComplex {
  GeometricComplex complex;
  SymmetrySet symmetries;
  Flag base_flag;
};

/// Breadth-first closure of the base flag under the generators, keeping every
/// flag whose vertex lies in the window. Faces are identified by exact keys;
/// interior faces are marked by the two-ring rule.
OrbitComplex orbit_complex(const std::vector<Isometry>& generators, const GeometricFlag& base, const Box& window,
                           std::size_t face_budget = default_face_budget());

/// Marks interior faces: a vertex is interior when it and every neighbour
/// have all their edges complete inside the window; an edge when both ends
/// are interior; higher faces when they contain an interior vertex.
void mark_interior(GeometricComplex& g);

/// Axiom checks restricted to interior faces: flag length, at least two
/// middle faces over interior lower faces, and strong flag-connectivity of
/// every interior vertex-figure.
ValidationReport validate_interior(const GeometricComplex& g);

/// Conditions (a)-(c) for rank-3 complexes on the interior: connected edge
/// graph, connected vertex-figure graphs (underlying simple graph), every
/// interior edge in at least two 2-faces.
struct PolygonalReport {
  bool edge_graph_connected = true;
  bool vertex_figures_connected = true;
  bool edges_in_two_faces = true;
  int max_multiplicity = 1;  // largest vertex-figure edge multiplicity seen
  bool ok() const { return edge_graph_connected && vertex_figures_connected && edges_in_two_faces; }
};

/// Every generator is a symmetry of the window and every flag through an
/// interior vertex is the image of the base flag under a window element.
bool windowed_flag_transitive(const OrbitComplex& oc);

PolygonalReport polygonal_conditions(const GeometricComplex& g);

/// Number of 2-faces containing each interior edge.
std::vector<int> interior_edge_face_counts(const GeometricComplex& g);

/// Rank-3 complex of vertices, edges and 2-faces, keeping geometry and window.
GeometricComplex two_skeleton(const GeometricComplex& g);

/// Exact equality of the interior-relevant geometric face sets of two
/// windowed complexes up to rank k (keys and incidences).
bool same_faces(const GeometricComplex& a, const GeometricComplex& b, int max_rank);

}  // namespace polycx
