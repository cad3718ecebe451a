#pragma once

// The rank-4/rank-5 argument as a pipeline on rank-3 geometric complexes:
// planarity, face mirrors, the distinguished subgroups of the 2-skeleton,
// angle classes at an edge, and the enumeration of rank-4 extensions.

#include <optional>
#include <string>
#include <vector>

#include "polycx/catalog.hpp"
#include "polycx/geometric.hpp"

namespace polycx {

enum class Verdict { NoRank4Extension, Rank4Candidates, InconsistentInput };
std::string_view verdict_name(Verdict v);

enum class EdgeStabilizerShape { Trivial, Order2, Cyclic3, Dihedral3, Other };
std::string_view edge_shape_name(EdgeStabilizerShape s);

/// A rank-3 flag (vertex, edge, 2-face) by face indices.
struct BaseFlag3 {
  int vertex = 0, edge = 0, face = 0;
};

/// A rank-4 extension found by the audit.
struct Rank4Candidate {
  std::array<Isometry, 4> generators;
  std::vector<FaceKey> facets;  // sorted keys of the window's facets
  int facet_r3 = 0;
  bool facets_finite = false;
  std::size_t facets_at_base_vertex = 0;
};

struct AuditReport {
  bool planar_faces = false;
  bool face_mirrors_found = false;
  std::optional<Isometry> rho3;
  std::size_t flag_stabilizer_order = 0;
  std::optional<int> r;
  std::optional<int> facet_r3;
  std::vector<AngleClass> edge_angle_classes;
  std::vector<Rational> edge_angle_values;
  EdgeStabilizerShape edge_stabilizer_shape = EdgeStabilizerShape::Other;
  std::vector<std::size_t> subgroup_orders;  // |R(-1)|, |R(0)|, |R(1)|, |R(2)|
  Verdict verdict = Verdict::InconsistentInput;
  std::vector<Rank4Candidate> candidates;
  std::vector<std::string> notes;
  bool window_certified = false;  // claims rest on interior faces of a window
};

class AuditError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Picks an interior flag, preferring the vertex nearest the window centre.
BaseFlag3 choose_base_flag(const GeometricComplex& g);

/// Isometries mapping flag a to flag b that are symmetries of g (at most two:
/// they agree on the flag's frame up to the sign of the normal).
std::vector<Isometry> flag_maps(const GeometricComplex& g, const BaseFlag3& a, const BaseFlag3& b);

/// Flags of a rank-3 complex i-adjacent to f.
std::vector<BaseFlag3> adjacent_flags3(const GeometricComplex& g, const BaseFlag3& f, int i);

/// R(i) of the symmetry group at the base flag, i = -1, 0, 1, 2, as element lists.
std::vector<std::vector<Isometry>> distinguished_isometries(const GeometricComplex& g, const BaseFlag3& base);

/// Throws AuditError when the window has no interior flag.
AuditReport audit(const GeometricComplex& g);

struct Rank5Result {
  bool obstructed = false;
  std::size_t stabilizer_order = 0;
  bool planar_base_face = true;
  std::string branch;
};

/// Pointwise stabilizer of the base {F0, F1, F2} in the entry's windowed
/// symmetry set; order 2 means R3 = R4 = <r3> would be forced.
Rank5Result rank5_obstruction(const CatalogEntry& e, int window = kDefaultWindow);

/// Same test on a rank-3 complex, using its own symmetries.
Rank5Result rank5_obstruction(const GeometricComplex& g);

struct DihedralResult {
  bool excluded = false;
  std::string branch;  // "dihedral", "connectedness" or "admissible"
};

/// Requires r in {3,4} and 2 <= r3 <= r.
DihedralResult dihedral_obstruction(int r, int r3, const std::vector<AngleClass>& classes);

/// 2-faces per interior edge inside the section of a facet; throws with the
/// multiset when counts are not uniform.
int facet_r3(const GeometricComplex& k, int facet);

}  // namespace polycx
