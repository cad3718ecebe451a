#pragma once

// Incidence complexes stored as Hasse diagrams: every proper face records the
// faces of one rank lower that it covers. The minimal face (rank -1) and the
// maximal face (rank n) are implicit.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polycx {

/// One line of input: a proper face and the ids of the faces it covers.
struct FaceRecord {
  int rank = 0;
  std::string id;
  std::vector<std::string> covers;
};

/// A face addressed by rank and index within that rank. Rank -1 and rank n
/// denote the improper faces; their index is always 0.
struct FaceRef {
  int rank = 0;
  int index = 0;
  friend bool operator==(const FaceRef&, const FaceRef&) = default;
  friend auto operator<=>(const FaceRef&, const FaceRef&) = default;
};

/// Proper faces of a maximal chain, entry j holding the index of the j-face.
struct Flag {
  std::vector<int> faces;
  friend bool operator==(const Flag&, const Flag&) = default;
  friend auto operator<=>(const Flag&, const Flag&) = default;
};

struct FlagHash {
  std::size_t operator()(const Flag& f) const noexcept;
};

class IncidenceComplex {
 public:
  IncidenceComplex() = default;

  /// Builds from text-level records. Dangling or duplicate ids do not throw;
  /// they are kept as structural issues and reported by validate_complex.
  static IncidenceComplex from_records(int rank, const std::vector<FaceRecord>& records);

  /// Builds from index-level covers: covers[r][i] lists rank r-1 indices
  /// covered by face i of rank r. Ids default to the decimal index.
  static IncidenceComplex from_covers(int rank, std::vector<std::vector<std::vector<int>>> covers,
                                      std::vector<std::vector<std::string>> ids = {});

  int rank() const { return rank_; }
  std::size_t face_count(int r) const;
  std::size_t total_faces() const;
  const std::string& id(int r, int i) const { return ids_[r][i]; }
  std::string label(FaceRef f) const;

  /// Rank r-1 faces covered by face (r, i). Empty for vertices.
  const std::vector<int>& covers(int r, int i) const { return down_[r][i]; }
  /// Rank r+1 faces covering face (r, i). Empty for facets.
  const std::vector<int>& covered_by(int r, int i) const { return up_[r][i]; }

  std::optional<int> find(int r, std::string_view id) const;

  bool well_formed() const { return structural_.empty(); }
  const std::vector<std::string>& structural_issues() const { return structural_; }

  /// F <= G in the order generated by the covering relation.
  bool leq(FaceRef a, FaceRef b) const;
  /// All proper faces of rank r below (r >= 0) the given face.
  std::vector<int> faces_below(FaceRef top, int r) const;
  /// All proper faces of rank r above the given face.
  std::vector<int> faces_above(FaceRef bottom, int r) const;

  std::vector<FaceRecord> records() const;

  friend bool operator==(const IncidenceComplex&, const IncidenceComplex&) = default;

 private:
  void index_upward();

  int rank_ = 0;
  std::vector<std::vector<std::string>> ids_;
  std::vector<std::vector<std::vector<int>>> down_;
  std::vector<std::vector<std::vector<int>>> up_;
  std::vector<std::string> structural_;
};

enum class Axiom { Structural, FlagLength, AtLeastTwo, StronglyFlagConnected };

std::string_view axiom_name(Axiom a);

struct Violation {
  Axiom axiom;
  std::string detail;
  std::vector<std::string> witness;
};

struct ValidationReport {
  bool passed = true;
  std::vector<Violation> violations;
  bool has(Axiom a) const;
};

/// One incident pair (F of rank j-1, G of rank j+1) with its middle count.
struct MiddlePair {
  int j = 0;
  FaceRef lower;
  FaceRef upper;
  int count = 0;
};

/// Every incident pair whose ranks differ by two, with the number of j-faces
/// strictly between them.
std::vector<MiddlePair> middle_pairs(const IncidenceComplex& c);

ValidationReport validate_complex(const IncidenceComplex& c);

/// All flags in lexicographic order of face indices (faces are sorted by id).
std::vector<Flag> flags(const IncidenceComplex& c);

/// Flags through a given proper face.
std::vector<Flag> flags_through(const IncidenceComplex& c, FaceRef face);

std::vector<Flag> adjacent_flags(const IncidenceComplex& c, const Flag& f, int j);

/// Section G/F with ranks shifted so that F becomes the minimal face.
IncidenceComplex section(const IncidenceComplex& c, FaceRef lower, FaceRef upper);

IncidenceComplex vertex_figure(const IncidenceComplex& c, int vertex);

IncidenceComplex skeleton(const IncidenceComplex& c, int k);

std::optional<std::vector<int>> uniform_middle_count(const IncidenceComplex& c);

bool is_polytope(const IncidenceComplex& c);

/// Connected components of the flag graph; returns the component id per flag.
std::vector<int> flag_components(const IncidenceComplex& c, const std::vector<Flag>& fl);

}  // namespace polycx
