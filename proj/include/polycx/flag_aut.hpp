#pragma once

// Automorphism groups of finite incidence complexes, represented by their
// action on flags, and the distinguished subgroups R(-1), R(0), ..., R(n)
// relative to a base flag.

#include <optional>
#include <stdexcept>
#include <vector>

#include "polycx/complex.hpp"
#include "polycx/perm.hpp"

namespace polycx {

/// A face map: image index for every proper face, per rank.
using FaceMap = std::vector<std::vector<int>>;

/// All order-isomorphisms a -> b (at most `limit`), found by backtracking
/// over face images with cover-consistency pruning.
std::vector<FaceMap> isomorphisms(const IncidenceComplex& a, const IncidenceComplex& b,
                                  std::size_t limit = static_cast<std::size_t>(-1));

bool are_isomorphic(const IncidenceComplex& a, const IncidenceComplex& b);

/// Permutation group acting on the (canonically ordered) flags of a complex.
struct FlagPermutationGroup {
  std::vector<Flag> flags;
  std::vector<Perm> generators;

  std::size_t degree() const { return flags.size(); }
  EnumeratedGroup enumerate(std::size_t limit = kDefaultGroupLimit) const {
    return EnumeratedGroup(flags.size(), generators, limit);
  }
};

/// Flag permutation induced by a face map.
Perm flag_action(const std::vector<Flag>& fl, const FaceMap& map);

/// Checks that a flag permutation preserves j-adjacency for every j.
bool preserves_adjacency(const IncidenceComplex& c, const std::vector<Flag>& fl, const Perm& p);

FlagPermutationGroup automorphisms(const IncidenceComplex& c);

bool is_regular(const IncidenceComplex& c);

/// Number of flag orbits under the group.
std::size_t flag_orbit_count(const FlagPermutationGroup& g);

class NotFlagTransitive : public std::invalid_argument {
 public:
  NotFlagTransitive() : std::invalid_argument("group is not flag-transitive") {}
};

struct DistinguishedSystem {
  int rank = 0;
  std::size_t degree = 0;
  std::size_t base_index = 0;
  Flag base_flag;
  std::vector<Perm> group_generators;
  /// Generators of R(i) stored at position i + 1, for i = -1, ..., n.
  std::vector<std::vector<Perm>> generators;
  /// Orders of R(i), same indexing.
  std::vector<std::size_t> orders;
  std::size_t group_order = 0;

  const std::vector<Perm>& R(int i) const { return generators[i + 1]; }
  std::size_t order_of(int i) const { return orders[i + 1]; }
};

/// Requires g flag-transitive. Verifies that R(0..n-1) generate the group and
/// that every partial-flag stabilizer is generated by the matching R(i).
DistinguishedSystem distinguished_system(const IncidenceComplex& c, const FlagPermutationGroup& g,
                                         std::optional<std::size_t> base_index = std::nullopt);

/// |R(i) : R(-1)| - 1 equals the number of flags i-adjacent to the base flag,
/// with the subgroup orders recomputed from the stored generators.
bool adjacency_count_check(const DistinguishedSystem& ds, const IncidenceComplex& c);

}  // namespace polycx
