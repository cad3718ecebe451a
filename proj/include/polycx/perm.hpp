#pragma once

// Permutations of {0, ..., d-1} and finite permutation groups given by
// generators. Products compose left to right: (a * b)(x) = b(a(x)).

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace polycx {

using Perm = std::vector<std::uint32_t>;

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

Perm identity_perm(std::size_t degree);
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
bool is_identity(const Perm& p);

/// Disjoint-cycle text with 1-based points, "()" for the identity.
std::string cycle_string(const Perm& p);
/// Parses disjoint-cycle text such as "(1,2)(3,4,5)" or "(1 2)(3 4 5)".
Perm parse_cycles(const std::string& text, std::size_t degree);

class GroupTooLarge : public std::runtime_error {
 public:
  explicit GroupTooLarge(std::size_t limit)
      : std::runtime_error("group order exceeds enumeration limit " + std::to_string(limit)) {}
};

inline constexpr std::size_t kDefaultGroupLimit = 1'000'000;

/// A fully enumerated finite group with O(1) membership.
class EnumeratedGroup {
 public:
  EnumeratedGroup() = default;
  EnumeratedGroup(std::size_t degree, const std::vector<Perm>& generators,
                  std::size_t limit = kDefaultGroupLimit);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  bool contains(const Perm& p) const { return index_.count(p) != 0; }
  std::size_t index_of(const Perm& p) const { return index_.at(p); }

  /// A small generating set picked greedily from the elements.
  std::vector<Perm> small_generators() const;

  static EnumeratedGroup from_elements(std::size_t degree, std::vector<Perm> elements);

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
};

/// Orbit of a point under the group generated by gens.
std::vector<std::uint32_t> orbit(std::uint32_t point, const std::vector<Perm>& gens);

}  // namespace polycx
