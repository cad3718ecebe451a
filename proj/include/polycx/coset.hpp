#pragma once

// Coset geometries of subgroup systems R(-1), R(0), ..., R(n): the product
// and intersection conditions, and the complex whose i-faces are right
// cosets of Lambda_{ {-1..n} \ {i} }.

#include <optional>
#include <string>
#include <vector>

#include "polycx/complex.hpp"
#include "polycx/flag_aut.hpp"
#include "polycx/perm.hpp"

namespace polycx {

struct SubgroupSystem {
  int rank = 0;
  std::size_t degree = 0;
  std::vector<Perm> group;
  /// Generators of R(i) at position i + 1 for i = -1, ..., n.
  std::vector<std::vector<Perm>> subgroups;

  const std::vector<Perm>& R(int i) const { return subgroups[i + 1]; }
  std::vector<Perm>& R(int i) { return subgroups[i + 1]; }
};

SubgroupSystem system_from(const DistinguishedSystem& ds);

/// Outcome of a product or intersection check. On failure the witness is a
/// group element lying in one side only.
struct SystemCheck {
  bool ok = true;
  int i = 0, j = 0;             // product check: offending pair
  std::vector<int> I, J;        // intersection check: offending index sets
  std::optional<Perm> witness;
  std::string detail;
};

/// Subgroups of the system enumerated once; Lambda_I cached per index set.
class CosetContext {
 public:
  explicit CosetContext(const SubgroupSystem& s, std::size_t limit = kDefaultGroupLimit);

  const SubgroupSystem& system() const { return *s_; }
  const EnumeratedGroup& group() const { return group_; }
  /// Lambda_I for I a subset of {-1, ..., n}; the empty set gives R(-1).
  const EnumeratedGroup& lambda(const std::vector<int>& I);

  /// Structural problems: R(-1) != R(n), R(-1) not below R(i), subgroup
  /// generators outside the group. Empty when well formed.
  std::vector<std::string> well_formedness();

  SystemCheck check_products();
  SystemCheck check_intersection();

 private:
  unsigned mask_of(const std::vector<int>& I) const;

  const SubgroupSystem* s_;
  std::size_t limit_;
  EnumeratedGroup group_;
  std::vector<std::optional<EnumeratedGroup>> cache_;
};

SystemCheck check_products(const SubgroupSystem& s, std::size_t limit = kDefaultGroupLimit);
SystemCheck check_intersection(const SubgroupSystem& s, std::size_t limit = kDefaultGroupLimit);

class ConstructionRefused : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Refuses (throws ConstructionRefused) unless both checks pass.
IncidenceComplex complex_from_system(const SubgroupSystem& s, std::size_t limit = kDefaultGroupLimit);

/// Is F(i)phi <= F(j)psi? Evaluates the product-membership form and the
/// coset-intersection form; a disagreement throws std::logic_error.
bool incidence_test(CosetContext& ctx, int i, const Perm& phi, int j, const Perm& psi);

/// Distinguished system of the full automorphism group, coset complex, and
/// an isomorphism test against the input.
bool round_trip(const IncidenceComplex& c);

}  // namespace polycx
