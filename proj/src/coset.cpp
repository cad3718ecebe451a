#include "polycx/coset.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace polycx {

SubgroupSystem system_from(const DistinguishedSystem& ds) {
  SubgroupSystem s;
  s.rank = ds.rank;
  s.degree = ds.degree;
  s.group = ds.group_generators;
  s.subgroups = ds.generators;
  return s;
}

CosetContext::CosetContext(const SubgroupSystem& s, std::size_t limit)
    : s_(&s), limit_(limit), group_(s.degree, s.group, limit) {
  if (static_cast<int>(s.subgroups.size()) != s.rank + 2)
    throw std::invalid_argument("subgroup system needs R(-1)..R(n)");
  cache_.resize(std::size_t{1} << (s.rank + 2));
}

unsigned CosetContext::mask_of(const std::vector<int>& I) const {
  unsigned m = 0;
  for (int i : I) {
    if (i < -1 || i > s_->rank) throw std::out_of_range("subgroup index out of range");
    m |= 1u << (i + 1);
  }
  return m;
}

const EnumeratedGroup& CosetContext::lambda(const std::vector<int>& I) {
  const unsigned m = mask_of(I);
  auto& slot = cache_[m];
  if (!slot) {
    std::vector<Perm> gens = s_->R(-1);
    for (int i = -1; i <= s_->rank; ++i)
      if (m >> (i + 1) & 1u) gens.insert(gens.end(), s_->R(i).begin(), s_->R(i).end());
    slot.emplace(s_->degree, gens, limit_);
  }
  return *slot;
}

std::vector<std::string> CosetContext::well_formedness() {
  std::vector<std::string> issues;
  const int n = s_->rank;
  for (int i = -1; i <= n; ++i)
    for (const auto& g : s_->R(i))
      if (!group_.contains(g)) issues.push_back("generator of R(" + std::to_string(i) + ") lies outside the group");
  EnumeratedGroup bottom(s_->degree, s_->R(-1), limit_);
  EnumeratedGroup top(s_->degree, s_->R(n), limit_);
  bool same = bottom.order() == top.order() &&
              std::all_of(top.elements().begin(), top.elements().end(),
                          [&](const Perm& p) { return bottom.contains(p); });
  if (!same) issues.push_back("R(-1) and R(n) differ");
  for (int i = 0; i < n; ++i) {
    EnumeratedGroup ri(s_->degree, s_->R(i), limit_);
    for (const auto& g : s_->R(-1))
      if (!ri.contains(g)) {
        issues.push_back("R(-1) is not contained in R(" + std::to_string(i) + ")");
        break;
      }
  }
  return issues;
}

SystemCheck CosetContext::check_products() {
  const int n = s_->rank;
  for (int i = -1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) {
      const auto& a = lambda({i});
      const auto& b = lambda({j});
      std::unordered_set<Perm, PermHash> ab, ba;
      for (const auto& x : a.elements())
        for (const auto& y : b.elements()) {
          ab.insert(compose(x, y));
          ba.insert(compose(y, x));
        }
      for (const auto& p : ab)
        if (!ba.count(p))
          return {false, i, j, {}, {}, p, "element of R(i)R(j) missing from R(j)R(i)"};
      for (const auto& p : ba)
        if (!ab.count(p))
          return {false, i, j, {}, {}, p, "element of R(j)R(i) missing from R(i)R(j)"};
    }
  return {};
}

SystemCheck CosetContext::check_intersection() {
  // Lambda_I only depends on I minus {-1, n}, so subsets of {0..n-1} cover
  // every pair exactly.
  const int n = s_->rank;
  const unsigned full = (1u << n);
  auto members = [](unsigned m, int n_) {
    std::vector<int> v;
    for (int i = 0; i < n_; ++i)
      if (m >> i & 1u) v.push_back(i);
    return v;
  };
  for (unsigned a = 0; a < full; ++a)
    for (unsigned b = a; b < full; ++b) {
      auto I = members(a, n), J = members(b, n), IJ = members(a & b, n);
      const auto& gi = lambda(I);
      const auto& gj = lambda(J);
      const auto& gij = lambda(IJ);
      const auto& small = gi.order() <= gj.order() ? gi : gj;
      const auto& other = gi.order() <= gj.order() ? gj : gi;
      for (const auto& p : small.elements())
        if (other.contains(p) && !gij.contains(p))
          return {false, 0, 0, I, J, p, "element of Lambda_I and Lambda_J outside Lambda_(I cap J)"};
    }
  return {};
}

SystemCheck check_products(const SubgroupSystem& s, std::size_t limit) {
  CosetContext ctx(s, limit);
  return ctx.check_products();
}

SystemCheck check_intersection(const SubgroupSystem& s, std::size_t limit) {
  CosetContext ctx(s, limit);
  return ctx.check_intersection();
}

namespace {

std::vector<int> complement_of(int i, int n) {
  std::vector<int> v;
  for (int k = -1; k <= n; ++k)
    if (k != i) v.push_back(k);
  return v;
}

std::vector<int> range_of(int lo, int hi) {
  std::vector<int> v;
  for (int k = lo; k <= hi; ++k) v.push_back(k);
  return v;
}

}  // namespace

IncidenceComplex complex_from_system(const SubgroupSystem& s, std::size_t limit) {
  CosetContext ctx(s, limit);
  auto issues = ctx.well_formedness();
  if (!issues.empty()) throw ConstructionRefused("malformed subgroup system: " + issues.front());
  if (!ctx.check_products().ok) throw ConstructionRefused("product condition fails");
  if (!ctx.check_intersection().ok) throw ConstructionRefused("intersection condition fails");

  const int n = s.rank;
  const auto& G = ctx.group();
  const std::size_t order = G.order();
  // coset[i][g] = index of the i-face F(i)g
  std::vector<std::vector<int>> coset(n, std::vector<int>(order, -1));
  std::vector<int> counts(n, 0);
  for (int i = 0; i < n; ++i) {
    const auto& H = ctx.lambda(complement_of(i, n));
    for (std::size_t g = 0; g < order; ++g) {
      if (coset[i][g] != -1) continue;
      const int id = counts[i]++;
      for (const auto& h : H.elements()) coset[i][G.index_of(compose(h, G.elements()[g]))] = id;
    }
  }
  std::vector<std::vector<std::vector<int>>> covers(n);
  for (int i = 0; i < n; ++i) covers[i].assign(counts[i], {});
  for (int i = 1; i < n; ++i)
    for (std::size_t g = 0; g < order; ++g) covers[i][coset[i][g]].push_back(coset[i - 1][g]);
  return IncidenceComplex::from_covers(n, std::move(covers));
}

bool incidence_test(CosetContext& ctx, int i, const Perm& phi, int j, const Perm& psi) {
  const int n = ctx.system().rank;
  if (i > j) throw std::invalid_argument("incidence test requires i <= j");
  const Perm delta = compose(phi, inverse(psi));

  // membership form: phi psi^-1 in Lambda_{i+1..n} Lambda_{-1..j-1}
  const auto& upper = ctx.lambda(range_of(i + 1, n));
  const auto& lower = ctx.lambda(range_of(-1, j - 1));
  bool member = false;
  for (const auto& a : upper.elements()) {
    if (lower.contains(compose(inverse(a), delta))) {
      member = true;
      break;
    }
  }

  // coset form: Lambda_{D\i} phi meets Lambda_{D\j} psi
  const auto& hi = ctx.lambda(complement_of(i, n));
  const auto& hj = ctx.lambda(complement_of(j, n));
  bool meets = false;
  for (const auto& h : hi.elements()) {
    if (hj.contains(compose(h, delta))) {
      meets = true;
      break;
    }
  }
  if (member != meets) throw std::logic_error("incidence forms disagree");
  return member;
}

bool round_trip(const IncidenceComplex& c) {
  auto aut = automorphisms(c);
  auto ds = distinguished_system(c, aut);
  auto sys = system_from(ds);
  auto rebuilt = complex_from_system(sys);
  return are_isomorphic(rebuilt, c);
}

}  // namespace polycx
