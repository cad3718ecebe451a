#include "polycx/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>

namespace polycx {

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p) h = (h ^ x) * 1099511628211ull;
  return h;
}

Perm identity_perm(std::size_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

Perm inverse(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<std::uint32_t>(i);
  return out;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

std::string cycle_string(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ",";
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Perm parse_cycles(const std::string& text, std::size_t degree) {
  Perm p = identity_perm(degree);
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle text: " + text);
    ++i;
    std::vector<std::size_t> cycle;
    while (true) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      if (i >= text.size()) throw std::invalid_argument("unterminated cycle: " + text);
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw std::invalid_argument("bad point in cycle text: " + text);
      std::size_t pt = std::stoul(text.substr(i, j - i));
      if (pt < 1 || pt > degree) throw std::invalid_argument("cycle point out of range 1.." + std::to_string(degree));
      if (used[pt - 1]) throw std::invalid_argument("point repeated in cycle text: " + text);
      used[pt - 1] = 1;
      cycle.push_back(pt - 1);
      i = j;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p[cycle[k]] = static_cast<std::uint32_t>(cycle[(k + 1) % cycle.size()]);
    skip_ws();
  }
  return p;
}

EnumeratedGroup::EnumeratedGroup(std::size_t degree, const std::vector<Perm>& generators, std::size_t limit)
    : degree_(degree) {
  for (const auto& g : generators)
    if (g.size() != degree) throw std::invalid_argument("generator degree mismatch");
  Perm id = identity_perm(degree);
  elements_.push_back(id);
  index_.emplace(id, 0);
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    for (const auto& g : generators) {
      Perm next = compose(elements_[k], g);
      if (index_.count(next)) continue;
      if (elements_.size() >= limit) throw GroupTooLarge(limit);
      index_.emplace(next, elements_.size());
      elements_.push_back(std::move(next));
    }
  }
}

EnumeratedGroup EnumeratedGroup::from_elements(std::size_t degree, std::vector<Perm> elements) {
  EnumeratedGroup g;
  g.degree_ = degree;
  g.elements_ = std::move(elements);
  for (std::size_t i = 0; i < g.elements_.size(); ++i) g.index_.emplace(g.elements_[i], i);
  return g;
}

std::vector<Perm> EnumeratedGroup::small_generators() const {
  std::vector<Perm> gens;
  EnumeratedGroup cur(degree_, gens);
  for (const auto& e : elements_) {
    if (cur.order() == elements_.size()) break;
    if (cur.contains(e)) continue;
    gens.push_back(e);
    cur = EnumeratedGroup(degree_, gens);
  }
  return gens;
}

std::vector<std::uint32_t> orbit(std::uint32_t point, const std::vector<Perm>& gens) {
  std::vector<std::uint32_t> out{point};
  if (gens.empty()) return out;
  std::vector<char> seen(gens.front().size(), 0);
  seen[point] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens) {
      auto y = g[out[k]];
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polycx
