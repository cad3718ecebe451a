#include <algorithm>

#include "polycx/euclid.hpp"

namespace polycx {

namespace {

Lattice invariant_hull(Lattice L, const std::vector<Isometry>& reps) {
  for (;;) {
    std::vector<Vec3> v = L.basis();
    for (const auto& r : reps)
      for (const auto& b : L.basis()) v.push_back(r.linear * b);
    Lattice next = Lattice::from_vectors(v);
    if (next == L) return L;
    L = std::move(next);
  }
}

}  // namespace

CrystallographicClosure CrystallographicClosure::of(const std::vector<Isometry>& generators,
                                                    std::size_t max_point_group) {
  CrystallographicClosure C;
  C.representatives = {Isometry::identity()};
  auto& reps = C.representatives;
  auto find_linear = [&](const Mat3& m) -> std::optional<std::size_t> {
    for (std::size_t j = 0; j < reps.size(); ++j)
      if (reps[j].linear == m) return j;
    return std::nullopt;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < reps.size() && !changed; ++i)
      for (const auto& s : generators) {
        Isometry p = s * reps[i];
        auto j = find_linear(p.linear);
        if (!j) {
          // a rational orthogonal map of finite order has an integer trace
          if (!(p.linear(0, 0) + p.linear(1, 1) + p.linear(2, 2)).is_integer())
            throw NonDiscreteGroup("linear part of infinite order");
          reps.push_back({p.linear, C.lattice.reduce(p.translation)});
          if (reps.size() > max_point_group)
            throw NonDiscreteGroup("point group exceeds " + std::to_string(max_point_group) + " elements");
          continue;
        }
        const Vec3 d = p.translation - reps[*j].translation;
        if (C.lattice.contains(d)) continue;
        std::vector<Vec3> v = C.lattice.basis();
        v.push_back(d);
        C.lattice = Lattice::from_vectors(v);
        changed = true;
        break;
      }
    Lattice hull = invariant_hull(C.lattice, reps);
    if (!(hull == C.lattice)) {
      C.lattice = std::move(hull);
      changed = true;
    }
    if (changed)
      for (auto& r : reps) r.translation = C.lattice.reduce(r.translation);
  }
  return C;
}

bool CrystallographicClosure::contains(const Isometry& g) const {
  for (const auto& r : representatives)
    if (r.linear == g.linear) return lattice.contains(g.translation - r.translation);
  return false;
}

Facet Facet::from_group(const std::vector<Isometry>& generators, const Polygon& base_face) {
  auto C = CrystallographicClosure::of(generators);
  Facet f;
  f.lattice_ = C.lattice;
  for (const auto& r : C.representatives) f.faces_.push_back(canonical_mod(base_face.transformed(r), f.lattice_));
  f.finish();
  return f;
}

Facet Facet::from_faces(const std::vector<Polygon>& faces) {
  Facet f;
  f.faces_ = faces;
  f.finish();
  return f;
}

Facet Facet::from_parts(const Lattice& lattice, const std::vector<Polygon>& faces) {
  Facet f;
  f.lattice_ = lattice;
  for (const auto& p : faces) f.faces_.push_back(canonical_mod(p, lattice));
  f.finish();
  return f;
}

void Facet::finish() {
  std::sort(faces_.begin(), faces_.end(), [](const Polygon& a, const Polygon& b) { return a.key() < b.key(); });
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  key_.data = {Rational(3), Rational(lattice_.rank())};
  for (const auto& b : lattice_.basis()) key_.data.insert(key_.data.end(), {b.x, b.y, b.z});
  key_.data.push_back(Rational(static_cast<std::int64_t>(faces_.size())));
  for (const auto& p : faces_) {
    key_.data.push_back(Rational(static_cast<std::int64_t>(p.key().data.size())));
    key_.data.insert(key_.data.end(), p.key().data.begin(), p.key().data.end());
  }
}

bool Facet::contains_face(const Polygon& p) const {
  const Polygon c = canonical_mod(p, lattice_);
  return std::binary_search(faces_.begin(), faces_.end(), c,
                            [](const Polygon& a, const Polygon& b) { return a.key() < b.key(); });
}

Facet Facet::transformed(const Isometry& g) const {
  Facet f;
  f.lattice_ = lattice_.transformed(g.linear);
  for (const auto& p : faces_) f.faces_.push_back(canonical_mod(p.transformed(g), f.lattice_));
  f.finish();
  return f;
}

}  // namespace polycx
