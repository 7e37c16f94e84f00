#pragma once

// Homomorphisms between trellises and isomorphism search.

#include <vector>

#include "trellis/classify.hpp"
#include "trellis/core.hpp"

namespace trellis {

/// A total map from a source carrier to a target carrier, indexed by source id.
struct TrellisMap {
  std::vector<Elem> image;

  Elem operator()(Elem x) const { return image.at(x); }
  friend bool operator==(const TrellisMap&, const TrellisMap&) = default;
  friend auto operator<=>(const TrellisMap&, const TrellisMap&) = default;
};

inline TrellisMap identity_map(std::size_t n) {
  TrellisMap m;
  for (std::size_t i = 0; i < n; ++i) m.image.push_back(static_cast<Elem>(i));
  return m;
}

inline bool is_bijective(const TrellisMap& m, std::size_t target_size) {
  if (m.image.size() != target_size) return false;
  Mask seen = 0;
  for (Elem v : m.image) {
    if (v >= target_size || has(seen, v)) return false;
    seen |= bit(v);
  }
  return true;
}

inline TrellisMap inverse(const TrellisMap& m) {
  TrellisMap inv;
  inv.image.assign(m.image.size(), 0);
  for (std::size_t i = 0; i < m.image.size(); ++i) inv.image.at(m.image[i]) = static_cast<Elem>(i);
  return inv;
}

inline CheckOutcome check_homomorphism(const Trellis& src, const Trellis& dst, const TrellisMap& m) {
  const auto n = static_cast<Elem>(src.size());
  if (m.image.size() != n) return CheckOutcome::fail("map-size", {});
  for (Elem v : m.image) {
    if (v >= dst.size()) return CheckOutcome::fail("map-range", {v});
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem lhs = m(src.meet(x, y));
      const Elem rhs = dst.meet(m(x), m(y));
      if (lhs != rhs) return CheckOutcome::fail("meet-preservation", {x, y}, {lhs, rhs});
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem lhs = m(src.join(x, y));
      const Elem rhs = dst.join(m(x), m(y));
      if (lhs != rhs) return CheckOutcome::fail("join-preservation", {x, y}, {lhs, rhs});
    }
  }
  return CheckOutcome::pass();
}

inline CheckOutcome check_isomorphism(const Trellis& src, const Trellis& dst, const TrellisMap& m) {
  if (src.size() != dst.size() || !is_bijective(m, dst.size())) return CheckOutcome::fail("bijectivity", {});
  return check_homomorphism(src, dst, m);
}

namespace detail {

struct ElementKey {
  int in_degree = 0;
  int out_degree = 0;
  ElementClass cls;

  friend bool operator==(const ElementKey&, const ElementKey&) = default;
};

// Invariants preserved by every isomorphism, used only to prune candidates.
inline std::vector<ElementKey> element_keys(const Trellis& t) {
  const Classification c = classify_elements(t);
  std::vector<ElementKey> keys(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto x = static_cast<Elem>(i);
    keys[i].in_degree = std::popcount(t.order().down_set(x));
    keys[i].out_degree = std::popcount(t.order().up_set(x));
    keys[i].cls = c.elements[i];
  }
  return keys;
}

}  // namespace detail

/// Every isomorphism X1 → X2, in lexicographic order of images.
inline std::vector<TrellisMap> find_isomorphisms(const Trellis& x1, const Trellis& x2) {
  std::vector<TrellisMap> out;
  const std::size_t n = x1.size();
  if (n != x2.size()) return out;
  if (x1.order().strict_pairs().size() != x2.order().strict_pairs().size()) return out;
  const auto k1 = detail::element_keys(x1);
  const auto k2 = detail::element_keys(x2);

  TrellisMap m;
  m.image.assign(n, 0);
  auto extend = [&](auto&& self, std::size_t i, Mask used) -> void {
    if (i == n) {
      if (check_isomorphism(x1, x2, m)) out.push_back(m);
      return;
    }
    const auto x = static_cast<Elem>(i);
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = static_cast<Elem>(j);
      if (has(used, v) || !(k1[i] == k2[j])) continue;
      bool consistent = true;
      for (Elem u = 0; u < x && consistent; ++u) {
        consistent = x1.leq(u, x) == x2.leq(m(u), v) && x1.leq(x, u) == x2.leq(v, m(u));
      }
      if (!consistent) continue;
      m.image[i] = v;
      self(self, i + 1, used | bit(v));
    }
  };
  extend(extend, 0, 0);
  return out;
}

/// T^ρ(x,y) = ρ⁻¹(T(ρx, ρy)) for an operation T on X2 and ρ : X1 → X2.
inline OpTable transport(const OpTable& op, const Trellis& x1, const Trellis& x2, const TrellisMap& rho) {
  if (!check_isomorphism(x1, x2, rho)) throw Error(ErrorKind::kNotAnIsomorphism, "map is not an isomorphism");
  if (op.size() != x2.size()) throw Error(ErrorKind::kBadIndex, "operation does not match target carrier");
  const TrellisMap back = inverse(rho);
  const auto n = static_cast<Elem>(x1.size());
  OpTable out(n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) out.set(x, y, back(op(rho(x), rho(y))));
  }
  return out;
}

}  // namespace trellis
