#pragma once

// Special elements of a trellis (transitive, associative, atoms, coatoms)
// and non-trivial cycles of the pseudo-order.

#include <optional>
#include <vector>

#include "trellis/core.hpp"

namespace trellis {

struct ElementClass {
  bool right_transitive = false;
  bool left_transitive = false;
  bool middle_transitive = false;
  bool transitive = false;
  bool meet_associative = false;
  bool join_associative = false;
  bool associative = false;
  bool atom = false;
  bool coatom = false;

  friend bool operator==(const ElementClass&, const ElementClass&) = default;
};

/// Per-element flags together with the sets they induce.
struct Classification {
  std::vector<ElementClass> elements;
  Mask right_transitive = 0;
  Mask left_transitive = 0;
  Mask transitive = 0;
  Mask meet_associative = 0;
  Mask join_associative = 0;
  Mask associative = 0;
  Mask atoms = 0;
  Mask coatoms = 0;
};

// α ⊴ x ⊴ y ⇒ α ⊴ y
inline bool is_right_transitive(const Psoset& p, Elem a) {
  for (Elem x : elements_of(p.up_set(a))) {
    if ((p.up_set(x) & ~p.up_set(a)) != 0) return false;
  }
  return true;
}

// x ⊴ y ⊴ α ⇒ x ⊴ α
inline bool is_left_transitive(const Psoset& p, Elem a) {
  for (Elem y : elements_of(p.down_set(a))) {
    if ((p.down_set(y) & ~p.down_set(a)) != 0) return false;
  }
  return true;
}

// x ⊴ α ⊴ y ⇒ x ⊴ y
inline bool is_middle_transitive(const Psoset& p, Elem a) {
  for (Elem x : elements_of(p.down_set(a))) {
    if ((p.up_set(a) & ~p.up_set(x)) != 0) return false;
  }
  return true;
}

/// First triple containing α (lexicographic order) on which `op` does not
/// associate, i.e. op(x, op(y,z)) ≠ op(op(x,y), z).
inline CheckOutcome associative_at(const OpTable& op, Elem a, const char* property) {
  const auto n = static_cast<Elem>(op.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (x != a && y != a && z != a) continue;
        Elem lhs = op(x, op(y, z));
        Elem rhs = op(op(x, y), z);
        if (lhs != rhs) return CheckOutcome::fail(property, {x, y, z}, {lhs, rhs});
      }
    }
  }
  return CheckOutcome::pass();
}

inline CheckOutcome meet_associative_at(const Trellis& t, Elem a) {
  return associative_at(t.meet_table(), a, "meet-associativity");
}

inline CheckOutcome join_associative_at(const Trellis& t, Elem a) {
  return associative_at(t.join_table(), a, "join-associativity");
}

/// Minimal elements of X∖{0}.
inline Mask atoms(const BoundedTrellis& t) {
  const Mask rest = t.order().all() & ~bit(t.bottom());
  Mask out = 0;
  for (Elem a : elements_of(rest)) {
    if ((t.order().down_set(a) & rest & ~bit(a)) == 0) out |= bit(a);
  }
  return out;
}

/// Maximal elements of X∖{1}.
inline Mask coatoms(const BoundedTrellis& t) {
  const Mask rest = t.order().all() & ~bit(t.top());
  Mask out = 0;
  for (Elem a : elements_of(rest)) {
    if ((t.order().up_set(a) & rest & ~bit(a)) == 0) out |= bit(a);
  }
  return out;
}

inline Classification classify_elements(const Trellis& t, Mask atom_set = 0, Mask coatom_set = 0) {
  const auto n = static_cast<Elem>(t.size());
  const Psoset& p = t.order();
  Classification c;
  c.elements.resize(n);
  for (Elem a = 0; a < n; ++a) {
    ElementClass& e = c.elements[a];
    e.right_transitive = is_right_transitive(p, a);
    e.left_transitive = is_left_transitive(p, a);
    e.middle_transitive = is_middle_transitive(p, a);
    e.transitive = e.right_transitive && e.left_transitive && e.middle_transitive;
    e.meet_associative = meet_associative_at(t, a).holds;
    e.join_associative = join_associative_at(t, a).holds;
    e.associative = e.meet_associative && e.join_associative;
    e.atom = has(atom_set, a);
    e.coatom = has(coatom_set, a);
    if (e.right_transitive) c.right_transitive |= bit(a);
    if (e.left_transitive) c.left_transitive |= bit(a);
    if (e.transitive) c.transitive |= bit(a);
    if (e.meet_associative) c.meet_associative |= bit(a);
    if (e.join_associative) c.join_associative |= bit(a);
    if (e.associative) c.associative |= bit(a);
  }
  c.atoms = atom_set;
  c.coatoms = coatom_set;
  return c;
}

inline Classification classify_elements(const BoundedTrellis& t) {
  return classify_elements(static_cast<const Trellis&>(t), atoms(t), coatoms(t));
}

/// A non-trivial cycle x1 ⊴ x2 ⊴ … ⊴ xk ⊴ x1 with k ≥ 3 distinct elements,
/// rotated so the smallest index leads.
struct Cycle {
  std::vector<Elem> elements;

  Mask mask() const noexcept {
    Mask m = 0;
    for (Elem e : elements) m |= bit(e);
    return m;
  }
  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

/// All simple cycles of length 3..max_len (0 means n). Each cycle is found
/// once: the search only starts from a cycle's minimum element.
inline std::vector<Cycle> cycles(const Psoset& p, std::size_t max_len = 0) {
  const std::size_t n = p.size();
  if (max_len == 0 || max_len > n) max_len = n;
  std::vector<Cycle> out;
  std::vector<Elem> path;
  auto dfs = [&](auto&& self, Elem start, Elem v, Mask visited) -> void {
    const Mask succ = p.up_set(v) & ~bit(v);
    if (path.size() >= 3 && has(succ, start)) out.push_back(Cycle{path});
    if (path.size() == max_len) return;
    // Only vertices above `start` so the rotation is canonical.
    const Mask allowed = succ & ~visited & ~full_mask(std::size_t{start} + 1);
    for (Elem w : elements_of(allowed)) {
      path.push_back(w);
      self(self, start, w, visited | bit(w));
      path.pop_back();
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path.assign(1, static_cast<Elem>(s));
    dfs(dfs, static_cast<Elem>(s), static_cast<Elem>(s), bit(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// For every non-trivial cycle C: 0,1 ∉ C, C misses Atom ∪ Coatom, and C
/// misses the right- and left-transitive elements.
inline CheckOutcome check_cycle_props(const BoundedTrellis& t) {
  const Classification c = classify_elements(t);
  const Mask bounds = bit(t.bottom()) | bit(t.top());
  for (const Cycle& cyc : cycles(t.order())) {
    const Mask m = cyc.mask();
    if (Mask bad = m & bounds) {
      return CheckOutcome::fail("cycle-contains-bound", cyc.elements, elements_of(bad));
    }
    if (Mask bad = m & (c.atoms | c.coatoms)) {
      return CheckOutcome::fail("cycle-contains-atom-or-coatom", cyc.elements, elements_of(bad));
    }
    if (Mask bad = m & (c.right_transitive | c.left_transitive)) {
      return CheckOutcome::fail("cycle-contains-one-sided-transitive", cyc.elements,
                                elements_of(bad));
    }
  }
  return CheckOutcome::pass();
}

/// Completeness of a finite trellis by the cycle criterion: every
/// non-trivial cycle has an infimum and a supremum. The witness lists the
/// cycle that lacks one.
inline CheckOutcome is_complete(const Trellis& t) {
  for (const Cycle& cyc : cycles(t.order())) {
    if (!infimum(t.order(), cyc.mask())) return CheckOutcome::fail("cycle-infimum", cyc.elements);
    if (!supremum(t.order(), cyc.mask())) return CheckOutcome::fail("cycle-supremum", cyc.elements);
  }
  return CheckOutcome::pass();
}

}  // namespace trellis
