#pragma once

// Properties of binary operations on a trellis: the classical ones, their
// weak variants restricted to transitive/associative elements, and the
// (pseudo-)t-norm classes built from them.

#include <optional>
#include <string_view>

#include "trellis/classify.hpp"
#include "trellis/core.hpp"

namespace trellis {

/// Which pairs x ⊴ y the weakly-increasing condition quantifies over.
///
/// kUpper: y is transitive. kLower: x is transitive. kAny: at least one of
/// them is. kBoth: both are.
enum class MonoMode { kUpper, kLower, kAny, kBoth };

/// Which triples the weakly-associative condition quantifies over.
///
/// kAnyMember: some member is ∧- or ∨-associative. kAllMembers: all three
/// are ∧-associative, or all three are ∨-associative. kOwnSide: some member
/// is ∧-associative for norms, ∨-associative for conorms.
enum class AssocMode { kAnyMember, kAllMembers, kOwnSide };

struct WeakSemantics {
  MonoMode mono = MonoMode::kUpper;
  AssocMode assoc = AssocMode::kAnyMember;

  friend bool operator==(const WeakSemantics&, const WeakSemantics&) = default;
};

// The conorm reading of a mode: reversing the order swaps the ends of a pair.
constexpr MonoMode dual(MonoMode m) noexcept {
  switch (m) {
    case MonoMode::kUpper: return MonoMode::kLower;
    case MonoMode::kLower: return MonoMode::kUpper;
    default: return m;
  }
}

constexpr WeakSemantics dual(WeakSemantics s) noexcept { return {dual(s.mono), s.assoc}; }

constexpr std::string_view to_string(MonoMode m) noexcept {
  switch (m) {
    case MonoMode::kUpper: return "upper";
    case MonoMode::kLower: return "lower";
    case MonoMode::kAny: return "any";
    case MonoMode::kBoth: return "both";
  }
  return "?";
}

constexpr std::string_view to_string(AssocMode m) noexcept {
  switch (m) {
    case AssocMode::kAnyMember: return "any";
    case AssocMode::kAllMembers: return "all";
    case AssocMode::kOwnSide: return "side";
  }
  return "?";
}

inline std::optional<MonoMode> parse_mono_mode(std::string_view s) {
  if (s == "upper") return MonoMode::kUpper;
  if (s == "lower") return MonoMode::kLower;
  if (s == "any") return MonoMode::kAny;
  if (s == "both") return MonoMode::kBoth;
  return std::nullopt;
}

inline std::optional<AssocMode> parse_assoc_mode(std::string_view s) {
  if (s == "any") return AssocMode::kAnyMember;
  if (s == "all") return AssocMode::kAllMembers;
  if (s == "side") return AssocMode::kOwnSide;
  return std::nullopt;
}

inline bool mono_guard(MonoMode mode, Mask transitive, Elem x, Elem y) noexcept {
  switch (mode) {
    case MonoMode::kUpper: return has(transitive, y);
    case MonoMode::kLower: return has(transitive, x);
    case MonoMode::kAny: return has(transitive, x) || has(transitive, y);
    case MonoMode::kBoth: return has(transitive, x) && has(transitive, y);
  }
  return false;
}

/// `join_side` selects the ∨-associative elements for kOwnSide.
inline bool assoc_guard(AssocMode mode, const Classification& c, Elem x, Elem y, Elem z,
                        bool join_side = false) noexcept {
  const Mask members = bit(x) | bit(y) | bit(z);
  switch (mode) {
    case AssocMode::kAnyMember: return (members & (c.meet_associative | c.join_associative)) != 0;
    case AssocMode::kAllMembers:
      return (members & ~c.meet_associative) == 0 || (members & ~c.join_associative) == 0;
    case AssocMode::kOwnSide: return (members & (join_side ? c.join_associative : c.meet_associative)) != 0;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Classical properties

inline CheckOutcome is_commutative(const OpTable& f) {
  const auto n = static_cast<Elem>(f.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = static_cast<Elem>(x + 1); y < n; ++y) {
      if (f(x, y) != f(y, x)) return CheckOutcome::fail("commutativity", {x, y}, {f(x, y), f(y, x)});
    }
  }
  return CheckOutcome::pass();
}

inline CheckOutcome is_associative(const OpTable& f) {
  const auto n = static_cast<Elem>(f.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        Elem lhs = f(x, f(y, z));
        Elem rhs = f(f(x, y), z);
        if (lhs != rhs) return CheckOutcome::fail("associativity", {x, y, z}, {lhs, rhs});
      }
    }
  }
  return CheckOutcome::pass();
}

inline CheckOutcome is_idempotent(const OpTable& f) {
  const auto n = static_cast<Elem>(f.size());
  for (Elem x = 0; x < n; ++x) {
    if (f(x, x) != x) return CheckOutcome::fail("idempotency", {x}, {f(x, x), x});
  }
  return CheckOutcome::pass();
}

/// Monotone in both arguments jointly: x ⊴ y and z ⊴ t imply F(x,z) ⊴ F(y,t).
/// Without transitivity this is stronger than monotonicity in each argument
/// separately.
inline CheckOutcome is_increasing(const OpTable& f, const Psoset& p) {
  const auto n = static_cast<Elem>(f.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y : elements_of(p.up_set(x))) {
      for (Elem z = 0; z < n; ++z) {
        for (Elem t : elements_of(p.up_set(z))) {
          if (!p.leq(f(x, z), f(y, t))) {
            return CheckOutcome::fail("increasing", {x, y, z, t}, {f(x, z), f(y, t)});
          }
        }
      }
    }
  }
  return CheckOutcome::pass();
}

/// x ⊴ y implies F(x,z) ⊴ F(y,z) and F(z,x) ⊴ F(z,y), for all z.
inline CheckOutcome is_increasing_separately(const OpTable& f, const Psoset& p) {
  const auto n = static_cast<Elem>(f.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y : elements_of(p.up_set(x))) {
      for (Elem z = 0; z < n; ++z) {
        if (!p.leq(f(x, z), f(y, z))) {
          return CheckOutcome::fail("increasing-left", {x, y, z}, {f(x, z), f(y, z)});
        }
        if (!p.leq(f(z, x), f(z, y))) {
          return CheckOutcome::fail("increasing-right", {x, y, z}, {f(z, x), f(z, y)});
        }
      }
    }
  }
  return CheckOutcome::pass();
}

struct BasicProps {
  CheckOutcome commutative;
  CheckOutcome associative;
  CheckOutcome idempotent;
  CheckOutcome increasing;
  CheckOutcome increasing_separately;
};

inline BasicProps basic_props(const OpTable& f, const Psoset& p) {
  return {is_commutative(f), is_associative(f), is_idempotent(f), is_increasing(f, p),
          is_increasing_separately(f, p)};
}

inline bool is_neutral(const OpTable& f, Elem e) {
  const auto n = static_cast<Elem>(f.size());
  for (Elem x = 0; x < n; ++x) {
    if (f(e, x) != x || f(x, e) != x) return false;
  }
  return true;
}

inline std::optional<Elem> neutral(const OpTable& f) {
  const auto n = static_cast<Elem>(f.size());
  for (Elem e = 0; e < n; ++e) {
    if (is_neutral(f, e)) return e;
  }
  return std::nullopt;
}

/// F(x,z) = F(z,x) = z for every x.
inline CheckOutcome is_absorbing(const OpTable& f, Elem z) {
  const auto n = static_cast<Elem>(f.size());
  for (Elem x = 0; x < n; ++x) {
    if (f(x, z) != z) return CheckOutcome::fail("boundary", {x, z}, {f(x, z), z});
    if (f(z, x) != z) return CheckOutcome::fail("boundary", {z, x}, {f(z, x), z});
  }
  return CheckOutcome::pass();
}

inline CheckOutcome is_conjunctive(const OpTable& f, const Trellis& t) {
  const auto n = static_cast<Elem>(f.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (!t.leq(f(x, y), t.meet(x, y))) {
        return CheckOutcome::fail("conjunctivity", {x, y}, {f(x, y), t.meet(x, y)});
      }
    }
  }
  return CheckOutcome::pass();
}

inline CheckOutcome is_disjunctive(const OpTable& f, const Trellis& t) {
  const auto n = static_cast<Elem>(f.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (!t.leq(t.join(x, y), f(x, y))) {
        return CheckOutcome::fail("disjunctivity", {x, y}, {t.join(x, y), f(x, y)});
      }
    }
  }
  return CheckOutcome::pass();
}

// ---------------------------------------------------------------------------
// Weak variants

/// The violation at one tuple, if (x,y,z) is quantified over under `mode`
/// and breaks monotonicity on either side. Left side first.
inline std::optional<Witness> weak_increasing_violation(const OpTable& f, const Psoset& p,
                                                        Mask transitive, MonoMode mode, Elem x,
                                                        Elem y, Elem z) {
  if (!p.leq(x, y) || !mono_guard(mode, transitive, x, y)) return std::nullopt;
  if (!p.leq(f(x, z), f(y, z))) return Witness{"weakly-increasing-left", {x, y, z}, {f(x, z), f(y, z)}};
  if (!p.leq(f(z, x), f(z, y))) return Witness{"weakly-increasing-right", {x, y, z}, {f(z, x), f(z, y)}};
  return std::nullopt;
}

inline CheckOutcome is_weakly_increasing(const OpTable& f, const Trellis& t, const Classification& c,
                                         MonoMode mode) {
  const auto n = static_cast<Elem>(f.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y : elements_of(t.order().up_set(x))) {
      for (Elem z = 0; z < n; ++z) {
        if (auto w = weak_increasing_violation(f, t.order(), c.transitive, mode, x, y, z)) {
          return {false, std::move(w)};
        }
      }
    }
  }
  return CheckOutcome::pass();
}

inline CheckOutcome is_weakly_increasing(const OpTable& f, const Trellis& t, MonoMode mode) {
  return is_weakly_increasing(f, t, classify_elements(t), mode);
}

inline std::optional<Witness> weak_associative_violation(const OpTable& f, const Classification& c,
                                                         AssocMode mode, Elem x, Elem y, Elem z,
                                                         bool join_side = false) {
  if (!assoc_guard(mode, c, x, y, z, join_side)) return std::nullopt;
  Elem lhs = f(x, f(y, z));
  Elem rhs = f(f(x, y), z);
  if (lhs == rhs) return std::nullopt;
  return Witness{"weakly-associative", {x, y, z}, {lhs, rhs}};
}

inline CheckOutcome is_weakly_associative(const OpTable& f, const Classification& c, AssocMode mode,
                                          bool join_side = false) {
  const auto n = static_cast<Elem>(f.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (auto w = weak_associative_violation(f, c, mode, x, y, z, join_side)) return {false, std::move(w)};
      }
    }
  }
  return CheckOutcome::pass();
}

inline CheckOutcome is_weakly_associative(const OpTable& f, const Trellis& t, AssocMode mode,
                                          bool join_side = false) {
  return is_weakly_associative(f, classify_elements(t), mode, join_side);
}

// ---------------------------------------------------------------------------
// Operation classes

enum class OpClass { kTNorm, kTConorm, kPseudoTNorm, kPseudoTConorm };

constexpr std::string_view to_string(OpClass c) noexcept {
  switch (c) {
    case OpClass::kTNorm: return "tnorm";
    case OpClass::kTConorm: return "tconorm";
    case OpClass::kPseudoTNorm: return "pseudo-tnorm";
    case OpClass::kPseudoTConorm: return "pseudo-tconorm";
  }
  return "?";
}

inline std::optional<OpClass> parse_op_class(std::string_view s) {
  if (s == "tnorm") return OpClass::kTNorm;
  if (s == "tconorm") return OpClass::kTConorm;
  if (s == "pseudo-tnorm") return OpClass::kPseudoTNorm;
  if (s == "pseudo-tconorm") return OpClass::kPseudoTConorm;
  return std::nullopt;
}

constexpr bool is_norm(OpClass c) noexcept {
  return c == OpClass::kTNorm || c == OpClass::kPseudoTNorm;
}

constexpr bool is_pseudo(OpClass c) noexcept {
  return c == OpClass::kPseudoTNorm || c == OpClass::kPseudoTConorm;
}

inline CheckOutcome neutral_check(const OpTable& f, Elem e) {
  const auto n = static_cast<Elem>(f.size());
  for (Elem x = 0; x < n; ++x) {
    if (f(e, x) != x) return CheckOutcome::fail("neutral", {e, x}, {f(e, x), x});
    if (f(x, e) != x) return CheckOutcome::fail("neutral", {x, e}, {f(x, e), x});
  }
  return CheckOutcome::pass();
}

/// Membership of `f` in one class. Pseudo-t-conorms use the dual mono mode
/// and the ∨-side of kOwnSide, so membership in a conorm class on X equals
/// membership in the matching norm class on the dual trellis.
inline CheckOutcome check_class(const OpTable& f, const BoundedTrellis& t, const Classification& c,
                                OpClass cls, WeakSemantics sem = {}) {
  const Elem e = is_norm(cls) ? t.top() : t.bottom();
  if (auto r = neutral_check(f, e); !r) return r;
  if (auto r = is_commutative(f); !r) return r;
  if (is_pseudo(cls)) {
    const MonoMode mono = is_norm(cls) ? sem.mono : dual(sem.mono);
    if (auto r = is_weakly_increasing(f, t, c, mono); !r) return r;
    return is_weakly_associative(f, c, sem.assoc, !is_norm(cls));
  }
  if (auto r = is_increasing(f, t.order()); !r) return r;
  return is_associative(f);
}

inline CheckOutcome check_class(const OpTable& f, const BoundedTrellis& t, OpClass cls,
                                WeakSemantics sem = {}) {
  return check_class(f, t, classify_elements(t), cls, sem);
}

struct OpClassification {
  WeakSemantics semantics;
  CheckOutcome t_norm;
  CheckOutcome t_conorm;
  CheckOutcome pseudo_t_norm;
  CheckOutcome pseudo_t_conorm;

  const CheckOutcome& operator[](OpClass c) const noexcept {
    switch (c) {
      case OpClass::kTNorm: return t_norm;
      case OpClass::kTConorm: return t_conorm;
      case OpClass::kPseudoTNorm: return pseudo_t_norm;
      case OpClass::kPseudoTConorm: return pseudo_t_conorm;
    }
    return t_norm;
  }
};

inline OpClassification classify_op(const OpTable& f, const BoundedTrellis& t,
                                    WeakSemantics sem = {}) {
  const Classification c = classify_elements(t);
  return {sem, check_class(f, t, c, OpClass::kTNorm, sem), check_class(f, t, c, OpClass::kTConorm, sem),
          check_class(f, t, c, OpClass::kPseudoTNorm, sem),
          check_class(f, t, c, OpClass::kPseudoTConorm, sem)};
}

// ---------------------------------------------------------------------------
// Pointwise order, distributivity, meet/join characterization

enum class Comparison { kLess, kEqual, kGreater, kIncomparable };

constexpr std::string_view to_string(Comparison c) noexcept {
  switch (c) {
    case Comparison::kLess: return "less";
    case Comparison::kEqual: return "equal";
    case Comparison::kGreater: return "greater";
    case Comparison::kIncomparable: return "incomparable";
  }
  return "?";
}

/// F1 ⊴ F2 cell by cell; the witness is the first cell where it fails.
inline CheckOutcome pointwise_leq(const OpTable& f1, const OpTable& f2, const Psoset& p) {
  const auto n = static_cast<Elem>(f1.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (!p.leq(f1(x, y), f2(x, y))) return CheckOutcome::fail("pointwise-order", {x, y}, {f1(x, y), f2(x, y)});
    }
  }
  return CheckOutcome::pass();
}

inline Comparison pointwise_cmp(const OpTable& f1, const OpTable& f2, const Psoset& p) {
  const bool le = pointwise_leq(f1, f2, p).holds;
  const bool ge = pointwise_leq(f2, f1, p).holds;
  if (le && ge) return Comparison::kEqual;
  if (le) return Comparison::kLess;
  if (ge) return Comparison::kGreater;
  return Comparison::kIncomparable;
}

/// F1(x, F2(y,z)) = F2(F1(x,y), F1(x,z)) for all x and all (y,z) other than
/// (0,0) and (1,1). With `include_bounds` those two pairs are checked too.
inline CheckOutcome distributes_over(const OpTable& f1, const OpTable& f2, const BoundedTrellis& t,
                                     bool include_bounds = false) {
  const auto n = static_cast<Elem>(f1.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (!include_bounds && y == z && (y == t.bottom() || y == t.top())) continue;
        Elem lhs = f1(x, f2(y, z));
        Elem rhs = f2(f1(x, y), f1(x, z));
        if (lhs != rhs) return CheckOutcome::fail("distributivity", {x, y, z}, {lhs, rhs});
      }
    }
  }
  return CheckOutcome::pass();
}

/// For F a pseudo-t-norm that is idempotent with F(x∧y, x∧y) ⊴ F(x,y)
/// everywhere, F must be the meet. Passes vacuously when the hypotheses fail.
inline CheckOutcome meet_characterization(const OpTable& f, const BoundedTrellis& t,
                                          WeakSemantics sem = {}) {
  if (!check_class(f, t, OpClass::kPseudoTNorm, sem) || !is_idempotent(f)) return CheckOutcome::pass();
  const auto n = static_cast<Elem>(f.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem m = t.meet(x, y);
      if (!t.leq(f(m, m), f(x, y))) return CheckOutcome::pass();
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (f(x, y) != t.meet(x, y)) return CheckOutcome::fail("meet-characterization", {x, y}, {f(x, y), t.meet(x, y)});
    }
  }
  return CheckOutcome::pass();
}

inline CheckOutcome join_characterization(const OpTable& f, const BoundedTrellis& t,
                                          WeakSemantics sem = {}) {
  if (!check_class(f, t, OpClass::kPseudoTConorm, sem) || !is_idempotent(f)) return CheckOutcome::pass();
  const auto n = static_cast<Elem>(f.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem j = t.join(x, y);
      if (!t.leq(f(x, y), f(j, j))) return CheckOutcome::pass();
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (f(x, y) != t.join(x, y)) return CheckOutcome::fail("join-characterization", {x, y}, {f(x, y), t.join(x, y)});
    }
  }
  return CheckOutcome::pass();
}

}  // namespace trellis
