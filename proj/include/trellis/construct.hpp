#pragma once

// Constructions of (pseudo-)t-norms and (pseudo-)t-conorms on a bounded
// trellis.
//
// Chained meets such as (x∧y)∧e are evaluated left to right: the meet of a
// trellis is not associative, so grouping changes results.

#include <optional>
#include <string>
#include <vector>

#include "trellis/binop.hpp"
#include "trellis/classify.hpp"
#include "trellis/core.hpp"
#include "trellis/morph.hpp"

namespace trellis {

/// A constructed table plus soft-precondition warnings. Constructions never
/// refuse a soft violation; classification reports the consequences.
struct Constructed {
  OpTable op;
  std::vector<std::string> warnings;
};

template <class Cell>
OpTable tabulate(std::size_t n, Cell&& cell) {
  OpTable out(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      out.set(static_cast<Elem>(x), static_cast<Elem>(y), cell(static_cast<Elem>(x), static_cast<Elem>(y)));
    }
  }
  return out;
}

inline OpTable t_drastic(const BoundedTrellis& t) {
  return tabulate(t.size(), [&](Elem x, Elem y) {
    return (x == t.top() || y == t.top()) ? t.meet(x, y) : t.bottom();
  });
}

inline OpTable s_drastic(const BoundedTrellis& t) {
  return tabulate(t.size(), [&](Elem x, Elem y) {
    return (x == t.bottom() || y == t.bottom()) ? t.join(x, y) : t.top();
  });
}

/// T_i: i at (i,i), drastic elsewhere, for a coatom i.
inline OpTable t_coatom(const BoundedTrellis& t, Elem i) {
  if (i >= t.size() || !has(coatoms(t), i)) {
    throw Error(ErrorKind::kNotACoatom, "'" + (i < t.size() ? t.label(i) : std::to_string(i)) + "' is not a coatom");
  }
  OpTable out = t_drastic(t);
  out.set(i, i, i);
  return out;
}

inline OpTable s_atom(const BoundedTrellis& t, Elem j) {
  if (j >= t.size() || !has(atoms(t), j)) {
    throw Error(ErrorKind::kNotAnAtom, "'" + (j < t.size() ? t.label(j) : std::to_string(j)) + "' is not an atom");
  }
  OpTable out = s_drastic(t);
  out.set(j, j, j);
  return out;
}

/// T_e(x,y) = x∧y if x or y is 1, else (x∧y)∧e.
inline Constructed t_param(const BoundedTrellis& t, Elem e) {
  if (e >= t.size()) throw Error(ErrorKind::kBadIndex, "bad element index");
  Constructed c;
  c.op = tabulate(t.size(), [&](Elem x, Elem y) {
    return (x == t.top() || y == t.top()) ? t.meet(x, y) : t.meet(t.meet(x, y), e);
  });
  if (!meet_associative_at(t, e)) {
    c.warnings.push_back("'" + t.label(e) + "' is not meet-associative; T_e may fail to be a pseudo-t-norm");
  }
  return c;
}

/// S_e(x,y) = x∨y if x or y is 0, else (x∨y)∨e.
inline Constructed s_param(const BoundedTrellis& t, Elem e) {
  if (e >= t.size()) throw Error(ErrorKind::kBadIndex, "bad element index");
  Constructed c;
  c.op = tabulate(t.size(), [&](Elem x, Elem y) {
    return (x == t.bottom() || y == t.bottom()) ? t.join(x, y) : t.join(t.join(x, y), e);
  });
  if (!join_associative_at(t, e)) {
    c.warnings.push_back("'" + t.label(e) + "' is not join-associative; S_e may fail to be a pseudo-t-conorm");
  }
  return c;
}

/// Z(x,y) = x∧y if x∨y = 1, else 0.
inline Constructed z_norm(const BoundedTrellis& t) {
  Constructed c;
  c.op = tabulate(t.size(), [&](Elem x, Elem y) {
    return t.join(x, y) == t.top() ? t.meet(x, y) : t.bottom();
  });
  if (!is_modular(t)) c.warnings.push_back("trellis is not modular; Z may fail to be a pseudo-t-norm");
  return c;
}

/// Z*(x,y) = x∨y if x∧y = 0, else 1.
inline Constructed z_conorm(const BoundedTrellis& t) {
  Constructed c;
  c.op = tabulate(t.size(), [&](Elem x, Elem y) {
    return t.meet(x, y) == t.bottom() ? t.join(x, y) : t.top();
  });
  if (!is_modular(t)) c.warnings.push_back("trellis is not modular; Z* may fail to be a pseudo-t-conorm");
  return c;
}

/// The interval [lo,hi] = {x : lo ⊴ x ⊴ hi} as a standalone bounded trellis.
struct Interval {
  BoundedTrellis trellis;
  std::vector<Elem> to_parent;              // interval id -> parent id
  std::vector<std::optional<Elem>> from_parent;

  bool contains(Elem parent_id) const { return from_parent.at(parent_id).has_value(); }
};

/// Throws NotATrellis when the interval is not closed under the parent's
/// meet and join.
inline Interval interval(const BoundedTrellis& t, Elem lo, Elem hi) {
  if (lo >= t.size() || hi >= t.size()) throw Error(ErrorKind::kBadIndex, "bad element index");
  const Mask members = t.order().up_set(lo) & t.order().down_set(hi);
  if (!has(members, lo) || !has(members, hi)) {
    throw Error(ErrorKind::kNotATrellis, "interval bounds are not related");
  }
  if (!subset_check(t, members).subtrellis) {
    throw Error(ErrorKind::kNotATrellis,
                "interval [" + t.label(lo) + ", " + t.label(hi) + "] is not closed under meet and join");
  }
  Interval iv;
  iv.from_parent.assign(t.size(), std::nullopt);
  std::vector<std::string> labels;
  for (Elem x : elements_of(members)) {
    iv.from_parent[x] = static_cast<Elem>(iv.to_parent.size());
    iv.to_parent.push_back(x);
    labels.push_back(t.label(x));
  }
  std::vector<ElemPair> pairs;
  for (std::size_t i = 0; i < iv.to_parent.size(); ++i) {
    for (std::size_t j = 0; j < iv.to_parent.size(); ++j) {
      if (i != j && t.leq(iv.to_parent[i], iv.to_parent[j])) {
        pairs.emplace_back(static_cast<Elem>(i), static_cast<Elem>(j));
      }
    }
  }
  Psoset sub = Psoset::from_pairs(std::move(labels), pairs);
  iv.trellis = BoundedTrellis(to_trellis(sub), *iv.from_parent[lo], *iv.from_parent[hi]);
  return iv;
}

namespace detail {

inline void require_split_point(const BoundedTrellis& t, Elem a) {
  if (a >= t.size()) throw Error(ErrorKind::kBadIndex, "bad element index");
  if (a == t.bottom() || a == t.top() || !has(classify_elements(t).associative, a)) {
    throw Error(ErrorKind::kNotAssociativeElement,
                "'" + t.label(a) + "' must be an associative element other than 0 and 1");
  }
}

}  // namespace detail

/// Ordinal sum with split point a and V a pseudo-t-norm on [a,1]:
///   x∧y       if x = 1 or y = 1
///   V(x,y)    if x, y ∈ [a,1)
///   (x∧y)∧a   otherwise
inline OpTable ordinal_sum_norm(const BoundedTrellis& t, Elem a, const OpTable& v, WeakSemantics sem = {}) {
  detail::require_split_point(t, a);
  const Interval iv = interval(t, a, t.top());
  if (v.size() != iv.trellis.size()) throw Error(ErrorKind::kBadIndex, "sub-operation does not match [a,1]");
  if (auto r = check_class(v, iv.trellis, OpClass::kPseudoTNorm, sem); !r) {
    throw Error(ErrorKind::kSubOpNotPseudoNorm, "sub-operation is not a pseudo-t-norm on [a,1]");
  }
  auto in_upper = [&](Elem x) { return x != t.top() && iv.contains(x); };
  return tabulate(t.size(), [&](Elem x, Elem y) -> Elem {
    if (x == t.top() || y == t.top()) return t.meet(x, y);
    if (in_upper(x) && in_upper(y)) return iv.to_parent[v(*iv.from_parent[x], *iv.from_parent[y])];
    return t.meet(t.meet(x, y), a);
  });
}

/// Dual ordinal sum with W a pseudo-t-conorm on [0,a]:
///   x∨y       if x = 0 or y = 0
///   W(x,y)    if x, y ∈ (0,a]
///   (x∨y)∨a   otherwise
inline OpTable ordinal_sum_conorm(const BoundedTrellis& t, Elem a, const OpTable& w, WeakSemantics sem = {}) {
  detail::require_split_point(t, a);
  const Interval iv = interval(t, t.bottom(), a);
  if (w.size() != iv.trellis.size()) throw Error(ErrorKind::kBadIndex, "sub-operation does not match [0,a]");
  if (auto r = check_class(w, iv.trellis, OpClass::kPseudoTConorm, sem); !r) {
    throw Error(ErrorKind::kSubOpNotPseudoNorm, "sub-operation is not a pseudo-t-conorm on [0,a]");
  }
  auto in_lower = [&](Elem x) { return x != t.bottom() && iv.contains(x); };
  return tabulate(t.size(), [&](Elem x, Elem y) -> Elem {
    if (x == t.bottom() || y == t.bottom()) return t.join(x, y);
    if (in_lower(x) && in_lower(y)) return iv.to_parent[w(*iv.from_parent[x], *iv.from_parent[y])];
    return t.join(t.join(x, y), a);
  });
}

/// The case-by-case description of the ordinal sum in terms of
/// incomparability with a:
///   V(x,y)    if x, y ∈ [a,1)
///   y∧a       if x ∈ [a,1), y ‖ a
///   x∧a       if y ∈ [a,1), x ‖ a
///   (x∧y)∧a   if x ‖ a, y ‖ a
///   x∧y       otherwise
/// Kept separate so it can be compared against ordinal_sum_norm.
inline OpTable ordinal_sum_norm_piecewise(const BoundedTrellis& t, Elem a, const OpTable& v) {
  const Interval iv = interval(t, a, t.top());
  auto in_upper = [&](Elem x) { return x != t.top() && iv.contains(x); };
  auto apart = [&](Elem x) { return !t.leq(x, a) && !t.leq(a, x); };
  return tabulate(t.size(), [&](Elem x, Elem y) -> Elem {
    if (in_upper(x) && in_upper(y)) return iv.to_parent[v(*iv.from_parent[x], *iv.from_parent[y])];
    if (in_upper(x) && apart(y)) return t.meet(y, a);
    if (in_upper(y) && apart(x)) return t.meet(x, a);
    if (apart(x) && apart(y)) return t.meet(t.meet(x, y), a);
    return t.meet(x, y);
  });
}

enum class ConstructionKind {
  kDrasticT,
  kDrasticS,
  kCoatomT,
  kAtomS,
  kParamT,
  kParamS,
  kZ,
  kZStar,
  kOrdinalT,
  kOrdinalS,
  kTransport,
};

inline std::optional<ConstructionKind> parse_construction_kind(std::string_view s) {
  if (s == "drastic-t") return ConstructionKind::kDrasticT;
  if (s == "drastic-s") return ConstructionKind::kDrasticS;
  if (s == "coatom-t") return ConstructionKind::kCoatomT;
  if (s == "atom-s") return ConstructionKind::kAtomS;
  if (s == "param-t") return ConstructionKind::kParamT;
  if (s == "param-s") return ConstructionKind::kParamS;
  if (s == "z") return ConstructionKind::kZ;
  if (s == "z-star") return ConstructionKind::kZStar;
  if (s == "ordinal-t") return ConstructionKind::kOrdinalT;
  if (s == "ordinal-s") return ConstructionKind::kOrdinalS;
  if (s == "transport") return ConstructionKind::kTransport;
  return std::nullopt;
}

inline bool needs_element(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::kCoatomT:
    case ConstructionKind::kAtomS:
    case ConstructionKind::kParamT:
    case ConstructionKind::kParamS:
    case ConstructionKind::kOrdinalT:
    case ConstructionKind::kOrdinalS: return true;
    default: return false;
  }
}

/// Inputs for transporting an operation from an isomorphic copy.
struct TransportInput {
  BoundedTrellis source;  // carrier of `op`
  OpTable op;
  TrellisMap map;         // carrier of the result -> source
};

struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::kDrasticT;
  std::optional<Elem> element;            // i, j, e or a
  std::optional<OpTable> sub_op;          // V on [a,1] or W on [0,a]
  std::optional<TransportInput> transport;
  WeakSemantics semantics;
};

inline Constructed construct(const BoundedTrellis& t, const ConstructionSpec& spec) {
  if (needs_element(spec.kind) && !spec.element) {
    throw Error(ErrorKind::kBadIndex, "construction requires an element parameter");
  }
  switch (spec.kind) {
    case ConstructionKind::kDrasticT: return {t_drastic(t), {}};
    case ConstructionKind::kDrasticS: return {s_drastic(t), {}};
    case ConstructionKind::kCoatomT: return {t_coatom(t, *spec.element), {}};
    case ConstructionKind::kAtomS: return {s_atom(t, *spec.element), {}};
    case ConstructionKind::kParamT: return t_param(t, *spec.element);
    case ConstructionKind::kParamS: return s_param(t, *spec.element);
    case ConstructionKind::kZ: return z_norm(t);
    case ConstructionKind::kZStar: return z_conorm(t);
    case ConstructionKind::kOrdinalT:
    case ConstructionKind::kOrdinalS: {
      if (!spec.sub_op) throw Error(ErrorKind::kBadIndex, "ordinal sum requires a sub-operation");
      if (spec.kind == ConstructionKind::kOrdinalT) {
        return {ordinal_sum_norm(t, *spec.element, *spec.sub_op, spec.semantics), {}};
      }
      return {ordinal_sum_conorm(t, *spec.element, *spec.sub_op, spec.semantics), {}};
    }
    case ConstructionKind::kTransport: {
      if (!spec.transport) throw Error(ErrorKind::kBadIndex, "transport requires a source and map");
      const auto& in = *spec.transport;
      return {transport(in.op, t, in.source, in.map), {}};
    }
  }
  throw Error(ErrorKind::kBadIndex, "unknown construction");
}

}  // namespace trellis
