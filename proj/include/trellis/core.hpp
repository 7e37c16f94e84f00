#pragma once

// Finite pseudo-ordered sets and trellises.
//
// A pseudo-order is reflexive and antisymmetric but not necessarily
// transitive. Relations are stored as one bit mask per element, so carriers
// are limited to kMaxElements elements.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trellis {

using Elem = std::uint8_t;
using Mask = std::uint64_t;
using ElemPair = std::pair<Elem, Elem>;

inline constexpr std::size_t kMaxElements = 64;

enum class ErrorKind {
  kBadIndex,
  kAntisymmetryViolation,
  kClosureConflict,
  kNotATrellis,
  kNotBounded,
  kInconsistentTable,
  kNotACoatom,
  kNotAnAtom,
  kNotAssociativeElement,
  kSubOpNotPseudoNorm,
  kNotAnIsomorphism,
  kSearchCapExceeded,
  kParse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<ElemPair> pairs = {})
      : std::runtime_error(what), kind_(kind), pairs_(std::move(pairs)) {}

  ErrorKind kind() const noexcept { return kind_; }
  // Offending element pairs, when the error concerns specific pairs
  // (antisymmetry violations, pairs lacking a meet or join, ...).
  const std::vector<ElemPair>& pairs() const noexcept { return pairs_; }

 private:
  ErrorKind kind_;
  std::vector<ElemPair> pairs_;
};

inline constexpr Mask bit(std::size_t i) noexcept { return Mask{1} << i; }
inline constexpr bool has(Mask m, std::size_t i) noexcept { return (m >> i) & 1u; }
inline constexpr Mask full_mask(std::size_t n) noexcept {
  return n >= 64 ? ~Mask{0} : bit(n) - 1;
}

// Elements of a mask in increasing index order.
inline std::vector<Elem> elements_of(Mask m) {
  std::vector<Elem> out;
  while (m != 0) {
    out.push_back(static_cast<Elem>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

/// A counterexample to a checked property.
///
/// `args` is the quantified tuple (in the order the property names them) and
/// `values` holds the two sides that should have been equal or related.
struct Witness {
  std::string property;
  std::vector<Elem> args;
  std::vector<Elem> values;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckOutcome {
  bool holds = true;
  std::optional<Witness> witness;

  static CheckOutcome pass() { return {}; }
  static CheckOutcome fail(std::string property, std::vector<Elem> args,
                           std::vector<Elem> values = {}) {
    return {false, Witness{std::move(property), std::move(args), std::move(values)}};
  }

  explicit operator bool() const noexcept { return holds; }
};

/// A total binary operation on {0..n-1}, stored row-major.
class OpTable {
 public:
  OpTable() = default;
  explicit OpTable(std::size_t n, Elem fill = 0) : n_(n), cells_(n * n, fill) {}
  OpTable(std::size_t n, std::vector<Elem> cells) : n_(n), cells_(std::move(cells)) {
    if (cells_.size() != n_ * n_) {
      throw Error(ErrorKind::kBadIndex, "operation table has wrong cell count");
    }
    for (Elem v : cells_) {
      if (v >= n_) throw Error(ErrorKind::kBadIndex, "operation table cell out of range");
    }
  }

  std::size_t size() const noexcept { return n_; }
  Elem operator()(Elem x, Elem y) const noexcept { return cells_[x * n_ + y]; }
  void set(Elem x, Elem y, Elem v) noexcept { cells_[x * n_ + y] = v; }
  std::span<const Elem> cells() const noexcept { return cells_; }

  friend bool operator==(const OpTable&, const OpTable&) = default;
  friend auto operator<=>(const OpTable& a, const OpTable& b) {
    return a.cells_ <=> b.cells_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Elem> cells_;
};

/// A finite set with a reflexive, antisymmetric relation.
class Psoset {
 public:
  Psoset() = default;

  /// Builds the psoset on `labels` from non-reflexive pairs (x,y) meaning
  /// x ⊴ y. Reflexive pairs are added implicitly.
  static Psoset from_pairs(std::vector<std::string> labels, std::span<const ElemPair> pairs) {
    const std::size_t n = labels.size();
    if (n == 0 || n > kMaxElements) {
      throw Error(ErrorKind::kBadIndex,
                  "element count must be between 1 and " + std::to_string(kMaxElements));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (labels[i].empty()) throw Error(ErrorKind::kBadIndex, "empty element label");
      for (std::size_t j = 0; j < i; ++j) {
        if (labels[i] == labels[j]) {
          throw Error(ErrorKind::kBadIndex, "duplicate element label '" + labels[i] + "'");
        }
      }
    }
    Psoset p;
    p.labels_ = std::move(labels);
    p.up_.assign(n, 0);
    p.down_.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) p.add(static_cast<Elem>(x), static_cast<Elem>(x));
    for (auto [x, y] : pairs) {
      if (x >= n || y >= n) {
        throw Error(ErrorKind::kBadIndex, "relation pair references element index " +
                                              std::to_string(std::max(x, y)) + " >= " +
                                              std::to_string(n));
      }
      p.add(x, y);
    }
    p.check_antisymmetry();
    return p;
  }

  /// Builds directly from up-set masks (row x = {y : x ⊴ y}). Validates.
  static Psoset from_masks(std::vector<std::string> labels, std::span<const Mask> up) {
    std::vector<ElemPair> pairs;
    for (std::size_t x = 0; x < up.size(); ++x) {
      for (Elem y : elements_of(up[x])) pairs.emplace_back(static_cast<Elem>(x), y);
    }
    if (up.size() != labels.size()) {
      throw Error(ErrorKind::kBadIndex, "mask count does not match label count");
    }
    return from_pairs(std::move(labels), pairs);
  }

  std::size_t size() const noexcept { return labels_.size(); }
  bool leq(Elem x, Elem y) const noexcept { return has(up_[x], y); }
  Mask up_set(Elem x) const noexcept { return up_[x]; }
  Mask down_set(Elem y) const noexcept { return down_[y]; }
  Mask all() const noexcept { return full_mask(size()); }

  const std::string& label(Elem x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Elem> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == name) return static_cast<Elem>(i);
    }
    return std::nullopt;
  }

  /// Non-reflexive related pairs in lexicographic order.
  std::vector<ElemPair> strict_pairs() const {
    std::vector<ElemPair> out;
    for (std::size_t x = 0; x < size(); ++x) {
      for (Elem y : elements_of(up_[x] & ~bit(x))) out.emplace_back(static_cast<Elem>(x), y);
    }
    return out;
  }

  Psoset reversed() const {
    Psoset r = *this;
    std::swap(r.up_, r.down_);
    return r;
  }

  bool is_transitive() const noexcept {
    for (std::size_t x = 0; x < size(); ++x) {
      for (Elem y : elements_of(up_[x])) {
        if ((up_[y] & ~up_[x]) != 0) return false;
      }
    }
    return true;
  }

  friend bool operator==(const Psoset&, const Psoset&) = default;

 private:
  void add(Elem x, Elem y) noexcept {
    up_[x] |= bit(y);
    down_[y] |= bit(x);
  }

  void check_antisymmetry() const {
    std::vector<ElemPair> bad;
    for (std::size_t x = 0; x < size(); ++x) {
      for (Elem y : elements_of(up_[x] & down_[x] & ~bit(x))) {
        if (x < y) bad.emplace_back(static_cast<Elem>(x), y);
      }
    }
    if (!bad.empty()) {
      std::string msg = "antisymmetry violated: " + labels_[bad[0].first] + " and " +
                        labels_[bad[0].second] + " are related both ways";
      throw Error(ErrorKind::kAntisymmetryViolation, msg, std::move(bad));
    }
  }

  std::vector<std::string> labels_;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
};

inline std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

inline Psoset validate_psoset(std::size_t n, std::span<const ElemPair> pairs) {
  return Psoset::from_pairs(index_labels(n), pairs);
}

/// Closes a Hasse-type description into a pseudo-order.
///
/// The result is the least relation containing `edges` and the diagonal that
/// is closed under (x,y),(y,z) ↦ (x,z) except for forbidden pairs. Forbidden
/// pairs are the dashed pairs (both orientations) and the reverses of edges.
inline Psoset close_hasse(std::vector<std::string> labels, std::span<const ElemPair> edges,
                          std::span<const ElemPair> dashed) {
  const std::size_t n = labels.size();
  if (n == 0 || n > kMaxElements) {
    throw Error(ErrorKind::kBadIndex, "element count out of range");
  }
  auto check = [n](ElemPair p) {
    if (p.first >= n || p.second >= n) throw Error(ErrorKind::kBadIndex, "bad element index");
  };
  std::vector<Mask> up(n), forbidden(n);
  for (std::size_t x = 0; x < n; ++x) up[x] = bit(x);
  for (auto e : edges) {
    check(e);
    up[e.first] |= bit(e.second);
    forbidden[e.second] |= bit(e.first);
  }
  for (auto d : dashed) {
    check(d);
    forbidden[d.first] |= bit(d.second);
    forbidden[d.second] |= bit(d.first);
  }
  for (auto e : edges) {
    if (e.first != e.second && has(forbidden[e.first], e.second)) {
      throw Error(ErrorKind::kClosureConflict,
                  "pair " + labels[e.first] + " " + labels[e.second] +
                      " is both an edge and excluded",
                  {e});
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x) {
      Mask reach = up[x];
      for (Elem y : elements_of(up[x])) reach |= up[y];
      reach &= ~forbidden[x];
      if (reach != up[x]) {
        up[x] = reach;
        changed = true;
      }
    }
  }
  std::vector<ElemPair> conflicts;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = x + 1; z < n; ++z) {
      if (has(up[x], z) && has(up[z], x)) {
        conflicts.emplace_back(static_cast<Elem>(x), static_cast<Elem>(z));
      }
    }
  }
  if (!conflicts.empty()) {
    std::string msg = "closure relates " + labels[conflicts[0].first] + " and " +
                      labels[conflicts[0].second] + " both ways; use the explicit relation form";
    throw Error(ErrorKind::kClosureConflict, msg, std::move(conflicts));
  }
  return Psoset::from_masks(std::move(labels), up);
}

/// x ≲ y: y is reachable from x along a ⊴-chain.
inline bool preorder_reach(const Psoset& p, Elem x, Elem y) {
  Mask seen = bit(x);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Elem v : elements_of(frontier)) next |= p.up_set(v);
    frontier = next & ~seen;
    seen |= next;
  }
  return has(seen, y);
}

inline CheckOutcome is_pseudo_chain(const Psoset& p) {
  const auto n = static_cast<Elem>(p.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = static_cast<Elem>(x + 1); y < n; ++y) {
      if (!preorder_reach(p, x, y) && !preorder_reach(p, y, x)) {
        return CheckOutcome::fail("pseudo-chain", {x, y});
      }
    }
  }
  return CheckOutcome::pass();
}

/// Greatest element g of `lower` with every element of `lower` ⊴ g.
inline std::optional<Elem> greatest_of(const Psoset& p, Mask lower) {
  for (Elem g : elements_of(lower)) {
    if ((lower & ~p.down_set(g)) == 0) return g;
  }
  return std::nullopt;
}

inline std::optional<Elem> least_of(const Psoset& p, Mask upper) {
  for (Elem g : elements_of(upper)) {
    if ((upper & ~p.up_set(g)) == 0) return g;
  }
  return std::nullopt;
}

/// Infimum of an arbitrary subset (the whole carrier bounds the empty set).
inline std::optional<Elem> infimum(const Psoset& p, Mask subset) {
  Mask lower = p.all();
  for (Elem a : elements_of(subset)) lower &= p.down_set(a);
  return greatest_of(p, lower);
}

inline std::optional<Elem> supremum(const Psoset& p, Mask subset) {
  Mask upper = p.all();
  for (Elem a : elements_of(subset)) upper &= p.up_set(a);
  return least_of(p, upper);
}

// Computed from the bound sets; ⊴ is not transitive so no shortcut applies.
inline std::optional<Elem> meet(const Psoset& p, Elem x, Elem y) {
  return greatest_of(p, p.down_set(x) & p.down_set(y));
}

inline std::optional<Elem> join(const Psoset& p, Elem x, Elem y) {
  return least_of(p, p.up_set(x) & p.up_set(y));
}

/// A psoset in which every pair has a meet and a join.
class Trellis {
 public:
  Trellis() = default;

  const Psoset& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  bool leq(Elem x, Elem y) const noexcept { return order_.leq(x, y); }
  const std::string& label(Elem x) const { return order_.label(x); }
  const std::vector<std::string>& labels() const noexcept { return order_.labels(); }

  Elem meet(Elem x, Elem y) const noexcept { return meet_(x, y); }
  Elem join(Elem x, Elem y) const noexcept { return join_(x, y); }
  const OpTable& meet_table() const noexcept { return meet_; }
  const OpTable& join_table() const noexcept { return join_; }

  friend bool operator==(const Trellis&, const Trellis&) = default;

  friend Trellis to_trellis(const Psoset& p);

 protected:
  Psoset order_;
  OpTable meet_;
  OpTable join_;
};

/// Computes total meet and join tables. Throws NotATrellis listing every
/// pair (x ≤ y by index) that lacks a meet or a join.
inline Trellis to_trellis(const Psoset& p) {
  const auto n = static_cast<Elem>(p.size());
  Trellis t;
  t.order_ = p;
  t.meet_ = OpTable(n);
  t.join_ = OpTable(n);
  std::vector<ElemPair> failing;
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x; y < n; ++y) {
      auto m = meet(p, x, y);
      auto j = join(p, x, y);
      if (!m || !j) {
        failing.emplace_back(x, y);
        continue;
      }
      t.meet_.set(x, y, *m);
      t.meet_.set(y, x, *m);
      t.join_.set(x, y, *j);
      t.join_.set(y, x, *j);
    }
  }
  if (!failing.empty()) {
    std::string msg = "not a trellis: " + std::to_string(failing.size()) +
                      " pair(s) lack a meet or join, first (" + p.label(failing[0].first) +
                      ", " + p.label(failing[0].second) + ")";
    throw Error(ErrorKind::kNotATrellis, msg, std::move(failing));
  }
  return t;
}

class BoundedTrellis : public Trellis {
 public:
  BoundedTrellis() = default;

  /// Detects the smallest and greatest elements; throws NotBounded.
  explicit BoundedTrellis(Trellis t) : Trellis(std::move(t)) {
    auto lo = least_of(order_, order_.all());
    auto hi = greatest_of(order_, order_.all());
    if (!lo || !hi) throw Error(ErrorKind::kNotBounded, "trellis has no bottom or no top");
    bottom_ = *lo;
    top_ = *hi;
  }

  BoundedTrellis(Trellis t, Elem bottom, Elem top) : Trellis(std::move(t)) {
    if (bottom >= size() || top >= size()) throw Error(ErrorKind::kBadIndex, "bad bound index");
    if (order_.up_set(bottom) != order_.all()) {
      throw Error(ErrorKind::kNotBounded, "'" + label(bottom) + "' is not below every element");
    }
    if (order_.down_set(top) != order_.all()) {
      throw Error(ErrorKind::kNotBounded, "'" + label(top) + "' is not above every element");
    }
    bottom_ = bottom;
    top_ = top;
  }

  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  friend bool operator==(const BoundedTrellis&, const BoundedTrellis&) = default;

 private:
  Elem bottom_ = 0;
  Elem top_ = 0;
};

inline BoundedTrellis to_bounded(const Psoset& p) { return BoundedTrellis(to_trellis(p)); }

/// Checks commutativity, absorption and part-preservation of a (meet, join)
/// table pair, plus agreement of the two induced orders.
inline CheckOutcome verify_trellis_axioms(const OpTable& m, const OpTable& j) {
  const auto n = static_cast<Elem>(m.size());
  if (j.size() != m.size()) return CheckOutcome::fail("size", {});
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (m(a, b) != m(b, a)) return CheckOutcome::fail("meet-commutativity", {a, b}, {m(a, b), m(b, a)});
      if (j(a, b) != j(b, a)) return CheckOutcome::fail("join-commutativity", {a, b}, {j(a, b), j(b, a)});
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (j(a, m(b, a)) != a) return CheckOutcome::fail("join-absorption", {a, b}, {j(a, m(b, a)), a});
      if (m(a, j(b, a)) != a) return CheckOutcome::fail("meet-absorption", {a, b}, {m(a, j(b, a)), a});
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        Elem lhs = j(a, j(m(a, b), m(a, c)));
        if (lhs != a) return CheckOutcome::fail("join-part-preservation", {a, b, c}, {lhs, a});
        Elem rhs = m(a, m(j(a, b), j(a, c)));
        if (rhs != a) return CheckOutcome::fail("meet-part-preservation", {a, b, c}, {rhs, a});
      }
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if ((m(a, b) == a) != (j(a, b) == b)) {
        return CheckOutcome::fail("order-consistency", {a, b}, {m(a, b), j(a, b)});
      }
    }
  }
  return CheckOutcome::pass();
}

inline CheckOutcome verify_trellis_axioms(const Trellis& t) {
  return verify_trellis_axioms(t.meet_table(), t.join_table());
}

/// Recovers the pseudo-order a ⊴ b ⇔ meet(a,b) = a from a meet table.
inline Psoset order_from_tables(const OpTable& m, std::vector<std::string> labels) {
  const auto n = static_cast<Elem>(m.size());
  if (labels.size() != n) throw Error(ErrorKind::kBadIndex, "label count does not match table");
  std::vector<ElemPair> pairs;
  for (Elem a = 0; a < n; ++a) {
    if (m(a, a) != a) {
      throw Error(ErrorKind::kInconsistentTable, "meet table is not idempotent at " + labels[a]);
    }
    for (Elem b = 0; b < n; ++b) {
      if (a != b && m(a, b) == a) pairs.emplace_back(a, b);
    }
  }
  try {
    return Psoset::from_pairs(std::move(labels), pairs);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kAntisymmetryViolation) throw;
    throw Error(ErrorKind::kInconsistentTable, e.what(), e.pairs());
  }
}

inline CheckOutcome is_modular(const Trellis& t) {
  const auto n = static_cast<Elem>(t.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (!t.leq(x, z)) continue;
        Elem lhs = t.join(x, t.meet(y, z));
        Elem rhs = t.meet(t.join(x, y), z);
        if (lhs != rhs) return CheckOutcome::fail("modularity", {x, y, z}, {lhs, rhs});
      }
    }
  }
  return CheckOutcome::pass();
}

inline BoundedTrellis dual(const BoundedTrellis& t) {
  Trellis reversed = to_trellis(t.order().reversed());
  return BoundedTrellis(std::move(reversed), t.top(), t.bottom());
}

struct SubsetReport {
  bool subtrellis = false;
  bool sublattice = false;
};

inline SubsetReport subset_check(const Trellis& t, Mask subset) {
  SubsetReport r;
  const auto members = elements_of(subset);
  for (Elem x : members) {
    for (Elem y : members) {
      if (!has(subset, t.meet(x, y)) || !has(subset, t.join(x, y))) return r;
    }
  }
  r.subtrellis = true;
  r.sublattice = true;
  for (Elem x : members) {
    for (Elem y : members) {
      if (!t.leq(x, y)) continue;
      for (Elem z : members) {
        if (t.leq(y, z) && !t.leq(x, z)) {
          r.sublattice = false;
          return r;
        }
      }
    }
  }
  return r;
}

}  // namespace trellis
