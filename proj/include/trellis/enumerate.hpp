#pragma once

// Exhaustive enumeration of (pseudo-)t-norms and (pseudo-)t-conorms on a
// finite bounded trellis, and extremal elements under the pointwise order.

#include <chrono>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "trellis/binop.hpp"
#include "trellis/classify.hpp"
#include "trellis/core.hpp"

namespace trellis {

struct EnumerationTask {
  BoundedTrellis carrier;
  OpClass op_class = OpClass::kTNorm;
  WeakSemantics semantics;
  std::optional<std::size_t> limit;
  bool count_only = false;
  std::size_t free_cell_cap = 36;
  unsigned threads = 1;
};

struct EnumerationResult {
  std::size_t count = 0;
  std::vector<OpTable> tables;
  std::chrono::duration<double> elapsed{0};
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  std::size_t free_cells = 0;
};

namespace detail {

inline constexpr Elem kUnset = 0xFF;

/// Backtracking search for norms (neutral element = top) on one carrier.
/// Conorms are searched as norms on the dual carrier.
class NormSearch {
 public:
  NormSearch(const BoundedTrellis& t, bool pseudo, WeakSemantics sem)
      : t_(t), n_(static_cast<Elem>(t.size())), pseudo_(pseudo), sem_(sem), cls_(classify_elements(t)) {
    const Elem bot = t.bottom();
    const Elem top = t.top();
    // Conjunctivity and the zero boundary follow from monotonicity along
    // (y,1) whenever that pair is quantified over.
    restricted_ = !pseudo || sem.mono == MonoMode::kUpper || sem.mono == MonoMode::kAny;

    base_ = std::vector<Elem>(std::size_t{n_} * n_, kUnset);
    for (Elem x = 0; x < n_; ++x) {
      put(base_, top, x, x);
      if (restricted_ && x != top) put(base_, bot, x, bot);
    }
    for (Elem x = 0; x < n_; ++x) {
      for (Elem y = x; y < n_; ++y) {
        if (x == top || y == top) continue;
        if (restricted_ && (x == bot || y == bot)) continue;
        free_.emplace_back(x, y);
        const Mask allowed = restricted_ ? (t.order().down_set(x) & t.order().down_set(y)) : full_mask(n_);
        candidates_.push_back(elements_of(allowed));
      }
    }

    up_.assign(n_, 0);
    down_.assign(n_, 0);
    for (Elem x = 0; x < n_; ++x) {
      for (Elem y : elements_of(t.order().up_set(x))) {
        if (!pseudo_ || (x != y && mono_guard(sem_.mono, cls_.transitive, x, y))) {
          up_[x] |= bit(y);
          down_[y] |= bit(x);
        }
      }
    }
  }

  std::size_t free_cells() const noexcept { return free_.size(); }
  const std::vector<Elem>& first_candidates() const { return candidates_.front(); }

  /// Runs the search; when `first_value` is set, only that subtree of the
  /// first free cell is explored.
  void run(std::optional<Elem> first_value, std::optional<std::size_t> limit, bool keep,
           EnumerationResult& out) {
    cells_ = base_;
    limit_ = limit;
    keep_ = keep;
    out_ = &out;
    if (!consistent_base()) return;
    if (free_.empty()) {
      emit();
      return;
    }
    descend(0, first_value);
  }

 private:
  Elem get(Elem x, Elem y) const noexcept { return cells_[std::size_t{x} * n_ + y]; }
  void put(std::vector<Elem>& c, Elem x, Elem y, Elem v) const noexcept {
    c[std::size_t{x} * n_ + y] = v;
    c[std::size_t{y} * n_ + x] = v;
  }
  bool done() const noexcept { return limit_ && out_->count >= *limit_; }

  bool rel_ok(Elem a, Elem b) const noexcept { return a == kUnset || b == kUnset || t_.leq(a, b); }

  // Monotonicity constraints that mention cell (x,y), with the first
  // argument varied. Callers also pass the transposed cell.
  bool mono_ok(Elem x, Elem y) const noexcept {
    const Elem v = get(x, y);
    if (pseudo_) {
      for (Elem w : elements_of(up_[x])) {
        if (!rel_ok(v, get(w, y))) return false;
      }
      for (Elem w : elements_of(down_[x])) {
        if (!rel_ok(get(w, y), v)) return false;
      }
      return true;
    }
    for (Elem c : elements_of(up_[x])) {
      for (Elem d : elements_of(up_[y])) {
        if (!rel_ok(v, get(c, d))) return false;
      }
    }
    for (Elem a : elements_of(down_[x])) {
      for (Elem b : elements_of(down_[y])) {
        if (!rel_ok(get(a, b), v)) return false;
      }
    }
    return true;
  }

  bool triple_ok(Elem a, Elem b, Elem c) const noexcept {
    if (pseudo_ && !assoc_guard(sem_.assoc, cls_, a, b, c)) return true;
    const Elem bc = get(b, c);
    const Elem ab = get(a, b);
    if (bc == kUnset || ab == kUnset) return true;
    const Elem lhs = get(a, bc);
    const Elem rhs = get(ab, c);
    return lhs == kUnset || rhs == kUnset || lhs == rhs;
  }

  // Every triple whose evaluation reads cell (p,q) or (q,p) has p or q
  // among its members.
  bool assoc_ok(Elem p, Elem q) const noexcept {
    const Mask touched = bit(p) | bit(q);
    for (Elem a = 0; a < n_; ++a) {
      for (Elem b = 0; b < n_; ++b) {
        const bool ab_touched = has(touched, a) || has(touched, b);
        for (Elem c = 0; c < n_; ++c) {
          if (!ab_touched && !has(touched, c)) continue;
          if (!triple_ok(a, b, c)) return false;
        }
      }
    }
    return true;
  }

  bool consistent_base() const noexcept {
    for (Elem x = 0; x < n_; ++x) {
      for (Elem y = 0; y < n_; ++y) {
        if (get(x, y) != kUnset && !mono_ok(x, y)) return false;
      }
    }
    for (Elem a = 0; a < n_; ++a) {
      for (Elem b = 0; b < n_; ++b) {
        for (Elem c = 0; c < n_; ++c) {
          if (!triple_ok(a, b, c)) return false;
        }
      }
    }
    return true;
  }

  void emit() {
    OpTable table(n_, cells_);
    // Full re-verification of every complete table.
    const OpClass cls = pseudo_ ? OpClass::kPseudoTNorm : OpClass::kTNorm;
    if (!check_class(table, t_, cls_, cls, sem_)) return;
    ++out_->count;
    if (keep_) out_->tables.push_back(std::move(table));
  }

  void descend(std::size_t k, std::optional<Elem> only = std::nullopt) {
    if (k == free_.size()) {
      emit();
      return;
    }
    const auto [x, y] = free_[k];
    for (Elem v : candidates_[k]) {
      if (done()) break;
      if (only && v != *only) continue;
      ++out_->nodes;
      put(cells_, x, y, v);
      if (mono_ok(x, y) && mono_ok(y, x) && assoc_ok(x, y)) {
        descend(k + 1);
      } else {
        ++out_->prunes;
      }
    }
    put(cells_, x, y, kUnset);
  }

  const BoundedTrellis& t_;
  Elem n_;
  bool pseudo_;
  WeakSemantics sem_;
  Classification cls_;
  bool restricted_ = true;
  std::vector<Elem> base_;
  std::vector<Elem> cells_;
  std::vector<ElemPair> free_;
  std::vector<std::vector<Elem>> candidates_;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
  std::optional<std::size_t> limit_;
  bool keep_ = true;
  EnumerationResult* out_ = nullptr;
};

}  // namespace detail

/// Exact, duplicate-free enumeration. Tables come out in lexicographic
/// order of their free cells (row-major upper triangle), independent of the
/// number of threads.
inline EnumerationResult enumerate_ops(const EnumerationTask& task) {
  const auto start = std::chrono::steady_clock::now();
  if (task.limit && *task.limit == 0) throw Error(ErrorKind::kBadIndex, "limit must be at least 1");
  const BoundedTrellis carrier = is_norm(task.op_class) ? task.carrier : dual(task.carrier);
  detail::NormSearch search(carrier, is_pseudo(task.op_class), task.semantics);

  EnumerationResult result;
  result.free_cells = search.free_cells();
  if (search.free_cells() > task.free_cell_cap) {
    throw Error(ErrorKind::kSearchCapExceeded, std::to_string(search.free_cells()) +
                                                   " free cells exceed the cap of " +
                                                   std::to_string(task.free_cell_cap));
  }
  const bool keep = !task.count_only;

  if (task.threads <= 1 || search.free_cells() == 0) {
    search.run(std::nullopt, task.limit, keep, result);
  } else {
    const std::vector<Elem> firsts = search.first_candidates();
    std::vector<EnumerationResult> parts(firsts.size());
    std::vector<std::thread> workers;
    const std::size_t width = std::min<std::size_t>(task.threads, firsts.size());
    for (std::size_t w = 0; w < width; ++w) {
      workers.emplace_back([&, w] {
        detail::NormSearch local(carrier, is_pseudo(task.op_class), task.semantics);
        for (std::size_t i = w; i < firsts.size(); i += width) local.run(firsts[i], task.limit, keep, parts[i]);
      });
    }
    for (auto& th : workers) th.join();
    for (auto& part : parts) {
      result.nodes += part.nodes;
      result.prunes += part.prunes;
      for (auto& tbl : part.tables) {
        if (task.limit && result.tables.size() >= *task.limit) break;
        result.tables.push_back(std::move(tbl));
      }
      result.count += part.count;
    }
    if (task.limit && result.count > *task.limit) result.count = *task.limit;
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

struct Extremes {
  std::vector<std::size_t> maximal;  // indices into the input list
  std::vector<std::size_t> minimal;
  std::optional<std::size_t> greatest;
  std::optional<std::size_t> smallest;
};

/// Maximal and minimal tables under the pointwise order, plus the greatest
/// and smallest when they exist.
inline Extremes extremes(const std::vector<OpTable>& tables, const Trellis& carrier) {
  Extremes ex;
  const std::size_t k = tables.size();
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) leq[i][j] = i == j || pointwise_leq(tables[i], tables[j], carrier.order()).holds;
  }
  for (std::size_t i = 0; i < k; ++i) {
    bool is_max = true;
    bool is_min = true;
    bool is_greatest = true;
    bool is_smallest = true;
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      if (leq[i][j] && !leq[j][i]) is_max = false;
      if (leq[j][i] && !leq[i][j]) is_min = false;
      if (!leq[j][i]) is_greatest = false;
      if (!leq[i][j]) is_smallest = false;
    }
    if (is_max) ex.maximal.push_back(i);
    if (is_min) ex.minimal.push_back(i);
    if (is_greatest && !ex.greatest) ex.greatest = i;
    if (is_smallest && !ex.smallest) ex.smallest = i;
  }
  return ex;
}

}  // namespace trellis
