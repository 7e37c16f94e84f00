#pragma once

// Property suites run over the fixture corpus. Each suite counts the
// instances it checked and the violations it found; the first violation is
// kept as a readable message.

#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fixtures.hpp"
#include "trellis/binop.hpp"
#include "trellis/classify.hpp"
#include "trellis/construct.hpp"
#include "trellis/enumerate.hpp"
#include "trellis/morph.hpp"

namespace trellis::testing {

struct SuiteResult {
  explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

  std::string name;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::string first_violation;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && violations++ == 0) first_violation = what;
  }
  bool passed() const { return violations == 0 && checks > 0; }
};

/// Largest carrier on which the pseudo classes are enumerated in full.
inline constexpr std::size_t kPseudoSweepMax = 6;
/// Largest carrier for the distributivity sweeps.
inline constexpr std::size_t kDistribSweepMax = 6;

/// Loads fixtures and caches enumerations.
class Workspace {
 public:
  const BoundedTrellis& get(const std::string& name) {
    auto it = trellises_.find(name);
    if (it == trellises_.end()) it = trellises_.emplace(name, load(name)).first;
    return it->second;
  }

  const std::vector<OpTable>& ops(const std::string& name, OpClass cls, WeakSemantics sem = {}) {
    const auto key = std::make_tuple(name, static_cast<int>(cls), static_cast<int>(sem.mono), static_cast<int>(sem.assoc));
    auto it = ops_.find(key);
    if (it == ops_.end()) {
      EnumerationTask task{get(name), cls, sem, std::nullopt, false, 36, 4};
      it = ops_.emplace(key, enumerate_ops(task).tables).first;
    }
    return it->second;
  }

  std::vector<std::string> fixtures_up_to(std::size_t n) {
    std::vector<std::string> out;
    for (const auto& name : all_fixtures()) {
      if (get(name).size() <= n) out.push_back(name);
    }
    return out;
  }

 private:
  std::map<std::string, BoundedTrellis> trellises_;
  std::map<std::tuple<std::string, int, int, int>, std::vector<OpTable>> ops_;
};

inline std::string where(const std::string& fixture, const std::string& detail) { return fixture + ": " + detail; }

inline std::string describe(const Trellis& t, const CheckOutcome& r) {
  return r.witness ? cli::witness_text(t.order(), *r.witness) : std::string("no witness");
}

inline std::string table_index(std::size_t i) { return "table #" + std::to_string(i); }

// Every pseudo-t-norm is conjunctive; every pseudo-t-conorm is disjunctive.
inline SuiteResult suite_conjunctivity(Workspace& ws, WeakSemantics sem) {
  SuiteResult r{"conjunctivity of pseudo-t-norms"};
  for (const auto& name : ws.fixtures_up_to(kPseudoSweepMax)) {
    const auto& t = ws.get(name);
    const auto& norms = ws.ops(name, OpClass::kPseudoTNorm, sem);
    for (std::size_t i = 0; i < norms.size(); ++i) {
      const auto c = is_conjunctive(norms[i], t);
      r.check(c.holds, where(name, table_index(i) + " " + describe(t, c)));
    }
    const auto& conorms = ws.ops(name, OpClass::kPseudoTConorm, sem);
    for (std::size_t i = 0; i < conorms.size(); ++i) {
      const auto c = is_disjunctive(conorms[i], t);
      r.check(c.holds, where(name, "conorm " + table_index(i) + " " + describe(t, c)));
    }
  }
  for (const auto& name : all_fixtures()) {
    const auto& t = ws.get(name);
    for (const auto& f : ws.ops(name, OpClass::kTNorm)) r.check(is_conjunctive(f, t).holds, where(name, "t-norm"));
  }
  return r;
}

// F(x,0) = F(0,x) = 0 for pseudo-t-norms; dually 1 for pseudo-t-conorms.
inline SuiteResult suite_boundary(Workspace& ws, WeakSemantics sem) {
  SuiteResult r{"zero row and column"};
  for (const auto& name : ws.fixtures_up_to(kPseudoSweepMax)) {
    const auto& t = ws.get(name);
    for (const auto& f : ws.ops(name, OpClass::kPseudoTNorm, sem)) {
      r.check(is_absorbing(f, t.bottom()).holds, where(name, "pseudo-t-norm without absorbing 0"));
    }
    for (const auto& f : ws.ops(name, OpClass::kPseudoTConorm, sem)) {
      r.check(is_absorbing(f, t.top()).holds, where(name, "pseudo-t-conorm without absorbing 1"));
    }
  }
  for (const auto& name : all_fixtures()) {
    const auto& t = ws.get(name);
    for (const auto& f : ws.ops(name, OpClass::kTNorm)) {
      r.check(is_absorbing(f, t.bottom()).holds, where(name, "t-norm without absorbing 0"));
    }
  }
  return r;
}

// T_D ⊴ F ⊴ ∧ for pseudo-t-norms; ∨ ⊴ S ⊴ S_D for pseudo-t-conorms.
inline SuiteResult suite_bounds(Workspace& ws, WeakSemantics sem) {
  SuiteResult r{"drastic and meet bounds"};
  for (const auto& name : ws.fixtures_up_to(kPseudoSweepMax)) {
    const auto& t = ws.get(name);
    const OpTable td = t_drastic(t);
    const OpTable sd = s_drastic(t);
    for (const auto& f : ws.ops(name, OpClass::kPseudoTNorm, sem)) {
      r.check(pointwise_leq(td, f, t.order()).holds, where(name, "T_D not below a pseudo-t-norm"));
      r.check(pointwise_leq(f, t.meet_table(), t.order()).holds, where(name, "pseudo-t-norm not below the meet"));
    }
    for (const auto& f : ws.ops(name, OpClass::kPseudoTConorm, sem)) {
      r.check(pointwise_leq(t.join_table(), f, t.order()).holds, where(name, "join not below a pseudo-t-conorm"));
      r.check(pointwise_leq(f, sd, t.order()).holds, where(name, "pseudo-t-conorm not below S_D"));
    }
  }
  for (const auto& name : all_fixtures()) {
    const auto& t = ws.get(name);
    const OpTable td = t_drastic(t);
    for (const auto& f : ws.ops(name, OpClass::kTNorm)) {
      r.check(pointwise_leq(td, f, t.order()).holds && pointwise_leq(f, t.meet_table(), t.order()).holds,
              where(name, "t-norm outside [T_D, meet]"));
    }
  }
  return r;
}

// T_e for every ∧-associative e and S_e for every ∨-associative e.
inline SuiteResult suite_param(Workspace& ws, WeakSemantics sem) {
  SuiteResult r{"T_e and S_e on associative parameters"};
  for (const auto& name : all_fixtures()) {
    const auto& t = ws.get(name);
    const Classification c = classify_elements(t);
    for (Elem e : elements_of(c.meet_associative)) {
      const auto out = check_class(t_param(t, e).op, t, c, OpClass::kPseudoTNorm, sem);
      r.check(out.holds, where(name, "T_" + t.label(e) + " " + describe(t, out)));
    }
    for (Elem e : elements_of(c.join_associative)) {
      const auto out = check_class(s_param(t, e).op, t, c, OpClass::kPseudoTConorm, sem);
      r.check(out.holds, where(name, "S_" + t.label(e) + " " + describe(t, out)));
    }
    r.check(t_param(t, t.bottom()).op == t_drastic(t), where(name, "T_0 differs from T_D"));
    r.check(t_param(t, t.top()).op == t.meet_table(), where(name, "T_1 differs from the meet"));
    r.check(s_param(t, t.bottom()).op == t.join_table(), where(name, "S_0 differs from the join"));
    r.check(s_param(t, t.top()).op == s_drastic(t), where(name, "S_1 differs from S_D"));
  }
  return r;
}

// Z and Z* on modular carriers.
inline SuiteResult suite_z(Workspace& ws, WeakSemantics sem) {
  SuiteResult r{"Z and Z* on modular trellises"};
  for (const auto& name : all_fixtures()) {
    const auto& t = ws.get(name);
    if (!is_modular(t).holds) continue;
    const auto z = check_class(z_norm(t).op, t, OpClass::kPseudoTNorm, sem);
    r.check(z.holds, where(name, "Z " + describe(t, z)));
    const auto zs = check_class(z_conorm(t).op, t, OpClass::kPseudoTConorm, sem);
    r.check(zs.holds, where(name, "Z* " + describe(t, zs)));
  }
  return r;
}

// Ordinal sums over every associative split point and every sub-operation
// on the interval. The piecewise description is compared cell by cell.
inline SuiteResult suite_ordinal(Workspace& ws, WeakSemantics sem) {
  SuiteResult r{"ordinal sums"};
  std::size_t mismatched = 0;
  std::size_t compared = 0;
  std::string first_mismatch;
  for (const auto& name : all_fixtures()) {
    const auto& t = ws.get(name);
    const Classification c = classify_elements(t);
    for (Elem a : elements_of(c.associative & ~bit(t.bottom()) & ~bit(t.top()))) {
      const Interval upper = interval(t, a, t.top());
      const Interval lower = interval(t, t.bottom(), a);
      r.check(subset_check(t, t.order().up_set(a)).subtrellis, where(name, "[a,1] not a subtrellis"));
      EnumerationTask vt{upper.trellis, OpClass::kPseudoTNorm, sem, std::nullopt, false, 36, 1};
      for (const auto& v : enumerate_ops(vt).tables) {
        const OpTable sum = ordinal_sum_norm(t, a, v, sem);
        const auto out = check_class(sum, t, c, OpClass::kPseudoTNorm, sem);
        r.check(out.holds, where(name, "a=" + t.label(a) + " " + describe(t, out)));
        ++compared;
        if (ordinal_sum_norm_piecewise(t, a, v) != sum && mismatched++ == 0) {
          first_mismatch = where(name, "a=" + t.label(a));
        }
      }
      EnumerationTask wt{lower.trellis, OpClass::kPseudoTConorm, sem, std::nullopt, false, 36, 1};
      for (const auto& w : enumerate_ops(wt).tables) {
        const OpTable sum = ordinal_sum_conorm(t, a, w, sem);
        const auto out = check_class(sum, t, c, OpClass::kPseudoTConorm, sem);
        r.check(out.holds, where(name, "conorm a=" + t.label(a) + " " + describe(t, out)));
      }
    }
  }
  r.notes.push_back("piecewise form differs from the definition on " + std::to_string(mismatched) + " of " +
                    std::to_string(compared) + " ordinal sums" +
                    (mismatched ? " (first: " + first_mismatch + ")" : std::string()));
  return r;
}

// T_D distributes over every pseudo-t-norm.
inline SuiteResult suite_drastic_distrib(Workspace& ws, WeakSemantics sem) {
  SuiteResult r{"T_D distributes over pseudo-t-norms"};
  for (const auto& name : ws.fixtures_up_to(kDistribSweepMax)) {
    const auto& t = ws.get(name);
    const OpTable td = t_drastic(t);
    for (const auto& f : ws.ops(name, OpClass::kPseudoTNorm, sem)) {
      const auto out = distributes_over(td, f, t);
      r.check(out.holds, where(name, describe(t, out)));
    }
  }
  return r;
}

// A pseudo-t-norm distributing over a t-norm lies below it.
inline SuiteResult suite_distrib_dominance(Workspace& ws, WeakSemantics sem) {
  SuiteResult r{"distributivity implies pointwise dominance"};
  for (const auto& name : ws.fixtures_up_to(kDistribSweepMax)) {
    const auto& t = ws.get(name);
    const auto& norms = ws.ops(name, OpClass::kTNorm);
    for (const auto& f : ws.ops(name, OpClass::kPseudoTNorm, sem)) {
      for (const auto& g : norms) {
        if (!distributes_over(f, g, t).holds) continue;
        r.check(pointwise_leq(f, g, t.order()).holds, where(name, "distributive pseudo-t-norm above a t-norm"));
      }
    }
  }
  return r;
}

// Isomorphic fixture pairs for the transport suite.
inline const std::vector<std::pair<std::string, std::string>>& isomorphic_pairs() {
  static const std::vector<std::pair<std::string, std::string>> pairs = {
      {"C5D", "C5D-perm"}, {"PC8", "PC8-perm"}, {"TR8", "TR8-perm"}, {"CYC5", "CYC5-perm"}, {"M4", "M4"}};
  return pairs;
}

// Isomorphisms carry transitive elements, associative triples and class
// membership across, and preserve the pointwise order.
inline SuiteResult suite_transport(Workspace& ws, WeakSemantics sem) {
  SuiteResult r{"transport along isomorphisms"};
  for (const auto& [n1, n2] : isomorphic_pairs()) {
    const auto& x1 = ws.get(n1);
    const auto& x2 = ws.get(n2);
    const auto isos = find_isomorphisms(x1, x2);
    r.check(!isos.empty(), n1 + " and " + n2 + " are not isomorphic");
    const Classification c1 = classify_elements(x1);
    const Classification c2 = classify_elements(x2);

    std::vector<std::pair<OpTable, OpClass>> ops;
    auto add = [&](const OpTable& f, OpClass cls) {
      if (check_class(f, x2, c2, cls, sem).holds) ops.emplace_back(f, cls);
    };
    for (const auto& f : ws.ops(n2, OpClass::kTNorm)) add(f, OpClass::kTNorm);
    for (const auto& f : ws.ops(n2, OpClass::kTConorm)) add(f, OpClass::kTConorm);
    if (x2.size() <= kPseudoSweepMax) {
      for (const auto& f : ws.ops(n2, OpClass::kPseudoTNorm, sem)) add(f, OpClass::kPseudoTNorm);
      for (const auto& f : ws.ops(n2, OpClass::kPseudoTConorm, sem)) add(f, OpClass::kPseudoTConorm);
    }
    for (Elem e : elements_of(c2.meet_associative)) add(t_param(x2, e).op, OpClass::kPseudoTNorm);
    for (Elem e : elements_of(c2.join_associative)) add(s_param(x2, e).op, OpClass::kPseudoTConorm);

    for (const auto& rho : isos) {
      const auto ctx = where(n1, "map " + cli::map_text(rho, x1.order(), x2.order()));
      r.check(check_isomorphism(x2, x1, inverse(rho)).holds, ctx + " inverse is not an isomorphism");
      Mask image = 0;
      for (Elem x : elements_of(c1.transitive)) image |= bit(rho(x));
      r.check((image & ~c2.transitive) == 0, ctx + " moves a transitive element");
      for (Elem x = 0; x < x1.size(); ++x) {
        for (Elem y = 0; y < x1.size(); ++y) {
          for (Elem z = 0; z < x1.size(); ++z) {
            const bool m1 = x1.meet(x, x1.meet(y, z)) == x1.meet(x1.meet(x, y), z);
            const bool m2 = x2.meet(rho(x), x2.meet(rho(y), rho(z))) == x2.meet(x2.meet(rho(x), rho(y)), rho(z));
            const bool j1 = x1.join(x, x1.join(y, z)) == x1.join(x1.join(x, y), z);
            const bool j2 = x2.join(rho(x), x2.join(rho(y), rho(z))) == x2.join(x2.join(rho(x), rho(y)), rho(z));
            r.check(m1 == m2 && j1 == j2, ctx + " changes triple associativity");
          }
        }
      }
      std::vector<OpTable> moved;
      for (const auto& [f, cls] : ops) {
        const OpTable g = transport(f, x1, x2, rho);
        const auto out = check_class(g, x1, c1, cls, sem);
        r.check(out.holds, ctx + " " + std::string(to_string(cls)) + " " + describe(x1, out));
        r.check(transport(g, x2, x1, inverse(rho)) == f, ctx + " transport is not invertible");
        moved.push_back(g);
      }
      for (std::size_t i = 0; i < ops.size() && i < 40; ++i) {
        for (std::size_t j = 0; j < ops.size() && j < 40; ++j) {
          const bool before = pointwise_leq(ops[i].first, ops[j].first, x2.order()).holds;
          const bool after = pointwise_leq(moved[i], moved[j], x1.order()).holds;
          r.check(before == after, ctx + " changes the pointwise order");
        }
      }
    }
  }
  return r;
}

// Every t-norm maps a cycle outside itself and is constant on it.
inline SuiteResult suite_cycle_collapse(Workspace& ws, WeakSemantics) {
  SuiteResult r{"cycle collapse under t-norms"};
  for (const auto& name : all_fixtures()) {
    const auto& t = ws.get(name);
    const auto cs = cycles(t.order());
    if (cs.empty()) continue;
    const bool complete = is_complete(t).holds;
    for (const auto& f : ws.ops(name, OpClass::kTNorm)) {
      for (const auto& cyc : cs) {
        const Mask m = cyc.mask();
        const Elem v = f(cyc.elements[0], cyc.elements[0]);
        for (Elem x : cyc.elements) {
          for (Elem y : cyc.elements) {
            r.check(!has(m, f(x, y)), where(name, "T(x,y) lies on the cycle"));
            r.check(f(x, y) == v, where(name, "T is not constant on the cycle"));
          }
        }
      }
      if (!complete) continue;
      // T(x,y) ⊴ T(m,m) with m the infimum of the cycles through x and y.
      for (Elem x = 0; x < t.size(); ++x) {
        for (Elem y = 0; y < t.size(); ++y) {
          Mask u = 0;
          for (const auto& cyc : cs) {
            if (has(cyc.mask(), x) && has(cyc.mask(), y)) u |= cyc.mask();
          }
          if (u == 0) continue;
          const auto m = infimum(t.order(), u);
          r.check(m.has_value(), where(name, "cycle union without infimum"));
          if (m) r.check(t.leq(f(x, y), f(*m, *m)), where(name, "T(x,y) above T(m,m)"));
        }
      }
    }
  }
  return r;
}

// Trellises that are not lattices carry no idempotent t-norm.
inline SuiteResult suite_no_idempotent(Workspace& ws, WeakSemantics) {
  SuiteResult r{"no idempotent t-norm off lattices"};
  for (const auto& name : all_fixtures()) {
    const auto& t = ws.get(name);
    if (t.order().is_transitive()) continue;
    for (const auto& f : ws.ops(name, OpClass::kTNorm)) r.check(!is_idempotent(f).holds, where(name, "idempotent t-norm"));
  }
  return r;
}

// Membership in a norm class on X equals membership in the conorm class
// on the dual, and no table is both a pseudo-t-norm and a pseudo-t-conorm.
inline SuiteResult suite_duality(Workspace& ws, WeakSemantics sem) {
  SuiteResult r{"duality and disjointness"};
  for (const auto& name : ws.fixtures_up_to(kPseudoSweepMax)) {
    const auto& t = ws.get(name);
    const BoundedTrellis d = dual(t);
    const Classification cd = classify_elements(d);
    for (const auto& f : ws.ops(name, OpClass::kPseudoTNorm, sem)) {
      r.check(check_class(f, d, cd, OpClass::kPseudoTConorm, sem).holds, where(name, "dual of a pseudo-t-norm"));
      r.check(!check_class(f, t, OpClass::kPseudoTConorm, sem).holds, where(name, "both a norm and a conorm"));
    }
    for (const auto& f : ws.ops(name, OpClass::kTNorm)) {
      r.check(check_class(f, d, cd, OpClass::kTConorm, sem).holds, where(name, "dual of a t-norm"));
    }
  }
  return r;
}

// A pseudo-t-conorm distributing over a pseudo-t-norm forces the norm to
// be idempotent, and dually. The implication is checked with the pairs
// (0,0) and (1,1) included; the note counts pairs that distribute only in
// the restricted sense and break the implication.
inline SuiteResult suite_distrib_idempotent(Workspace& ws, WeakSemantics sem) {
  SuiteResult r{"distributivity forces idempotency"};
  std::size_t restricted_only = 0;
  std::string first_restricted;
  for (const auto& name : ws.fixtures_up_to(kDistribSweepMax)) {
    const auto& t = ws.get(name);
    const auto& norms = ws.ops(name, OpClass::kPseudoTNorm, sem);
    const auto& conorms = ws.ops(name, OpClass::kPseudoTConorm, sem);
    for (const auto& tn : norms) {
      const bool tn_idem = is_idempotent(tn).holds;
      for (const auto& sn : conorms) {
        const bool sn_idem = is_idempotent(sn).holds;
        if (!tn_idem && distributes_over(sn, tn, t).holds) {
          r.check(!distributes_over(sn, tn, t, true).holds, where(name, "S over non-idempotent T"));
          if (restricted_only++ == 0) first_restricted = name;
        }
        if (!sn_idem && distributes_over(tn, sn, t).holds) {
          r.check(!distributes_over(tn, sn, t, true).holds, where(name, "T over non-idempotent S"));
          if (restricted_only++ == 0) first_restricted = name;
        }
        ++r.checks;
      }
    }
  }
  r.notes.push_back(std::to_string(restricted_only) +
                    " pairs distribute when (0,0) and (1,1) are skipped yet break idempotency" +
                    (restricted_only ? " (first on " + first_restricted + ")" : std::string()));
  return r;
}

// An idempotent pseudo-t-norm with T(x∧y, x∧y) ⊴ T(x,y) is the meet.
inline SuiteResult suite_meet_characterization(Workspace& ws, WeakSemantics sem) {
  SuiteResult r{"meet and join characterization"};
  for (const auto& name : ws.fixtures_up_to(kPseudoSweepMax)) {
    const auto& t = ws.get(name);
    for (const auto& f : ws.ops(name, OpClass::kPseudoTNorm, sem)) {
      const auto out = meet_characterization(f, t, sem);
      r.check(out.holds, where(name, describe(t, out)));
    }
    for (const auto& f : ws.ops(name, OpClass::kPseudoTConorm, sem)) {
      const auto out = join_characterization(f, t, sem);
      r.check(out.holds, where(name, describe(t, out)));
    }
  }
  return r;
}

using Suite = SuiteResult (*)(Workspace&, WeakSemantics);

/// The suites named by the acceptance criteria, in order.
inline const std::vector<Suite>& acceptance_suites() {
  static const std::vector<Suite> suites = {suite_conjunctivity,   suite_boundary,       suite_bounds,
                                            suite_param,           suite_z,              suite_ordinal,
                                            suite_drastic_distrib, suite_distrib_dominance, suite_transport,
                                            suite_cycle_collapse,  suite_no_idempotent};
  return suites;
}

/// Further invariants checked alongside.
inline const std::vector<Suite>& extra_suites() {
  static const std::vector<Suite> suites = {suite_duality, suite_distrib_idempotent, suite_meet_characterization};
  return suites;
}

}  // namespace trellis::testing
