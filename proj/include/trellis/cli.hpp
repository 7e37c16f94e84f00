#pragma once

// Command-line front end. Exit codes: 0 success or property holds,
// 1 property fails, 2 input or usage error.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "trellis/binop.hpp"
#include "trellis/classify.hpp"
#include "trellis/construct.hpp"
#include "trellis/core.hpp"
#include "trellis/enumerate.hpp"
#include "trellis/io.hpp"
#include "trellis/morph.hpp"

namespace trellis::cli {

using json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kSchemaVersion = 1;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParse, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string with_path(const std::string& path, const std::string& msg) { return path + ": " + msg; }

inline StructureFile load_structure(const std::string& path) {
  try {
    return parse_structure(read_file(path));
  } catch (const Error& e) {
    throw Error(e.kind(), with_path(path, e.what()), e.pairs());
  }
}

inline BoundedTrellis load_trellis(const std::string& path) {
  const StructureFile s = load_structure(path);
  try {
    return to_bounded(s);
  } catch (const Error& e) {
    throw Error(e.kind(), with_path(path, e.what()), e.pairs());
  }
}

inline OpTable load_op(const std::string& path, const Psoset& carrier) {
  try {
    return parse_op(read_file(path), carrier);
  } catch (const Error& e) {
    throw Error(e.kind(), with_path(path, e.what()), e.pairs());
  }
}

inline json labels_json(const Psoset& p, const std::vector<Elem>& ids) {
  json out = json::array();
  for (Elem e : ids) out.push_back(p.label(e));
  return out;
}

inline std::string labels_text(const Psoset& p, const std::vector<Elem>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? ", " : "") + p.label(ids[i]);
  return out;
}

inline std::string set_text(const Psoset& p, Mask m) { return "{" + labels_text(p, elements_of(m)) + "}"; }

inline json witness_json(const Psoset& p, const Witness& w) {
  return {{"property", w.property}, {"args", labels_json(p, w.args)}, {"values", labels_json(p, w.values)}};
}

inline std::string witness_text(const Psoset& p, const Witness& w) {
  std::string out = w.property + " at (" + labels_text(p, w.args) + ")";
  if (w.values.size() == 2) out += ": " + p.label(w.values[0]) + " vs " + p.label(w.values[1]);
  else if (!w.values.empty()) out += ": " + labels_text(p, w.values);
  return out;
}

inline json outcome_json(const Psoset& p, const CheckOutcome& c) {
  json out = {{"holds", c.holds}};
  out["witness"] = c.witness ? witness_json(p, *c.witness) : json(nullptr);
  return out;
}

inline std::string outcome_text(const Psoset& p, const CheckOutcome& c) {
  return c.holds ? "holds" : "fails: " + (c.witness ? witness_text(p, *c.witness) : std::string("no witness"));
}

inline json table_json(const OpTable& f, const Psoset& p) {
  json rows = json::array();
  const auto n = static_cast<Elem>(f.size());
  for (Elem x = 0; x < n; ++x) {
    json row = json::array();
    for (Elem y = 0; y < n; ++y) row.push_back(p.label(f(x, y)));
    rows.push_back(row);
  }
  return rows;
}

inline json semantics_json(WeakSemantics s) {
  return {{"mono_mode", std::string(to_string(s.mono))}, {"assoc_mode", std::string(to_string(s.assoc))}};
}

inline std::string semantics_text(WeakSemantics s) {
  return "mono-mode " + std::string(to_string(s.mono)) + ", assoc-mode " + std::string(to_string(s.assoc));
}

/// Parses "x=y,u=v" into a map from `src` ids to `dst` ids.
inline TrellisMap parse_map(const std::string& text, const Psoset& src, const Psoset& dst) {
  TrellisMap m;
  m.image.assign(src.size(), 0);
  Mask assigned = 0;
  std::string spec = text;
  std::replace(spec.begin(), spec.end(), ',', ' ');
  for (const auto& item : detail::split_ws(spec)) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::kParse, "map entry '" + item + "' lacks '='");
    const auto x = src.index_of(item.substr(0, eq));
    const auto y = dst.index_of(item.substr(eq + 1));
    if (!x || !y) throw Error(ErrorKind::kParse, "map entry '" + item + "' names an unknown label");
    if (has(assigned, *x)) throw Error(ErrorKind::kParse, "map assigns '" + src.label(*x) + "' twice");
    m.image[*x] = *y;
    assigned |= bit(*x);
  }
  if (assigned != src.all()) throw Error(ErrorKind::kParse, "map is not total");
  return m;
}

inline std::string map_text(const TrellisMap& m, const Psoset& src, const Psoset& dst) {
  std::string out;
  for (std::size_t i = 0; i < m.image.size(); ++i) {
    out += (i ? "," : "") + src.label(static_cast<Elem>(i)) + "=" + dst.label(m.image[i]);
  }
  return out;
}

/// Shared state filled by CLI11 option callbacks.
struct Options {
  bool json = false;
  std::string structure;
  std::string structure2;
  std::string op;
  std::string op2;
  std::string op_class;
  std::string property;
  std::string mono_mode = "upper";
  std::string assoc_mode = "any";
  std::string kind;
  std::string param;
  std::string sub_op;
  std::string source;
  std::string map;
  bool count_only = false;
  std::size_t limit = 0;
  std::size_t cap = 36;
  unsigned threads = 1;
  bool show_extremes = false;
  bool dot = false;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  WeakSemantics semantics() const {
    WeakSemantics s;
    const auto m = parse_mono_mode(o_.mono_mode);
    const auto a = parse_assoc_mode(o_.assoc_mode);
    if (!m) throw Error(ErrorKind::kParse, "unknown mono mode '" + o_.mono_mode + "'");
    if (!a) throw Error(ErrorKind::kParse, "unknown assoc mode '" + o_.assoc_mode + "'");
    s.mono = *m;
    s.assoc = *a;
    return s;
  }

  OpClass op_class() const {
    const auto c = parse_op_class(o_.op_class);
    if (!c) throw Error(ErrorKind::kParse, "unknown class '" + o_.op_class + "'");
    return *c;
  }

  Elem element(const Psoset& p, const std::string& name) const {
    const auto e = p.index_of(name);
    if (!e) throw Error(ErrorKind::kParse, "unknown element '" + name + "'");
    return *e;
  }

  int emit(json report, const std::string& text, int code) {
    if (o_.json) {
      json full = {{"schema", kSchemaVersion}};
      for (auto& [k, v] : report.items()) full[k] = v;
      out_ << full.dump(2) << '\n';
    } else {
      out_ << text;
    }
    return code;
  }

  int validate() {
    const StructureFile s = load_structure(o_.structure);
    const Psoset& p = s.order;
    json report = {{"command", "validate"}, {"elements", p.size()}, {"psoset", true}};
    std::ostringstream text;
    text << "psoset: " << p.size() << " elements, " << p.strict_pairs().size() << " strict pairs\n";
    const auto chain = is_pseudo_chain(p);
    report["pseudo_chain"] = outcome_json(p, chain);
    text << "pseudo-chain: " << outcome_text(p, chain) << '\n';
    report["transitive"] = p.is_transitive();
    text << "transitive: " << (p.is_transitive() ? "yes" : "no") << '\n';
    try {
      const BoundedTrellis t = to_bounded(s);
      const auto axioms = verify_trellis_axioms(t);
      report["trellis"] = true;
      report["bounded"] = true;
      report["bottom"] = t.label(t.bottom());
      report["top"] = t.label(t.top());
      report["axioms"] = outcome_json(p, axioms);
      text << "trellis: yes\nbounded: yes (bottom " << t.label(t.bottom()) << ", top " << t.label(t.top()) << ")\n";
      text << "axioms: " << outcome_text(p, axioms) << '\n';
      report["verdict"] = axioms.holds ? "holds" : "fails";
      return emit(report, text.str(), axioms.holds ? kExitOk : kExitFails);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kNotATrellis && e.kind() != ErrorKind::kNotBounded) throw;
      json pairs = json::array();
      for (auto [x, y] : e.pairs()) pairs.push_back({p.label(x), p.label(y)});
      report["trellis"] = e.kind() != ErrorKind::kNotATrellis;
      report["bounded"] = false;
      report["error"] = e.what();
      report["failing_pairs"] = pairs;
      report["verdict"] = "fails";
      text << "fails: " << e.what() << '\n';
      return emit(report, text.str(), kExitFails);
    }
  }

  int info() {
    const BoundedTrellis t = load_trellis(o_.structure);
    const Psoset& p = t.order();
    const Classification c = classify_elements(t);
    const auto cyc = cycles(p);
    const auto modular = is_modular(t);
    const auto complete = is_complete(t);
    const auto chain = is_pseudo_chain(p);

    json elements = json::array();
    std::ostringstream text;
    text << "elements: " << labels_text(p, elements_of(p.all())) << '\n';
    text << "bottom: " << t.label(t.bottom()) << "\ntop: " << t.label(t.top()) << '\n';
    text << "element  r-tr l-tr m-tr tr  meet-ass join-ass ass atom coatom\n";
    for (Elem x = 0; x < t.size(); ++x) {
      const ElementClass& e = c.elements[x];
      elements.push_back({{"label", t.label(x)},
                          {"right_transitive", e.right_transitive},
                          {"left_transitive", e.left_transitive},
                          {"middle_transitive", e.middle_transitive},
                          {"transitive", e.transitive},
                          {"meet_associative", e.meet_associative},
                          {"join_associative", e.join_associative},
                          {"associative", e.associative},
                          {"atom", e.atom},
                          {"coatom", e.coatom}});
      auto yn = [](bool b) { return b ? "y" : "-"; };
      char line[128];
      std::snprintf(line, sizeof line, "%-8s %-4s %-4s %-4s %-3s %-8s %-8s %-3s %-4s %s\n", t.label(x).c_str(),
                    yn(e.right_transitive), yn(e.left_transitive), yn(e.middle_transitive), yn(e.transitive),
                    yn(e.meet_associative), yn(e.join_associative), yn(e.associative), yn(e.atom), yn(e.coatom));
      text << line;
    }
    json cycles_json = json::array();
    for (const auto& cy : cyc) cycles_json.push_back(labels_json(p, cy.elements));
    text << "transitive elements: " << set_text(p, c.transitive) << '\n';
    text << "associative elements: " << set_text(p, c.associative) << '\n';
    text << "atoms: " << set_text(p, c.atoms) << "\ncoatoms: " << set_text(p, c.coatoms) << '\n';
    text << "cycles: " << cyc.size() << '\n';
    for (const auto& cy : cyc) text << "  " << labels_text(p, cy.elements) << '\n';
    text << "lattice: " << (p.is_transitive() ? "yes" : "no") << '\n';
    text << "pseudo-chain: " << outcome_text(p, chain) << '\n';
    text << "modular: " << outcome_text(p, modular) << '\n';
    text << "complete: " << outcome_text(p, complete) << '\n';
    if (o_.dot) text << to_dot(p);

    json report = {{"command", "info"},
                   {"elements", elements},
                   {"bottom", t.label(t.bottom())},
                   {"top", t.label(t.top())},
                   {"transitive", labels_json(p, elements_of(c.transitive))},
                   {"associative", labels_json(p, elements_of(c.associative))},
                   {"atoms", labels_json(p, elements_of(c.atoms))},
                   {"coatoms", labels_json(p, elements_of(c.coatoms))},
                   {"cycles", cycles_json},
                   {"lattice", p.is_transitive()},
                   {"pseudo_chain", outcome_json(p, chain)},
                   {"modular", outcome_json(p, modular)},
                   {"complete", outcome_json(p, complete)}};
    if (o_.dot) report["dot"] = to_dot(p);
    return emit(report, text.str(), kExitOk);
  }

  int table(bool meet) {
    const BoundedTrellis t = load_trellis(o_.structure);
    const OpTable& f = meet ? t.meet_table() : t.join_table();
    return emit({{"command", meet ? "meet-table" : "join-table"}, {"labels", t.labels()}, {"table", table_json(f, t.order())}},
                serialize_op(f, t.order()), kExitOk);
  }

  int dual_cmd() {
    const BoundedTrellis d = dual(load_trellis(o_.structure));
    json pairs = json::array();
    for (auto [x, y] : d.order().strict_pairs()) pairs.push_back({d.label(x), d.label(y)});
    return emit({{"command", "dual"},
                 {"labels", d.labels()},
                 {"bottom", d.label(d.bottom())},
                 {"top", d.label(d.top())},
                 {"relation", pairs}},
                serialize_structure(d), kExitOk);
  }

  int check_op() {
    const BoundedTrellis t = load_trellis(o_.structure);
    const Psoset& p = t.order();
    const OpTable f = load_op(o_.op, p);
    const WeakSemantics sem = semantics();
    json report = {{"command", "check-op"}};
    std::ostringstream text;

    if (!o_.property.empty()) {
      const Classification c = classify_elements(t);
      CheckOutcome r;
      const std::string& q = o_.property;
      bool weak = false;
      if (q == "commutative") r = is_commutative(f);
      else if (q == "associative") r = is_associative(f);
      else if (q == "idempotent") r = is_idempotent(f);
      else if (q == "increasing") r = is_increasing(f, p);
      else if (q == "increasing-separately") r = is_increasing_separately(f, p);
      else if (q == "conjunctive") r = is_conjunctive(f, t);
      else if (q == "disjunctive") r = is_disjunctive(f, t);
      else if (q == "weakly-increasing") r = is_weakly_increasing(f, t, c, sem.mono), weak = true;
      else if (q == "weakly-associative") r = is_weakly_associative(f, c, sem.assoc), weak = true;
      else throw Error(ErrorKind::kParse, "unknown property '" + q + "'");
      report["property"] = q;
      if (weak) report["semantics"] = semantics_json(sem);
      report["verdict"] = r.holds ? "holds" : "fails";
      report["result"] = outcome_json(p, r);
      text << q << (weak ? " (" + semantics_text(sem) + ")" : std::string()) << ": " << outcome_text(p, r) << '\n';
      return emit(report, text.str(), r.holds ? kExitOk : kExitFails);
    }

    if (!o_.op_class.empty()) {
      const OpClass cls = op_class();
      const CheckOutcome r = check_class(f, t, cls, sem);
      report["class"] = std::string(to_string(cls));
      if (is_pseudo(cls)) report["semantics"] = semantics_json(sem);
      report["verdict"] = r.holds ? "holds" : "fails";
      report["result"] = outcome_json(p, r);
      text << to_string(cls) << (is_pseudo(cls) ? " (" + semantics_text(sem) + ")" : std::string()) << ": "
           << outcome_text(p, r) << '\n';
      return emit(report, text.str(), r.holds ? kExitOk : kExitFails);
    }

    const BasicProps b = basic_props(f, p);
    const auto e = neutral(f);
    const OpClassification oc = classify_op(f, t, sem);
    report["neutral"] = e ? json(t.label(*e)) : json(nullptr);
    report["commutative"] = outcome_json(p, b.commutative);
    report["associative"] = outcome_json(p, b.associative);
    report["idempotent"] = outcome_json(p, b.idempotent);
    report["increasing"] = outcome_json(p, b.increasing);
    report["increasing_separately"] = outcome_json(p, b.increasing_separately);
    report["semantics"] = semantics_json(sem);
    json classes = json::object();
    text << "neutral: " << (e ? t.label(*e) : std::string("none")) << '\n';
    text << "commutative: " << outcome_text(p, b.commutative) << '\n';
    text << "associative: " << outcome_text(p, b.associative) << '\n';
    text << "idempotent: " << outcome_text(p, b.idempotent) << '\n';
    text << "increasing: " << outcome_text(p, b.increasing) << '\n';
    text << "increasing-separately: " << outcome_text(p, b.increasing_separately) << '\n';
    for (OpClass cls : {OpClass::kTNorm, OpClass::kTConorm, OpClass::kPseudoTNorm, OpClass::kPseudoTConorm}) {
      classes[std::string(to_string(cls))] = outcome_json(p, oc[cls]);
      text << to_string(cls) << (is_pseudo(cls) ? " (" + semantics_text(sem) + ")" : std::string()) << ": "
           << outcome_text(p, oc[cls]) << '\n';
    }
    report["classes"] = classes;
    return emit(report, text.str(), kExitOk);
  }

  int compare() {
    const BoundedTrellis t = load_trellis(o_.structure);
    const OpTable f1 = load_op(o_.op, t.order());
    const OpTable f2 = load_op(o_.op2, t.order());
    const Comparison c = pointwise_cmp(f1, f2, t.order());
    const std::string word(to_string(c));
    return emit({{"command", "compare"}, {"result", word}}, word + '\n', kExitOk);
  }

  int distrib() {
    const BoundedTrellis t = load_trellis(o_.structure);
    const OpTable f1 = load_op(o_.op, t.order());
    const OpTable f2 = load_op(o_.op2, t.order());
    const CheckOutcome r = distributes_over(f1, f2, t);
    return emit({{"command", "distrib"}, {"verdict", r.holds ? "holds" : "fails"}, {"result", outcome_json(t.order(), r)}},
                "distributive: " + outcome_text(t.order(), r) + '\n', r.holds ? kExitOk : kExitFails);
  }

  std::pair<TrellisMap, bool> resolve_map(const BoundedTrellis& x1, const BoundedTrellis& x2) const {
    if (!o_.map.empty()) return {parse_map(o_.map, x1.order(), x2.order()), true};
    const auto isos = find_isomorphisms(x1, x2);
    if (isos.empty()) throw Error(ErrorKind::kNotAnIsomorphism, "structures are not isomorphic");
    return {isos.front(), false};
  }

  int construct_cmd() {
    const BoundedTrellis t = load_trellis(o_.structure);
    const auto kind = parse_construction_kind(o_.kind);
    if (!kind) throw Error(ErrorKind::kParse, "unknown construction kind '" + o_.kind + "'");
    ConstructionSpec spec;
    spec.kind = *kind;
    spec.semantics = semantics();
    if (!o_.param.empty()) spec.element = element(t.order(), o_.param);
    if (*kind == ConstructionKind::kOrdinalT || *kind == ConstructionKind::kOrdinalS) {
      if (o_.sub_op.empty()) throw Error(ErrorKind::kParse, "--sub is required for ordinal sums");
      if (!spec.element) throw Error(ErrorKind::kParse, "--param is required for ordinal sums");
      const Elem a = *spec.element;
      const Interval iv = *kind == ConstructionKind::kOrdinalT ? interval(t, a, t.top()) : interval(t, t.bottom(), a);
      spec.sub_op = load_op(o_.sub_op, iv.trellis.order());
    }
    if (*kind == ConstructionKind::kTransport) {
      if (o_.source.empty() || o_.op.empty()) throw Error(ErrorKind::kParse, "--source and --op are required for transport");
      const BoundedTrellis src = load_trellis(o_.source);
      spec.transport = TransportInput{src, load_op(o_.op, src.order()), resolve_map(t, src).first};
    }
    if (needs_element(*kind) && !spec.element) throw Error(ErrorKind::kParse, "--param is required for " + o_.kind);
    const Constructed c = construct(t, spec);
    if (!o_.json) {
      for (const auto& w : c.warnings) err_ << "warning: " << w << '\n';
    }
    return emit({{"command", "construct"},
                 {"kind", o_.kind},
                 {"labels", t.labels()},
                 {"table", table_json(c.op, t.order())},
                 {"warnings", c.warnings}},
                serialize_op(c.op, t.order()), kExitOk);
  }

  int enumerate_cmd() {
    const BoundedTrellis t = load_trellis(o_.structure);
    EnumerationTask task{t, op_class(), semantics(), std::nullopt, o_.count_only, o_.cap, o_.threads};
    if (o_.limit > 0) task.limit = o_.limit;
    if (o_.show_extremes) task.count_only = false;
    const EnumerationResult r = enumerate_ops(task);
    const bool pseudo = is_pseudo(task.op_class);

    json report = {{"command", "enumerate"}, {"class", std::string(to_string(task.op_class))}};
    if (pseudo) report["semantics"] = semantics_json(task.semantics);
    report["count"] = r.count;
    report["limit"] = task.limit ? json(*task.limit) : json(nullptr);
    report["elapsed_seconds"] = r.elapsed.count();
    report["nodes"] = r.nodes;
    report["prunes"] = r.prunes;
    report["free_cells"] = r.free_cells;

    std::ostringstream text;
    text << r.count;
    if (pseudo) text << " (" << semantics_text(task.semantics) << ")";
    text << '\n';
    if (!o_.count_only) {
      json tables = json::array();
      for (std::size_t i = 0; i < r.tables.size(); ++i) {
        tables.push_back(table_json(r.tables[i], t.order()));
        text << "# " << i << '\n' << serialize_op(r.tables[i], t.order());
      }
      report["tables"] = tables;
    }
    if (o_.show_extremes) {
      const Extremes ex = extremes(r.tables, t);
      auto ids = [](const std::vector<std::size_t>& v) { return json(v); };
      report["maximal"] = ids(ex.maximal);
      report["minimal"] = ids(ex.minimal);
      report["greatest"] = ex.greatest ? json(*ex.greatest) : json(nullptr);
      report["smallest"] = ex.smallest ? json(*ex.smallest) : json(nullptr);
      auto list = [](const std::vector<std::size_t>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
        return s;
      };
      text << "maximal: " << list(ex.maximal) << "\nminimal: " << list(ex.minimal) << '\n';
      text << "greatest: " << (ex.greatest ? std::to_string(*ex.greatest) : std::string("none")) << '\n';
      text << "smallest: " << (ex.smallest ? std::to_string(*ex.smallest) : std::string("none")) << '\n';
    }
    return emit(report, text.str(), kExitOk);
  }

  int iso() {
    const BoundedTrellis x1 = load_trellis(o_.structure);
    const BoundedTrellis x2 = load_trellis(o_.structure2);
    const auto isos = find_isomorphisms(x1, x2);
    json maps = json::array();
    std::ostringstream text;
    text << isos.size() << " isomorphism" << (isos.size() == 1 ? "" : "s") << '\n';
    for (const auto& m : isos) {
      json obj = json::object();
      for (std::size_t i = 0; i < m.image.size(); ++i) obj[x1.label(static_cast<Elem>(i))] = x2.label(m.image[i]);
      maps.push_back(obj);
      text << map_text(m, x1.order(), x2.order()) << '\n';
    }
    return emit({{"command", "iso"}, {"count", isos.size()}, {"isomorphisms", maps}, {"verdict", isos.empty() ? "fails" : "holds"}},
                text.str(), isos.empty() ? kExitFails : kExitOk);
  }

  int transport_cmd() {
    const BoundedTrellis x1 = load_trellis(o_.structure);
    const BoundedTrellis x2 = load_trellis(o_.structure2);
    const OpTable f = load_op(o_.op, x2.order());
    const auto [rho, given] = resolve_map(x1, x2);
    const OpTable g = transport(f, x1, x2, rho);
    return emit({{"command", "transport"},
                 {"map", map_text(rho, x1.order(), x2.order())},
                 {"map_source", given ? "given" : "first isomorphism"},
                 {"labels", x1.labels()},
                 {"table", table_json(g, x1.order())}},
                serialize_op(g, x1.order()), kExitOk);
  }

 private:
  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::kBadIndex: return "bad-index";
    case ErrorKind::kAntisymmetryViolation: return "antisymmetry-violation";
    case ErrorKind::kClosureConflict: return "closure-conflict";
    case ErrorKind::kNotATrellis: return "not-a-trellis";
    case ErrorKind::kNotBounded: return "not-bounded";
    case ErrorKind::kInconsistentTable: return "inconsistent-table";
    case ErrorKind::kNotACoatom: return "not-a-coatom";
    case ErrorKind::kNotAnAtom: return "not-an-atom";
    case ErrorKind::kNotAssociativeElement: return "not-associative-element";
    case ErrorKind::kSubOpNotPseudoNorm: return "sub-op-not-pseudo-norm";
    case ErrorKind::kNotAnIsomorphism: return "not-an-isomorphism";
    case ErrorKind::kSearchCapExceeded: return "search-cap-exceeded";
    case ErrorKind::kParse: return "parse";
  }
  return "error";
}

/// Runs one command. `args` excludes the program name.
inline int run_command(std::vector<std::string> args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  Options o;
  CLI::App app{"Finite pseudo-ordered sets, trellises and triangular norms", "trellis"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable report");

  auto structure = [&](CLI::App* sub) { sub->add_option("structure", o.structure, "Structure file")->required(); };
  auto modes = [&](CLI::App* sub) {
    sub->add_option("--mono-mode", o.mono_mode, "Weakly-increasing scope: upper|lower|any|both");
    sub->add_option("--assoc-mode", o.assoc_mode, "Weakly-associative scope: any|all|side");
  };

  auto* validate = app.add_subcommand("validate", "Check a structure file");
  structure(validate);
  auto* info = app.add_subcommand("info", "Element classification, cycles, modularity, completeness");
  structure(info);
  info->add_flag("--dot", o.dot, "Append a Graphviz rendering of the relation");
  auto* meet_t = app.add_subcommand("meet-table", "Print the meet table");
  structure(meet_t);
  auto* join_t = app.add_subcommand("join-table", "Print the join table");
  structure(join_t);
  auto* dual_c = app.add_subcommand("dual", "Print the dual structure");
  structure(dual_c);

  auto* check = app.add_subcommand("check-op", "Classify an operation table");
  structure(check);
  check->add_option("op", o.op, "Operation table")->required();
  check->add_option("--class", o.op_class, "tnorm|tconorm|pseudo-tnorm|pseudo-tconorm");
  check->add_option("--property", o.property,
                    "commutative|associative|idempotent|increasing|increasing-separately|conjunctive|disjunctive|"
                    "weakly-increasing|weakly-associative");
  modes(check);

  auto* compare = app.add_subcommand("compare", "Pointwise comparison of two tables");
  structure(compare);
  compare->add_option("op1", o.op, "First table")->required();
  compare->add_option("op2", o.op2, "Second table")->required();

  auto* distrib = app.add_subcommand("distrib", "Does op1 distribute over op2");
  structure(distrib);
  distrib->add_option("op1", o.op, "First table")->required();
  distrib->add_option("op2", o.op2, "Second table")->required();

  auto* construct_c = app.add_subcommand("construct", "Build an operation");
  structure(construct_c);
  construct_c->add_option("--kind", o.kind,
                          "drastic-t|drastic-s|coatom-t|atom-s|param-t|param-s|z|z-star|ordinal-t|ordinal-s|transport")
      ->required();
  construct_c->add_option("--param", o.param, "Element parameter (i, j, e or a)");
  construct_c->add_option("--sub", o.sub_op, "Sub-operation on the interval, for ordinal sums");
  construct_c->add_option("--source", o.source, "Source structure, for transport");
  construct_c->add_option("--op", o.op, "Source operation, for transport");
  construct_c->add_option("--map", o.map, "Isomorphism to the source as x=y,...");
  modes(construct_c);

  auto* enumerate_c = app.add_subcommand("enumerate", "Enumerate every operation of a class");
  structure(enumerate_c);
  enumerate_c->add_option("--class", o.op_class, "tnorm|tconorm|pseudo-tnorm|pseudo-tconorm")->required();
  enumerate_c->add_flag("--count-only", o.count_only, "Print only the count");
  enumerate_c->add_option("--limit", o.limit, "Stop after N operations")->check(CLI::PositiveNumber);
  enumerate_c->add_option("--cap", o.cap, "Maximum number of free cells");
  enumerate_c->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  enumerate_c->add_flag("--extremes", o.show_extremes, "Report maximal, minimal, greatest and smallest");
  modes(enumerate_c);

  auto* iso = app.add_subcommand("iso", "List isomorphisms between two structures");
  iso->add_option("structure1", o.structure, "First structure")->required();
  iso->add_option("structure2", o.structure2, "Second structure")->required();

  auto* transport_c = app.add_subcommand("transport", "Transport an operation on structure2 to structure1");
  transport_c->add_option("structure1", o.structure, "Target structure")->required();
  transport_c->add_option("structure2", o.structure2, "Source structure")->required();
  transport_c->add_option("op", o.op, "Operation on structure2")->required();
  transport_c->add_option("--map", o.map, "Isomorphism structure1 -> structure2 as x=y,...");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  Runner r(o, out, err);
  try {
    if (validate->parsed()) return r.validate();
    if (info->parsed()) return r.info();
    if (meet_t->parsed()) return r.table(true);
    if (join_t->parsed()) return r.table(false);
    if (dual_c->parsed()) return r.dual_cmd();
    if (check->parsed()) return r.check_op();
    if (compare->parsed()) return r.compare();
    if (distrib->parsed()) return r.distrib();
    if (construct_c->parsed()) return r.construct_cmd();
    if (enumerate_c->parsed()) return r.enumerate_cmd();
    if (iso->parsed()) return r.iso();
    if (transport_c->parsed()) return r.transport_cmd();
  } catch (const Error& e) {
    if (o.json) {
      out << json{{"schema", kSchemaVersion}, {"error", error_kind_name(e.kind())}, {"message", e.what()}}.dump(2) << '\n';
    }
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  err << "error: no command\n";
  return kExitInput;
}

}  // namespace trellis::cli
