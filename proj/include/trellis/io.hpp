#pragma once

// Text formats for structures and operation tables.
//
// Structure files:
//
//   # comment
//   elements: 0 a b c 1
//   edge: 0 a          (Hasse form, closed with close_hasse)
//   dashed: a c
//   rel: 0 b           (explicit form: every strict pair)
//   bottom: 0
//   top: 1
//
// A file uses either `rel:` lines or `edge:`/`dashed:` lines, not both.
//
// Operation tables: a header row of column labels, then one row per
// element headed by its label. Cells are separated by `|`, `,` or
// whitespace; an optional corner cell may precede the header labels. Rows
// and columns may come in any order.

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "trellis/core.hpp"

namespace trellis {

struct StructureFile {
  Psoset order;
  std::optional<Elem> bottom;
  std::optional<Elem> top;
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

[[noreturn]] inline void parse_error(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + msg);
}

inline std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto end = nl == std::string_view::npos ? text.size() : nl;
    out.emplace_back(text.substr(pos, end - pos));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

inline std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return trim(hash == std::string::npos ? line : line.substr(0, hash));
}

}  // namespace detail

inline StructureFile parse_structure(std::string_view text) {
  std::vector<std::string> labels;
  std::size_t elements_line = 0;
  struct PairLine {
    std::string key;
    std::string x;
    std::string y;
    std::size_t line;
  };
  std::vector<PairLine> pair_lines;
  std::optional<std::pair<std::string, std::size_t>> bottom, top;

  const auto lines = detail::lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t ln = i + 1;
    const std::string line = detail::strip_comment(lines[i]);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) detail::parse_error(ln, "expected 'key: value'");
    const std::string key = detail::trim(std::string_view(line).substr(0, colon));
    const auto args = detail::split_ws(std::string_view(line).substr(colon + 1));
    if (key == "elements") {
      if (elements_line != 0) detail::parse_error(ln, "duplicate 'elements:' line");
      if (args.empty()) detail::parse_error(ln, "no elements listed");
      for (const auto& a : args) {
        if (a.find_first_of(",|") != std::string::npos) detail::parse_error(ln, "label '" + a + "' contains ',' or '|'");
        for (const auto& seen : labels) {
          if (seen == a) detail::parse_error(ln, "duplicate label '" + a + "'");
        }
        labels.push_back(a);
      }
      if (labels.size() > kMaxElements) detail::parse_error(ln, "too many elements");
      elements_line = ln;
    } else if (key == "rel" || key == "edge" || key == "dashed") {
      if (args.size() != 2) detail::parse_error(ln, "'" + key + ":' takes exactly two labels");
      pair_lines.push_back({key, args[0], args[1], ln});
    } else if (key == "bottom" || key == "top") {
      if (args.size() != 1) detail::parse_error(ln, "'" + key + ":' takes exactly one label");
      auto& slot = key == "bottom" ? bottom : top;
      if (slot) detail::parse_error(ln, "duplicate '" + key + ":' line");
      slot = std::make_pair(args[0], ln);
    } else {
      detail::parse_error(ln, "unknown key '" + key + "'");
    }
  }
  if (elements_line == 0) throw Error(ErrorKind::kParse, "missing 'elements:' line");

  auto index = [&](const std::string& name, std::size_t ln) -> Elem {
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (labels[k] == name) return static_cast<Elem>(k);
    }
    detail::parse_error(ln, "unknown label '" + name + "'");
  };

  std::vector<ElemPair> rel, edges, dashed;
  std::vector<std::size_t> rel_lines;
  for (const auto& pl : pair_lines) {
    const ElemPair p{index(pl.x, pl.line), index(pl.y, pl.line)};
    if (pl.key == "rel") {
      rel.push_back(p);
      rel_lines.push_back(pl.line);
    } else {
      (pl.key == "edge" ? edges : dashed).push_back(p);
    }
  }
  if (!rel.empty() && (!edges.empty() || !dashed.empty())) {
    throw Error(ErrorKind::kParse, "mixes 'rel:' with 'edge:'/'dashed:' lines");
  }

  StructureFile out{Psoset{}, std::nullopt, std::nullopt};
  if (!rel.empty()) {
    for (std::size_t i = 0; i < rel.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (rel[i].first != rel[i].second && rel[i].first == rel[j].second && rel[i].second == rel[j].first) {
          throw Error(ErrorKind::kAntisymmetryViolation,
                      "line " + std::to_string(rel_lines[i]) + ": '" + labels[rel[i].first] + " " +
                          labels[rel[i].second] + "' contradicts line " + std::to_string(rel_lines[j]),
                      {rel[j]});
        }
      }
    }
    out.order = Psoset::from_pairs(labels, rel);
  } else {
    out.order = close_hasse(labels, edges, dashed);
  }
  if (bottom) out.bottom = index(bottom->first, bottom->second);
  if (top) out.top = index(top->first, top->second);
  return out;
}

/// Builds the bounded trellis; declared bounds are validated, missing ones
/// are detected.
inline BoundedTrellis to_bounded(const StructureFile& s) {
  Trellis t = to_trellis(s.order);
  if (!s.bottom && !s.top) return BoundedTrellis(std::move(t));
  const auto lo = least_of(s.order, s.order.all());
  const auto hi = greatest_of(s.order, s.order.all());
  const Elem b = s.bottom ? *s.bottom : lo.value_or(0);
  const Elem u = s.top ? *s.top : hi.value_or(0);
  return BoundedTrellis(std::move(t), b, u);
}

inline BoundedTrellis parse_bounded_trellis(std::string_view text) { return to_bounded(parse_structure(text)); }

inline std::string serialize_structure(const Psoset& p, std::optional<Elem> bottom = std::nullopt,
                                       std::optional<Elem> top = std::nullopt) {
  std::ostringstream out;
  out << "elements:";
  for (const auto& l : p.labels()) out << ' ' << l;
  out << '\n';
  if (bottom) out << "bottom: " << p.label(*bottom) << '\n';
  if (top) out << "top: " << p.label(*top) << '\n';
  for (auto [x, y] : p.strict_pairs()) out << "rel: " << p.label(x) << ' ' << p.label(y) << '\n';
  return out.str();
}

inline std::string serialize_structure(const BoundedTrellis& t) {
  return serialize_structure(t.order(), t.bottom(), t.top());
}

namespace detail {

inline bool is_rule_line(const std::string& line) {
  return line.find_first_not_of("|-:+ \t") == std::string::npos;
}

inline std::vector<std::string> split_cells(const std::string& line) {
  std::string s = line;
  for (char& c : s) {
    if (c == '|' || c == ',') c = ' ';
  }
  return split_ws(s);
}

}  // namespace detail

inline OpTable parse_op(std::string_view text, const Psoset& carrier) {
  const std::size_t n = carrier.size();
  auto index = [&](const std::string& name, std::size_t ln) -> Elem {
    if (auto i = carrier.index_of(name)) return *i;
    detail::parse_error(ln, "unknown label '" + name + "'");
  };

  std::vector<Elem> columns;
  OpTable table(n);
  Mask rows_seen = 0;
  const auto lines = detail::lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t ln = i + 1;
    const std::string line = detail::strip_comment(lines[i]);
    if (line.empty() || detail::is_rule_line(line)) continue;
    auto cells = detail::split_cells(line);
    if (columns.empty()) {
      if (cells.size() == n + 1) cells.erase(cells.begin());
      if (cells.size() != n) {
        detail::parse_error(ln, "header has " + std::to_string(cells.size()) + " labels, expected " + std::to_string(n));
      }
      Mask seen = 0;
      for (const auto& c : cells) {
        const Elem e = index(c, ln);
        if (has(seen, e)) detail::parse_error(ln, "duplicate column '" + c + "'");
        seen |= bit(e);
        columns.push_back(e);
      }
      continue;
    }
    if (cells.size() != n + 1) {
      detail::parse_error(ln, "row has " + std::to_string(cells.size() > 0 ? cells.size() - 1 : 0) + " cells, expected " +
                                  std::to_string(n));
    }
    const Elem row = index(cells[0], ln);
    if (has(rows_seen, row)) detail::parse_error(ln, "duplicate row '" + cells[0] + "'");
    rows_seen |= bit(row);
    for (std::size_t k = 0; k < n; ++k) table.set(row, columns[k], index(cells[k + 1], ln));
  }
  if (columns.empty()) throw Error(ErrorKind::kParse, "empty operation table");
  if (rows_seen != full_mask(n)) {
    const auto missing = elements_of(full_mask(n) & ~rows_seen);
    throw Error(ErrorKind::kParse, "missing row '" + carrier.label(missing.front()) + "'");
  }
  return table;
}

/// CSV with an empty corner cell, rows and columns in index order.
inline std::string serialize_op(const OpTable& f, const Psoset& carrier) {
  std::ostringstream out;
  const auto n = static_cast<Elem>(f.size());
  for (Elem y = 0; y < n; ++y) out << ',' << carrier.label(y);
  out << '\n';
  for (Elem x = 0; x < n; ++x) {
    out << carrier.label(x);
    for (Elem y = 0; y < n; ++y) out << ',' << carrier.label(f(x, y));
    out << '\n';
  }
  return out.str();
}

/// Graphviz rendering of the strict relation.
inline std::string to_dot(const Psoset& p) {
  std::ostringstream out;
  out << "digraph trellis {\n";
  for (const auto& l : p.labels()) out << "  \"" << l << "\";\n";
  for (auto [x, y] : p.strict_pairs()) out << "  \"" << p.label(x) << "\" -> \"" << p.label(y) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace trellis
