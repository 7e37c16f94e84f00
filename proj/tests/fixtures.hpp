#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trellis/cli.hpp"
#include "trellis/io.hpp"

namespace trellis::testing {

inline std::string fixture_path(const std::string& file) { return std::string(TRELLIS_FIXTURE_DIR) + "/" + file; }

inline BoundedTrellis load(const std::string& name) { return cli::load_trellis(fixture_path(name + ".trl")); }

inline OpTable load_table(const std::string& file, const Trellis& t) {
  return cli::load_op(fixture_path(file), t.order());
}

inline Elem id(const Trellis& t, const std::string& label) { return t.order().index_of(label).value(); }

inline std::vector<Elem> ids(const Trellis& t, const std::vector<std::string>& labels) {
  std::vector<Elem> out;
  for (const auto& l : labels) out.push_back(id(t, l));
  return out;
}

inline Mask mask_of(const Trellis& t, const std::vector<std::string>& labels) {
  Mask m = 0;
  for (const auto& l : labels) m |= bit(id(t, l));
  return m;
}

inline const std::vector<std::string>& all_fixtures() {
  static const std::vector<std::string> names = {"FIG1", "C5D", "CYC5", "PC8", "TR8", "PCA", "PCB", "PCC",
                                                 "PCD",  "PCE", "PCF",  "CH2", "CH4", "CH5", "M4"};
  return names;
}

inline const std::vector<std::string>& pseudo_chain_fixtures() {
  static const std::vector<std::string> names = {"PCA", "PCB", "PCC", "PCD", "PCE", "PCF"};
  return names;
}

/// Fixtures on which pseudo-class enumeration finishes quickly.
inline std::vector<std::string> small_fixtures(std::size_t max_size) {
  std::vector<std::string> out;
  for (const auto& name : all_fixtures()) {
    if (load(name).size() <= max_size) out.push_back(name);
  }
  return out;
}

/// The kind of trellis::Error thrown by `fn`, or nothing if it returns.
template <class Fn>
std::optional<ErrorKind> error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline std::vector<OpTable> enumerate_all(const BoundedTrellis& t, OpClass cls, WeakSemantics sem = {}) {
  EnumerationTask task{t, cls, sem, std::nullopt, false, 36, 1};
  return enumerate_ops(task).tables;
}

}  // namespace trellis::testing
