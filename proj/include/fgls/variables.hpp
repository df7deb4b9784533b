#pragma once

/// @file variables.hpp
/// @brief Interned geometric variables with an integer weight (graded degree).
///
/// A variable is identified by its name, e.g. "x1", "y12", "u", "c3".  Names
/// consist of an alphabetic stem followed by an optional decimal index; the
/// canonical variable order is (stem lexicographic, index numeric), so
/// x1 < x2 < ... < x10 < y1 and any un-indexed name sorts before indexed ones
/// with the same stem.  Most variables have weight 1; Chern-class symbols c_i
/// carry weight i so that weighted degrees match geometric degrees.
///
/// Interning is global (a process-wide table), which keeps monomials small —
/// a monomial stores 32-bit ids, never strings.

#include "fgls/rational.hpp"

#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <string>
#include <string_view>

namespace fgls {

using VarId = std::uint32_t;

struct VarInfo {
  std::string name;   ///< full name, e.g. "x12"
  std::string stem;   ///< alphabetic prefix, e.g. "x"
  long long index;    ///< numeric suffix, or -1 if none
  int weight;         ///< graded degree contributed per exponent unit
};

/// Process-wide registry of variables.
class VarTable {
 public:
  static VarTable& instance() {
    static VarTable table;
    return table;
  }

  /// Intern a variable name, returning its id.  Re-interning an existing name
  /// must use the same weight.
  VarId intern(std::string_view name, int weight = 1) {
    detail::require(!name.empty(), "variable name must be nonempty");
    detail::require(weight >= 1, "variable weight must be >= 1");
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ids_.find(name);
    if (it != ids_.end()) {
      detail::require(infos_[it->second].weight == weight,
                      "variable '" + std::string(name) +
                          "' re-interned with a different weight");
      return it->second;
    }
    VarInfo info;
    info.name = std::string(name);
    std::size_t split = info.name.size();
    while (split > 0 && std::isdigit(static_cast<unsigned char>(info.name[split - 1]))) {
      --split;
    }
    detail::require(split > 0, "variable name must start with a letter: '" +
                                   info.name + "'");
    info.stem = info.name.substr(0, split);
    info.index = (split == info.name.size())
                     ? -1
                     : std::stoll(info.name.substr(split));
    info.weight = weight;
    VarId id = static_cast<VarId>(infos_.size());
    infos_.push_back(std::move(info));
    ids_.emplace(infos_.back().name, id);
    return id;
  }

  const VarInfo& info(VarId id) const {
    detail::require(id < infos_.size(), "unknown variable id");
    return infos_[id];
  }

  const std::string& name(VarId id) const { return info(id).name; }
  int weight(VarId id) const { return info(id).weight; }

  /// Canonical order: stem lexicographic, then numeric index.
  bool less(VarId a, VarId b) const {
    if (a == b) return false;
    const VarInfo& ia = info(a);
    const VarInfo& ib = info(b);
    if (ia.stem != ib.stem) return ia.stem < ib.stem;
    return ia.index < ib.index;
  }

 private:
  VarTable() = default;
  mutable std::mutex mu_;
  std::deque<VarInfo> infos_;
  std::map<std::string, VarId, std::less<>> ids_;
};

/// Intern a variable by full name (optionally with a weight).
inline VarId var_id(const std::string& name, int weight = 1) {
  return VarTable::instance().intern(name, weight);
}

/// Intern "stem" + to_string(index), e.g. indexed_var("x", 3) -> "x3".
inline VarId indexed_var(const std::string& stem, long long index,
                         int weight = 1) {
  return VarTable::instance().intern(stem + std::to_string(index), weight);
}

}  // namespace fgls
