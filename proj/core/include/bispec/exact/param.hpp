#pragma once

#include "bispec/exact/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bispec {

using VarId = std::uint32_t;

/// A named coefficient-field parameter. When `relation` is set the parameter is
/// quadratic algebraic: name^2 rewrites to *relation everywhere.
struct Param {
  std::string name;
  std::optional<Rat> relation;
};

/// Process-wide interning table for parameters. Interning is serialized;
/// lookups of already-published entries are lock-free.
class ParamTable {
 public:
  static ParamTable& global();

  /// Returns the id of `p`, registering it on first use. Re-registering a name
  /// with a different relation throws.
  VarId intern(const Param& p);

  std::optional<VarId> find(std::string_view name) const;
  const Param& get(VarId id) const;
  const std::optional<Rat>& relation(VarId id) const { return get(id).relation; }
  const std::string& name(VarId id) const { return get(id).name; }
  std::vector<std::string> names() const;

  ParamTable(const ParamTable&) = delete;
  ParamTable& operator=(const ParamTable&) = delete;

 private:
  ParamTable();
  ~ParamTable();
  struct Impl;
  Impl* impl_;
};

/// Shorthands for the global table.
/// Existing parameter of that name (any relation), or a new plain one.
VarId param(std::string_view name);
VarId algebraic(std::string_view name, const Rat& square);

/// Reserved name of the distinguished variable; never a parameter.
inline constexpr std::string_view kVariableX = "x";

}  // namespace bispec
