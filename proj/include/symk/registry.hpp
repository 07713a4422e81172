#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "symk/error.hpp"

namespace symk {

using VarId = std::uint32_t;

/// Append-only registry of named variables. Ids are dense and define the
/// variable order used by the graded-lexicographic monomial order. A registry
/// can be closed, after which lookups of unknown names fail instead of
/// registering them (used by the parser).
class Registry {
 public:
  Registry() = default;

  /// Registers a new name; PreconditionError if already present or invalid.
  VarId add(const std::string& name);
  /// Returns the id for name, registering it if absent (and open).
  VarId get_or_add(const std::string& name);
  std::optional<VarId> lookup(const std::string& name) const;
  std::string name(VarId id) const;  // by value: the name table may reallocate
  std::size_t size() const;

  void close() { closed_ = true; }
  bool closed() const { return closed_; }

  /// Registers name, name2, ... derived from a stem, avoiding collisions
  /// ("s", "s_1", "s_2", ...). Used for fresh symbolic parameters.
  VarId add_fresh(const std::string& stem);

  Registry(const Registry&) = delete;
  Registry& operator=(const Registry&) = delete;

 private:
  mutable std::mutex mu_;
  std::vector<std::string> names_;
  std::map<std::string, VarId> index_;
  bool closed_ = false;
};

}  // namespace symk
