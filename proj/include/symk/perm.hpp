#pragma once

#include <set>
#include <vector>

#include "symk/rational_function.hpp"

namespace symk {

/// Finite-support variable substitution: injective on its support, identity
/// elsewhere. Bijections of their support are the finite-support permutations
/// acting on expressions.
class VariableMap {
 public:
  VariableMap() = default;
  static VariableMap identity() { return {}; }
  static VariableMap transposition(VarId a, VarId b);
  /// PreconditionError if the pairs are not injective.
  static VariableMap from_pairs(const std::vector<std::pair<VarId, VarId>>& pairs);

  VarId operator()(VarId v) const;
  const std::map<VarId, VarId>& mapping() const { return map_; }
  std::set<VarId> support() const;

  bool is_identity() const { return map_.empty(); }
  /// True iff the map permutes its support (image set == support set).
  bool is_bijection_of_support() const;

  /// Composition acting as (a.compose(b))(v) = a(b(v)), so that
  /// apply(f, a∘b) = apply(apply(f, b), a).
  VariableMap compose(const VariableMap& inner) const;
  VariableMap inverse() const;  // PreconditionError unless bijective

  bool operator==(const VariableMap& o) const { return map_ == o.map_; }
  bool operator<(const VariableMap& o) const { return map_ < o.map_; }

  std::string str(const Registry& reg) const;  // cycle notation

 private:
  std::map<VarId, VarId> map_;  // no fixed points stored
};

/// f with every variable v replaced by sigma(v); result canonical.
RationalFunction apply_substitution(const RationalFunction& f, const VariableMap& sigma);

/// True iff f is fixed by every generator. PreconditionError if some
/// generator is not a bijection of its support.
bool is_invariant(const RationalFunction& f, const std::vector<VariableMap>& gens);

/// Orbit {f^sigma} under an explicit finite group, given as a list closed
/// under composition (checked; PreconditionError otherwise).
std::set<RationalFunction> orbit(const RationalFunction& f, const std::vector<VariableMap>& group);

/// Parses cycle notation over registered names: "(u v)(w z)".
VariableMap parse_cycles(const std::string& text, Registry& reg);

}  // namespace symk
