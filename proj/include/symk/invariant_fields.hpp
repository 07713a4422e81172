#pragma once

#include "symk/perm.hpp"
#include "symk/report.hpp"

namespace symk::inv {

/// Cross-ratio ((t-u)(v-w))/((v-u)(t-w)). PreconditionError when the
/// denominator is identically zero (u == v or t == w).
RationalFunction cross_ratio(const Field& f, VarId t, VarId u, VarId v, VarId w);

/// (u-v)/(v-w). PreconditionError when v == w.
RationalFunction kc_generator(const Field& f, VarId u, VarId v, VarId w);

/// Coordinate chart identifying an invariant field with a plain rational
/// function field: case c sends u to (u-y)/(x-y); case d sends u to the
/// cross-ratio chart ((u-y)(z-x))/((z-u)(x-y)).
struct XiChart {
  enum class Case { c, d };
  Case chart_case;
  const Field* field;
  VarId x, y, z;  // z participates only in case d
};

XiChart chart_c(const Field& f, VarId x, VarId y);
XiChart chart_d(const Field& f, VarId x, VarId y, VarId z);

/// The chart's formula at u. PreconditionError in case d when u == z.
RationalFunction xi_apply(const XiChart& chart, VarId u);

/// Formal xi-coordinates: one symbol per auxiliary variable, living in the
/// same registry as the underlying variables.
struct XiSpace {
  XiChart chart;
  std::map<VarId, VarId> xi_symbol;  // auxiliary variable -> its xi symbol
};

XiSpace make_xi_space(Registry& reg, const XiChart& chart, const std::vector<VarId>& aux);

enum class XiTransposition { xu, xy };

/// Applies the transposition of underlying variables ((x u) or (x y)) to an
/// expression in xi symbols, and independently the closed-form law on the
/// symbols (xi_v -> xi_v/xi_u and xi_u -> 1/xi_u for (x u); xi_v -> 1 - xi_v
/// for (x y)). InternalError if the two routes disagree; otherwise returns
/// the re-expressed expression in xi symbols.
RationalFunction transposition_on_xi(const XiSpace& space, XiTransposition kind, VarId u,
                                     const RationalFunction& expr);

/// The identity suite I1..I6: cross-ratio multiplicativity, the xi-chart
/// difference/ratio identities, the inverse-difference non-identity, the
/// affine-involution counterexample, and the (T-2)/(2T-1) involution.
Report verify_identity_suite();

struct InvariantGenerator {
  enum class Family { kc, kd, ka_additive, ka_multiplicative, kc_power };
  Family family;
  int power;
  std::vector<VarId> args;
  RationalFunction value;
};

/// Builds a generator from its closed formula. Argument counts: kd 4, kc 3,
/// others 2. PreconditionError on repeated variables where the formula
/// degenerates.
InvariantGenerator make_generator(InvariantGenerator::Family family, const Field& f,
                                  const std::vector<VarId>& args, int power = 1);

enum class GroupKind { translation, affine, mobius, scaling };

/// Substitutes the generic group action (fresh symbolic parameters from reg)
/// into every listed variable of `value` and reports whether the canonical
/// form is unchanged. This is the raw fixedness test, usable for
/// counterexamples (e.g. u-v is moved by generic scaling).
bool generic_action_fixes(const RationalFunction& value, const std::vector<VarId>& args,
                          GroupKind group, Registry& reg);

/// Pairing-checked wrapper: PreconditionError if the family does not match
/// the group, otherwise generic_action_fixes on the generator's value.
bool verify_group_invariance(const InvariantGenerator& gen, GroupKind group, Registry& reg);

/// True when the family/group pairing is the one the invariance statement is
/// about (kd-mobius, kc-affine, ka_additive/kc_power-translation,
/// ka_multiplicative-scaling).
bool family_matches_group(InvariantGenerator::Family family, GroupKind group);

}  // namespace symk::inv
