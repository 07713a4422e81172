#pragma once

#include "symk/report.hpp"
#include "symk/rational_function.hpp"

namespace symk::divdiff {

/// Interpolation-style context: n node pairs (A_{x_s}, B_{x_s}) plus a list
/// of extra points (A_v, B_v), all distinct variables in one registry.
struct Context {
  int n = 0;
  const Field* field = nullptr;
  Registry* reg = nullptr;
  std::vector<VarId> node_a, node_b;    // size n
  std::vector<VarId> extra_a, extra_b;  // size extra_points
};

Context make_context(Registry& reg, const Field& f, int n, int extra_points);

/// B_target^(s) by the recursion B^(s) = (B^(s-1)(target) - B^(s-1)(x_s)) /
/// (A_target - A_{x_s}), B^(0) = B. `point` indexes the extra points.
/// PreconditionError unless 0 <= s <= n.
RationalFunction div_diff(const Context& ctx, int point, int s);

/// One group element: substitutes A_w -> A_w + a and B_w -> B_w + P(A_w)
/// for every context variable, with P = p[0] + p[1] A + ... (degree < n).
struct GnElement {
  RationalFunction a;
  std::vector<RationalFunction> p;
};

/// Fully symbolic element: registers fresh parameters a, p0.., in reg.
GnElement symbolic_gn(Registry& reg, const Field& f, int n);

RationalFunction gn_apply(const Context& ctx, const GnElement& g, const RationalFunction& f);

/// The element h with gn_apply(h, f) = gn_apply(g2, gn_apply(g1, f)):
/// a = a1 + a2 and P(A) = P2(A) + P1(A + a2). The law is derived from
/// substitution composition; verify_gn_invariants certifies it.
GnElement compose(const GnElement& g1, const GnElement& g2);

/// Checks symbolically, with fully symbolic parameters, that A'_u = A_u -
/// A_{x_1} and each B_v^(n) are fixed by the generic group element; also that
/// composing two generic elements matches the derived law on the B_v^(n).
Report verify_gn_invariants(int n, int extra_points);

}  // namespace symk::divdiff
