#include "symk/invariant_fields.hpp"

#include "symk/parser.hpp"

namespace symk::inv {

namespace {

RationalFunction var(const Field& f, VarId v) { return RationalFunction::variable(f, v); }

}  // namespace

RationalFunction cross_ratio(const Field& f, VarId t, VarId u, VarId v, VarId w) {
  if (u == v || t == w)
    throw PreconditionError("cross_ratio: repeated variables make the denominator vanish");
  RationalFunction T = var(f, t), U = var(f, u), V = var(f, v), W = var(f, w);
  return ((T - U) * (V - W)) / ((V - U) * (T - W));
}

RationalFunction kc_generator(const Field& f, VarId u, VarId v, VarId w) {
  if (v == w) throw PreconditionError("kc_generator: v == w makes the denominator vanish");
  RationalFunction U = var(f, u), V = var(f, v), W = var(f, w);
  return (U - V) / (V - W);
}

XiChart chart_c(const Field& f, VarId x, VarId y) {
  if (x == y) throw PreconditionError("chart basepoints must be distinct");
  return XiChart{XiChart::Case::c, &f, x, y, x};
}

XiChart chart_d(const Field& f, VarId x, VarId y, VarId z) {
  if (x == y || x == z || y == z) throw PreconditionError("chart basepoints must be distinct");
  return XiChart{XiChart::Case::d, &f, x, y, z};
}

RationalFunction xi_apply(const XiChart& chart, VarId u) {
  const Field& f = *chart.field;
  RationalFunction U = var(f, u), X = var(f, chart.x), Y = var(f, chart.y);
  if (chart.chart_case == XiChart::Case::c) return (U - Y) / (X - Y);
  if (u == chart.z) throw PreconditionError("xi_apply: u equals the basepoint z where the chart degenerates");
  RationalFunction Z = var(f, chart.z);
  return ((U - Y) * (Z - X)) / ((Z - U) * (X - Y));
}

XiSpace make_xi_space(Registry& reg, const XiChart& chart, const std::vector<VarId>& aux) {
  XiSpace space{chart, {}};
  for (VarId v : aux) {
    if (v == chart.x || v == chart.y || (chart.chart_case == XiChart::Case::d && v == chart.z))
      throw PreconditionError("auxiliary variable coincides with a chart basepoint");
    space.xi_symbol[v] = reg.add_fresh("xi_" + reg.name(v));
  }
  return space;
}

RationalFunction transposition_on_xi(const XiSpace& space, XiTransposition kind, VarId u,
                                     const RationalFunction& expr) {
  const XiChart& chart = space.chart;
  const Field& f = *chart.field;

  // route 1: expand xi symbols into underlying variables, permute underneath
  std::map<VarId, RationalFunction> expand;
  for (const auto& [v, sym] : space.xi_symbol) expand.emplace(sym, xi_apply(chart, v));
  RationalFunction underlying = expr.substitute(expand);
  VariableMap sigma = kind == XiTransposition::xu ? VariableMap::transposition(chart.x, u)
                                                  : VariableMap::transposition(chart.x, chart.y);
  RationalFunction permuted = apply_substitution(underlying, sigma);

  // route 2: the closed-form law on the symbols
  std::map<VarId, RationalFunction> law;
  if (kind == XiTransposition::xu) {
    auto it = space.xi_symbol.find(u);
    if (it == space.xi_symbol.end())
      throw PreconditionError("transposition (x u): u must be an auxiliary variable of the space");
    RationalFunction xi_u = var(f, it->second);
    for (const auto& [v, sym] : space.xi_symbol)
      law.emplace(sym, v == u ? xi_u.inverse() : var(f, sym) / xi_u);
  } else {
    for (const auto& [v, sym] : space.xi_symbol)
      law.emplace(sym, RationalFunction::one(f) - var(f, sym));
  }
  RationalFunction image = expr.substitute(law);
  RationalFunction image_underlying = image.substitute(expand);

  if (permuted != image_underlying)
    throw InternalError("xi transposition law violated: permutation route and closed-form route disagree");
  return image;
}

Report verify_identity_suite() {
  Report rep;
  rep.suite = "alg-sub-kpsi";
  Registry reg;
  const Field& Q = Field::rationals();

  auto rf = [&](const std::string& s) { return parse_expr(s, reg, Q); };

  auto equality_check = [&](const std::string& id, const std::string& anchor,
                            const RationalFunction& lhs, const RationalFunction& rhs,
                            bool expect_equal) {
    rep.records.push_back(run_check(id, anchor, [&](CheckRecord& rec) {
      bool equal = lhs == rhs;
      if (equal != expect_equal) {
        rec.lhs = print_canonical(lhs, reg);
        rec.rhs = print_canonical(rhs, reg);
      }
      return equal == expect_equal;
    }));
  };

  // I1: cross-ratio multiplicativity across a common point
  equality_check("I1-multiplicativity", "cross-ratio multiplicativity in the first argument",
                 rf("((x-u)*(y-z))/((x-y)*(u-z)) * ((u-z)*(x-t))/((u-x)*(z-t))"),
                 rf("((x-t)*(y-z))/((x-y)*(t-z))"), true);

  // I2: difference of case-d chart values. The orientation matching the
  // chart ((u-y)(z-x))/((z-u)(x-y)) carries (u-v) in the numerator; the
  // (v-u) spelling is off by a sign, which a companion record pins down.
  {
    VarId x = reg.get_or_add("x"), y = reg.get_or_add("y"), z = reg.get_or_add("z");
    VarId u = reg.get_or_add("u"), v = reg.get_or_add("v"), w = reg.get_or_add("w");
    XiChart chart = chart_d(Q, x, y, z);
    RationalFunction xu = xi_apply(chart, u), xv = xi_apply(chart, v), xw = xi_apply(chart, w);
    equality_check("I2-difference", "difference of projective chart values", xu - xv,
                   rf("((u-v)*(y-z)*(x-z))/((x-y)*(u-z)*(v-z))"), true);
    equality_check("I2-opposite-sign", "the (v-u) orientation is the exact negative",
                   -(xu - xv), rf("((v-u)*(y-z)*(x-z))/((x-y)*(u-z)*(v-z))"), true);

    // I3: the ratio of differences forgets the basepoints x, y
    equality_check("I3-ratio", "ratio of chart-value differences", (xu - xv) / (xu - xw),
                   rf("((w-z)*(v-u))/((w-u)*(v-z))"), true);

    // I4: inverse differences and the failure of inversion to commute with
    // the permutation action: the inverted-ratio is a different function
    equality_check("I4-inverse-difference", "difference of inverted chart values",
                   xu.inverse() - xv.inverse(),
                   rf("((x-y)*(v-u)*(z-y))/((z-x)*(u-y)*(v-y))"), true);
    equality_check("I4-inverse-ratio", "ratio of inverted chart-value differences",
                   (xu.inverse() - xv.inverse()) / (xu.inverse() - xw.inverse()),
                   rf("((v-u)*(w-y))/((v-y)*(w-u))"), true);
    equality_check("I4-ratio-differs", "inverted ratio differs from the direct ratio",
                   (xu.inverse() - xv.inverse()) / (xu.inverse() - xw.inverse()),
                   (xu - xv) / (xu - xw), false);
    equality_check("I4-displays-differ", "the two displayed ratio expressions differ",
                   rf("((x-w)*(u-v))/((x-v)*(u-w))"), rf("((w-u)*(v-z))/((w-z)*(v-u))"), false);
  }

  // I5: the candidate affine involution is not multiplicative
  equality_check("I5-affine-relation", "multiplicative relation among affine generators",
                 rf("-((t-v)/(v-w))"), rf("((u-v)/(v-w)) * ((t-v)/(v-u))"), true);
  equality_check("I5-involution-fails", "the involution image violates the relation",
                 rf("-((t+v-2*w)/(v+w-2*t))"),
                 rf("((u+v-2*w)/(v+w-2*u)) * ((t+v-2*u)/(v+u-2*t))"), false);

  // I6: (T-2)/(2T-1) is an involution
  {
    VarId T = reg.get_or_add("T");
    RationalFunction cand = rf("(T-2)/(2*T-1)");
    RationalFunction composed = cand.substitute({{T, cand}});
    equality_check("I6-involution", "(T-2)/(2T-1) composed with itself is the identity", composed,
                   RationalFunction::variable(Q, T), true);
  }

  return rep;
}

InvariantGenerator make_generator(InvariantGenerator::Family family, const Field& f,
                                  const std::vector<VarId>& args, int power) {
  using Family = InvariantGenerator::Family;
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw PreconditionError("generator expects " + std::to_string(n) + " arguments");
    std::set<VarId> uniq(args.begin(), args.end());
    if (uniq.size() != args.size()) throw PreconditionError("generator arguments must be pairwise distinct");
  };
  InvariantGenerator gen{family, power, args, RationalFunction::zero(f)};
  switch (family) {
    case Family::kc:
      need(3);
      gen.value = kc_generator(f, args[0], args[1], args[2]);
      break;
    case Family::kd:
      need(4);
      gen.value = cross_ratio(f, args[0], args[1], args[2], args[3]);
      break;
    case Family::ka_additive:
      need(2);
      gen.value = var(f, args[0]) - var(f, args[1]);
      break;
    case Family::ka_multiplicative:
      need(2);
      gen.value = var(f, args[0]) / var(f, args[1]);
      break;
    case Family::kc_power:
      need(2);
      if (power < 1) throw PreconditionError("kc_power requires power >= 1");
      gen.value = (var(f, args[0]) - var(f, args[1])).pow(power);
      break;
  }
  return gen;
}

bool family_matches_group(InvariantGenerator::Family family, GroupKind group) {
  using Family = InvariantGenerator::Family;
  switch (family) {
    case Family::kd:
      return group == GroupKind::mobius;
    case Family::kc:
      return group == GroupKind::affine;
    case Family::ka_additive:
    case Family::kc_power:
      return group == GroupKind::translation;
    case Family::ka_multiplicative:
      return group == GroupKind::scaling;
  }
  return false;
}

bool generic_action_fixes(const RationalFunction& value, const std::vector<VarId>& args,
                          GroupKind group, Registry& reg) {
  const Field& f = value.field();
  std::map<VarId, RationalFunction> subst;
  switch (group) {
    case GroupKind::translation: {
      RationalFunction s = var(f, reg.add_fresh("s"));
      for (VarId v : args) subst.emplace(v, var(f, v) + s);
      break;
    }
    case GroupKind::scaling: {
      RationalFunction a = var(f, reg.add_fresh("a"));
      for (VarId v : args) subst.emplace(v, a * var(f, v));
      break;
    }
    case GroupKind::affine: {
      RationalFunction a = var(f, reg.add_fresh("a"));
      RationalFunction b = var(f, reg.add_fresh("b"));
      for (VarId v : args) subst.emplace(v, a * var(f, v) + b);
      break;
    }
    case GroupKind::mobius: {
      RationalFunction a = var(f, reg.add_fresh("a"));
      RationalFunction b = var(f, reg.add_fresh("b"));
      RationalFunction c = var(f, reg.add_fresh("c"));
      RationalFunction d = var(f, reg.add_fresh("d"));
      for (VarId v : args) subst.emplace(v, (a * var(f, v) + b) / (c * var(f, v) + d));
      break;
    }
  }
  // the common a*d - b*c (or a) factors cancel in the canonical form, so
  // invariance is a plain equality of reduced fractions
  return value.substitute(subst) == value;
}

bool verify_group_invariance(const InvariantGenerator& gen, GroupKind group, Registry& reg) {
  if (!family_matches_group(gen.family, group))
    throw PreconditionError("generator family does not match the requested group");
  return generic_action_fixes(gen.value, gen.args, group, reg);
}

}  // namespace symk::inv
