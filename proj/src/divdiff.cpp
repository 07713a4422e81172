#include "symk/divdiff.hpp"

namespace symk::divdiff {

Context make_context(Registry& reg, const Field& f, int n, int extra_points) {
  if (n < 0 || extra_points < 1) throw PreconditionError("make_context: need n >= 0 and extra_points >= 1");
  Context ctx;
  ctx.n = n;
  ctx.field = &f;
  ctx.reg = &reg;
  for (int s = 1; s <= n; ++s) {
    ctx.node_a.push_back(reg.add_fresh("A_x" + std::to_string(s)));
    ctx.node_b.push_back(reg.add_fresh("B_x" + std::to_string(s)));
  }
  for (int i = 1; i <= extra_points; ++i) {
    ctx.extra_a.push_back(reg.add_fresh("A_v" + std::to_string(i)));
    ctx.extra_b.push_back(reg.add_fresh("B_v" + std::to_string(i)));
  }
  return ctx;
}

namespace {

RationalFunction dd_rec(const Context& ctx, VarId a_var, VarId b_var, int s) {
  const Field& f = *ctx.field;
  if (s == 0) return RationalFunction::variable(f, b_var);
  RationalFunction upper = dd_rec(ctx, a_var, b_var, s - 1);
  RationalFunction lower =
      dd_rec(ctx, ctx.node_a[(std::size_t)s - 1], ctx.node_b[(std::size_t)s - 1], s - 1);
  RationalFunction da = RationalFunction::variable(f, a_var) -
                        RationalFunction::variable(f, ctx.node_a[(std::size_t)s - 1]);
  return (upper - lower) / da;
}

}  // namespace

RationalFunction div_diff(const Context& ctx, int point, int s) {
  if (point < 0 || (std::size_t)point >= ctx.extra_a.size())
    throw PreconditionError("div_diff: no such extra point");
  if (s < 0 || s > ctx.n) throw PreconditionError("div_diff: order s must satisfy 0 <= s <= n");
  return dd_rec(ctx, ctx.extra_a[(std::size_t)point], ctx.extra_b[(std::size_t)point], s);
}

GnElement symbolic_gn(Registry& reg, const Field& f, int n) {
  GnElement g{RationalFunction::variable(f, reg.add_fresh("a")), {}};
  for (int i = 0; i < n; ++i)
    g.p.push_back(RationalFunction::variable(f, reg.add_fresh("p" + std::to_string(i))));
  return g;
}

RationalFunction gn_apply(const Context& ctx, const GnElement& g, const RationalFunction& f) {
  const Field& field = *ctx.field;
  if ((int)g.p.size() > ctx.n && !(ctx.n == 0 && g.p.empty()))
    throw PreconditionError("gn_apply: deg P must be < n");
  std::map<VarId, RationalFunction> subst;
  auto shift_pair = [&](VarId av, VarId bv) {
    RationalFunction a_rf = RationalFunction::variable(field, av);
    subst.emplace(av, a_rf + g.a);
    RationalFunction pa = RationalFunction::zero(field);
    RationalFunction apow = RationalFunction::one(field);
    for (const auto& coeff : g.p) {
      pa = pa + coeff * apow;
      apow = apow * a_rf;
    }
    subst.emplace(bv, RationalFunction::variable(field, bv) + pa);
  };
  for (std::size_t i = 0; i < ctx.node_a.size(); ++i) shift_pair(ctx.node_a[i], ctx.node_b[i]);
  for (std::size_t i = 0; i < ctx.extra_a.size(); ++i) shift_pair(ctx.extra_a[i], ctx.extra_b[i]);
  return f.substitute(subst);
}

GnElement compose(const GnElement& g1, const GnElement& g2) {
  if (g1.a.field().kind() != g2.a.field().kind())
    throw PreconditionError("compose: mixed fields");
  const Field& f = g1.a.field();
  GnElement out{g1.a + g2.a, {}};
  std::size_t deg = std::max(g1.p.size(), g2.p.size());
  out.p.assign(deg, RationalFunction::zero(f));
  for (std::size_t j = 0; j < g2.p.size(); ++j) out.p[j] = out.p[j] + g2.p[j];
  // P1(A + a2): q_j = sum_{i >= j} C(i, j) p1_i a2^(i-j)
  for (std::size_t j = 0; j < g1.p.size(); ++j) {
    RationalFunction q = RationalFunction::zero(f);
    for (std::size_t i = j; i < g1.p.size(); ++i) {
      long long binom = 1;
      for (std::size_t r = 0; r < i - j; ++r) binom = binom * (long long)(i - r) / (long long)(r + 1);
      q = q + RationalFunction::constant(Coeff::integer(f, binom)) * g1.p[i] * g2.a.pow((long long)(i - j));
    }
    out.p[j] = out.p[j] + q;
  }
  return out;
}

Report verify_gn_invariants(int n, int extra_points) {
  Report rep;
  rep.suite = "divdiff-n" + std::to_string(n);
  Registry reg;
  const Field& Q = Field::rationals();
  Context ctx = make_context(reg, Q, n, extra_points);
  GnElement g = symbolic_gn(reg, Q, n);

  // A'_u = A_u - A_ref is fixed
  VarId ref = n >= 1 ? ctx.node_a[0] : ctx.extra_a[0];
  for (std::size_t i = 0; i < ctx.extra_a.size(); ++i) {
    if (ctx.extra_a[i] == ref) continue;
    rep.records.push_back(run_check(
        "A-diff-fixed-v" + std::to_string(i + 1),
        "A_v - A_ref is fixed by the generic unipotent substitution", [&](CheckRecord& rec) {
          RationalFunction aprime = RationalFunction::variable(Q, ctx.extra_a[i]) -
                                    RationalFunction::variable(Q, ref);
          RationalFunction image = gn_apply(ctx, g, aprime);
          if (image != aprime) {
            rec.lhs = image.str(reg);
            rec.rhs = aprime.str(reg);
            return false;
          }
          return true;
        }));
  }

  // B_v^(n) is fixed
  for (int i = 0; i < (int)ctx.extra_b.size(); ++i) {
    rep.records.push_back(run_check(
        "divdiff-fixed-v" + std::to_string(i + 1),
        "the order-n divided difference is fixed by the generic unipotent substitution",
        [&](CheckRecord& rec) {
          RationalFunction dd = div_diff(ctx, i, n);
          RationalFunction image = gn_apply(ctx, g, dd);
          if (image != dd) {
            rec.lhs = image.str(reg);
            rec.rhs = dd.str(reg);
            return false;
          }
          return true;
        }));
  }

  // derived composition law, certified on a nontrivial element (kept to
  // small n; the substitution count grows quickly)
  if (n <= 2) {
    rep.records.push_back(run_check(
        "composition-law", "substitution composition matches the derived group law",
        [&](CheckRecord&) {
          GnElement g1 = symbolic_gn(reg, Q, n);
          GnElement g2 = symbolic_gn(reg, Q, n);
          RationalFunction probe = div_diff(ctx, 0, n) +
                                   RationalFunction::variable(Q, ctx.extra_a[0]);
          RationalFunction sequential = gn_apply(ctx, g2, gn_apply(ctx, g1, probe));
          RationalFunction combined = gn_apply(ctx, compose(g1, g2), probe);
          return sequential == combined;
        }));
  }

  return rep;
}

}  // namespace symk::divdiff
