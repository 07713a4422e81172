#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symk/divdiff.hpp"
#include "symk/perm.hpp"

using namespace symk;
using namespace symk::divdiff;

TEST_CASE("div_diff base case and one unfolding") {
  Registry reg;
  const Field& Q = Field::rationals();
  Context ctx = make_context(reg, Q, 2, 1);
  CHECK(div_diff(ctx, 0, 0) == RationalFunction::variable(Q, ctx.extra_b[0]));

  RationalFunction s1 = div_diff(ctx, 0, 1);
  RationalFunction expect =
      (RationalFunction::variable(Q, ctx.extra_b[0]) - RationalFunction::variable(Q, ctx.node_b[0])) /
      (RationalFunction::variable(Q, ctx.extra_a[0]) - RationalFunction::variable(Q, ctx.node_a[0]));
  CHECK(s1 == expect);

  CHECK_THROWS_AS(div_diff(ctx, 0, 3), PreconditionError);
  CHECK_THROWS_AS(div_diff(ctx, 5, 1), PreconditionError);
}

TEST_CASE("div_diff numeric worked example") {
  // nodes (0,5), (1,7), extra point (2,11): B^(1) = (11-5)/2 = 3 at the extra
  // point, (7-5)/1 = 2 at x2, and B^(2) = (3-2)/(2-1) = 1
  Registry reg;
  const Field& Q = Field::rationals();
  Context ctx = make_context(reg, Q, 2, 1);
  std::map<VarId, Coeff> at = {
      {ctx.node_a[0], Coeff::integer(Q, 0)}, {ctx.node_b[0], Coeff::integer(Q, 5)},
      {ctx.node_a[1], Coeff::integer(Q, 1)}, {ctx.node_b[1], Coeff::integer(Q, 7)},
      {ctx.extra_a[0], Coeff::integer(Q, 2)}, {ctx.extra_b[0], Coeff::integer(Q, 11)},
  };
  CHECK(div_diff(ctx, 0, 2).eval(at) == Coeff::integer(Q, 1));
}

TEST_CASE("gn_apply trivial cases") {
  Registry reg;
  const Field& Q = Field::rationals();

  // n = 0: P = 0, only the A-shift acts; B_u is untouched
  Context c0 = make_context(reg, Q, 0, 2);
  GnElement g0 = symbolic_gn(reg, Q, 0);
  RationalFunction bu = RationalFunction::variable(Q, c0.extra_b[0]);
  CHECK(gn_apply(c0, g0, bu) == bu);
  RationalFunction au = RationalFunction::variable(Q, c0.extra_a[0]);
  CHECK(gn_apply(c0, g0, au) == au + g0.a);

  // n = 1: constants cancel in the first divided difference
  Context c1 = make_context(reg, Q, 1, 1);
  GnElement g1 = symbolic_gn(reg, Q, 1);
  RationalFunction dd1 = div_diff(c1, 0, 1);
  CHECK(gn_apply(c1, g1, dd1) == dd1);
}

TEST_CASE("B^(2) fixed symbolically and at a random concrete element") {
  Registry reg;
  const Field& Q = Field::rationals();
  Context ctx = make_context(reg, Q, 2, 1);
  RationalFunction dd2 = div_diff(ctx, 0, 2);

  GnElement sym = symbolic_gn(reg, Q, 2);
  CHECK(gn_apply(ctx, sym, dd2) == dd2);

  GnElement concrete{RationalFunction::constant(Coeff::rational(Rational(3, 2))),
                     {RationalFunction::constant(Coeff::integer(Q, -4)),
                      RationalFunction::constant(Coeff::rational(Rational(7, 5)))}};
  CHECK(gn_apply(ctx, concrete, dd2) == dd2);
}

TEST_CASE("node symmetry of B^(s) for s <= 3") {
  Registry reg;
  const Field& Q = Field::rationals();
  Context ctx = make_context(reg, Q, 3, 1);
  for (int s = 1; s <= 3; ++s) {
    RationalFunction dd = div_diff(ctx, 0, s);
    // permute the first s node pairs (A and B jointly) in every way
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    do {
      std::vector<std::pair<VarId, VarId>> pairs;
      for (int i = 0; i < s; ++i) {
        pairs.push_back({ctx.node_a[i], ctx.node_a[(std::size_t)idx[(std::size_t)i]]});
        pairs.push_back({ctx.node_b[i], ctx.node_b[(std::size_t)idx[(std::size_t)i]]});
      }
      VariableMap sigma = VariableMap::from_pairs(pairs);
      CHECK(apply_substitution(dd, sigma) == dd);
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
}

TEST_CASE("verify_gn_invariants for n <= 3") {
  for (int n = 0; n <= 3; ++n) {
    Report rep = verify_gn_invariants(n, 2);
    INFO("n = ", n);
    for (const auto& rec : rep.records) {
      INFO(rec.id, " lhs=", rec.lhs, " rhs=", rec.rhs);
      CHECK(rec.ok());
    }
  }
}

TEST_CASE("composition law on symbolic parameters, n <= 2") {
  Registry reg;
  const Field& Q = Field::rationals();
  for (int n = 0; n <= 2; ++n) {
    Context ctx = make_context(reg, Q, n, 1);
    GnElement g1 = symbolic_gn(reg, Q, n);
    GnElement g2 = symbolic_gn(reg, Q, n);
    RationalFunction probe = div_diff(ctx, 0, n);
    CHECK(gn_apply(ctx, g2, gn_apply(ctx, g1, probe)) == gn_apply(ctx, compose(g1, g2), probe));
    // the composed element has the expected parameter count (dim G_n = n+1)
    GnElement h = compose(g1, g2);
    CHECK((int)h.p.size() == n);
  }
}
