#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symk/parser.hpp"
#include "symk/perm.hpp"
#include "test_util.hpp"

using namespace symk;

namespace {
struct Ctx {
  Registry reg;
  const Field& Q = Field::rationals();
  VarId t = reg.add("t"), u = reg.add("u"), v = reg.add("v"), w = reg.add("w");
};

// all permutations of the given variables as VariableMaps
std::vector<VariableMap> symmetric_group(std::vector<VarId> vars) {
  std::vector<VariableMap> out;
  std::vector<VarId> perm = vars;
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<std::pair<VarId, VarId>> pairs;
    for (std::size_t i = 0; i < vars.size(); ++i) pairs.push_back({vars[i], perm[i]});
    out.push_back(VariableMap::from_pairs(pairs));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}
}  // namespace

TEST_CASE("apply_substitution on the worked examples") {
  Ctx c;
  RationalFunction f = parse_expr("(u-v)/(v-w)", c.reg);
  VariableMap swap_uw = VariableMap::transposition(c.u, c.w);
  CHECK(apply_substitution(f, swap_uw) == parse_expr("(w-v)/(v-u)", c.reg));

  // constants are fixed
  RationalFunction k = RationalFunction::constant(Coeff::integer(c.Q, 5));
  CHECK(apply_substitution(k, swap_uw) == k);

  // identity acts as identity
  CHECK(apply_substitution(f, VariableMap::identity()) == f);
}

TEST_CASE("group action law and homomorphism property (randomized)") {
  Ctx c;
  auto rng = testutil::make_rng(11);
  std::vector<VarId> vars = {c.t, c.u, c.v, c.w};
  auto group = symmetric_group(vars);
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  for (int i = 0; i < 50; ++i) {
    RationalFunction f = testutil::random_rf(rng, c.Q, vars);
    RationalFunction g = testutil::random_rf(rng, c.Q, vars);
    const VariableMap& sigma = group[pick(rng)];
    const VariableMap& tau = group[pick(rng)];
    CHECK(apply_substitution(f, sigma.compose(tau)) ==
          apply_substitution(apply_substitution(f, tau), sigma));
    CHECK(apply_substitution(f + g, sigma) ==
          apply_substitution(f, sigma) + apply_substitution(g, sigma));
    CHECK(apply_substitution(f * g, sigma) ==
          apply_substitution(f, sigma) * apply_substitution(g, sigma));
    if (!f.is_zero())
      CHECK(apply_substitution(f.inverse(), sigma) == apply_substitution(f, sigma).inverse());
  }
}

TEST_CASE("is_invariant") {
  Ctx c;
  RationalFunction sym = parse_expr("u+v+w", c.reg);
  std::vector<VariableMap> transpositions = {
      VariableMap::transposition(c.u, c.v),
      VariableMap::transposition(c.v, c.w),
      VariableMap::transposition(c.u, c.w),
  };
  CHECK(is_invariant(sym, transpositions));

  RationalFunction anti = parse_expr("u-v", c.reg);
  CHECK_FALSE(is_invariant(anti, {VariableMap::transposition(c.u, c.v)}));

  // the Klein four-group fixes the cross-ratio
  RationalFunction cr = parse_expr("((t-u)*(v-w))/((v-u)*(t-w))", c.reg);
  VariableMap klein = VariableMap::transposition(c.t, c.v).compose(VariableMap::transposition(c.u, c.w));
  CHECK(is_invariant(cr, {klein}));

  // non-bijective maps are rejected
  VariableMap into = VariableMap::from_pairs({{c.u, c.t}});
  CHECK_THROWS_AS(is_invariant(sym, {into}), PreconditionError);
}

TEST_CASE("orbit") {
  Ctx c;
  auto s2 = symmetric_group({c.u, c.v});
  RationalFunction diff = parse_expr("u-v", c.reg);
  auto orb = orbit(diff, s2);
  CHECK(orb.size() == 2);
  CHECK(orb.count(parse_expr("v-u", c.reg)) == 1);

  auto s4 = symmetric_group({c.t, c.u, c.v, c.w});
  RationalFunction cr = parse_expr("((t-u)*(v-w))/((v-u)*(t-w))", c.reg);
  CHECK(orbit(cr, s4).size() == 6);

  RationalFunction sym = parse_expr("u+v", c.reg);
  CHECK(orbit(sym, s2).size() == 1);

  // a non-closed list is rejected
  std::vector<VariableMap> not_closed = {VariableMap::transposition(c.u, c.v),
                                         VariableMap::transposition(c.v, c.w)};
  CHECK_THROWS_AS(orbit(diff, not_closed), PreconditionError);
}

TEST_CASE("cycle notation") {
  Ctx c;
  VariableMap m = parse_cycles("(u v)(t w)", c.reg);
  CHECK(m(c.u) == c.v);
  CHECK(m(c.v) == c.u);
  CHECK(m(c.t) == c.w);
  CHECK(m.is_bijection_of_support());

  VariableMap three = parse_cycles("(t u v)", c.reg);
  CHECK(three(c.t) == c.u);
  CHECK(three(c.u) == c.v);
  CHECK(three(c.v) == c.t);
  CHECK(parse_cycles("()", c.reg).is_identity());
  CHECK(parse_cycles("", c.reg).is_identity());
  CHECK_THROWS_AS(parse_cycles("(u v", c.reg), ParseError);

  // overlapping cycles compose right-to-left: (t u)(u v) = (t u v)
  VariableMap composed = parse_cycles("(t u)(u v)", c.reg);
  CHECK(composed(c.v) == c.t);
  CHECK(composed(c.u) == c.v);
  CHECK(composed(c.t) == c.u);
}
