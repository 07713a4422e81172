#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symk/alpha_trunc.hpp"
#include "test_util.hpp"

using namespace symk;
using namespace symk::alpha;

namespace {
struct Setup {
  long long p;
  int n;
  Registry reg;
  const Field& F;
  VarId sym;
  std::vector<VarId> us;

  Setup(long long p_, int n_, int npoints = 2)
      : p(p_), n(n_), F(Field::prime(p_)), sym(reg.add("X")) {
    for (int i = 0; i < npoints; ++i) us.push_back(reg.add("u" + std::to_string(i)));
  }

  LambdaDatum lam(std::uint32_t exponent, long long scale = 1) {
    Polynomial l =
        Polynomial::term(Coeff::integer(F, scale), Monomial::var(sym, exponent));
    return make_lambda(p, n, l, sym);
  }
  int m() const {
    int r = 1;
    for (int i = 0; i < n; ++i) r *= (int)p;
    return r;
  }
};
}  // namespace

TEST_CASE("truncated ring arithmetic basics") {
  Setup s(2, 1);
  TruncatedElement u = TruncatedElement::variable(s.F, s.us[0], 2);
  TruncatedElement v = TruncatedElement::variable(s.F, s.us[1], 2);
  CHECK((u + v) - v == u);
  CHECK(u * v == v * u);
  CHECK_FALSE(u.is_zero());
  CHECK(u.is_unit());

  // B^m = 0: a pure-B element is nilpotent and not invertible
  TruncatedElement b(s.F, 2);
  b.set_coeff(1, RationalFunction::one(s.F));
  CHECK((b * b).is_zero());
  CHECK_THROWS_AS(b.inverse(), NonInvertibleError);

  // units invert exactly
  TruncatedElement unit = u + b;
  TruncatedElement prod = unit * unit.inverse();
  CHECK(prod == TruncatedElement::from_rf(RationalFunction::one(s.F), 2));
}

TEST_CASE("lambda membership check") {
  Setup s(2, 1);
  CHECK_NOTHROW(s.lam(2));
  CHECK_NOTHROW(s.lam(4));
  CHECK_THROWS_AS(s.lam(1), PreconditionError);  // exponent 1 not divisible by 2
  CHECK_THROWS_AS(s.lam(3), PreconditionError);

  Setup s92(3, 2);
  CHECK_NOTHROW(s92.lam(9));
  CHECK_THROWS_AS(s92.lam(3), PreconditionError);  // needs divisibility by 9

  // zero lambda is allowed (the identity automorphism)
  CHECK_NOTHROW(make_lambda(2, 1, Polynomial::zero(s.F), s.sym));
}

TEST_CASE("xi_lambda on generators: u -> u + lambda(u) B") {
  Setup s(2, 1);
  LambdaDatum d = s.lam(2);  // lambda = X^2
  TruncatedElement u = TruncatedElement::variable(s.F, s.us[0], 2);
  TruncatedElement img = xi_lambda_apply(d, s.us, u);
  CHECK(img.coeff(0) == RationalFunction::variable(s.F, s.us[0]));
  CHECK(img.coeff(1) == RationalFunction::variable(s.F, s.us[0]).pow(2));

  // lambda = 0 gives the identity map
  LambdaDatum z = make_lambda(2, 1, Polynomial::zero(s.F), s.sym);
  TruncatedElement mixed = u * u + TruncatedElement::variable(s.F, s.us[1], 2);
  CHECK(xi_lambda_apply(z, s.us, mixed) == mixed);

  // stray variables are rejected
  VarId w = s.reg.add("w");
  TruncatedElement stray = TruncatedElement::variable(s.F, w, 2);
  CHECK_THROWS_AS(xi_lambda_apply(d, s.us, stray), PreconditionError);
}

TEST_CASE("xi_lambda is a ring homomorphism on random elements") {
  Setup s(2, 2);
  LambdaDatum d = s.lam(4);
  auto rng = testutil::make_rng(41);
  int m = s.m();
  for (int trial = 0; trial < 20; ++trial) {
    TruncatedElement a(s.F, m), b(s.F, m);
    for (int i = 0; i < m; ++i) {
      a.set_coeff(i, RationalFunction::from_poly(testutil::random_poly(rng, s.F, s.us, 2, 2)));
      b.set_coeff(i, RationalFunction::from_poly(testutil::random_poly(rng, s.F, s.us, 2, 2)));
    }
    CHECK(xi_lambda_apply(d, s.us, a + b) ==
          xi_lambda_apply(d, s.us, a) + xi_lambda_apply(d, s.us, b));
    CHECK(xi_lambda_apply(d, s.us, a * b) ==
          xi_lambda_apply(d, s.us, a) * xi_lambda_apply(d, s.us, b));
  }
}

TEST_CASE("rational coefficients go through the truncated inverse") {
  Setup s(2, 1);
  LambdaDatum d = s.lam(2);
  const Field& F = s.F;
  RationalFunction u0 = RationalFunction::variable(F, s.us[0]);
  RationalFunction u1 = RationalFunction::variable(F, s.us[1]);
  TruncatedElement elt = TruncatedElement::from_rf(u0 / u1, 2);
  TruncatedElement img = xi_lambda_apply(d, s.us, elt);
  // (u0 + u0^2 B) * (u1 + u1^2 B)^{-1}: check by multiplying back
  TruncatedElement den = TruncatedElement::variable(F, s.us[1], 2);
  den.set_coeff(1, u1.pow(2));
  TruncatedElement num = TruncatedElement::variable(F, s.us[0], 2);
  num.set_coeff(1, u0.pow(2));
  CHECK(img * den == num);
}

TEST_CASE("enabling lemma: lambda(u + cB) = lambda(u) exactly") {
  for (auto [p, n] : {std::pair<long long, int>{2, 1}, {2, 2}, {3, 1}, {2, 3}, {3, 2}}) {
    Setup s(p, n);
    int m = s.m();
    LambdaDatum d = s.lam((std::uint32_t)m);
    // u + cB with a fully symbolic coefficient c
    VarId cvar = s.reg.add("c");
    TruncatedElement shifted = TruncatedElement::variable(s.F, s.us[0], m);
    shifted.set_coeff(1, RationalFunction::variable(s.F, cvar));
    std::map<VarId, TruncatedElement> args;
    args.emplace(s.sym, shifted);
    TruncatedElement lhs = eval_poly_truncated(d.lambda, args, m);
    args.clear();
    args.emplace(s.sym, TruncatedElement::variable(s.F, s.us[0], m));
    TruncatedElement rhs = eval_poly_truncated(d.lambda, args, m);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("composition law xi_lambda . xi_lambda' = xi_{lambda+lambda'}") {
  // char 2: lambda + lambda = 0, so the square of xi_lambda is the identity
  {
    Setup s(2, 1);
    CHECK(compose_law_verify(s.lam(2), s.lam(2), s.us));
  }
  // p=3, n=1: X^3 and X^6
  {
    Setup s(3, 1);
    CHECK(compose_law_verify(s.lam(3), s.lam(6), s.us));
    CHECK(compose_law_verify(s.lam(3), make_lambda(3, 1, Polynomial::zero(s.F), s.sym), s.us));
  }
  // seeded families over all (p, n) pairs
  auto rng = testutil::make_rng(42);
  for (auto [p, n] : {std::pair<long long, int>{2, 1}, {2, 2}, {3, 1}, {2, 3}, {3, 2}}) {
    Setup s(p, n);
    int m = s.m();
    std::uniform_int_distribution<int> mult(1, 3);
    std::uniform_int_distribution<long long> scale(1, p - 1);
    for (int trial = 0; trial < 4; ++trial) {
      Polynomial l1 = Polynomial::term(Coeff::integer(s.F, scale(rng)),
                                       Monomial::var(s.sym, (std::uint32_t)(m * mult(rng))));
      Polynomial l2 = Polynomial::term(Coeff::integer(s.F, scale(rng)),
                                       Monomial::var(s.sym, (std::uint32_t)(m * mult(rng))));
      CHECK(compose_law_verify(make_lambda(p, n, l1, s.sym), make_lambda(p, n, l2, s.sym), s.us));
    }
  }
}

TEST_CASE("invertibility: xi_lambda . xi_{(p-1)lambda} = identity") {
  for (auto [p, n] : {std::pair<long long, int>{2, 1}, {3, 1}, {2, 2}}) {
    Setup s(p, n);
    int m = s.m();
    LambdaDatum d = s.lam((std::uint32_t)m);
    LambdaDatum neg = make_lambda(p, n, -d.lambda, s.sym);
    for (VarId u : s.us) {
      TruncatedElement gen = TruncatedElement::variable(s.F, u, m);
      CHECK(xi_lambda_apply(d, s.us, xi_lambda_apply(neg, s.us, gen)) == gen);
    }
  }
}

TEST_CASE("determinant generator worked examples") {
  // d=1, lambda = X^2, p=2: u1^2 u0 + u0^2 u1 (signs coincide in char 2)
  Setup s(2, 1);
  LambdaDatum d = s.lam(2);
  RationalFunction gen = determinant_generator({d}, s.us);
  RationalFunction u0 = RationalFunction::variable(s.F, s.us[0]);
  RationalFunction u1 = RationalFunction::variable(s.F, s.us[1]);
  CHECK(gen == u1.pow(2) * u0 + u0.pow(2) * u1);

  // d=1, constant lambda factors out: lambda (u0 - u1)
  Setup sq(3, 1);
  LambdaDatum cst = make_lambda(3, 1, Polynomial::constant(Coeff::integer(sq.F, 2)), sq.sym);
  RationalFunction v0 = RationalFunction::variable(sq.F, sq.us[0]);
  RationalFunction v1 = RationalFunction::variable(sq.F, sq.us[1]);
  RationalFunction two = RationalFunction::constant(Coeff::integer(sq.F, 2));
  CHECK(determinant_generator({cst}, sq.us) == two * (v0 - v1));

  // d=2 with equal lambdas: the alternating sum vanishes
  Setup s3(2, 1, 3);
  CHECK(determinant_generator({s3.lam(2), s3.lam(2)}, s3.us).is_zero());

  CHECK_THROWS_AS(determinant_generator({d}, {s.us[0], s.us[0]}), PreconditionError);
}

TEST_CASE("determinant generators are fixed: worked examples") {
  {
    Setup s(2, 1);
    CHECK(verify_fixed_generators({s.lam(2)}, s.us));
  }
  {
    Setup s(3, 1);
    CHECK(verify_fixed_generators({s.lam(3)}, s.us));
  }
  {
    Setup s(2, 2);
    CHECK(verify_fixed_generators({s.lam(4)}, s.us));
  }
}

TEST_CASE("fixed generators across all (p, n) pairs, d <= 2") {
  for (auto [p, n] : {std::pair<long long, int>{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
    {
      Setup s(p, n);
      int m = s.m();
      CHECK(verify_fixed_generators({s.lam((std::uint32_t)m)}, s.us));
    }
    {
      Setup s(p, n, 3);
      int m = s.m();
      CHECK(verify_fixed_generators({s.lam((std::uint32_t)m), s.lam((std::uint32_t)(2 * m))},
                                    s.us));
    }
  }
}

TEST_CASE("equivariance with the permutation action") {
  Setup s(2, 1, 3);
  LambdaDatum d = s.lam(2);
  TruncatedElement prod = TruncatedElement::variable(s.F, s.us[0], 2) *
                          TruncatedElement::variable(s.F, s.us[1], 2);
  VariableMap swap01 = VariableMap::transposition(s.us[0], s.us[1]);
  CHECK(equivariance_check(d, swap01, s.us, prod));
  CHECK(equivariance_check(d, VariableMap::identity(), s.us, prod));
  TruncatedElement cst = TruncatedElement::from_rf(
      RationalFunction::constant(Coeff::integer(s.F, 1)), 2);
  CHECK(equivariance_check(d, swap01, s.us, cst));

  VariableMap bad = VariableMap::from_pairs({{s.us[0], s.us[1]}});
  CHECK_THROWS_AS(equivariance_check(d, bad, s.us, prod), PreconditionError);
}
