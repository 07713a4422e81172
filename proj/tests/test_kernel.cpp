#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symk/parser.hpp"
#include "symk/rational_function.hpp"
#include "test_util.hpp"

using namespace symk;

namespace {

// tiny fixture: registry with x, y, z and helpers over Q
struct Ctx {
  Registry reg;
  const Field& Q = Field::rationals();
  VarId x = reg.add("x"), y = reg.add("y"), z = reg.add("z");
  Polynomial X = Polynomial::variable(Q, x);
  Polynomial Y = Polynomial::variable(Q, y);
  Polynomial Z = Polynomial::variable(Q, z);
  Polynomial c(long long n) { return Polynomial::constant(Coeff::integer(Q, n)); }
};

}  // namespace

TEST_CASE("poly_gcd on the worked examples") {
  Ctx t;
  // gcd(x^2-1, x^2-2x+1) = x-1: both factor by hand, common factor x-1
  Polynomial a = t.X * t.X - t.c(1);
  Polynomial b = t.X * t.X - t.c(2) * t.X + t.c(1);
  CHECK(poly_gcd(a, b) == t.X - t.c(1));

  // gcd with zero: normalized other argument
  CHECK(poly_gcd(Polynomial::zero(t.Q), t.c(3) * t.X) == t.X);
  CHECK(poly_gcd(t.c(3) * t.X, Polynomial::zero(t.Q)) == t.X);

  // content/primitive-part split across variables
  CHECK(poly_gcd(t.X * t.Y, t.X * t.Z) == t.X);

  // mixed fields are rejected
  const Field& F5 = Field::prime(5);
  CHECK_THROWS_AS(poly_gcd(t.X, Polynomial::one(F5)), FieldMismatchError);
}

TEST_CASE("poly_gcd is symmetric and divides both arguments (randomized)") {
  Ctx t;
  auto rng = testutil::make_rng(1);
  std::vector<VarId> vars = {t.x, t.y};
  for (int i = 0; i < 60; ++i) {
    Polynomial p = testutil::random_poly(rng, t.Q, vars);
    Polynomial q = testutil::random_poly(rng, t.Q, vars);
    Polynomial g = poly_gcd(p, q);
    if (p.is_zero() && q.is_zero()) {
      CHECK(g.is_zero());
      continue;
    }
    CHECK(p.divided_by(g).has_value());
    CHECK(q.divided_by(g).has_value());
    CHECK(g.leading_coeff().is_one());
    // multiplying both by a common factor multiplies the gcd by it
    Polynomial r = testutil::random_nonzero_poly(rng, t.Q, vars, 2, 2);
    Polynomial g2 = poly_gcd(p * r, q * r);
    Polynomial expected = g * r;
    expected = expected.scaled(expected.leading_coeff().inverse());
    CHECK(g2 == expected);
  }
}

TEST_CASE("rf_make canonicalizes") {
  Ctx t;
  // (x^2-1)/(x-1) = x+1
  RationalFunction f = RationalFunction::make(t.X * t.X - t.c(1), t.X - t.c(1));
  CHECK(f == RationalFunction::from_poly(t.X + t.c(1)));
  CHECK(f.str(t.reg) == "x + 1");

  // denominator normalized to leading coefficient 1
  RationalFunction h = RationalFunction::make(t.c(2) * t.X, t.c(4));
  CHECK(h.den() == Polynomial::one(t.Q));
  CHECK(h.str(t.reg) == "(1/2)*x");

  CHECK_THROWS_AS(RationalFunction::make(t.X, Polynomial::zero(t.Q)), DivisionByZeroError);

  CHECK(RationalFunction::zero(t.Q).str(t.reg) == "0");
}

TEST_CASE("canonical-form soundness: rf_make(p*r, q*r) == rf_make(p, q)") {
  Ctx t;
  auto rng = testutil::make_rng(2);
  std::vector<VarId> vars = {t.x, t.y, t.z};
  for (int i = 0; i < 200; ++i) {
    Polynomial p = testutil::random_poly(rng, t.Q, vars);
    Polynomial q = testutil::random_nonzero_poly(rng, t.Q, vars);
    Polynomial r = testutil::random_nonzero_poly(rng, t.Q, vars, 3, 2);
    CHECK(RationalFunction::make(p * r, q * r) == RationalFunction::make(p, q));
  }
}

TEST_CASE("field axioms on rational functions (randomized)") {
  Ctx t;
  auto rng = testutil::make_rng(3);
  std::vector<VarId> vars = {t.x, t.y};
  for (int i = 0; i < 60; ++i) {
    RationalFunction a = testutil::random_rf(rng, t.Q, vars);
    RationalFunction b = testutil::random_rf(rng, t.Q, vars);
    RationalFunction c = testutil::random_rf(rng, t.Q, vars);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == RationalFunction::zero(t.Q));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == RationalFunction::one(t.Q));
      CHECK(a.inverse().inverse() == a);
    }
  }
}

TEST_CASE("rf_eval") {
  Ctx t;
  Registry reg;
  VarId u = reg.add("u"), v = reg.add("v"), w = reg.add("w");
  RationalFunction f = parse_expr("(u-v)/(v-w)", reg);
  std::map<VarId, Coeff> at = {{u, Coeff::integer(t.Q, 5)}, {v, Coeff::integer(t.Q, 3)}, {w, Coeff::integer(t.Q, 2)}};
  CHECK(f.eval(at) == Coeff::integer(t.Q, 2));

  // x/x reduces to 1 before evaluation
  RationalFunction idq = RationalFunction::make(t.X, t.X);
  CHECK(idq.eval({{t.x, Coeff::integer(t.Q, 7)}}) == Coeff::integer(t.Q, 1));

  RationalFunction pole = RationalFunction::make(t.c(1), t.X - t.c(1));
  CHECK_THROWS_AS(pole.eval({{t.x, Coeff::integer(t.Q, 1)}}), PoleError);

  RationalFunction g = RationalFunction::from_poly(t.X + t.Y);
  CHECK_THROWS_AS(g.eval({{t.x, Coeff::integer(t.Q, 1)}}), IncompleteAssignmentError);
}

TEST_CASE("rf_eval is a field homomorphism (randomized)") {
  Ctx t;
  auto rng = testutil::make_rng(4);
  std::vector<VarId> vars = {t.x, t.y};
  int done = 0;
  while (done < 100) {
    RationalFunction a = testutil::random_rf(rng, t.Q, vars);
    RationalFunction b = testutil::random_rf(rng, t.Q, vars);
    std::map<VarId, Coeff> at = {{t.x, testutil::random_coeff(rng, t.Q)}, {t.y, testutil::random_coeff(rng, t.Q)}};
    try {
      Coeff ea = a.eval(at), eb = b.eval(at);
      Coeff esum = (a + b).eval(at), eprod = (a * b).eval(at);
      CHECK(esum == ea + eb);
      CHECK(eprod == ea * eb);
      ++done;
    } catch (const PoleError&) {
      // a pole of a, b, or a+b; pick another sample
    }
  }
}

TEST_CASE("parse_expr basics") {
  Registry reg;
  const Field& Q = Field::rationals();
  VarId x = reg.add("x");
  RationalFunction sq = parse_expr("x^2 + 2*x + 1", reg);
  Polynomial xp1 = Polynomial::variable(Q, x) + Polynomial::one(Q);
  CHECK(sq == RationalFunction::from_poly(xp1 * xp1));

  CHECK_THROWS_AS(parse_expr("x/", reg), ParseError);
  CHECK_THROWS_AS(parse_expr("x^-2", reg), ParseError);
  CHECK_THROWS_AS(parse_expr("x^y", reg), ParseError);
  CHECK_THROWS_AS(parse_expr("(x+1", reg), ParseError);
  CHECK_THROWS_AS(parse_expr("1/0", reg), DivisionByZeroError);
  CHECK_THROWS_AS(parse_expr("1/(x - x)", reg), DivisionByZeroError);

  // position is reported
  try {
    parse_expr("x + @", reg);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }

  // closed registry rejects unknown variables
  reg.close();
  CHECK_THROWS_AS(parse_expr("brand_new_var + 1", reg), ParseError);
  CHECK(parse_expr("x + 1", reg) == RationalFunction::from_poly(xp1));

  // unary minus binds to the base: -x^2 parses as (-x)^2 per the grammar
  CHECK(parse_expr("-x^2", reg) == parse_expr("x^2", reg));
  CHECK(parse_expr("0 - x^2", reg) == -parse_expr("x^2", reg));
}

TEST_CASE("parse(print(f)) == f on random canonical forms") {
  Ctx t;
  auto rng = testutil::make_rng(5);
  std::vector<VarId> vars = {t.x, t.y, t.z};
  for (int i = 0; i < 200; ++i) {
    RationalFunction f = testutil::random_rf(rng, t.Q, vars);
    std::string s = print_canonical(f, t.reg);
    CHECK(parse_expr(s, t.reg) == f);
  }
  // and over finite fields, including the extension-generator spelling
  for (const Field* f : {&Field::prime(5), &Field::extension(2, 2), &Field::extension(3, 2)}) {
    for (int i = 0; i < 100; ++i) {
      RationalFunction r = testutil::random_rf(rng, *f, vars);
      CHECK(parse_expr(print_canonical(r, t.reg), t.reg, *f) == r);
    }
  }
}

TEST_CASE("printing is sign-safe for leading negative powers") {
  Ctx t;
  RationalFunction f = -RationalFunction::from_poly(t.X * t.X);
  std::string s = print_canonical(f, t.reg);
  CHECK(parse_expr(s, t.reg) == f);  // must not round-trip to +x^2
}

// independent dense implementation of F_{p^k} arithmetic used as the oracle
namespace {
struct DenseExt {
  long long p;
  std::vector<long long> mod;  // ascending, monic
  std::vector<long long> mul(std::vector<long long> a, const std::vector<long long>& b) const {
    std::vector<long long> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // reduce by the monic modulus
    int k = (int)mod.size() - 1;
    for (int d = (int)prod.size() - 1; d >= k; --d) {
      long long c = prod[(std::size_t)d] % p;
      if (c == 0) continue;
      for (int i = 0; i <= k; ++i) {
        auto& slot = prod[(std::size_t)(d - k + i)];
        slot = ((slot - c * mod[(std::size_t)i]) % p + p) % p;
      }
    }
    prod.resize((std::size_t)k, 0);
    return prod;
  }
  std::vector<long long> add(std::vector<long long> a, const std::vector<long long>& b) const {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % p;
    return a;
  }
};
}  // namespace

TEST_CASE("finite-field arithmetic matches brute-force tables (F4, F8, F9, F27)") {
  for (auto [p, k] : {std::pair<long long, int>{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const Field& F = Field::extension(p, k);
    DenseExt oracle{p, F.modulus()};
    auto elems = all_elements(F);
    long long q = F.order();
    REQUIRE((long long)elems.size() == q);
    for (const Coeff& a : elems) {
      for (const Coeff& b : elems) {
        CHECK((a + b).components() == oracle.add(a.components(), b.components()));
        CHECK((a * b).components() == oracle.mul(a.components(), b.components()));
      }
      if (!a.is_zero()) {
        CHECK((a * a.inverse()).is_one());
        // Lagrange: a^(q-1) = 1
        CHECK(a.pow(q - 1).is_one());
      }
    }
    // Frobenius is additive
    for (const Coeff& a : elems)
      for (const Coeff& b : elems) CHECK((a + b).pow(p) == a.pow(p) + b.pow(p));
  }
}

TEST_CASE("prime-field and rational coefficient basics") {
  const Field& F7 = Field::prime(7);
  Coeff a = Coeff::integer(F7, 10);
  CHECK(a.residue() == 3);
  CHECK((-a).residue() == 4);
  CHECK(a.inverse().residue() == 5);  // 3*5 = 15 = 1 mod 7
  CHECK_THROWS_AS(Coeff::zero(F7).inverse(), DivisionByZeroError);
  CHECK_THROWS_AS(a + Coeff::integer(Field::prime(5), 1), FieldMismatchError);

  Coeff r = Coeff::rational(Rational(-6, 4));
  CHECK(r.str() == "-(3/2)");
  CHECK(Coeff::rational(Rational(3, 1)).str() == "3");
}

TEST_CASE("derivative follows the quotient rule") {
  Ctx t;
  RationalFunction inv_x = RationalFunction::make(t.c(1), t.X);
  RationalFunction expect = RationalFunction::make(t.c(-1), t.X * t.X);
  CHECK(inv_x.derivative(t.x) == expect);
  CHECK(RationalFunction::from_poly(t.X * t.X).derivative(t.x) ==
        RationalFunction::from_poly(t.c(2) * t.X));
  CHECK(RationalFunction::constant(Coeff::integer(t.Q, 9)).derivative(t.x).is_zero());
}

TEST_CASE("polynomial exact division") {
  Ctx t;
  Polynomial prod = (t.X + t.Y) * (t.X - t.Y);
  auto q = prod.divided_by(t.X + t.Y);
  REQUIRE(q.has_value());
  CHECK(*q == t.X - t.Y);
  CHECK_FALSE(prod.divided_by(t.X + t.c(1)).has_value());
  CHECK_THROWS_AS(prod.divided_by(Polynomial::zero(t.Q)), DivisionByZeroError);
}
