#include "symk/alpha_trunc.hpp"

#include <algorithm>
#include <sstream>

namespace symk::alpha {

TruncatedElement::TruncatedElement(const Field& f, int m) {
  if (m < 1) throw PreconditionError("truncated ring needs modulus >= 1");
  coeffs_.assign((std::size_t)m, RationalFunction::zero(f));
}

TruncatedElement TruncatedElement::from_rf(RationalFunction c0, int m) {
  TruncatedElement e(c0.field(), m);
  e.coeffs_[0] = std::move(c0);
  return e;
}

TruncatedElement TruncatedElement::variable(const Field& f, VarId v, int m) {
  return from_rf(RationalFunction::variable(f, v), m);
}

const RationalFunction& TruncatedElement::coeff(int i) const {
  if (i < 0 || i >= modulus()) throw PreconditionError("coefficient index out of range");
  return coeffs_[(std::size_t)i];
}

void TruncatedElement::set_coeff(int i, RationalFunction value) {
  if (i < 0 || i >= modulus()) throw PreconditionError("coefficient index out of range");
  coeffs_[(std::size_t)i] = std::move(value);
}

bool TruncatedElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const RationalFunction& c) { return c.is_zero(); });
}

void TruncatedElement::check_compatible(const TruncatedElement& o) const {
  if (modulus() != o.modulus()) throw PreconditionError("truncated elements with different moduli");
  if (&field() != &o.field()) throw FieldMismatchError("truncated elements over different fields");
}

TruncatedElement TruncatedElement::operator+(const TruncatedElement& o) const {
  check_compatible(o);
  TruncatedElement r = *this;
  for (int i = 0; i < modulus(); ++i) r.coeffs_[(std::size_t)i] = r.coeffs_[(std::size_t)i] + o.coeffs_[(std::size_t)i];
  return r;
}

TruncatedElement TruncatedElement::operator-(const TruncatedElement& o) const { return *this + (-o); }

TruncatedElement TruncatedElement::operator-() const {
  TruncatedElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncatedElement TruncatedElement::operator*(const TruncatedElement& o) const {
  check_compatible(o);
  TruncatedElement r(field(), modulus());
  for (int i = 0; i < modulus(); ++i) {
    if (coeffs_[(std::size_t)i].is_zero()) continue;
    for (int j = 0; i + j < modulus(); ++j) {
      if (o.coeffs_[(std::size_t)j].is_zero()) continue;
      auto& slot = r.coeffs_[(std::size_t)(i + j)];
      slot = slot + coeffs_[(std::size_t)i] * o.coeffs_[(std::size_t)j];
    }
  }
  return r;
}

TruncatedElement TruncatedElement::inverse() const {
  if (!is_unit()) throw NonInvertibleError("truncated element with zero constant term");
  const Field& f = field();
  int m = modulus();
  RationalFunction c0_inv = coeffs_[0].inverse();
  // (c0 (1 + eps))^{-1} = c0^{-1} sum (-eps)^k, eps nilpotent
  TruncatedElement eps = *this;
  for (auto& c : eps.coeffs_) c = c * c0_inv;
  eps.coeffs_[0] = RationalFunction::zero(f);
  TruncatedElement acc = from_rf(RationalFunction::one(f), m);
  TruncatedElement power = from_rf(RationalFunction::one(f), m);
  for (int k = 1; k < m; ++k) {
    power = power * eps;
    if (power.is_zero()) break;
    acc = k % 2 ? acc - power : acc + power;
  }
  for (auto& c : acc.coeffs_) c = c * c0_inv;
  return acc;
}

TruncatedElement TruncatedElement::pow(std::uint32_t e) const {
  TruncatedElement acc = from_rf(RationalFunction::one(field()), modulus());
  TruncatedElement base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

std::string TruncatedElement::str(const Registry& reg) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < modulus(); ++i) {
    if (coeffs_[(std::size_t)i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[(std::size_t)i].str(reg) << ")";
    if (i == 1) os << "*B";
    if (i > 1) os << "*B^" << i;
  }
  if (first) os << "0";
  return os.str();
}

LambdaDatum make_lambda(long long p, int n, Polynomial lambda, VarId symbol) {
  if (n < 1) throw PreconditionError("make_lambda: n >= 1 required");
  const Field& f = lambda.field();
  if (f.characteristic() != p || p < 2)
    throw PreconditionError("make_lambda: lambda must live over a field of characteristic p");
  long long m = 1;
  for (int i = 0; i < n; ++i) {
    m *= p;
    if (m > 4096) throw PreconditionError("make_lambda: p^n too large for the truncated model");
  }
  for (const auto& [mono, c] : lambda.terms()) {
    for (const auto& [v, e] : mono.factors()) {
      if (v != symbol) throw PreconditionError("make_lambda: lambda must be univariate in its symbol");
      if (e % (std::uint32_t)m != 0)
        throw PreconditionError("make_lambda: exponent " + std::to_string(e) +
                                " is not divisible by p^n = " + std::to_string(m) +
                                "; lambda is not in the span of p^n-th powers");
    }
  }
  return LambdaDatum{p, n, (int)m, std::move(lambda), symbol};
}

RationalFunction lambda_at(const LambdaDatum& d, VarId u) {
  const Field& f = d.lambda.field();
  std::map<VarId, RationalFunction> subst;
  subst.emplace(d.symbol, RationalFunction::variable(f, u));
  return RationalFunction::from_poly(d.lambda).substitute(subst);
}

TruncatedElement eval_poly_truncated(const Polynomial& p,
                                     const std::map<VarId, TruncatedElement>& args, int m) {
  const Field& f = p.field();
  TruncatedElement acc(f, m);
  std::map<VarId, std::vector<TruncatedElement>> powers;
  auto power_of = [&](VarId v, std::uint32_t e) -> const TruncatedElement& {
    auto it = args.find(v);
    if (it == args.end()) throw PreconditionError("eval_poly_truncated: unsubstituted variable");
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(TruncatedElement::from_rf(RationalFunction::one(f), m));
    while (cache.size() <= e) cache.push_back(cache.back() * it->second);
    return cache[e];
  };
  for (const auto& [mono, c] : p.terms()) {
    TruncatedElement term = TruncatedElement::from_rf(RationalFunction::constant(c), m);
    for (const auto& [v, e] : mono.factors()) term = term * power_of(v, e);
    acc = acc + term;
  }
  return acc;
}

TruncatedElement xi_lambda_apply(const LambdaDatum& d, const std::vector<VarId>& vars,
                                 const TruncatedElement& elt) {
  const Field& f = elt.field();
  if (f.characteristic() != d.p) throw FieldMismatchError("xi_lambda_apply: characteristic mismatch");
  if (elt.modulus() != d.modulus)
    throw PreconditionError("xi_lambda_apply: element modulus differs from p^n");
  int m = d.modulus;

  std::set<VarId> allowed(vars.begin(), vars.end());
  std::map<VarId, TruncatedElement> images;
  for (VarId u : vars) {
    TruncatedElement img = TruncatedElement::variable(f, u, m);
    if (m > 1) img.set_coeff(1, lambda_at(d, u));
    images.emplace(u, std::move(img));
  }

  auto apply_rf = [&](const RationalFunction& c) {
    for (VarId v : c.variables())
      if (!allowed.count(v))
        throw PreconditionError("xi_lambda_apply: coefficient uses a variable outside vars");
    TruncatedElement num = eval_poly_truncated(c.num(), images, m);
    TruncatedElement den = eval_poly_truncated(c.den(), images, m);
    return num * den.inverse();
  };

  TruncatedElement out(f, m);
  TruncatedElement shift(f, m);  // B as an element
  if (m > 1) shift.set_coeff(1, RationalFunction::one(f));
  TruncatedElement bpow = TruncatedElement::from_rf(RationalFunction::one(f), m);
  for (int i = 0; i < m; ++i) {
    if (!elt.coeff(i).is_zero()) out = out + apply_rf(elt.coeff(i)) * bpow;
    if (i + 1 < m) bpow = bpow * shift;
  }
  return out;
}

bool compose_law_verify(const LambdaDatum& d1, const LambdaDatum& d2,
                        const std::vector<VarId>& vars) {
  if (d1.p != d2.p || d1.n != d2.n) throw PreconditionError("compose_law_verify: mismatched (p, n)");
  const Field& f = d1.lambda.field();
  if (&f != &d2.lambda.field()) throw FieldMismatchError("compose_law_verify: mixed fields");
  LambdaDatum sum = make_lambda(d1.p, d1.n, d1.lambda + d2.lambda, d1.symbol);
  for (VarId u : vars) {
    TruncatedElement gen = TruncatedElement::variable(f, u, d1.modulus);
    TruncatedElement two_step = xi_lambda_apply(d1, vars, xi_lambda_apply(d2, vars, gen));
    TruncatedElement one_step = xi_lambda_apply(sum, vars, gen);
    if (two_step != one_step) return false;
  }
  return true;
}

RationalFunction determinant_generator(const std::vector<LambdaDatum>& lambdas,
                                       const std::vector<VarId>& us) {
  if (lambdas.empty()) throw PreconditionError("determinant_generator: need d >= 1");
  std::size_t d = lambdas.size();
  if (us.size() != d + 1) throw PreconditionError("determinant_generator: need d+1 variables");
  std::set<VarId> uniq(us.begin(), us.end());
  if (uniq.size() != us.size()) throw PreconditionError("determinant_generator: repeated variables");
  for (const auto& l : lambdas)
    if (l.p != lambdas[0].p || l.n != lambdas[0].n)
      throw PreconditionError("determinant_generator: mismatched (p, n)");

  const Field& f = lambdas[0].lambda.field();
  RationalFunction acc = RationalFunction::zero(f);
  std::vector<std::size_t> perm(d + 1);
  for (std::size_t i = 0; i <= d; ++i) perm[i] = i;
  do {
    // sign by counting inversions
    int inversions = 0;
    for (std::size_t i = 0; i <= d; ++i)
      for (std::size_t j = i + 1; j <= d; ++j)
        if (perm[i] > perm[j]) ++inversions;
    RationalFunction term = RationalFunction::variable(f, us[perm[0]]);
    for (std::size_t i = 1; i <= d; ++i) term = term * lambda_at(lambdas[i - 1], us[perm[i]]);
    acc = inversions % 2 ? acc - term : acc + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

bool verify_fixed_generators(const std::vector<LambdaDatum>& lambdas,
                             const std::vector<VarId>& us) {
  RationalFunction gen = determinant_generator(lambdas, us);
  int m = lambdas[0].modulus;
  TruncatedElement gen_elt = TruncatedElement::from_rf(gen, m);
  for (const auto& l : lambdas)
    if (xi_lambda_apply(l, us, gen_elt) != gen_elt) return false;
  return true;
}

bool equivariance_check(const LambdaDatum& d, const VariableMap& sigma,
                        const std::vector<VarId>& vars, const TruncatedElement& elt) {
  if (!sigma.is_bijection_of_support())
    throw PreconditionError("equivariance_check: sigma must be a bijection of its support");
  std::set<VarId> allowed(vars.begin(), vars.end());
  for (VarId v : sigma.support())
    if (allowed.count(v) && !allowed.count(sigma(v)))
      throw PreconditionError("equivariance_check: sigma must map vars into vars");
  auto act = [&](const TruncatedElement& e) {
    TruncatedElement out = e;
    for (int i = 0; i < e.modulus(); ++i) out.set_coeff(i, apply_substitution(e.coeff(i), sigma));
    return out;
  };
  return xi_lambda_apply(d, vars, act(elt)) == act(xi_lambda_apply(d, vars, elt));
}

}  // namespace symk::alpha
