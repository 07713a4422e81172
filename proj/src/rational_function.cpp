#include "symk/rational_function.hpp"

#include <sstream>

namespace symk {

RationalFunction RationalFunction::make(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
  if (&num.field() != &den.field())
    throw FieldMismatchError("rational function with mixed fields " + num.field().name() + " vs " + den.field().name());
  if (num.is_zero()) return {Polynomial::zero(num.field()), Polynomial::one(num.field())};
  Polynomial g = poly_gcd(num, den);
  auto n = num.divided_by(g), d = den.divided_by(g);
  if (!n || !d) throw InternalError("gcd does not divide its arguments");
  return make_reduced(std::move(*n), std::move(*d));
}

// num/den already coprime; normalize the denominator to leading coefficient 1
RationalFunction RationalFunction::make_reduced(Polynomial num, Polynomial den) {
  Coeff lc = den.leading_coeff();
  if (!lc.is_one()) {
    Coeff inv = lc.inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return {std::move(num), std::move(den)};
}

RationalFunction RationalFunction::from_poly(Polynomial p) {
  Polynomial one = Polynomial::one(p.field());
  return {std::move(p), std::move(one)};
}

RationalFunction RationalFunction::constant(Coeff c) { return from_poly(Polynomial::constant(std::move(c))); }

RationalFunction RationalFunction::zero(const Field& f) { return RationalFunction(f); }

RationalFunction RationalFunction::one(const Field& f) { return from_poly(Polynomial::one(f)); }

RationalFunction RationalFunction::variable(const Field& f, VarId v) {
  return from_poly(Polynomial::variable(f, v));
}

bool RationalFunction::is_one() const {
  return den_.is_constant() && num_.is_constant() && !num_.is_zero() && num_.constant_value().is_one() &&
         den_.constant_value().is_one();
}

Coeff RationalFunction::constant_value() const {
  if (!is_constant()) throw PreconditionError("constant_value: rational function is not constant");
  if (num_.is_zero()) return Coeff::zero(field());
  return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  // a/b + c/d with g = gcd(b,d): the final reduction only needs gcd against g
  Polynomial g = poly_gcd(den_, o.den_);
  auto b1 = den_.divided_by(g), d1 = o.den_.divided_by(g);
  Polynomial num = num_ * (*d1) + o.num_ * (*b1);
  Polynomial den = den_ * (*d1);
  if (num.is_zero()) return zero(field());
  Polynomial g2 = poly_gcd(num, g);
  if (!g2.is_constant()) {
    num = *num.divided_by(g2);
    den = *den.divided_by(g2);
  }
  return make_reduced(std::move(num), std::move(den));
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  // cross-cancel: (a/b)(c/d) with a⊥b, c⊥d stays reduced after removing
  // gcd(a,d) and gcd(c,b)
  if (num_.is_zero() || o.num_.is_zero()) return zero(field());
  Polynomial g1 = poly_gcd(num_, o.den_);
  Polynomial g2 = poly_gcd(o.num_, den_);
  Polynomial num = *num_.divided_by(g1) * *o.num_.divided_by(g2);
  Polynomial den = *den_.divided_by(g2) * *o.den_.divided_by(g1);
  return make_reduced(std::move(num), std::move(den));
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw DivisionByZeroError("inverse of the zero rational function");
  return make_reduced(den_, num_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const { return *this * o.inverse(); }

RationalFunction RationalFunction::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction acc = one(field());
  RationalFunction base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

int RationalFunction::cmp(const RationalFunction& o) const {
  int c = num_.cmp(o.num_);
  if (c != 0) return c;
  return den_.cmp(o.den_);
}

Coeff RationalFunction::eval(const std::map<VarId, Coeff>& assignment) const {
  Coeff d = den_.eval(assignment);
  if (d.is_zero()) throw PoleError("denominator vanishes at the assignment");
  return num_.eval(assignment) / d;
}

RationalFunction RationalFunction::substitute(const std::map<VarId, RationalFunction>& subst) const {
  const Field& f = field();
  // evaluate a polynomial at rational-function arguments, with power caching
  std::map<VarId, std::vector<RationalFunction>> powers;  // powers[v][e] = v^e
  auto power_of = [&](VarId v, std::uint32_t e) -> RationalFunction {
    auto it = subst.find(v);
    RationalFunction base = it == subst.end() ? variable(f, v) : it->second;
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(one(f));
    while (cache.size() <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };
  auto eval_poly = [&](const Polynomial& p) {
    RationalFunction acc = zero(f);
    for (const auto& [m, c] : p.terms()) {
      RationalFunction t = constant(c);
      for (const auto& [v, e] : m.factors()) t = t * power_of(v, e);
      acc = acc + t;
    }
    return acc;
  };
  RationalFunction dnew = eval_poly(den_);
  if (dnew.is_zero()) throw PoleError("substitution sends the denominator to zero");
  return eval_poly(num_) / dnew;
}

RationalFunction RationalFunction::rename(const std::map<VarId, VarId>& map) const {
  return make_reduced(num_.rename(map), den_.rename(map));
}

RationalFunction RationalFunction::derivative(VarId v) const {
  Polynomial num = num_.derivative(v) * den_ - num_ * den_.derivative(v);
  Polynomial den = den_ * den_;
  return make(std::move(num), std::move(den));
}

std::set<VarId> RationalFunction::variables() const {
  std::set<VarId> out = num_.variables();
  auto dv = den_.variables();
  out.insert(dv.begin(), dv.end());
  return out;
}

bool RationalFunction::uses_var(VarId v) const { return num_.uses_var(v) || den_.uses_var(v); }

std::string RationalFunction::str(const Registry& reg) const { return print_canonical(*this, reg); }

std::string print_canonical(const RationalFunction& f, const Registry& reg) {
  if (f.is_polynomial() && f.den().constant_value().is_one()) return poly_to_string(f.num(), reg);
  std::ostringstream os;
  os << "(" << poly_to_string(f.num(), reg) << ")/(" << poly_to_string(f.den(), reg) << ")";
  return os.str();
}

}  // namespace symk
