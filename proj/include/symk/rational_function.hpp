#pragma once

#include <map>
#include <string>

#include "symk/polynomial.hpp"

namespace symk {

/// Canonical reduced fraction of two polynomials: gcd(num, den) = 1 and the
/// denominator's grlex leading coefficient is 1. Two values represent the
/// same field element iff their stored forms are identical, so operator== is
/// structural equality.
class RationalFunction {
 public:
  /// Canonicalizing constructor; DivisionByZeroError if den == 0.
  static RationalFunction make(Polynomial num, Polynomial den);
  static RationalFunction from_poly(Polynomial p);
  static RationalFunction constant(Coeff c);
  static RationalFunction zero(const Field& f);
  static RationalFunction one(const Field& f);
  static RationalFunction variable(const Field& f, VarId v);

  explicit RationalFunction(const Field& f)
      : num_(Polynomial::zero(f)), den_(Polynomial::one(f)) {}

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const Field& field() const { return num_.field(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  Coeff constant_value() const;

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;  // DivisionByZeroError
  RationalFunction operator-() const;
  RationalFunction inverse() const;
  RationalFunction pow(long long e) const;

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }
  int cmp(const RationalFunction& o) const;
  bool operator<(const RationalFunction& o) const { return cmp(o) < 0; }

  /// Exact evaluation. PoleError if the denominator vanishes;
  /// IncompleteAssignmentError if a used variable has no value.
  Coeff eval(const std::map<VarId, Coeff>& assignment) const;

  /// Substitutes whole rational functions for variables (simultaneously).
  RationalFunction substitute(const std::map<VarId, RationalFunction>& subst) const;
  /// Fast path: injective variable renaming.
  RationalFunction rename(const std::map<VarId, VarId>& map) const;

  /// Formal partial derivative by the quotient rule.
  RationalFunction derivative(VarId v) const;

  std::set<VarId> variables() const;
  bool uses_var(VarId v) const;

  std::string str(const Registry& reg) const;

 private:
  RationalFunction(Polynomial num, Polynomial den)
      : num_(std::move(num)), den_(std::move(den)) {}
  static RationalFunction make_reduced(Polynomial num, Polynomial den);

  Polynomial num_;
  Polynomial den_;
};

/// print_canonical: deterministic, grammar-conformant rendering; equal field
/// elements print identically.
std::string print_canonical(const RationalFunction& f, const Registry& reg);

}  // namespace symk
