#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "symk/error.hpp"

namespace symk {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// An exact coefficient field: the rationals, a prime field F_p, or an
/// extension F_{p^k} presented as F_p[g]/(irreducible of degree k).
///
/// Fields are interned: pointer equality decides field equality, so values
/// of different fields can never be mixed silently. Extension moduli come
/// from a fixed table (see field.cpp); entries absent from the table fall
/// back to the lexicographically smallest monic irreducible, so the model
/// for each (p, k) is deterministic.
class Field {
 public:
  enum class Kind { rationals, prime, extension };

  static const Field& rationals();
  static const Field& prime(long long p);
  static const Field& extension(long long p, int degree);
  /// Parses "Q", "F7", "F9", "F3^2", ... Throws ParseError on bad syntax.
  static const Field& by_name(const std::string& name);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ != Kind::rationals; }
  long long characteristic() const { return p_; }  // 0 for Q
  int degree() const { return k_; }
  long long order() const;  // p^k; throws for Q
  /// Monic irreducible modulus, coefficients ascending, size degree+1.
  const std::vector<long long>& modulus() const { return modulus_; }
  const std::string& name() const { return name_; }
  /// Spelling of the extension generator in printed/parsed expressions.
  static const char* generator_name() { return "g"; }

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field(Kind kind, long long p, int k, std::vector<long long> modulus);
  friend struct FieldTableAccess;

  Kind kind_;
  long long p_;
  int k_;
  std::vector<long long> modulus_;
  std::string name_;
};

/// Immutable element of a Field. Rationals are kept in lowest terms with
/// positive denominator; prime-field values in [0, p); extension elements
/// as reduced residue vectors of length < degree.
class Coeff {
 public:
  /// Default-constructs rational zero.
  Coeff();

  static Coeff zero(const Field& f);
  static Coeff one(const Field& f);
  /// n reduced into the field (mod p for finite fields).
  static Coeff integer(const Field& f, const Integer& n);
  static Coeff integer(const Field& f, long long n);
  static Coeff rational(const Rational& q);
  /// Prime-field element from a residue (any representative).
  static Coeff prime_elem(const Field& f, long long v);
  /// Extension element from component vector c0..c_{k-1} (any representatives).
  static Coeff ext_elem(const Field& f, std::vector<long long> comps);
  /// The extension generator g.
  static Coeff generator(const Field& f);

  const Field& field() const { return *field_; }
  bool is_zero() const;
  bool is_one() const;

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const;  // DivisionByZeroError
  Coeff operator-() const;
  Coeff inverse() const;  // DivisionByZeroError
  /// Integer power; negative exponents invert. 0^0 = 1.
  Coeff pow(long long e) const;

  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }
  /// Total order for deterministic sets/min-representatives. Elements of
  /// distinct fields compare by field identity.
  int cmp(const Coeff& o) const;
  bool operator<(const Coeff& o) const { return cmp(o) < 0; }

  /// Rational payload (kind rationals only).
  const Rational& rat() const;
  /// Prime-field residue in [0, p) (kind prime only).
  long long residue() const;
  /// Extension components, length = degree (kind extension only).
  const std::vector<long long>& components() const;

  /// True for rationals with denominator 1 and for prime-field values:
  /// cases whose printed form is a plain (possibly negative) integer.
  bool is_integer_like() const;
  /// Whether the rational value is negative (always false on finite fields).
  bool is_negative() const;

  /// Expression-grammar rendering. Rationals: "5", "(5/7)". Prime: "3".
  /// Extension: polynomial in g, e.g. "g^2 + 2*g + 1" (no outer parens).
  std::string str() const;
  /// True when str() needs parentheses before "*monomial" (a sum, or a
  /// fraction already carries them).
  bool needs_parens_in_product() const;

  std::size_t hash() const;

 private:
  explicit Coeff(const Field* f) : field_(f) {}
  void check_same_field(const Coeff& o) const;

  const Field* field_;
  Rational rat_;                 // rationals
  std::vector<long long> vec_;   // prime (size 1) / extension (size k)
};

/// All elements of a finite field in a fixed deterministic order
/// (component-vector counting order; element 0 first).
std::vector<Coeff> all_elements(const Field& f);

}  // namespace symk
