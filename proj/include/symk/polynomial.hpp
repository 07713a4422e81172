#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symk/field.hpp"
#include "symk/registry.hpp"

namespace symk {

/// Sparse monomial: factors sorted by ascending VarId, all exponents > 0.
class Monomial {
 public:
  Monomial() = default;
  static Monomial one() { return {}; }
  static Monomial var(VarId v, std::uint32_t e = 1);

  bool is_one() const { return factors_.empty(); }
  std::uint64_t total_degree() const;
  std::uint32_t degree_in(VarId v) const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;            // this | o
  Monomial divided_into(const Monomial& o) const;   // o / this, assumes divides
  Monomial pow(std::uint32_t e) const;
  Monomial erase_var(VarId v) const;

  const std::vector<std::pair<VarId, std::uint32_t>>& factors() const { return factors_; }

  /// Graded lexicographic order over the registry variable order: compare
  /// total degree first; on ties the monomial with the larger exponent on the
  /// earliest-registered differing variable is greater. Returns -1/0/1.
  static int cmp_grlex(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

 private:
  std::vector<std::pair<VarId, std::uint32_t>> factors_;
};

struct MonoGrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::cmp_grlex(a, b) < 0;
  }
};

/// Sparse multivariate polynomial over a fixed coefficient field. No zero
/// coefficients are stored; the term map is ordered by grlex so iteration,
/// printing, and the leading term are deterministic.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Coeff, MonoGrlexLess>;

  explicit Polynomial(const Field& f) : field_(&f) {}
  static Polynomial zero(const Field& f) { return Polynomial(f); }
  static Polynomial constant(Coeff c);
  static Polynomial one(const Field& f) { return constant(Coeff::one(f)); }
  static Polynomial variable(const Field& f, VarId v);
  static Polynomial term(Coeff c, Monomial m);

  const Field& field() const { return *field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  Coeff constant_value() const;  // PreconditionError unless is_constant
  std::size_t term_count() const { return terms_.size(); }

  std::uint64_t total_degree() const;  // 0 for the zero polynomial
  std::uint32_t degree_in(VarId v) const;
  std::set<VarId> variables() const;
  bool uses_var(VarId v) const;

  /// Leading term under grlex; PreconditionError on the zero polynomial.
  const std::pair<const Monomial, Coeff>& leading() const;
  Coeff leading_coeff() const { return leading().second; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Coeff& c) const;
  Polynomial mul_term(const Coeff& c, const Monomial& m) const;
  Polynomial pow(std::uint32_t e) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
  /// Total order for deterministic containers.
  int cmp(const Polynomial& o) const;

  /// Exact division: returns the quotient iff divisor divides exactly.
  std::optional<Polynomial> divided_by(const Polynomial& divisor) const;

  Coeff eval(const std::map<VarId, Coeff>& assignment) const;
  /// Renames variables through an injective map (identity off its support).
  Polynomial rename(const std::map<VarId, VarId>& map) const;
  Polynomial derivative(VarId v) const;

  /// Adds c*m into this polynomial in place (the only mutator).
  void add_term(const Monomial& m, const Coeff& c);

  std::string str(const Registry& reg) const;

 private:
  void check_field(const Polynomial& o) const;

  const Field* field_;
  TermMap terms_;
};

/// Primitive multivariate gcd (recursive univariate view with content /
/// primitive-part splitting and a primitive pseudo-remainder sequence).
/// The result is normalized: grlex leading coefficient 1; gcd(0, q) is the
/// normalization of q; gcd of two zeros is zero.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

/// Grammar-conformant rendering used by Polynomial::str and the printer.
std::string poly_to_string(const Polynomial& p, const Registry& reg);

}  // namespace symk
