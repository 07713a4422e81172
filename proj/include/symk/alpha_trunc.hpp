#pragma once

#include "symk/perm.hpp"
#include "symk/rational_function.hpp"

namespace symk::alpha {

/// Element of F[B]/(B^m) with rational-function coefficients over a
/// characteristic-p field: c0 + c1 B + ... + c_{m-1} B^{m-1}. Arithmetic
/// truncates at B^m; units are exactly the elements with c0 != 0.
class TruncatedElement {
 public:
  TruncatedElement(const Field& f, int m);
  static TruncatedElement from_rf(RationalFunction c0, int m);
  static TruncatedElement variable(const Field& f, VarId v, int m);

  int modulus() const { return (int)coeffs_.size(); }
  const Field& field() const { return coeffs_[0].field(); }
  const RationalFunction& coeff(int i) const;
  void set_coeff(int i, RationalFunction value);

  bool is_zero() const;
  bool is_unit() const { return !coeffs_[0].is_zero(); }

  TruncatedElement operator+(const TruncatedElement& o) const;
  TruncatedElement operator-(const TruncatedElement& o) const;
  TruncatedElement operator*(const TruncatedElement& o) const;
  TruncatedElement operator-() const;
  /// Geometric-series inversion of a unit; NonInvertibleError otherwise.
  TruncatedElement inverse() const;
  TruncatedElement pow(std::uint32_t e) const;

  bool operator==(const TruncatedElement& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const TruncatedElement& o) const { return !(*this == o); }

  std::string str(const Registry& reg) const;

 private:
  void check_compatible(const TruncatedElement& o) const;
  std::vector<RationalFunction> coeffs_;
};

/// The datum of one automorphism u -> u + lambda(u) B: a prime power p^n
/// (the truncation modulus) and a polynomial lambda in one symbol whose
/// exponents are all divisible by p^n. Over F_p coefficients that exponent
/// condition is exactly membership in the span of p^n-th powers (Frobenius
/// is bijective on F_p). PreconditionError otherwise.
struct LambdaDatum {
  long long p;
  int n;
  int modulus;  // p^n
  Polynomial lambda;
  VarId symbol;
};

LambdaDatum make_lambda(long long p, int n, Polynomial lambda, VarId symbol);

/// lambda evaluated at the variable u, as a rational function.
RationalFunction lambda_at(const LambdaDatum& d, VarId u);

/// Evaluates a polynomial with each variable replaced by a truncated
/// element (the ring-homomorphism extension).
TruncatedElement eval_poly_truncated(const Polynomial& p,
                                     const std::map<VarId, TruncatedElement>& args, int m);

/// The endomorphism xi_lambda applied to elt: every variable u in vars maps
/// to u + lambda(u) B; coefficients may only use vars (PreconditionError);
/// denominators are inverted in the truncated ring (NonInvertibleError if a
/// substituted denominator loses its unit).
TruncatedElement xi_lambda_apply(const LambdaDatum& d, const std::vector<VarId>& vars,
                                 const TruncatedElement& elt);

/// True iff xi_lambda(xi_lambda'(u)) = xi_{lambda+lambda'}(u) on every
/// generator in vars. PreconditionError on mismatched (p, n).
bool compose_law_verify(const LambdaDatum& d1, const LambdaDatum& d2,
                        const std::vector<VarId>& vars);

/// The alternating sum over permutations sigma of {0..d}:
/// sgn(sigma) lambda_1(u_{sigma(1)}) ... lambda_d(u_{sigma(d)}) u_{sigma(0)}.
/// PreconditionError on repeated variables or mismatched (p, n).
RationalFunction determinant_generator(const std::vector<LambdaDatum>& lambdas,
                                       const std::vector<VarId>& us);

/// True iff each xi_{lambda_j} fixes the determinant generator exactly.
bool verify_fixed_generators(const std::vector<LambdaDatum>& lambdas,
                             const std::vector<VarId>& us);

/// True iff xi_lambda commutes with the permutation action on elt. sigma
/// must map vars into vars.
bool equivariance_check(const LambdaDatum& d, const VariableMap& sigma,
                        const std::vector<VarId>& vars, const TruncatedElement& elt);

}  // namespace symk::alpha
