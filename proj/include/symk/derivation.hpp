#pragma once

#include <optional>
#include <vector>

#include "symk/rational_function.hpp"

namespace symk::lie {

/// A derivation f(X) d/dX of the rational function field in the distinguished
/// variable X, over the constant field Q. Other registry variables may appear
/// in f; they behave as constants of the derivation.
struct Derivation {
  RationalFunction coeff;
  VarId x;

  bool is_zero() const { return coeff.is_zero(); }
  bool operator==(const Derivation& o) const { return x == o.x && coeff == o.coeff; }
};

Derivation make_derivation(RationalFunction coeff, VarId x);

/// Formal derivative with respect to the distinguished variable.
RationalFunction rf_derivative(const RationalFunction& f, VarId x);

/// [f d/dX, g d/dX] = (f g' - g f') d/dX.
Derivation bracket(const Derivation& a, const Derivation& b);

/// Exact Q-linear algebra on rational functions: clears denominators to a
/// common one and solves on polynomial coefficients. k_solve returns the
/// coordinates of `target` in span{basis} with free variables set to zero
/// (pivoting in basis order), or nullopt when target is outside the span.
bool k_independent(const std::vector<RationalFunction>& fs);
std::optional<std::vector<Rational>> k_solve(const std::vector<RationalFunction>& basis,
                                             const RationalFunction& target);

/// Ordered list of derivations, certified k-linearly independent at
/// construction (PreconditionError otherwise).
class LieBasis {
 public:
  static LieBasis make(std::vector<Derivation> elems);
  const std::vector<Derivation>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  VarId x() const { return x_; }

 private:
  LieBasis(std::vector<Derivation> elems, VarId x) : elems_(std::move(elems)), x_(x) {}
  std::vector<Derivation> elems_;
  VarId x_;
};

/// All pairwise brackets vanish. A nonzero abelian basis must have size 1
/// (independent commuting derivations are proportional in characteristic 0);
/// violating that raises InternalError.
bool is_abelian(const LieBasis& basis);

/// Every pairwise bracket lies in the k-span of the basis.
bool is_closed(const LieBasis& basis);

/// For a closed non-abelian 2-dimensional basis: returns R = eta2/eta1 where
/// eta1 spans the derived subalgebra and [eta1, eta2] = eta1, so that
/// eta1 = d/dR and eta2 = R d/dR. R is unique up to an affine change; the
/// certified postconditions are coeff(eta1) * R' = 1 and span equality.
RationalFunction normal_form_2dim(const LieBasis& basis);

/// For a closed 3-dimensional basis: returns R with
/// span(basis) = span{d/dR, R d/dR, R^2 d/dR}, found by a bounded exact
/// search over 2-dimensional subalgebras followed by normal_form_2dim and a
/// bidirectional span check. ClassificationError when the search fails.
RationalFunction normal_form_3dim(const LieBasis& basis);

/// The three derivations d/dR, R d/dR, R^2 d/dR expressed in the X
/// coordinate, i.e. with coefficients R^i / R'.
std::vector<Derivation> standard_triple(const RationalFunction& r, VarId x);

/// Both lists span the same k-subspace (bidirectional membership).
bool span_equal(const std::vector<Derivation>& a, const std::vector<Derivation>& b);

}  // namespace symk::lie
