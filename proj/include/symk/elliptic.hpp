#pragma once

#include <array>
#include <optional>

#include "symk/rational_function.hpp"

namespace symk::ec {

/// Coefficients of y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6. Generic in
/// the coefficient ring so the same formulas run numerically (R = Coeff) and
/// symbolically (R = RationalFunction).
template <class R>
struct Quintuple {
  R a1, a2, a3, a4, a6;
  bool operator==(const Quintuple& o) const {
    return a1 == o.a1 && a2 == o.a2 && a3 == o.a3 && a4 == o.a4 && a6 == o.a6;
  }
};

template <class R>
struct BInvariants {
  R b2, b4, b6, b8, disc;
};

inline Coeff ring_int(const Coeff& like, long long n) { return Coeff::integer(like.field(), n); }
inline RationalFunction ring_int(const RationalFunction& like, long long n) {
  return RationalFunction::constant(Coeff::integer(like.field(), n));
}

template <class R>
BInvariants<R> b_invariants(const Quintuple<R>& w) {
  auto k = [&](long long n) { return ring_int(w.a1, n); };
  R b2 = w.a1 * w.a1 + k(4) * w.a2;
  R b4 = k(2) * w.a4 + w.a1 * w.a3;
  R b6 = w.a3 * w.a3 + k(4) * w.a6;
  R b8 = w.a1 * w.a1 * w.a6 + k(4) * w.a2 * w.a6 - w.a1 * w.a3 * w.a4 + w.a2 * w.a3 * w.a3 -
         w.a4 * w.a4;
  R disc = k(-1) * b2 * b2 * b8 - k(8) * b4 * b4 * b4 - k(27) * b6 * b6 + k(9) * b2 * b4 * b6;
  return {b2, b4, b6, b8, disc};
}

/// j = (b2^2 - 24 b4)^3 / disc. SingularCurveError when disc = 0.
template <class R>
R j_invariant(const Quintuple<R>& w) {
  BInvariants<R> b = b_invariants(w);
  if (b.disc.is_zero()) throw SingularCurveError("j-invariant of a singular curve");
  R c4 = b.b2 * b.b2 - ring_int(w.a1, 24) * b.b4;
  return c4 * c4 * c4 / b.disc;
}

/// The coordinate change (x, y) -> (x/c^2 + d, y/c^3 + ex + f), c invertible.
template <class R>
struct HXform {
  R c, d, e, f;
};
using HTransform = HXform<Coeff>;

/// The quintuple whose equation is c^6 * E(x/c^2 + d, y/c^3 + ex + f) = 0,
/// computed by substitution into the Weierstrass polynomial and collection
/// into monic Weierstrass shape (InternalError if a stray monomial appears,
/// which valid input cannot produce).
template <class R>
Quintuple<R> h_transform(const Quintuple<R>& w, const HXform<R>& t);

/// (n_E, gamma): the twist datum of a short-form curve beyond j. n is
/// determined by the vanishing pattern of (a4, a6).
struct TwistDatum {
  int n;
  Coeff gamma;
};

/// For y^2 = x^3 + a4 x + a6 over characteristic not in {2, 3}: (j, datum)
/// with (i) n=2, gamma=a6/a4 when a4 a6 != 0; (ii) n=4, gamma=a4 when
/// j=1728; (iii) n=6, gamma=a6 when j=0.
std::pair<Coeff, TwistDatum> short_form_invariants(const Quintuple<Coeff>& w);

/// Whether value lies in K^{x n} (for zero: true). Finite fields enumerate
/// the power subgroup; over Q the lowest-terms numerator and denominator are
/// tested for integer n-th powers (sign included).
bool is_nth_power(const Coeff& value, int n);

/// Same j-class test the isomorphism oracle is validated against: equal n,
/// and the gamma ratio an n-th power.
bool twist_equivalent(const TwistDatum& a, const TwistDatum& b);

/// Reduces the generic discriminant and j formulas mod p (symbols a1..a6;
/// for p=3 with a1=a3=0) and compares against the characteristic-specific
/// closed forms. `perturb` adds 1 to the expected form (negative control).
bool char_reduction_consistency(int p, bool perturb = false);

/// The additive map beta_{q,a}: b -> b^q - a b on a finite field of
/// characteristic p, treated F_p-linearly. PreconditionError unless q is a
/// power of p.
struct BetaResult {
  std::vector<Coeff> image_basis;  // echelonized F_p-basis of the image
  long long cokernel_size;        // |K| / |image|
};
BetaResult beta_map(const Field& K, long long q, const Coeff& a);

/// Canonical representative (minimum in the element order) of value + image.
Coeff beta_coset_rep(const Field& K, long long q, const Coeff& a, const Coeff& value);

/// Exhaustive search over (c, d, e, f) in K^x times K^3 for a transform with
/// h_transform(w1, t) == w2; the ground-truth oracle for curve isomorphism.
std::optional<HTransform> isomorphic_over(const Field& K, const Quintuple<Coeff>& w1,
                                          const Quintuple<Coeff>& w2);

/// All smooth short-form curves over K in a fixed order, partitioned into
/// H-orbit classes by exhaustive transform enumeration from one
/// representative per class (curves in one orbit reach the same set).
struct ShortCurvePartition {
  std::vector<Quintuple<Coeff>> curves;
  std::vector<int> class_id;  // parallel to curves
  int classes = 0;
};
ShortCurvePartition h_orbit_partition(const Field& K);

/// Characteristic-2 classification data, finite fields only: the curve is
/// brought to its normal form by exhaustive search, then the per-case class
/// representatives are computed via beta cosets / power cosets.
struct Char2Data {
  bool j_zero;
  Quintuple<Coeff> normal_form;
  Coeff a2_rep;  // j != 0: class in K / im(beta_{2,1})
  Coeff a3_rep;  // j == 0: class mod K^{x3}
  Coeff a4_rep;  // j == 0: class in K / im(beta_{4,a3})
  Coeff a6_rep;  // j == 0: class in K / im(beta_{2,a3})
};
Char2Data char2_invariants(const Field& K, const Quintuple<Coeff>& w);

}  // namespace symk::ec
