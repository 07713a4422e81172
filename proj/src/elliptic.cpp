#include "symk/elliptic.hpp"

#include <algorithm>
#include <map>

#include "symk/parser.hpp"

namespace symk::ec {

namespace {

// Dense bivariate scratch polynomial, degree <= 3 in x and <= 2 in y: enough
// for a substituted Weierstrass equation.
template <class R>
struct XY {
  std::array<std::array<std::optional<R>, 3>, 4> at;  // at[i][j] ~ x^i y^j

  void add(int i, int j, const R& v) {
    if (v.is_zero()) return;
    auto& slot = at[(std::size_t)i][(std::size_t)j];
    if (!slot) {
      slot = v;
    } else {
      *slot = *slot + v;
      if (slot->is_zero()) slot.reset();
    }
  }
  static XY mul(const XY& a, const XY& b) {
    XY out;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 3; ++j) {
        if (!a.at[(std::size_t)i][(std::size_t)j]) continue;
        for (int k = 0; i + k < 4; ++k)
          for (int l = 0; j + l < 3; ++l) {
            if (!b.at[(std::size_t)k][(std::size_t)l]) continue;
            out.add(i + k, j + l,
                    *a.at[(std::size_t)i][(std::size_t)j] * *b.at[(std::size_t)k][(std::size_t)l]);
          }
      }
    return out;
  }
};

}  // namespace

template <class R>
Quintuple<R> h_transform(const Quintuple<R>& w, const HXform<R>& t) {
  if (t.c.is_zero()) throw PreconditionError("h_transform: c must be invertible");
  R ci = t.c.inverse();
  R ci2 = ci * ci, ci3 = ci2 * ci;
  R c2 = t.c * t.c, c6 = c2 * c2 * c2;

  XY<R> xs;  // x/c^2 + d
  xs.add(1, 0, ci2);
  xs.add(0, 0, t.d);
  XY<R> ys;  // y/c^3 + e x + f
  ys.add(0, 1, ci3);
  ys.add(1, 0, t.e);
  ys.add(0, 0, t.f);

  XY<R> x2 = XY<R>::mul(xs, xs);
  XY<R> x3 = XY<R>::mul(x2, xs);
  XY<R> y2 = XY<R>::mul(ys, ys);
  XY<R> xy = XY<R>::mul(xs, ys);

  auto k = [&](long long n) { return ring_int(w.a1, n); };
  XY<R> eq;  // y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6, substituted
  auto add_scaled = [&](const XY<R>& part, const R& scale) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 3; ++j)
        if (part.at[(std::size_t)i][(std::size_t)j])
          eq.add(i, j, *part.at[(std::size_t)i][(std::size_t)j] * scale);
  };
  add_scaled(y2, c6);
  add_scaled(xy, w.a1 * c6);
  add_scaled(ys, w.a3 * c6);
  add_scaled(x3, k(-1) * c6);
  add_scaled(x2, k(-1) * w.a2 * c6);
  add_scaled(xs, k(-1) * w.a4 * c6);
  eq.add(0, 0, k(-1) * w.a6 * c6);

  // collect into monic Weierstrass shape
  auto coeff = [&](int i, int j) -> R {
    const auto& slot = eq.at[(std::size_t)i][(std::size_t)j];
    return slot ? *slot : k(0);
  };
  if (!(coeff(0, 2) == k(1)) || !(coeff(3, 0) == k(-1)))
    throw InternalError("h_transform: equation is not monic after renormalization");
  for (auto [i, j] : {std::pair<int, int>{1, 2}, {2, 2}, {3, 2}, {2, 1}, {3, 1}})
    if (!coeff(i, j).is_zero()) throw InternalError("h_transform: stray monomial in transformed equation");
  return Quintuple<R>{coeff(1, 1), k(-1) * coeff(2, 0), coeff(0, 1), k(-1) * coeff(1, 0),
                      k(-1) * coeff(0, 0)};
}

template Quintuple<Coeff> h_transform<Coeff>(const Quintuple<Coeff>&, const HXform<Coeff>&);
template Quintuple<RationalFunction> h_transform<RationalFunction>(const Quintuple<RationalFunction>&,
                                                                   const HXform<RationalFunction>&);

std::pair<Coeff, TwistDatum> short_form_invariants(const Quintuple<Coeff>& w) {
  const Field& K = w.a1.field();
  if (K.characteristic() == 2 || K.characteristic() == 3)
    throw PreconditionError("short_form_invariants requires characteristic not in {2, 3}");
  if (!w.a1.is_zero() || !w.a2.is_zero() || !w.a3.is_zero())
    throw PreconditionError("short_form_invariants requires a1 = a2 = a3 = 0");
  Coeff j = j_invariant(w);  // SingularCurveError on disc = 0
  if (!w.a4.is_zero() && !w.a6.is_zero()) return {j, TwistDatum{2, w.a6 / w.a4}};
  if (w.a6.is_zero()) return {j, TwistDatum{4, w.a4}};  // j = 1728
  return {j, TwistDatum{6, w.a6}};                      // a4 = 0, j = 0
}

namespace {

Integer nth_root_exact(const Integer& value, int n) {
  // returns r with r^n == value, or -1; value >= 0
  if (value < 0) throw PreconditionError("nth_root_exact expects nonnegative input");
  if (value == 0 || value == 1) return value;
  Integer lo = 1, hi = 1;
  while (pow(hi, (unsigned)n) < value) hi <<= 1;
  while (lo <= hi) {
    Integer mid = (lo + hi) / 2;
    Integer p = pow(mid, (unsigned)n);
    if (p == value) return mid;
    if (p < value)
      lo = mid + 1;
    else
      hi = mid - 1;
  }
  return Integer(-1);
}

}  // namespace

bool is_nth_power(const Coeff& value, int n) {
  if (n < 1) throw PreconditionError("is_nth_power: n must be positive");
  if (value.is_zero()) return true;
  const Field& K = value.field();
  if (K.is_finite()) {
    for (const Coeff& c : all_elements(K)) {
      if (c.is_zero()) continue;
      if (c.pow(n) == value) return true;
    }
    return false;
  }
  const Rational& q = value.rat();
  Integer num = numerator(q), den = denominator(q);
  if (n % 2 == 0 && num < 0) return false;
  Integer na = num < 0 ? Integer(-num) : num;
  return nth_root_exact(na, n) >= 0 && nth_root_exact(den, n) >= 0;
}

bool twist_equivalent(const TwistDatum& a, const TwistDatum& b) {
  if (a.n != b.n) return false;
  if (a.gamma.is_zero() || b.gamma.is_zero())
    throw PreconditionError("twist_equivalent: gamma must be a unit");
  return is_nth_power(a.gamma / b.gamma, a.n);
}

bool char_reduction_consistency(int p, bool perturb) {
  if (p != 2 && p != 3) throw PreconditionError("char_reduction_consistency: p must be 2 or 3");
  const Field& F = Field::prime(p);
  Registry reg;
  auto sym = [&](const std::string& name) {
    return RationalFunction::variable(F, reg.get_or_add(name));
  };
  RationalFunction a1 = sym("a1"), a2 = sym("a2"), a3 = sym("a3"), a4 = sym("a4"), a6 = sym("a6");
  RationalFunction one = RationalFunction::one(F);

  if (p == 2) {
    Quintuple<RationalFunction> w{a1, a2, a3, a4, a6};
    BInvariants<RationalFunction> b = b_invariants(w);
    RationalFunction disc2 = a1.pow(4) * (a1 * a1 * a6 - a4 * a4) +
                             a3 * (a1.pow(5) * a4 + a1.pow(4) * a2 * a3 - a3.pow(3) + a1.pow(3) * a3 * a3);
    if (perturb) disc2 = disc2 + one;
    if (b.disc != disc2) return false;
    RationalFunction j2 = a1.pow(12) / disc2;
    return j_invariant(w) == j2;
  }

  // p = 3, with a1 = a3 = 0
  RationalFunction zero = RationalFunction::zero(F);
  Quintuple<RationalFunction> w{zero, a2, zero, a4, a6};
  BInvariants<RationalFunction> b = b_invariants(w);
  RationalFunction denom3 = a2 * a2 * a4 * a4 - a2.pow(3) * a6 - a4.pow(3);
  if (perturb) denom3 = denom3 + one;
  if (b.disc != denom3) return false;
  RationalFunction j3 = a2.pow(6) / denom3;
  return j_invariant(w) == j3;
}

namespace {

std::vector<Coeff> fp_basis(const Field& K) {
  if (K.kind() == Field::Kind::prime) return {Coeff::one(K)};
  std::vector<Coeff> basis;
  Coeff g = Coeff::generator(K);
  Coeff cur = Coeff::one(K);
  for (int i = 0; i < K.degree(); ++i) {
    basis.push_back(cur);
    cur = cur * g;
  }
  return basis;
}

std::vector<long long> components_of(const Coeff& c, const Field& K) {
  if (K.kind() == Field::Kind::prime) return {c.residue()};
  return c.components();
}

}  // namespace

BetaResult beta_map(const Field& K, long long q, const Coeff& a) {
  if (!K.is_finite()) throw PreconditionError("beta_map: K must be finite");
  if (&a.field() != &K) throw FieldMismatchError("beta_map: a must lie in K");
  long long p = K.characteristic();
  long long t = q;
  while (t > 1 && t % p == 0) t /= p;
  if (t != 1 || q < p) throw PreconditionError("beta_map: q must be a positive power of the characteristic");

  auto beta = [&](const Coeff& b) { return b.pow(q) - a * b; };

  // row-reduce the images of an F_p-basis
  long long mod = p;
  int k = K.degree();
  std::vector<std::vector<long long>> rows;
  std::vector<Coeff> basis_elems;
  for (const Coeff& e : fp_basis(K)) {
    Coeff image = beta(e);
    std::vector<long long> row = components_of(image, K);
    // eliminate by existing pivots
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int pivot = -1;
      for (int i = 0; i < k; ++i)
        if (rows[r][(std::size_t)i] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) continue;
      long long factor = row[(std::size_t)pivot];
      if (factor == 0) continue;
      // row -= factor / rows[r][pivot] * rows[r]
      long long inv = 1;
      for (long long cand = 1; cand < mod; ++cand)
        if (cand * rows[r][(std::size_t)pivot] % mod == 1) {
          inv = cand;
          break;
        }
      long long scale = factor * inv % mod;
      for (int i = 0; i < k; ++i)
        row[(std::size_t)i] = ((row[(std::size_t)i] - scale * rows[r][(std::size_t)i]) % mod + mod) % mod;
    }
    bool nonzero = std::any_of(row.begin(), row.end(), [](long long v) { return v != 0; });
    if (nonzero) {
      rows.push_back(row);
      if (K.kind() == Field::Kind::prime)
        basis_elems.push_back(Coeff::prime_elem(K, row[0]));
      else
        basis_elems.push_back(Coeff::ext_elem(K, row));
    }
  }
  long long image_size = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) image_size *= p;
  return BetaResult{basis_elems, K.order() / image_size};
}

Coeff beta_coset_rep(const Field& K, long long q, const Coeff& a, const Coeff& value) {
  BetaResult beta = beta_map(K, q, a);
  long long p = K.characteristic();
  // enumerate the image subspace from its basis
  std::vector<Coeff> image = {Coeff::zero(K)};
  for (const Coeff& b : beta.image_basis) {
    std::vector<Coeff> next;
    for (long long s = 0; s < p; ++s) {
      Coeff sb = b * Coeff::integer(K, s);
      for (const Coeff& prev : image) next.push_back(prev + sb);
    }
    image = std::move(next);
  }
  Coeff best = value;
  for (const Coeff& delta : image) {
    Coeff cand = value + delta;
    if (cand < best) best = cand;
  }
  return best;
}

std::optional<HTransform> isomorphic_over(const Field& K, const Quintuple<Coeff>& w1,
                                          const Quintuple<Coeff>& w2) {
  if (!K.is_finite()) throw PreconditionError("isomorphic_over: K must be finite");
  auto elems = all_elements(K);
  for (const Coeff& c : elems) {
    if (c.is_zero()) continue;
    for (const Coeff& d : elems)
      for (const Coeff& e : elems)
        for (const Coeff& f : elems) {
          HTransform t{c, d, e, f};
          if (h_transform(w1, t) == w2) return t;
        }
  }
  return std::nullopt;
}

ShortCurvePartition h_orbit_partition(const Field& K) {
  if (!K.is_finite()) throw PreconditionError("h_orbit_partition: K must be finite");
  auto elems = all_elements(K);
  long long q = K.order();
  auto index_of = [&](const Coeff& c) -> long long {
    for (long long i = 0; i < q; ++i)
      if (elems[(std::size_t)i] == c) return i;
    throw InternalError("element not found in enumeration");
  };

  ShortCurvePartition part;
  std::map<std::pair<long long, long long>, std::size_t> position;  // (idx a4, idx a6)
  Coeff zero = Coeff::zero(K);
  for (long long i4 = 0; i4 < q; ++i4)
    for (long long i6 = 0; i6 < q; ++i6) {
      Quintuple<Coeff> w{zero, zero, zero, elems[(std::size_t)i4], elems[(std::size_t)i6]};
      if (b_invariants(w).disc.is_zero()) continue;
      position[{i4, i6}] = part.curves.size();
      part.curves.push_back(w);
      part.class_id.push_back(-1);
    }

  for (std::size_t start = 0; start < part.curves.size(); ++start) {
    if (part.class_id[start] >= 0) continue;
    int cls = part.classes++;
    const Quintuple<Coeff>& w = part.curves[start];
    for (const Coeff& c : elems) {
      if (c.is_zero()) continue;
      for (const Coeff& d : elems)
        for (const Coeff& e : elems)
          for (const Coeff& f : elems) {
            Quintuple<Coeff> img = h_transform(w, HTransform{c, d, e, f});
            if (!img.a1.is_zero() || !img.a2.is_zero() || !img.a3.is_zero()) continue;
            auto it = position.find({index_of(img.a4), index_of(img.a6)});
            if (it == position.end()) throw InternalError("transform left the smooth locus");
            part.class_id[it->second] = cls;
          }
    }
    if (part.class_id[start] != cls) throw InternalError("orbit enumeration missed its base point");
  }
  return part;
}

Char2Data char2_invariants(const Field& K, const Quintuple<Coeff>& w) {
  if (!K.is_finite() || K.characteristic() != 2)
    throw PreconditionError("char2_invariants: finite characteristic-2 field required");
  BInvariants<Coeff> b = b_invariants(w);
  if (b.disc.is_zero()) throw SingularCurveError("char2_invariants: singular curve");
  Coeff j = j_invariant(w);
  auto elems = all_elements(K);

  // every reachable presentation in the case's normal-form shape; the later
  // invariants of the chain are defined only after pinning the earlier
  // coefficients, so the canonical data is the stagewise lexicographic
  // minimum over this set
  bool j_zero = j.is_zero();
  std::vector<Quintuple<Coeff>> forms;
  for (const Coeff& c : elems) {
    if (c.is_zero()) continue;
    for (const Coeff& d : elems)
      for (const Coeff& e : elems)
        for (const Coeff& f : elems) {
          Quintuple<Coeff> img = h_transform(w, HTransform{c, d, e, f});
          bool match = j_zero ? img.a1.is_zero() && img.a2.is_zero()
                              : img.a1.is_one() && img.a3.is_zero() && img.a4.is_zero();
          if (match) forms.push_back(img);
        }
  }
  if (forms.empty()) throw InternalError("char2_invariants: no normal form reachable");

  Char2Data data{j_zero, forms.front(), Coeff::zero(K), Coeff::zero(K), Coeff::zero(K),
                 Coeff::zero(K)};

  auto keep_min = [&](auto key) {
    Coeff best = key(forms.front());
    for (const auto& q : forms) {
      Coeff v = key(q);
      if (v < best) best = v;
    }
    std::vector<Quintuple<Coeff>> kept;
    for (const auto& q : forms)
      if (key(q) == best) kept.push_back(q);
    forms = std::move(kept);
    return best;
  };

  if (!j_zero) {
    data.a2_rep = keep_min([](const Quintuple<Coeff>& q) { return q.a2; });
    data.normal_form = forms.front();
    // the reachable a2 values form exactly one beta_{2,1} coset
    if (beta_coset_rep(K, 2, Coeff::one(K), data.normal_form.a2) !=
        beta_coset_rep(K, 2, Coeff::one(K), data.a2_rep))
      throw InternalError("char2_invariants: a2 class is not a beta_{2,1} coset");
    return data;
  }

  data.a3_rep = keep_min([](const Quintuple<Coeff>& q) { return q.a3; });
  data.a4_rep = keep_min([](const Quintuple<Coeff>& q) { return q.a4; });
  // with a3 and a4 pinned, the surviving a6 ambiguity contains the
  // beta_{2,a3} moves e^2 + a3 e; certify the stage is a union of cosets
  {
    std::set<std::vector<long long>> stage;
    for (const auto& q : forms) stage.insert(components_of(q.a6, K));
    for (const auto& q : forms)
      for (const Coeff& e : elems)
        if (!stage.count(components_of(q.a6 + e * e + data.a3_rep * e, K)))
          throw InternalError("char2_invariants: a6 stage is not beta_{2,a3}-closed");
  }
  data.a6_rep = keep_min([](const Quintuple<Coeff>& q) { return q.a6; });
  data.normal_form = forms.front();
  return data;
}

}  // namespace symk::ec
