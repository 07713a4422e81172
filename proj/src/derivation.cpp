#include "symk/derivation.hpp"

#include <algorithm>
#include <array>

namespace symk::lie {

Derivation make_derivation(RationalFunction coeff, VarId x) {
  if (coeff.field().kind() != Field::Kind::rationals)
    throw PreconditionError("derivations are implemented over the constant field Q");
  return Derivation{std::move(coeff), x};
}

RationalFunction rf_derivative(const RationalFunction& f, VarId x) { return f.derivative(x); }

Derivation bracket(const Derivation& a, const Derivation& b) {
  if (a.x != b.x) throw PreconditionError("bracket of derivations in different distinguished variables");
  RationalFunction c = a.coeff * b.coeff.derivative(a.x) - b.coeff * a.coeff.derivative(a.x);
  return Derivation{std::move(c), a.x};
}

// ---------------------------------------------------------------------------
// exact linear algebra over Q on rational functions

namespace {

// rows of polynomial coefficients after clearing to a common denominator
struct ClearedSystem {
  std::vector<std::map<Monomial, Rational, MonoGrlexLess>> columns;
};

Rational to_rational(const Coeff& c) { return c.rat(); }

ClearedSystem clear_denominators(const std::vector<RationalFunction>& fs) {
  if (fs.empty()) return {};
  const Field& f = fs[0].field();
  Polynomial common = Polynomial::one(f);
  for (const auto& rf : fs) {
    Polynomial g = poly_gcd(common, rf.den());
    common = common * *rf.den().divided_by(g);
  }
  ClearedSystem sys;
  for (const auto& rf : fs) {
    Polynomial mult = *common.divided_by(rf.den());
    Polynomial cleared = rf.num() * mult;
    std::map<Monomial, Rational, MonoGrlexLess> col;
    for (const auto& [m, c] : cleared.terms()) col.emplace(m, to_rational(c));
    sys.columns.push_back(std::move(col));
  }
  return sys;
}

// Gaussian elimination on the cleared columns. Returns, per column, either
// the pivot row or, for the augmented target column, the solution.
struct SolveResult {
  bool solvable = false;
  std::vector<Rational> solution;  // size = #basis columns, free vars zero
  int rank = 0;
};

SolveResult solve_cleared(const ClearedSystem& sys, bool last_is_target) {
  std::size_t ncols = sys.columns.size();
  std::size_t nbasis = last_is_target ? ncols - 1 : ncols;

  // collect row index
  std::map<Monomial, std::size_t, MonoGrlexLess> row_of;
  for (const auto& col : sys.columns)
    for (const auto& [m, c] : col)
      row_of.emplace(m, 0);
  std::size_t nrows = 0;
  for (auto& [m, idx] : row_of) idx = nrows++;

  std::vector<std::vector<Rational>> mat(nrows, std::vector<Rational>(ncols, Rational(0)));
  for (std::size_t j = 0; j < ncols; ++j)
    for (const auto& [m, c] : sys.columns[j]) mat[row_of[m]][j] = c;

  std::vector<long long> pivot_col_of_row(nrows, -1);
  std::vector<long long> pivot_row_of_col(ncols, -1);
  std::size_t rank = 0;
  for (std::size_t j = 0; j < nbasis && rank < nrows; ++j) {
    std::size_t pr = nrows;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (pivot_col_of_row[i] < 0 && mat[i][j] != 0) {
        pr = i;
        break;
      }
    }
    if (pr == nrows) continue;
    Rational inv = 1 / mat[pr][j];
    for (std::size_t jj = 0; jj < ncols; ++jj) mat[pr][jj] *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == pr || mat[i][j] == 0) continue;
      Rational factor = mat[i][j];
      for (std::size_t jj = 0; jj < ncols; ++jj) mat[i][jj] -= factor * mat[pr][jj];
    }
    pivot_col_of_row[pr] = (long long)j;
    pivot_row_of_col[j] = (long long)pr;
    ++rank;
  }

  SolveResult res;
  res.rank = (int)rank;
  if (!last_is_target) return res;

  // consistency: the target column must vanish on pivot-free rows
  std::size_t target = ncols - 1;
  for (std::size_t i = 0; i < nrows; ++i)
    if (pivot_col_of_row[i] < 0 && mat[i][target] != 0) return res;
  res.solvable = true;
  res.solution.assign(nbasis, Rational(0));
  for (std::size_t j = 0; j < nbasis; ++j)
    if (pivot_row_of_col[j] >= 0) res.solution[j] = mat[(std::size_t)pivot_row_of_col[j]][target];
  return res;
}

std::vector<RationalFunction> coeffs_of(const std::vector<Derivation>& ds) {
  std::vector<RationalFunction> out;
  out.reserve(ds.size());
  for (const auto& d : ds) out.push_back(d.coeff);
  return out;
}

}  // namespace

bool k_independent(const std::vector<RationalFunction>& fs) {
  for (const auto& f : fs)
    if (f.is_zero()) return false;
  auto sys = clear_denominators(fs);
  return (std::size_t)solve_cleared(sys, false).rank == fs.size();
}

std::optional<std::vector<Rational>> k_solve(const std::vector<RationalFunction>& basis,
                                             const RationalFunction& target) {
  std::vector<RationalFunction> all = basis;
  all.push_back(target);
  auto res = solve_cleared(clear_denominators(all), true);
  if (!res.solvable) return std::nullopt;
  return res.solution;
}

LieBasis LieBasis::make(std::vector<Derivation> elems) {
  if (elems.empty()) throw PreconditionError("empty Lie basis");
  VarId x = elems[0].x;
  for (const auto& d : elems)
    if (d.x != x) throw PreconditionError("Lie basis mixes distinguished variables");
  if (!k_independent(coeffs_of(elems)))
    throw PreconditionError("Lie basis is not k-linearly independent");
  return LieBasis(std::move(elems), x);
}

bool is_abelian(const LieBasis& basis) {
  const auto& ds = basis.elements();
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i + 1; j < ds.size(); ++j)
      if (!bracket(ds[i], ds[j]).is_zero()) return false;
  if (ds.size() > 1)
    throw InternalError("independent commuting derivations of dimension > 1 cannot exist in characteristic 0");
  return true;
}

bool is_closed(const LieBasis& basis) {
  const auto& ds = basis.elements();
  auto span = coeffs_of(ds);
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      Derivation br = bracket(ds[i], ds[j]);
      if (br.is_zero()) continue;
      if (!k_solve(span, br.coeff)) return false;
    }
  return true;
}

namespace {

RationalFunction normal_form_2dim_impl(const Derivation& d1, const Derivation& d2) {
  VarId x = d1.x;
  Derivation eta1 = bracket(d1, d2);
  if (eta1.is_zero()) throw PreconditionError("normal_form_2dim: basis is abelian");

  // find eta2 = alpha d1 + beta d2 with [eta1, eta2] = eta1
  Derivation b1 = bracket(eta1, d1);
  Derivation b2 = bracket(eta1, d2);
  auto sol = k_solve({b1.coeff, b2.coeff}, eta1.coeff);
  if (!sol) throw PreconditionError("normal_form_2dim: basis is not closed under the bracket");
  RationalFunction alpha = RationalFunction::constant(Coeff::rational((*sol)[0]));
  RationalFunction beta = RationalFunction::constant(Coeff::rational((*sol)[1]));
  RationalFunction eta2_coeff = alpha * d1.coeff + beta * d2.coeff;

  RationalFunction r = eta2_coeff / eta1.coeff;
  if (r.is_constant()) throw InternalError("normal form coordinate is constant");

  // eta1 = d/dR exactly
  if (eta1.coeff * r.derivative(x) != RationalFunction::one(r.field()))
    throw InternalError("normal form postcondition failed: coeff(eta1) * R' != 1");
  return r;
}

}  // namespace

RationalFunction normal_form_2dim(const LieBasis& basis) {
  if (basis.size() != 2) throw PreconditionError("normal_form_2dim expects a basis of size 2");
  if (!is_closed(basis)) throw PreconditionError("normal_form_2dim: basis is not closed under the bracket");
  const auto& ds = basis.elements();
  Derivation br = bracket(ds[0], ds[1]);
  if (br.is_zero()) throw PreconditionError("normal_form_2dim: basis is abelian");

  RationalFunction r = normal_form_2dim_impl(ds[0], ds[1]);

  // span{d/dR, R d/dR} must reproduce the basis in both directions
  VarId x = basis.x();
  RationalFunction rp_inv = r.derivative(x).inverse();
  std::vector<Derivation> pair = {Derivation{rp_inv, x}, Derivation{r * rp_inv, x}};
  if (!span_equal(pair, ds)) throw InternalError("normal form pair does not span the basis");
  return r;
}

std::vector<Derivation> standard_triple(const RationalFunction& r, VarId x) {
  RationalFunction rp_inv = r.derivative(x).inverse();
  return {Derivation{rp_inv, x}, Derivation{r * rp_inv, x}, Derivation{r * r * rp_inv, x}};
}

bool span_equal(const std::vector<Derivation>& a, const std::vector<Derivation>& b) {
  auto ca = coeffs_of(a);
  auto cb = coeffs_of(b);
  for (const auto& f : ca)
    if (!k_solve(cb, f)) return false;
  for (const auto& f : cb)
    if (!k_solve(ca, f)) return false;
  return true;
}

RationalFunction normal_form_3dim(const LieBasis& basis) {
  if (basis.size() != 3) throw PreconditionError("normal_form_3dim expects a basis of size 3");
  if (!is_closed(basis)) throw PreconditionError("normal_form_3dim: basis is not closed under the bracket");
  const auto& ds = basis.elements();
  VarId x = basis.x();
  const Field& f = ds[0].coeff.field();

  // candidate 2-dimensional subalgebras: basis pairs first, then pairs of
  // small integer combinations (a bounded exact search)
  std::vector<std::pair<RationalFunction, RationalFunction>> candidates;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) candidates.push_back({ds[i].coeff, ds[j].coeff});
  std::vector<std::array<int, 3>> dirs;
  auto igcd = [](int a, int b) {
    a = std::abs(a);
    b = std::abs(b);
    while (b) {
      a %= b;
      std::swap(a, b);
    }
    return a;
  };
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        // normalize direction: primitive, first nonzero entry positive
        int g = igcd(igcd(a, b), c);
        std::array<int, 3> dir = {a / g, b / g, c / g};
        int lead = dir[0] != 0 ? dir[0] : dir[1] != 0 ? dir[1] : dir[2];
        if (lead < 0) dir = {-dir[0], -dir[1], -dir[2]};
        if (std::find(dirs.begin(), dirs.end(), dir) == dirs.end()) dirs.push_back(dir);
      }
  auto combine = [&](const std::array<int, 3>& d) {
    RationalFunction out = RationalFunction::zero(f);
    for (int i = 0; i < 3; ++i)
      if (d[(std::size_t)i] != 0)
        out = out + RationalFunction::constant(Coeff::integer(f, d[(std::size_t)i])) * ds[(std::size_t)i].coeff;
    return out;
  };
  for (std::size_t i = 0; i < dirs.size(); ++i)
    for (std::size_t j = i + 1; j < dirs.size(); ++j) candidates.push_back({combine(dirs[i]), combine(dirs[j])});

  for (const auto& [u, v] : candidates) {
    if (u.is_zero() || v.is_zero()) continue;
    if (!k_independent({u, v})) continue;
    Derivation du{u, x}, dv{v, x};
    Derivation br = bracket(du, dv);
    if (br.is_zero()) continue;                       // abelian pair
    if (!k_solve({u, v}, br.coeff)) continue;         // not a subalgebra
    RationalFunction r(f);
    try {
      r = normal_form_2dim_impl(du, dv);
    } catch (const Error&) {
      continue;
    }
    if (span_equal(standard_triple(r, x), ds)) return r;
  }
  throw ClassificationError("normal_form_3dim: no coordinate R found by the bounded search");
}

}  // namespace symk::lie
