#include "symk/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace symk {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::var(VarId v, std::uint32_t e) {
  Monomial m;
  if (e > 0) m.factors_.push_back({v, e});
  return m;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

std::uint32_t Monomial::degree_in(VarId v) const {
  for (const auto& [var, e] : factors_)
    if (var == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin(), b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      r.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.push_back({a->first, a->second + b->second});
      ++a;
      ++b;
    }
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  auto b = o.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (b != o.factors_.end() && b->first < v) ++b;
    if (b == o.factors_.end() || b->first != v || b->second < e) return false;
  }
  return true;
}

Monomial Monomial::divided_into(const Monomial& o) const {
  Monomial r;
  auto a = factors_.begin();
  for (const auto& [v, e] : o.factors_) {
    std::uint32_t sub = 0;
    while (a != factors_.end() && a->first < v) ++a;
    if (a != factors_.end() && a->first == v) sub = a->second;
    if (e > sub) r.factors_.push_back({v, e - sub});
  }
  return r;
}

Monomial Monomial::pow(std::uint32_t e) const {
  Monomial r;
  if (e == 0) return r;
  r.factors_ = factors_;
  for (auto& [v, exp] : r.factors_) exp *= e;
  return r;
}

Monomial Monomial::erase_var(VarId v) const {
  Monomial r;
  for (const auto& f : factors_)
    if (f.first != v) r.factors_.push_back(f);
  return r;
}

int Monomial::cmp_grlex(const Monomial& a, const Monomial& b) {
  std::uint64_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  // lexicographic on exponent vectors in ascending VarId
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->first != ib->first) {
      // the monomial owning the earlier variable has a positive exponent there
      return ia->first < ib->first ? 1 : -1;
    }
    if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
    ++ia;
    ++ib;
  }
  if (ia != a.factors_.end()) return 1;
  if (ib != b.factors_.end()) return -1;
  return 0;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(Coeff c) {
  Polynomial p(c.field());
  if (!c.is_zero()) p.terms_.emplace(Monomial::one(), std::move(c));
  return p;
}

Polynomial Polynomial::variable(const Field& f, VarId v) {
  Polynomial p(f);
  p.terms_.emplace(Monomial::var(v), Coeff::one(f));
  return p;
}

Polynomial Polynomial::term(Coeff c, Monomial m) {
  Polynomial p(c.field());
  if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

Coeff Polynomial::constant_value() const {
  if (terms_.empty()) return Coeff::zero(*field_);
  if (!is_constant()) throw PreconditionError("constant_value: polynomial is not constant");
  return terms_.begin()->second;
}

std::uint64_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

std::uint32_t Polynomial::degree_in(VarId v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
  return d;
}

std::set<VarId> Polynomial::variables() const {
  std::set<VarId> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) out.insert(v);
  return out;
}

bool Polynomial::uses_var(VarId v) const {
  for (const auto& [m, c] : terms_)
    if (m.degree_in(v) > 0) return true;
  return false;
}

const std::pair<const Monomial, Coeff>& Polynomial::leading() const {
  if (terms_.empty()) throw PreconditionError("leading term of zero polynomial");
  return *terms_.rbegin();
}

void Polynomial::check_field(const Polynomial& o) const {
  if (field_ != o.field_)
    throw FieldMismatchError("mixed coefficient fields: " + field_->name() + " vs " + o.field_->name());
}

void Polynomial::add_term(const Monomial& m, const Coeff& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_field(o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_field(o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*field_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_field(o);
  Polynomial r(*field_);
  if (terms_.empty() || o.terms_.empty()) return r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  Polynomial r(*field_);
  if (c.is_zero()) return r;
  for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
  return r;
}

Polynomial Polynomial::mul_term(const Coeff& c, const Monomial& m) const {
  Polynomial r(*field_);
  if (c.is_zero()) return r;
  for (const auto& [mono, coeff] : terms_) r.terms_.emplace(mono * m, coeff * c);
  return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial acc = Polynomial::one(*field_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (field_ != o.field_) return false;
  return terms_ == o.terms_;
}

int Polynomial::cmp(const Polynomial& o) const {
  if (field_ != o.field_) return field_ < o.field_ ? -1 : 1;
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    int mc = Monomial::cmp_grlex(a->first, b->first);
    if (mc != 0) return mc;
    int cc = a->second.cmp(b->second);
    if (cc != 0) return cc;
    ++a;
    ++b;
  }
  if (a != terms_.end()) return 1;
  if (b != o.terms_.end()) return -1;
  return 0;
}

std::optional<Polynomial> Polynomial::divided_by(const Polynomial& divisor) const {
  check_field(divisor);
  if (divisor.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  Polynomial q(*field_);
  Polynomial r = *this;
  const auto& dlead = divisor.leading();
  Coeff dlc_inv = dlead.second.inverse();
  while (!r.is_zero()) {
    const auto& rlead = r.leading();
    if (!dlead.first.divides(rlead.first)) return std::nullopt;
    Coeff c = rlead.second * dlc_inv;
    Monomial m = dlead.first.divided_into(rlead.first);
    q.add_term(m, c);
    r = r - divisor.mul_term(c, m);
  }
  return q;
}

Coeff Polynomial::eval(const std::map<VarId, Coeff>& assignment) const {
  Coeff acc = Coeff::zero(*field_);
  for (const auto& [m, c] : terms_) {
    Coeff t = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) throw IncompleteAssignmentError("no value assigned to variable id " + std::to_string(v));
      t = t * it->second.pow((long long)e);
    }
    acc = acc + t;
  }
  return acc;
}

Polynomial Polynomial::rename(const std::map<VarId, VarId>& map) const {
  Polynomial r(*field_);
  for (const auto& [m, c] : terms_) {
    Monomial nm;
    for (const auto& [v, e] : m.factors()) {
      auto it = map.find(v);
      nm = nm * Monomial::var(it == map.end() ? v : it->second, e);
    }
    r.add_term(nm, c);
  }
  return r;
}

Polynomial Polynomial::derivative(VarId v) const {
  Polynomial r(*field_);
  for (const auto& [m, c] : terms_) {
    std::uint32_t e = m.degree_in(v);
    if (e == 0) continue;
    Coeff nc = c * Coeff::integer(*field_, (long long)e);
    if (nc.is_zero()) continue;  // positive characteristic
    Monomial nm = m.erase_var(v);
    if (e > 1) nm = nm * Monomial::var(v, e - 1);
    r.add_term(nm, nc);
  }
  return r;
}

// ---------------------------------------------------------------------------
// gcd machinery

namespace {

// view of p as a univariate polynomial in x with Polynomial coefficients
std::map<std::uint32_t, Polynomial> univariate_view(const Polynomial& p, VarId x) {
  std::map<std::uint32_t, Polynomial> out;
  for (const auto& [m, c] : p.terms()) {
    std::uint32_t e = m.degree_in(x);
    auto it = out.find(e);
    if (it == out.end()) it = out.emplace(e, Polynomial::zero(p.field())).first;
    it->second.add_term(m.erase_var(x), c);
  }
  return out;
}

Polynomial from_view(const std::map<std::uint32_t, Polynomial>& view, VarId x, const Field& f) {
  Polynomial out(f);
  for (const auto& [e, coeff] : view)
    for (const auto& [m, c] : coeff.terms()) out.add_term(m * Monomial::var(x, e), c);
  return out;
}

Polynomial normalize_monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  Coeff lc = p.leading_coeff();
  if (lc.is_one()) return p;
  return p.scaled(lc.inverse());
}

// content of p wrt x: gcd of the x-coefficients (a polynomial in the rest)
Polynomial content_in(const Polynomial& p, VarId x) {
  Polynomial cont = Polynomial::zero(p.field());
  for (const auto& [e, coeff] : univariate_view(p, x)) {
    cont = poly_gcd(cont, coeff);
    if (cont.is_constant() && !cont.is_zero()) break;  // gcd is already 1
  }
  return cont;
}

Polynomial primitive_in(const Polynomial& p, VarId x) {
  Polynomial cont = content_in(p, x);
  auto q = p.divided_by(cont);
  if (!q) throw InternalError("content does not divide its polynomial");
  return *q;
}

// pseudo-remainder of a by b in x: lc(b)^(da-db+1) * a = q*b + r, deg_x r < deg_x b
Polynomial pseudo_rem(const Polynomial& a, const Polynomial& b, VarId x) {
  auto av = univariate_view(a, x);
  auto bv = univariate_view(b, x);
  std::uint32_t db = bv.rbegin()->first;
  const Polynomial& blc = bv.rbegin()->second;
  auto deg = [](const std::map<std::uint32_t, Polynomial>& v) -> long long {
    return v.empty() ? -1 : (long long)v.rbegin()->first;
  };
  long long da = deg(av);
  long long steps = da - (long long)db + 1;
  std::map<std::uint32_t, Polynomial> r = std::move(av);
  while (deg(r) >= (long long)db) {
    std::uint32_t dr = r.rbegin()->first;
    Polynomial rlc = r.rbegin()->second;
    // r := blc * r - rlc * x^(dr-db) * b
    std::map<std::uint32_t, Polynomial> nr;
    for (auto& [e, c] : r) {
      Polynomial scaled = blc * c;
      if (!scaled.is_zero()) nr.emplace(e, std::move(scaled));
    }
    for (const auto& [e, c] : bv) {
      std::uint32_t ne = e + (dr - db);
      Polynomial sub = rlc * c;
      auto it = nr.find(ne);
      if (it == nr.end()) {
        if (!sub.is_zero()) nr.emplace(ne, -sub);
      } else {
        it->second = it->second - sub;
        if (it->second.is_zero()) nr.erase(it);
      }
    }
    r = std::move(nr);
    --steps;
  }
  // scale the remainder by the unused lc(b) powers so the result equals the
  // textbook pseudo-remainder (the subresultant divisors depend on it)
  Polynomial rem = from_view(r, x, a.field());
  for (long long i = 0; i < steps; ++i) rem = rem * blc;
  return rem;
}

// per-variable minimum exponent across all terms
Monomial monomial_content(const Polynomial& p) {
  bool first = true;
  std::map<VarId, std::uint32_t> mins;
  for (const auto& [m, c] : p.terms()) {
    if (first) {
      for (const auto& [v, e] : m.factors()) mins[v] = e;
      first = false;
      continue;
    }
    for (auto it = mins.begin(); it != mins.end();) {
      std::uint32_t e = m.degree_in(it->first);
      if (e == 0) {
        it = mins.erase(it);
      } else {
        it->second = std::min(it->second, e);
        ++it;
      }
    }
    if (mins.empty()) break;
  }
  Monomial out;
  for (const auto& [v, e] : mins) out = out * Monomial::var(v, e);
  return out;
}

// gcd of the primitive (in x) parts via the subresultant PRS; no content
// computations inside the loop, the divisors are the known subresultant
// factors.
Polynomial subresultant_gcd(Polynomial a, Polynomial b, VarId x) {
  const Field& f = a.field();
  if (a.degree_in(x) < b.degree_in(x)) std::swap(a, b);
  Polynomial g = Polynomial::one(f), h = Polynomial::one(f);
  while (true) {
    long long delta = (long long)a.degree_in(x) - (long long)b.degree_in(x);
    Polynomial r = pseudo_rem(a, b, x);
    if (r.is_zero()) return primitive_in(b, x);
    if (r.degree_in(x) == 0) return Polynomial::one(f);
    a = b;
    // b := r / (g * h^delta)
    Polynomial divisor = g;
    for (long long i = 0; i < delta; ++i) divisor = divisor * h;
    auto nb = r.divided_by(divisor);
    if (!nb) throw InternalError("subresultant division not exact");
    b = std::move(*nb);
    // g := lc_x(a); h := g^delta * h^(1-delta)
    g = univariate_view(a, x).rbegin()->second;
    if (delta == 0) {
      // h unchanged
    } else {
      Polynomial gpow = Polynomial::one(f);
      for (long long i = 0; i < delta; ++i) gpow = gpow * g;
      if (delta == 1) {
        h = gpow;
      } else {
        auto nh = gpow.divided_by(h.pow((std::uint32_t)(delta - 1)));
        if (!nh) throw InternalError("subresultant h-update not exact");
        h = std::move(*nh);
      }
    }
  }
}

}  // namespace

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
  if (&p.field() != &q.field())
    throw FieldMismatchError("poly_gcd: mixed coefficient fields " + p.field().name() + " vs " + q.field().name());
  if (p.is_zero()) return normalize_monic(q);
  if (q.is_zero()) return normalize_monic(p);
  if (p.is_constant() || q.is_constant()) return Polynomial::one(p.field());
  if (p == q) return normalize_monic(p);

  // split off the monomial content first; it is cheap and shrinks everything
  Monomial mp = monomial_content(p), mq = monomial_content(q);
  if (!mp.is_one() || !mq.is_one()) {
    Monomial shared;
    for (const auto& [v, e] : mp.factors()) {
      std::uint32_t eq = mq.degree_in(v);
      if (eq > 0) shared = shared * Monomial::var(v, std::min(e, eq));
    }
    Polynomial ps = *p.divided_by(Polynomial::term(Coeff::one(p.field()), mp));
    Polynomial qs = *q.divided_by(Polynomial::term(Coeff::one(q.field()), mq));
    Polynomial core = poly_gcd(ps, qs);
    return normalize_monic(core.mul_term(Coeff::one(p.field()), shared));
  }

  // divisibility probes settle most canonical-form reductions outright
  if (p.term_count() <= q.term_count()) {
    if (q.divided_by(p)) return normalize_monic(p);
  } else if (p.divided_by(q)) {
    return normalize_monic(q);
  }

  // main variable: the latest-registered variable present
  VarId x = std::max(*p.variables().rbegin(), *q.variables().rbegin());

  Polynomial cp = content_in(p, x), cq = content_in(q, x);
  Polynomial cg = poly_gcd(cp, cq);
  auto pp = p.divided_by(cp), qq = q.divided_by(cq);
  if (!pp || !qq) throw InternalError("content division failed");

  if (pp->degree_in(x) == 0 || qq->degree_in(x) == 0) {
    // one argument was free of x; the whole gcd is the content gcd
    return normalize_monic(cg);
  }

  Polynomial g = subresultant_gcd(std::move(*pp), std::move(*qq), x);
  return normalize_monic(cg * g);
}

// ---------------------------------------------------------------------------
// printing

namespace {

// Renders one term |c|*m. The caller has already handled the sign.
std::string term_string(const Coeff& c, const Monomial& m, const Registry& reg, bool force_coeff) {
  std::ostringstream os;
  bool coeff_shown = false;
  if (m.is_one()) {
    os << c.str();
    coeff_shown = true;
  } else if (!c.is_one() || force_coeff) {
    if (c.needs_parens_in_product())
      os << "(" << c.str() << ")";
    else
      os << c.str();
    coeff_shown = true;
  }
  bool first = !coeff_shown;
  for (const auto& [v, e] : m.factors()) {
    if (!first) os << "*";
    first = false;
    os << reg.name(v);
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace

std::string poly_to_string(const Polynomial& p, const Registry& reg) {
  if (p.is_zero()) return "0";
  const bool fold_signs = p.field().kind() == Field::Kind::rationals;
  std::ostringstream os;
  bool first = true;
  // grlex descending
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Monomial& m = it->first;
    const Coeff& c = it->second;
    bool negative = fold_signs && c.is_negative();
    Coeff abs_c = negative ? -c : c;
    if (first) {
      if (negative) {
        // "-" binds to the first factor only, so "-x^2" would parse as
        // (-x)^2; force an explicit "-1*" when the first factor carries an
        // exponent.
        bool hazard = abs_c.is_one() && !m.is_one() && m.factors().front().second > 1;
        os << "-" << term_string(abs_c, m, reg, hazard);
      } else {
        os << term_string(abs_c, m, reg, false);
      }
      first = false;
    } else {
      os << (negative ? " - " : " + ") << term_string(abs_c, m, reg, false);
    }
  }
  return os.str();
}

std::string Polynomial::str(const Registry& reg) const { return poly_to_string(*this, reg); }

}  // namespace symk
