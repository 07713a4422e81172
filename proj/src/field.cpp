#include "symk/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace symk {

namespace {

long long mod_reduce(long long v, long long p) {
  long long r = v % p;
  return r < 0 ? r + p : r;
}

long long mod_mul(long long a, long long b, long long p) {
  return (long long)((__int128)a * b % p);
}

long long mod_inv(long long a, long long p) {
  // extended Euclid
  long long t = 0, newt = 1, r = p, newr = mod_reduce(a, p);
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw DivisionByZeroError("no inverse of " + std::to_string(a) + " mod " + std::to_string(p));
  return mod_reduce(t, p);
}

bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// --- dense univariate arithmetic over F_p used for extension moduli ---

using PolyFp = std::vector<long long>;  // coefficients ascending, may carry trailing zeros

void trim(PolyFp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyFp poly_mul(const PolyFp& a, const PolyFp& b, long long p) {
  if (a.empty() || b.empty()) return {};
  PolyFp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + mod_mul(a[i], b[j], p)) % p;
  trim(r);
  return r;
}

// remainder of a by monic-after-scaling b
PolyFp poly_rem(PolyFp a, const PolyFp& b, long long p) {
  trim(a);
  if (b.empty()) throw DivisionByZeroError("polynomial remainder by zero");
  long long lead_inv = mod_inv(b.back(), p);
  while (a.size() >= b.size()) {
    long long c = mod_mul(a.back(), lead_inv, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = mod_reduce(a[shift + i] - mod_mul(c, b[i], p), p);
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

bool poly_is_zero(const PolyFp& a) {
  return std::all_of(a.begin(), a.end(), [](long long c) { return c == 0; });
}

// Irreducibility by trial division against all monic polynomials of degree
// <= deg/2. Desk scale: q^(deg/2) candidates.
bool is_irreducible(const PolyFp& f, long long p) {
  int deg = (int)f.size() - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    // enumerate monic degree-d candidates
    std::vector<long long> c(d, 0);
    while (true) {
      PolyFp cand(c.begin(), c.end());
      cand.push_back(1);
      if (poly_is_zero(poly_rem(f, cand, p))) return false;
      int i = 0;
      for (; i < d; ++i) {
        if (++c[i] < p) break;
        c[i] = 0;
      }
      if (i == d) break;
    }
  }
  return true;
}

// Fixed table of extension moduli, coefficients ascending (constant first).
// These are the lexicographically smallest monic irreducibles per (p, k),
// which the fallback search below reproduces for entries not listed.
const std::map<std::pair<long long, int>, std::vector<long long>>& modulus_table() {
  static const std::map<std::pair<long long, int>, std::vector<long long>> table = {
      {{2, 2}, {1, 1, 1}},        // g^2 + g + 1
      {{2, 3}, {1, 1, 0, 1}},     // g^3 + g + 1
      {{2, 4}, {1, 1, 0, 0, 1}},  // g^4 + g + 1
      {{3, 2}, {1, 0, 1}},        // g^2 + 1
      {{3, 3}, {1, 2, 0, 1}},     // g^3 + 2g + 1
      {{5, 2}, {2, 0, 1}},        // g^2 + 2
      {{7, 2}, {1, 0, 1}},        // g^2 + 1
  };
  return table;
}

std::vector<long long> find_modulus(long long p, int k) {
  auto it = modulus_table().find({p, k});
  if (it != modulus_table().end()) return it->second;
  // smallest monic irreducible in counting order of (c_{k-1},...,c_1,c_0)
  std::vector<long long> c(k, 0);
  while (true) {
    PolyFp cand(c.begin(), c.end());
    cand.push_back(1);
    if (cand[0] != 0 && is_irreducible(cand, p)) return cand;
    int i = k - 1;
    for (; i >= 0; --i) {
      if (++c[i] < p) break;
      c[i] = 0;
    }
    if (i < 0) break;
  }
  throw InternalError("no irreducible of degree " + std::to_string(k) + " over F" + std::to_string(p));
}

}  // namespace

struct FieldTableAccess {
  static std::unique_ptr<Field> make(Field::Kind kind, long long p, int k, std::vector<long long> mod) {
    return std::unique_ptr<Field>(new Field(kind, p, k, std::move(mod)));
  }
};

Field::Field(Kind kind, long long p, int k, std::vector<long long> modulus)
    : kind_(kind), p_(p), k_(k), modulus_(std::move(modulus)) {
  switch (kind_) {
    case Kind::rationals:
      name_ = "Q";
      break;
    case Kind::prime:
      name_ = "F" + std::to_string(p_);
      break;
    case Kind::extension: {
      long long q = 1;
      for (int i = 0; i < k_; ++i) q *= p_;
      name_ = "F" + std::to_string(q);
      break;
    }
  }
}

const Field& Field::rationals() {
  static const auto q = FieldTableAccess::make(Kind::rationals, 0, 1, {});
  return *q;
}

const Field& Field::prime(long long p) {
  if (!is_prime_ll(p)) throw PreconditionError("F" + std::to_string(p) + ": modulus is not prime");
  static std::mutex mu;
  static std::map<long long, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[p];
  if (!slot) slot = FieldTableAccess::make(Kind::prime, p, 1, {});
  return *slot;
}

const Field& Field::extension(long long p, int degree) {
  if (!is_prime_ll(p)) throw PreconditionError("extension field characteristic must be prime");
  if (degree < 2) throw PreconditionError("extension degree must be >= 2");
  static std::mutex mu;
  static std::map<std::pair<long long, int>, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, degree}];
  if (!slot) slot = FieldTableAccess::make(Kind::extension, p, degree, find_modulus(p, degree));
  return *slot;
}

const Field& Field::by_name(const std::string& name) {
  if (name == "Q" || name == "q") return rationals();
  if (name.size() >= 2 && (name[0] == 'F' || name[0] == 'f')) {
    std::string rest = name.substr(1);
    auto caret = rest.find('^');
    try {
      if (caret != std::string::npos) {
        long long p = std::stoll(rest.substr(0, caret));
        int k = std::stoi(rest.substr(caret + 1));
        return k == 1 ? prime(p) : extension(p, k);
      }
      long long q = std::stoll(rest);
      if (is_prime_ll(q)) return prime(q);
      // factor q = p^k
      for (long long p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
          long long t = q;
          int k = 0;
          while (t % p == 0) {
            t /= p;
            ++k;
          }
          if (t == 1) return extension(p, k);
          break;
        }
      }
    } catch (const std::exception&) {
      // fall through to ParseError
    }
  }
  throw ParseError("unrecognized field name '" + name + "'", 0);
}

long long Field::order() const {
  if (kind_ == Kind::rationals) throw PreconditionError("rationals have no finite order");
  long long q = 1;
  for (int i = 0; i < k_; ++i) q *= p_;
  return q;
}

// ---------------------------------------------------------------------------
// Coeff

Coeff::Coeff() : field_(&Field::rationals()), rat_(0) {}

Coeff Coeff::zero(const Field& f) {
  Coeff c(&f);
  if (f.kind() != Field::Kind::rationals) c.vec_.assign((std::size_t)f.degree(), 0);
  return c;
}

Coeff Coeff::one(const Field& f) { return integer(f, 1); }

Coeff Coeff::integer(const Field& f, const Integer& n) {
  Coeff c = zero(f);
  switch (f.kind()) {
    case Field::Kind::rationals:
      c.rat_ = Rational(n);
      break;
    case Field::Kind::prime:
    case Field::Kind::extension: {
      Integer r = n % f.characteristic();
      long long v = r.convert_to<long long>();
      c.vec_[0] = mod_reduce(v, f.characteristic());
      break;
    }
  }
  return c;
}

Coeff Coeff::integer(const Field& f, long long n) { return integer(f, Integer(n)); }

Coeff Coeff::rational(const Rational& q) {
  Coeff c(&Field::rationals());
  c.rat_ = q;
  return c;
}

Coeff Coeff::prime_elem(const Field& f, long long v) {
  if (f.kind() != Field::Kind::prime) throw PreconditionError("prime_elem: field is not prime");
  Coeff c = zero(f);
  c.vec_[0] = mod_reduce(v, f.characteristic());
  return c;
}

Coeff Coeff::ext_elem(const Field& f, std::vector<long long> comps) {
  if (f.kind() != Field::Kind::extension) throw PreconditionError("ext_elem: field is not an extension");
  if ((int)comps.size() > f.degree()) throw PreconditionError("ext_elem: too many components");
  Coeff c = zero(f);
  for (std::size_t i = 0; i < comps.size(); ++i) c.vec_[i] = mod_reduce(comps[i], f.characteristic());
  return c;
}

Coeff Coeff::generator(const Field& f) {
  if (f.kind() != Field::Kind::extension) throw PreconditionError("generator: field is not an extension");
  std::vector<long long> v((std::size_t)f.degree(), 0);
  v[1] = 1;
  return ext_elem(f, std::move(v));
}

bool Coeff::is_zero() const {
  if (field_->kind() == Field::Kind::rationals) return rat_ == 0;
  return std::all_of(vec_.begin(), vec_.end(), [](long long c) { return c == 0; });
}

bool Coeff::is_one() const {
  if (field_->kind() == Field::Kind::rationals) return rat_ == 1;
  if (vec_[0] != 1) return false;
  return std::all_of(vec_.begin() + 1, vec_.end(), [](long long c) { return c == 0; });
}

void Coeff::check_same_field(const Coeff& o) const {
  if (field_ != o.field_)
    throw FieldMismatchError("mixed coefficient fields: " + field_->name() + " vs " + o.field_->name());
}

Coeff Coeff::operator+(const Coeff& o) const {
  check_same_field(o);
  Coeff r(field_);
  if (field_->kind() == Field::Kind::rationals) {
    r.rat_ = rat_ + o.rat_;
  } else {
    r.vec_.resize(vec_.size());
    for (std::size_t i = 0; i < vec_.size(); ++i) r.vec_[i] = (vec_[i] + o.vec_[i]) % field_->characteristic();
  }
  return r;
}

Coeff Coeff::operator-(const Coeff& o) const { return *this + (-o); }

Coeff Coeff::operator-() const {
  Coeff r(field_);
  if (field_->kind() == Field::Kind::rationals) {
    r.rat_ = -rat_;
  } else {
    r.vec_.resize(vec_.size());
    for (std::size_t i = 0; i < vec_.size(); ++i) r.vec_[i] = mod_reduce(-vec_[i], field_->characteristic());
  }
  return r;
}

Coeff Coeff::operator*(const Coeff& o) const {
  check_same_field(o);
  Coeff r(field_);
  long long p = field_->characteristic();
  switch (field_->kind()) {
    case Field::Kind::rationals:
      r.rat_ = rat_ * o.rat_;
      break;
    case Field::Kind::prime:
      r.vec_ = {mod_mul(vec_[0], o.vec_[0], p)};
      break;
    case Field::Kind::extension: {
      PolyFp prod = poly_mul(vec_, o.vec_, p);
      prod = poly_rem(prod, field_->modulus(), p);
      prod.resize(vec_.size(), 0);
      r.vec_ = std::move(prod);
      break;
    }
  }
  return r;
}

Coeff Coeff::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero in " + field_->name());
  Coeff r(field_);
  long long p = field_->characteristic();
  switch (field_->kind()) {
    case Field::Kind::rationals:
      r.rat_ = 1 / rat_;
      break;
    case Field::Kind::prime:
      r.vec_ = {mod_inv(vec_[0], p)};
      break;
    case Field::Kind::extension: {
      // extended Euclid in F_p[x] against the modulus
      PolyFp r0 = field_->modulus(), r1 = vec_;
      trim(r1);
      PolyFp t0 = {}, t1 = {1};
      while (!r1.empty()) {
        // quotient of r0 by r1
        PolyFp q;
        PolyFp rem = r0;
        trim(rem);
        long long lead_inv = mod_inv(r1.back(), p);
        while (rem.size() >= r1.size() && !rem.empty()) {
          long long c = mod_mul(rem.back(), lead_inv, p);
          std::size_t shift = rem.size() - r1.size();
          if (q.size() < shift + 1) q.resize(shift + 1, 0);
          q[shift] = (q[shift] + c) % p;
          for (std::size_t i = 0; i < r1.size(); ++i)
            rem[shift + i] = mod_reduce(rem[shift + i] - mod_mul(c, r1[i], p), p);
          trim(rem);
        }
        PolyFp t2 = t0;
        PolyFp qt1 = poly_mul(q, t1, p);
        if (t2.size() < qt1.size()) t2.resize(qt1.size(), 0);
        for (std::size_t i = 0; i < qt1.size(); ++i) t2[i] = mod_reduce(t2[i] - qt1[i], p);
        trim(t2);
        r0 = r1;
        r1 = rem;
        t0 = t1;
        t1 = t2;
      }
      // r0 is the gcd, a nonzero constant
      if (r0.size() != 1) throw InternalError("modulus not irreducible in " + field_->name());
      long long scale = mod_inv(r0[0], p);
      PolyFp inv = t0;
      for (auto& c : inv) c = mod_mul(c, scale, p);
      inv.resize(vec_.size(), 0);
      r.vec_ = std::move(inv);
      break;
    }
  }
  return r;
}

Coeff Coeff::operator/(const Coeff& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

Coeff Coeff::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Coeff base = *this;
  Coeff acc = Coeff::one(*field_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Coeff::operator==(const Coeff& o) const {
  if (field_ != o.field_) return false;
  if (field_->kind() == Field::Kind::rationals) return rat_ == o.rat_;
  return vec_ == o.vec_;
}

int Coeff::cmp(const Coeff& o) const {
  if (field_ != o.field_) return field_ < o.field_ ? -1 : 1;
  if (field_->kind() == Field::Kind::rationals) {
    if (rat_ < o.rat_) return -1;
    if (rat_ > o.rat_) return 1;
    return 0;
  }
  if (vec_ < o.vec_) return -1;
  if (vec_ > o.vec_) return 1;
  return 0;
}

const Rational& Coeff::rat() const {
  if (field_->kind() != Field::Kind::rationals) throw PreconditionError("rat(): not a rational");
  return rat_;
}

long long Coeff::residue() const {
  if (field_->kind() != Field::Kind::prime) throw PreconditionError("residue(): not a prime-field element");
  return vec_[0];
}

const std::vector<long long>& Coeff::components() const {
  if (field_->kind() != Field::Kind::extension) throw PreconditionError("components(): not an extension element");
  return vec_;
}

bool Coeff::is_integer_like() const {
  switch (field_->kind()) {
    case Field::Kind::rationals:
      return denominator(rat_) == 1;
    case Field::Kind::prime:
      return true;
    case Field::Kind::extension:
      return std::all_of(vec_.begin() + 1, vec_.end(), [](long long c) { return c == 0; });
  }
  return false;
}

bool Coeff::is_negative() const {
  return field_->kind() == Field::Kind::rationals && rat_ < 0;
}

std::string Coeff::str() const {
  std::ostringstream os;
  switch (field_->kind()) {
    case Field::Kind::rationals:
      if (denominator(rat_) == 1) {
        os << numerator(rat_);
      } else if (rat_ < 0) {
        os << "-(" << -numerator(rat_) << "/" << denominator(rat_) << ")";
      } else {
        os << "(" << numerator(rat_) << "/" << denominator(rat_) << ")";
      }
      break;
    case Field::Kind::prime:
      os << vec_[0];
      break;
    case Field::Kind::extension: {
      bool first = true;
      for (int i = (int)vec_.size() - 1; i >= 0; --i) {
        if (vec_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
          os << vec_[i];
        } else {
          if (vec_[i] != 1) os << vec_[i] << "*";
          os << Field::generator_name();
          if (i > 1) os << "^" << i;
        }
      }
      if (first) os << "0";
      break;
    }
  }
  return os.str();
}

bool Coeff::needs_parens_in_product() const {
  switch (field_->kind()) {
    case Field::Kind::rationals:
      return false;  // fractions already print parenthesized
    case Field::Kind::prime:
      return false;
    case Field::Kind::extension: {
      int nonzero = 0;
      for (long long c : vec_)
        if (c != 0) ++nonzero;
      return nonzero > 1;
    }
  }
  return false;
}

std::size_t Coeff::hash() const {
  std::size_t h = std::hash<const void*>()(field_);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  if (field_->kind() == Field::Kind::rationals) {
    mix(std::hash<std::string>()(rat_.str()));
  } else {
    for (long long c : vec_) mix(std::hash<long long>()(c));
  }
  return h;
}

std::vector<Coeff> all_elements(const Field& f) {
  if (!f.is_finite()) throw PreconditionError("all_elements: field is infinite");
  long long q = f.order();
  std::vector<Coeff> out;
  out.reserve((std::size_t)q);
  long long p = f.characteristic();
  int k = f.degree();
  std::vector<long long> digits((std::size_t)k, 0);
  for (long long i = 0; i < q; ++i) {
    if (f.kind() == Field::Kind::prime)
      out.push_back(Coeff::prime_elem(f, digits[0]));
    else
      out.push_back(Coeff::ext_elem(f, digits));
    for (int d = 0; d < k; ++d) {
      if (++digits[(std::size_t)d] < p) break;
      digits[(std::size_t)d] = 0;
    }
  }
  return out;
}

}  // namespace symk
