#include "k3x/numberfield.hpp"

#include <algorithm>
#include <sstream>

namespace k3x {

namespace {

// dense ascending-coefficient arithmetic over Q, local to this file
using QPoly = std::vector<Rat>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// a mod b, b monic
QPoly rem_monic(QPoly a, const QPoly& b) {
  trim(a);
  while (deg(a) >= deg(b)) {
    Rat c = a.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
    trim(a);
  }
  return a;
}

// divisors of a nonzero integer, both signs
std::vector<Int> divisors(const Int& n0) {
  Int n = abs(n0);
  std::vector<Int> out;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      out.push_back(-d);
      Int q = n / d;
      if (q != d) {
        out.push_back(q);
        out.push_back(-q);
      }
    }
  }
  return out;
}

// primitive integer form of a rational polynomial (content removed)
std::vector<Int> primitive_int(const QPoly& p) {
  Int lcm_den = 1;
  for (const Rat& c : p)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
            c.get_den().get_mpz_t());
  std::vector<Int> z;
  z.reserve(p.size());
  Int g = 0;
  for (const Rat& c : p) {
    Rat scaled = c * Rat(lcm_den);
    z.push_back(scaled.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  if (g > 1)
    for (Int& c : z) c /= g;
  return z;
}

bool has_rational_root(const std::vector<Int>& z) {
  // roots p/q with p | z[0], q | z[deg]; zero constant term means root 0
  if (z.front() == 0) return true;
  for (const Int& p : divisors(z.front()))
    for (const Int& q : divisors(z.back())) {
      if (q <= 0) continue;
      Rat x(p, q);
      x.canonicalize();
      Rat acc(0), pw(1);
      for (const Int& c : z) {
        acc += Rat(c) * pw;
        pw *= x;
      }
      if (acc == 0) return true;
    }
  return false;
}

// quartic only: integer quadratic-factor search by undetermined coefficients
bool has_quadratic_factor(const std::vector<Int>& z) {
  // z = (l1 v^2 + m1 v + c1)(l2 v^2 + m2 v + c2), match v^3 and v^1 rows as
  // a linear system in m1, m2, then check the v^2 row
  const Int &a0 = z[0], &a1 = z[1], &a2 = z[2], &a3 = z[3], &a4 = z[4];
  for (const Int& l1 : divisors(a4)) {
    if (l1 <= 0) continue;
    Int l2 = a4 / l1;
    for (const Int& c1 : divisors(a0)) {
      Int c2q_num = a0;
      if (c2q_num % c1 != 0) continue;
      Int c2 = a0 / c1;
      // l1 m2 + l2 m1 = a3 ; c2 m1 + c1 m2 = a1
      Int det = l1 * c2 - l2 * c1;
      if (det != 0) {
        Rat m1 = frac(l1 * a1 - c1 * a3, det);
        Rat m2 = frac(c2 * a3 - l2 * a1, det);
        if (is_integer(m1) && is_integer(m2) &&
            l1 * Rat(c2) + l2 * Rat(c1) + m1 * m2 == a2)
          return true;
      } else {
        // singular system: scan small multipliers via the v^2 relation
        // m1 m2 = a2 - l1 c2 - l2 c1 with l1 m2 + l2 m1 = a3
        Int rhs = a2 - l1 * c2 - l2 * c1;
        if (rhs == 0) {
          // m1 = 0 branch and m2 = 0 branch
          if (l1 != 0 && a3 % l1 == 0 && (a3 / l1) * c1 == a1) return true;
          if (l2 != 0 && a3 % l2 == 0 && (a3 / l2) * c2 == a1) return true;
        } else {
          for (const Int& m1 : divisors(rhs)) {
            Int m2 = rhs / m1;
            if (l1 * m2 + l2 * m1 == a3 && c2 * m1 + c1 * m2 == a1)
              return true;
          }
        }
      }
    }
  }
  return false;
}

bool irreducible_over_q(const QPoly& monic) {
  int d = deg(monic);
  if (d == 1) return true;
  std::vector<Int> z = primitive_int(monic);
  if (has_rational_root(z)) return false;
  if (d <= 3) return true;
  return !has_quadratic_factor(z);
}

}  // namespace

NumberField::NumberField(std::vector<Rat> min_poly) : min_poly_(std::move(min_poly)) {
  trim(min_poly_);
  if (deg(min_poly_) < 1 || deg(min_poly_) > 4)
    throw value_error("number field degree must be 1..4");
  Rat lead = min_poly_.back();
  for (Rat& c : min_poly_) c /= lead;
  if (!irreducible_over_q(min_poly_))
    throw value_error("reducible defining polynomial");
}

FieldPtr NumberField::rationals() {
  static FieldPtr q = std::make_shared<NumberField>(std::vector<Rat>{Rat(0), Rat(1)});
  return q;
}

FieldPtr NumberField::make(std::vector<Rat> min_poly) {
  return std::make_shared<NumberField>(std::move(min_poly));
}

NFElement::NFElement(FieldPtr field, std::vector<Rat> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != field_->degree())
    throw value_error("coefficient vector length != field degree");
}

NFElement::NFElement(FieldPtr field, const Rat& r)
    : field_(std::move(field)), coeffs_(field_->degree(), Rat(0)) {
  coeffs_[0] = r;
}

bool NFElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rat& c) { return c == 0; });
}

bool NFElement::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rat NFElement::rational_value() const {
  if (!is_rational()) throw value_error("not a rational value");
  return coeffs_[0];
}

void NFElement::check_compatible(const NFElement& o) const {
  if (!field_->same_field(*o.field_))
    throw value_error("mixed number fields");
}

NFElement NFElement::operator-() const {
  std::vector<Rat> c = coeffs_;
  for (Rat& x : c) x = -x;
  return NFElement(field_, std::move(c));
}

NFElement NFElement::operator+(const NFElement& o) const {
  check_compatible(o);
  std::vector<Rat> c = coeffs_;
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return NFElement(field_, std::move(c));
}

NFElement NFElement::operator-(const NFElement& o) const {
  check_compatible(o);
  std::vector<Rat> c = coeffs_;
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
  return NFElement(field_, std::move(c));
}

NFElement NFElement::operator*(const NFElement& o) const {
  check_compatible(o);
  QPoly prod = mul(coeffs_, o.coeffs_);
  QPoly red = rem_monic(std::move(prod), field_->min_poly());
  red.resize(field_->degree(), Rat(0));
  return NFElement(field_, std::move(red));
}

NFElement NFElement::inverse() const {
  if (is_zero()) throw value_error("division by zero");
  // extended Euclid: s*self + t*minpoly = gcd (a unit, since minpoly
  // irreducible and self nonzero of lower degree)
  QPoly r0 = field_->min_poly(), r1 = coeffs_;
  trim(r1);
  QPoly t0 = {}, t1 = {Rat(1)};
  while (!r1.empty()) {
    // quotient of r0 by r1
    QPoly q;
    QPoly rem = r0;
    trim(rem);
    if (deg(rem) >= deg(r1)) {
      q.assign(deg(rem) - deg(r1) + 1, Rat(0));
      while (!rem.empty() && deg(rem) >= deg(r1)) {
        Rat c = rem.back() / r1.back();
        size_t off = rem.size() - r1.size();
        q[off] = c;
        for (size_t i = 0; i < r1.size(); ++i) rem[off + i] -= c * r1[i];
        trim(rem);
      }
    }
    QPoly t2 = t0;
    QPoly qt = mul(q, t1);
    t2.resize(std::max(t2.size(), qt.size()), Rat(0));
    for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
    trim(t2);
    r0 = r1;
    r1 = rem;
    t0 = t1;
    t1 = t2;
  }
  // r0 = gcd (nonzero constant), t0 its Bezout coefficient for self
  if (deg(r0) != 0) throw value_error("inverse failed: reducible min_poly?");
  Rat unit = r0[0];
  QPoly inv = t0;
  for (Rat& c : inv) c /= unit;
  inv = rem_monic(std::move(inv), field_->min_poly());
  inv.resize(field_->degree(), Rat(0));
  return NFElement(field_, std::move(inv));
}

bool NFElement::operator==(const NFElement& o) const {
  check_compatible(o);
  return coeffs_ == o.coeffs_;
}

bool NFElement::operator<(const NFElement& o) const {
  check_compatible(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
  }
  return false;
}

NFElement NFElement::pow(unsigned long e) const {
  NFElement acc = one(field_);
  NFElement base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string NFElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << rat_str(coeffs_[i]);
    if (i == 1) os << "*v";
    if (i > 1) os << "*v^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

NFElement NFElement::generator(const FieldPtr& field) {
  if (field->degree() == 1) return zero(field);
  std::vector<Rat> c(field->degree(), Rat(0));
  c[1] = 1;
  return NFElement(field, std::move(c));
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (a->same_field(*b)) return a;
  if (a->degree() == 1) return b;
  if (b->degree() == 1) return a;
  throw value_error("values live in different extensions");
}

NFElement promote(const NFElement& x, const FieldPtr& field) {
  if (x.field()->same_field(*field)) return x;
  if (x.field()->degree() == 1) return NFElement(field, x.coeffs()[0]);
  throw value_error("cannot promote between extensions");
}

}  // namespace k3x
