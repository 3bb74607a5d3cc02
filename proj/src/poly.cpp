#include "k3x/poly.hpp"

#include <algorithm>
#include <sstream>

namespace k3x {

MultiPoly MultiPoly::constant(const NFElement& c) {
  MultiPoly p(c.field());
  p.add_term({0, 0, 0}, c);
  return p;
}

MultiPoly MultiPoly::variable(int var, const FieldPtr& field) {
  MultiPoly p(field);
  Exp e{0, 0, 0};
  e[var] = 1;
  p.add_term(e, NFElement::one(field));
  return p;
}

MultiPoly MultiPoly::from_terms(FieldPtr field,
                                std::vector<std::pair<Exp, NFElement>> terms) {
  MultiPoly p(std::move(field));
  for (auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

void MultiPoly::add_term(const Exp& e, const NFElement& c) {
  if (e[0] < 0 || e[1] < 0 || e[2] < 0)
    throw value_error("negative exponent");
  NFElement cc = promote(c, field_);
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!cc.is_zero()) terms_.emplace(e, cc);
    return;
  }
  it->second = it->second + cc;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(field_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  FieldPtr f = common_field(field_, o.field_);
  MultiPoly r(f);
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  FieldPtr f = common_field(field_, o.field_);
  MultiPoly r(f);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exp e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]};
      r.add_term(e, promote(c1, f) * promote(c2, f));
    }
  return r;
}

MultiPoly MultiPoly::operator*(const NFElement& c) const {
  FieldPtr f = common_field(field_, c.field());
  MultiPoly r(f);
  if (c.is_zero()) return r;
  NFElement cc = promote(c, f);
  for (const auto& [e, t] : terms_) r.add_term(e, promote(t, f) * cc);
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return (*this - o).is_zero();
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly acc = constant(NFElement::one(field_));
  MultiPoly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Exp& e = terms_.rbegin()->first;
  return e[0] + e[1] + e[2];
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree();
  for (const auto& [e, c] : terms_)
    if (e[0] + e[1] + e[2] != d) return false;
  return true;
}

bool MultiPoly::uses_only(int var) const {
  for (const auto& [e, c] : terms_)
    for (int v = 0; v < 3; ++v)
      if (v != var && e[v] != 0) return false;
  return true;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly r(field_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exp ne = e;
    ne[var] -= 1;
    r.add_term(ne, c * NFElement(field_, Rat(e[var])));
  }
  return r;
}

NFElement MultiPoly::evaluate(const std::vector<NFElement>& point) const {
  if (point.size() != 3) throw value_error("evaluate needs 3 coordinates");
  NFElement acc = NFElement::zero(field_);
  for (const auto& [e, c] : terms_) {
    NFElement t = c;
    for (int v = 0; v < 3; ++v)
      t = t * promote(point[v], field_).pow(static_cast<unsigned long>(e[v]));
    acc = acc + t;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != 3) throw value_error("substitute needs 3 images");
  MultiPoly acc(field_);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(c);
    for (int v = 0; v < 3; ++v)
      if (e[v] > 0) t = t * images[v].pow(static_cast<unsigned>(e[v]));
    acc = acc + t;
  }
  return acc;
}

MultiPoly MultiPoly::substitute_var(int var, const MultiPoly& image) const {
  std::vector<MultiPoly> images;
  for (int v = 0; v < 3; ++v)
    images.push_back(v == var ? image : variable(v, field_));
  return substitute(images);
}

int MultiPoly::strip_variable_power(int var) {
  if (terms_.empty()) return 0;
  int k = degree_in(var);
  for (const auto& [e, c] : terms_) k = std::min(k, e[var]);
  if (k == 0) return 0;
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exp ne = e;
    ne[var] -= k;
    out.emplace(ne, c);
  }
  terms_ = std::move(out);
  return k;
}

MultiPoly MultiPoly::divide_by_monomial(int var, int k) const {
  MultiPoly r(field_);
  for (const auto& [e, c] : terms_) {
    if (e[var] < k) throw value_error("not divisible by requested power");
    Exp ne = e;
    ne[var] -= k;
    r.terms_.emplace(ne, c);
  }
  return r;
}

MultiPoly MultiPoly::homogenize(int var, int d) const {
  MultiPoly r(field_);
  for (const auto& [e, c] : terms_) {
    int td = e[0] + e[1] + e[2];
    if (td > d) throw value_error("degree exceeds homogenization target");
    Exp ne = e;
    ne[var] += d - td;
    r.add_term(ne, c);
  }
  return r;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  static const char* names[3] = {"x", "y", "z"};
  std::ostringstream os;
  bool first = true;
  // print highest terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    os << "(" << it->second.str() << ")";
    for (int v = 0; v < 3; ++v) {
      if (it->first[v] == 0) continue;
      os << "*" << names[v];
      if (it->first[v] > 1) os << "^" << it->first[v];
    }
    first = false;
  }
  return os.str();
}

UniPoly to_unipoly(const MultiPoly& p, int var) {
  if (!p.uses_only(var)) throw value_error("polynomial is not univariate");
  UniPoly u(static_cast<size_t>(std::max(p.degree_in(var), 0)) + 1,
            NFElement::zero(p.field()));
  if (p.is_zero()) return {};
  for (const auto& [e, c] : p.terms()) u[static_cast<size_t>(e[var])] = c;
  return uni_trim(std::move(u));
}

MultiPoly from_unipoly(const UniPoly& u, int var, const FieldPtr& field) {
  MultiPoly p(field);
  for (size_t i = 0; i < u.size(); ++i) {
    Exp e{0, 0, 0};
    e[var] = static_cast<int>(i);
    p.add_term(e, u[i]);
  }
  return p;
}

int uni_degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

UniPoly uni_trim(UniPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
  UniPoly r = a;
  if (b.size() > r.size()) r.resize(b.size(), NFElement::zero(b.empty() ? NumberField::rationals() : b[0].field()));
  for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  return uni_trim(std::move(r));
}

UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
  UniPoly nb = b;
  for (NFElement& c : nb) c = -c;
  return uni_add(a, nb);
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  FieldPtr f = common_field(a[0].field(), b[0].field());
  UniPoly r(a.size() + b.size() - 1, NFElement::zero(f));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = r[i + j] + promote(a[i], f) * promote(b[j], f);
  return uni_trim(std::move(r));
}

UniPoly uni_scale(const UniPoly& a, const NFElement& c) {
  if (c.is_zero()) return {};
  UniPoly r = a;
  for (NFElement& x : r) x = x * c;
  return r;
}

std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b) {
  UniPoly bb = uni_trim(b);
  if (bb.empty()) throw value_error("univariate division by zero");
  UniPoly rem = uni_trim(a);
  FieldPtr f = bb[0].field();
  if (uni_degree(rem) < uni_degree(bb)) return {{}, rem};
  UniPoly q(rem.size() - bb.size() + 1, NFElement::zero(f));
  NFElement lead_inv = bb.back().inverse();
  while (!rem.empty() && rem.size() >= bb.size()) {
    NFElement c = rem.back() * lead_inv;
    size_t off = rem.size() - bb.size();
    q[off] = c;
    for (size_t i = 0; i < bb.size(); ++i)
      rem[off + i] = rem[off + i] - c * bb[i];
    rem = uni_trim(std::move(rem));
  }
  return {uni_trim(std::move(q)), rem};
}

UniPoly uni_derivative(const UniPoly& a) {
  if (a.size() <= 1) return {};
  UniPoly r(a.size() - 1, NFElement::zero(a[0].field()));
  for (size_t i = 1; i < a.size(); ++i)
    r[i - 1] = a[i] * NFElement(a[i].field(), Rat(static_cast<long>(i)));
  return uni_trim(std::move(r));
}

NFElement uni_eval(const UniPoly& a, const NFElement& x) {
  NFElement acc = NFElement::zero(x.field());
  for (auto it = a.rbegin(); it != a.rend(); ++it)
    acc = acc * x + promote(*it, x.field());
  return acc;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  a = uni_trim(std::move(a));
  b = uni_trim(std::move(b));
  if (a.empty() && b.empty()) throw value_error("gcd of zero polynomials");
  while (!b.empty()) {
    UniPoly r = uni_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  // monic normalization
  NFElement inv = a.back().inverse();
  for (NFElement& c : a) c = c * inv;
  return a;
}

NFElement resultant(const UniPoly& p0, const UniPoly& q0, const FieldPtr& field) {
  UniPoly p = uni_trim(p0), q = uni_trim(q0);
  if (p.empty() || q.empty()) throw value_error("resultant of zero polynomial");
  int m = uni_degree(p), n = uni_degree(q);
  if (m == 0) return p[0].pow(static_cast<unsigned long>(n));
  if (n == 0) return q[0].pow(static_cast<unsigned long>(m));
  int N = m + n;
  // Sylvester matrix, then Gaussian elimination over the field
  std::vector<std::vector<NFElement>> M(
      static_cast<size_t>(N),
      std::vector<NFElement>(static_cast<size_t>(N), NFElement::zero(field)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k)
      M[static_cast<size_t>(r)][static_cast<size_t>(r + k)] =
          promote(p[static_cast<size_t>(m - k)], field);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      M[static_cast<size_t>(n + r)][static_cast<size_t>(r + k)] =
          promote(q[static_cast<size_t>(n - k)], field);
  NFElement det = NFElement::one(field);
  for (int col = 0; col < N; ++col) {
    int piv = -1;
    for (int r = col; r < N; ++r)
      if (!M[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return NFElement::zero(field);
    if (piv != col) {
      std::swap(M[static_cast<size_t>(piv)], M[static_cast<size_t>(col)]);
      det = -det;
    }
    NFElement pv = M[static_cast<size_t>(col)][static_cast<size_t>(col)];
    det = det * pv;
    NFElement pinv = pv.inverse();
    for (int r = col + 1; r < N; ++r) {
      NFElement f = M[static_cast<size_t>(r)][static_cast<size_t>(col)] * pinv;
      if (f.is_zero()) continue;
      for (int c = col; c < N; ++c)
        M[static_cast<size_t>(r)][static_cast<size_t>(c)] =
            M[static_cast<size_t>(r)][static_cast<size_t>(c)] -
            f * M[static_cast<size_t>(col)][static_cast<size_t>(c)];
    }
  }
  return det;
}

std::vector<std::pair<int, UniPoly>> squarefree_factors(const UniPoly& p0) {
  UniPoly p = uni_trim(p0);
  if (p.empty()) throw value_error("squarefree profile of zero polynomial");
  std::vector<std::pair<int, UniPoly>> out;
  if (uni_degree(p) == 0) return out;
  // Yun: a1 = p/gcd(p,p'), iterate
  UniPoly d = uni_derivative(p);
  UniPoly g = uni_gcd(p, d);
  UniPoly w = uni_divmod(p, g).first;   // product of distinct roots
  UniPoly y = uni_divmod(d, g).first;
  int i = 1;
  while (uni_degree(w) > 0) {
    UniPoly z = uni_sub(y, uni_derivative(w));
    UniPoly qi = uni_gcd(w, z);
    if (uni_degree(qi) > 0) out.emplace_back(i, qi);
    w = uni_divmod(w, qi).first;
    y = uni_divmod(z, qi).first;
    ++i;
  }
  return out;
}

std::vector<std::pair<int, int>> squarefree_multiplicity_profile(const UniPoly& p0) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [mult, q] : squarefree_factors(p0))
    out.emplace_back(mult, uni_degree(q));
  return out;
}

}  // namespace k3x
