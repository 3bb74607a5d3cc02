#include "k3x/covering.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "k3x/json_io.hpp"

namespace k3x {

namespace {

constexpr int kTripleDegreeCap = 8;
constexpr int kClosureDegreeCap = 12;
constexpr size_t kClosureSizeCap = 100000;

void check_perm(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[static_cast<size_t>(v)])
      throw value_error("not a permutation");
    seen[static_cast<size_t>(v)] = 1;
  }
}

Perm conjugate(const Perm& g, const Perm& p) {
  // g p g^-1
  Perm out(p.size());
  for (size_t i = 0; i < p.size(); ++i)
    out[static_cast<size_t>(g[i])] = g[static_cast<size_t>(p[i])];
  return out;
}

bool transitive_pair(const Perm& a, const Perm& b) {
  size_t d = a.size();
  std::vector<char> seen(d, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  size_t count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : {a[static_cast<size_t>(v)], b[static_cast<size_t>(v)]}) {
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == d;
}

Int centralizer_order(const CycleType& t) {
  std::map<int, int> mult;
  for (int e : t.parts) mult[e] += 1;
  Int out = 1;
  for (const auto& [len, m] : mult) {
    for (int i = 1; i <= m; ++i) out *= i;
    for (int i = 0; i < m; ++i) out *= len;
  }
  return out;
}

std::vector<Perm> perms_of_type(int d, const CycleType& t) {
  Perm p(static_cast<size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    if (cycle_type_of(p) == t) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Perm> centralizer_of(const Perm& s) {
  int d = static_cast<int>(s.size());
  Perm g(static_cast<size_t>(d));
  std::iota(g.begin(), g.end(), 0);
  std::vector<Perm> out;
  do {
    if (perm_compose(g, s) == perm_compose(s, g)) out.push_back(g);
  } while (std::next_permutation(g.begin(), g.end()));
  return out;
}

UniPoly promote_poly(const UniPoly& p, const FieldPtr& field) {
  UniPoly out;
  out.reserve(p.size());
  for (const NFElement& c : p) out.push_back(promote(c, field));
  return out;
}

UniPoly uni_pow(const UniPoly& p, int e) {
  UniPoly out{NFElement::one(p.empty() ? NumberField::rationals() : p[0].field())};
  for (int i = 0; i < e; ++i) out = uni_mul(out, p);
  return out;
}

// f((a z + b)/(c z + d)) cleared by (c z + d)^deg f
UniPoly compose_homogeneous(const UniPoly& f, const UniPoly& lin_num,
                            const UniPoly& lin_den, const FieldPtr& field) {
  int n = uni_degree(f);
  if (n < 0) return {};
  std::vector<UniPoly> num_pow(static_cast<size_t>(n) + 1);
  std::vector<UniPoly> den_pow(static_cast<size_t>(n) + 1);
  num_pow[0] = den_pow[0] = {NFElement::one(field)};
  for (int i = 1; i <= n; ++i) {
    num_pow[static_cast<size_t>(i)] =
        uni_mul(num_pow[static_cast<size_t>(i - 1)], lin_num);
    den_pow[static_cast<size_t>(i)] =
        uni_mul(den_pow[static_cast<size_t>(i - 1)], lin_den);
  }
  UniPoly out;
  for (int i = 0; i <= n; ++i) {
    if (f[static_cast<size_t>(i)].is_zero()) continue;
    UniPoly term = uni_scale(uni_mul(num_pow[static_cast<size_t>(i)],
                                     den_pow[static_cast<size_t>(n - i)]),
                             f[static_cast<size_t>(i)]);
    out = uni_add(out, term);
  }
  return out;
}

}  // namespace

Perm perm_identity(int d) {
  Perm p(static_cast<size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw value_error("permutation size mismatch");
  Perm out(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    out[i] = a[static_cast<size_t>(b[i])];
  return out;
}

Perm perm_inverse(const Perm& p) {
  Perm out(p.size());
  for (size_t i = 0; i < p.size(); ++i)
    out[static_cast<size_t>(p[i])] = static_cast<int>(i);
  return out;
}

int perm_order(const Perm& p) {
  check_perm(p);
  long out = 1;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = static_cast<size_t>(p[j]);
      ++len;
    }
    out = std::lcm(out, static_cast<long>(len));
  }
  return static_cast<int>(out);
}

bool perm_is_even(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  int transpositions = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = static_cast<size_t>(p[j]);
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

int CycleType::degree() const {
  int s = 0;
  for (int e : parts) s += e;
  return s;
}

std::string CycleType::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  os << ")";
  return os.str();
}

CycleType make_cycle_type(std::vector<int> parts) {
  for (int e : parts)
    if (e <= 0) throw value_error("cycle type parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return CycleType{std::move(parts)};
}

CycleType cycle_type_of(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  std::vector<int> parts;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = static_cast<size_t>(p[j]);
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return CycleType{std::move(parts)};
}

Perm canonical_of_type(const CycleType& t) {
  Perm p(static_cast<size_t>(t.degree()));
  int base = 0;
  for (int len : t.parts) {
    for (int i = 0; i < len; ++i)
      p[static_cast<size_t>(base + i)] = base + (i + 1) % len;
    base += len;
  }
  return p;
}

bool triple_is_valid(const PermutationTriple& t) {
  if (t.s0.size() != t.s1.size() || t.s0.size() != t.sinf.size()) return false;
  if (t.s0.empty()) return false;
  check_perm(t.s0);
  check_perm(t.s1);
  check_perm(t.sinf);
  Perm prod = perm_compose(perm_compose(t.s0, t.s1), t.sinf);
  if (prod != perm_identity(static_cast<int>(t.s0.size()))) return false;
  return transitive_pair(t.s0, t.s1);
}

std::vector<PermutationTriple> triples_with_types(const CycleType& t0,
                                                  const CycleType& t1,
                                                  const CycleType& tinf) {
  int d = t0.degree();
  if (d < 1) throw value_error("cycle types must have positive degree");
  if (t1.degree() != d || tinf.degree() != d)
    throw value_error("cycle types have different degrees");
  if (d > kTripleDegreeCap)
    throw value_error("triple enumeration supports degree at most 8");

  const CycleType* types[3] = {&t0, &t1, &tinf};
  int fix = 0;
  for (int i = 1; i < 3; ++i)
    if (centralizer_order(*types[i]) < centralizer_order(*types[fix])) fix = i;
  int free_pos = (fix == 0) ? 1 : 0;
  int det_pos = 3 - fix - free_pos;

  Perm sfix = canonical_of_type(*types[fix]);
  std::vector<Perm> cent = centralizer_of(sfix);
  std::vector<Perm> candidates = perms_of_type(d, *types[free_pos]);

  auto assemble = [&](const Perm& sfree) -> PermutationTriple {
    Perm sigma[3];
    sigma[fix] = sfix;
    sigma[free_pos] = sfree;
    // product constraint sigma0 sigma1 sigmainf = id determines the third
    if (det_pos == 2)
      sigma[2] = perm_inverse(perm_compose(sigma[0], sigma[1]));
    else if (det_pos == 1)
      sigma[1] = perm_compose(perm_inverse(sigma[0]), perm_inverse(sigma[2]));
    else
      sigma[0] = perm_inverse(perm_compose(sigma[1], sigma[2]));
    return PermutationTriple{sigma[0], sigma[1], sigma[2]};
  };

  std::set<Perm> reps;
  std::vector<PermutationTriple> out;
  for (const Perm& sfree : candidates) {
    PermutationTriple t = assemble(sfree);
    if (!(cycle_type_of(det_pos == 0   ? t.s0
                        : det_pos == 1 ? t.s1
                                       : t.sinf) == *types[det_pos]))
      continue;
    if (!transitive_pair(sfix, sfree)) continue;
    Perm canon = sfree;
    for (const Perm& c : cent) canon = std::min(canon, conjugate(c, sfree));
    if (reps.insert(canon).second) out.push_back(assemble(canon));
  }
  std::sort(out.begin(), out.end(),
            [](const PermutationTriple& x, const PermutationTriple& y) {
              if (x.s0 != y.s0) return x.s0 < y.s0;
              return x.s1 < y.s1;
            });
  return out;
}

GroupId group_of(const PermutationTriple& t) {
  if (!triple_is_valid(t)) throw value_error("invalid permutation triple");
  int d = static_cast<int>(t.s0.size());
  if (d > kClosureDegreeCap)
    throw value_error("group closure supports degree at most 12");

  std::set<Perm> elements{perm_identity(d), t.s0, t.s1, t.sinf};
  std::vector<Perm> frontier(elements.begin(), elements.end());
  std::vector<Perm> gens{t.s0, t.s1, t.sinf};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier) {
      for (const Perm& g : gens) {
        Perm y = perm_compose(x, g);
        if (elements.insert(y).second) next.push_back(std::move(y));
        if (elements.size() > kClosureSizeCap)
          throw value_error("group closure exceeds supported size");
      }
    }
    frontier = std::move(next);
  }

  GroupId id;
  id.order = static_cast<long>(elements.size());
  id.all_even =
      perm_is_even(t.s0) && perm_is_even(t.s1) && perm_is_even(t.sinf);
  id.abelian = true;
  for (const Perm& a : gens) {
    for (const Perm& b : gens)
      if (perm_compose(a, b) != perm_compose(b, a)) id.abelian = false;
  }

  std::map<int, int> order_profile;
  int max_order = 1;
  for (const Perm& g : elements) {
    int o = perm_order(g);
    order_profile[o] += 1;
    max_order = std::max(max_order, o);
  }

  auto is_dihedral = [&]() -> bool {
    if (id.order < 4 || id.order % 2 != 0) return false;
    long n = id.order / 2;
    for (const Perm& r : elements) {
      if (perm_order(r) != static_cast<int>(n)) continue;
      std::set<Perm> rot;
      Perm x = perm_identity(d);
      for (long i = 0; i < n; ++i) {
        rot.insert(x);
        x = perm_compose(x, r);
      }
      for (const Perm& s : elements) {
        if (rot.count(s)) continue;
        if (perm_order(s) != 2) continue;
        if (perm_order(perm_compose(s, r)) == 2) return true;
      }
      return false;
    }
    return false;
  };

  std::ostringstream label;
  if (max_order == id.order) {
    label << "Z/" << id.order;
  } else if (id.order == 12 && !id.abelian &&
             order_profile == std::map<int, int>{{1, 1}, {2, 3}, {3, 8}}) {
    label << "A4";
  } else if (id.order == 24 && !id.abelian &&
             order_profile ==
                 std::map<int, int>{{1, 1}, {2, 9}, {3, 8}, {4, 6}}) {
    label << "S4";
  } else if (is_dihedral()) {
    label << "D" << id.order;
  } else {
    label << "order " << id.order;
  }
  id.label = label.str();
  return id;
}

long riemann_hurwitz_genus(int d, const CycleType& t0, const CycleType& t1,
                           const CycleType& tinf) {
  if (d < 1) throw value_error("degree must be positive");
  for (const CycleType* t : {&t0, &t1, &tinf})
    if (t->degree() != d) throw value_error("cycle type does not partition the degree");
  long b = 0;
  for (const CycleType* t : {&t0, &t1, &tinf})
    for (int e : t->parts) b += e - 1;
  long two_g_minus_2 = -2 * static_cast<long>(d) + b;
  if (two_g_minus_2 % 2 != 0 || two_g_minus_2 < -2)
    throw value_error("no such cover");
  return (two_g_minus_2 + 2) / 2;
}

long galois_closure_genus(const PermutationTriple& t) {
  GroupId g = group_of(t);
  long n = g.order;
  long two_g_minus_2 = n;
  for (const Perm* s : {&t.s0, &t.s1, &t.sinf}) {
    int e = perm_order(*s);
    two_g_minus_2 -= n / e;
  }
  if (two_g_minus_2 % 2 != 0 || two_g_minus_2 < -2)
    throw value_error("no such cover");
  return (two_g_minus_2 + 2) / 2;
}

bool BasePoint::operator==(const BasePoint& o) const {
  if (infinite != o.infinite) return false;
  if (infinite) return true;
  return value == o.value;
}

std::string BasePoint::str() const {
  return infinite ? std::string("inf") : value.str();
}

int RationalMap::degree() const {
  return std::max(uni_degree(num), uni_degree(den));
}

RationalMap make_rational_map(UniPoly num, UniPoly den, FieldPtr field) {
  num = uni_trim(std::move(num));
  den = uni_trim(std::move(den));
  if (den.empty()) throw value_error("zero denominator polynomial");
  if (num.empty()) {
    den = {NFElement::one(field)};
  } else {
    UniPoly g = uni_gcd(num, den);
    if (uni_degree(g) > 0) {
      num = uni_divmod(num, g).first;
      den = uni_divmod(den, g).first;
    }
  }
  return RationalMap{std::move(num), std::move(den), std::move(field)};
}

CycleType ramification_profile(const RationalMap& w, const BasePoint& c) {
  int d = w.degree();
  if (d < 1) throw value_error("constant map has no ramification profile");
  UniPoly p;
  if (c.infinite) {
    p = w.den;
  } else {
    NFElement cv = promote(c.value, w.field);
    p = uni_sub(w.num, uni_scale(w.den, cv));
  }
  p = uni_trim(std::move(p));
  if (p.empty())
    throw value_error("target value collapses the map");
  std::vector<int> parts;
  for (const auto& [mult, deg] : squarefree_multiplicity_profile(p))
    for (int i = 0; i < deg; ++i) parts.push_back(mult);
  int at_inf = d - uni_degree(p);
  if (at_inf > 0) parts.push_back(at_inf);
  return make_cycle_type(std::move(parts));
}

UniPoly weierstrass_discriminant(const WeierstrassModel& m) {
  FieldPtr f = m.field;
  NFElement c4(f, Rat(4)), c27(f, Rat(27)), cm16(f, Rat(-16));
  UniPoly a3 = uni_mul(uni_mul(m.a, m.a), m.a);
  UniPoly b2 = uni_mul(m.b, m.b);
  UniPoly delta = uni_scale(
      uni_add(uni_scale(a3, c4), uni_scale(b2, c27)), cm16);
  delta = uni_trim(std::move(delta));
  if (delta.empty()) throw value_error("discriminant vanishes identically");
  return delta;
}

std::string FiberPlace::str() const {
  std::ostringstream os;
  if (at_infinity) {
    os << "s = inf";
  } else if (degree == 1) {
    NFElement root = (-factor[0]) / factor[1];
    os << "s = " << root.str();
  } else {
    os << "degree " << degree << " factor";
  }
  os << ", ord " << ord << (multiplicative ? ", multiplicative" : ", additive");
  return os.str();
}

std::vector<FiberPlace> weierstrass_fiber_orders(const WeierstrassModel& m) {
  UniPoly delta = weierstrass_discriminant(m);
  int da = uni_degree(m.a);
  int db = uni_degree(m.b);
  int k = 0;
  if (da >= 0) k = std::max(k, (da + 3) / 4);
  if (db >= 0) k = std::max(k, (db + 5) / 6);

  std::vector<FiberPlace> out;
  if (uni_degree(delta) > 0) {
    for (const auto& [mult, q] : squarefree_factors(delta)) {
      FiberPlace place;
      place.factor = q;
      place.degree = uni_degree(q);
      place.ord = mult;
      place.multiplicative =
          !m.a.empty() && uni_degree(uni_gcd(q, m.a)) == 0;
      out.push_back(std::move(place));
    }
    std::sort(out.begin(), out.end(), [](const FiberPlace& x, const FiberPlace& y) {
      if (x.degree != y.degree) return x.degree < y.degree;
      if (x.ord != y.ord) return x.ord > y.ord;
      return std::lexicographical_compare(x.factor.begin(), x.factor.end(),
                                          y.factor.begin(), y.factor.end());
    });
  }
  int ord_inf = 12 * k - uni_degree(delta);
  if (ord_inf > 0) {
    FiberPlace place;
    place.at_infinity = true;
    place.ord = ord_inf;
    place.multiplicative = da == 4 * k;
    out.push_back(std::move(place));
  }
  return out;
}

std::string MoebiusMap::str() const {
  std::ostringstream os;
  os << "s -> (" << a.str() << "*s + " << b.str() << ")/(" << c.str()
     << "*s + " << d.str() << ")";
  return os.str();
}

BasePoint moebius_apply(const MoebiusMap& m, const BasePoint& p) {
  if (p.infinite) {
    if (m.c.is_zero()) return BasePoint::at_infinity();
    return BasePoint::finite(m.a / m.c);
  }
  NFElement den = m.c * p.value + m.d;
  if (den.is_zero()) return BasePoint::at_infinity();
  return BasePoint::finite((m.a * p.value + m.b) / den);
}

bool verify_base_change_automorphism(const WeierstrassModel& m,
                                     const MoebiusMap& sigma,
                                     const RationalMap& u) {
  if ((sigma.a * sigma.d - sigma.b * sigma.c).is_zero())
    throw value_error("degenerate fractional linear map");
  if (uni_trim(u.num).empty()) throw value_error("zero scaling function");

  FieldPtr field = m.field;
  field = common_field(field, sigma.a.field());
  field = common_field(field, u.field);

  UniPoly lin_num{promote(sigma.b, field), promote(sigma.a, field)};
  UniPoly lin_den{promote(sigma.d, field), promote(sigma.c, field)};
  lin_num = uni_trim(std::move(lin_num));
  lin_den = uni_trim(std::move(lin_den));
  UniPoly p = promote_poly(uni_trim(u.num), field);
  UniPoly q = promote_poly(uni_trim(u.den), field);

  auto identity_holds = [&](const UniPoly& coeff, int power) -> bool {
    UniPoly f = promote_poly(coeff, field);
    int n = uni_degree(f);
    UniPoly lhs = uni_mul(compose_homogeneous(f, lin_num, lin_den, field),
                          uni_pow(q, power));
    UniPoly rhs = uni_mul(uni_mul(uni_pow(p, power), f),
                          n >= 0 ? uni_pow(lin_den, n)
                                 : UniPoly{NFElement::one(field)});
    return uni_trim(uni_sub(lhs, rhs)).empty();
  };

  return identity_holds(m.a, 4) && identity_holds(m.b, 6);
}

std::optional<MoebiusMap> fractional_linear_exists(
    const std::vector<std::pair<BasePoint, BasePoint>>& pairs) {
  if (pairs.size() > 4) throw value_error("more than four constraint pairs");
  for (size_t i = 0; i < pairs.size(); ++i)
    for (size_t j = i + 1; j < pairs.size(); ++j)
      if (pairs[i].first == pairs[j].first)
        throw value_error("coincident source points");

  FieldPtr field = NumberField::rationals();
  for (const auto& [x, y] : pairs) {
    if (!x.infinite) field = common_field(field, x.value.field());
    if (!y.infinite) field = common_field(field, y.value.field());
  }
  NFElement zero = NFElement::zero(field);
  NFElement one = NFElement::one(field);

  // unknowns (a, b, c, d) of s -> (a s + b)/(c s + d)
  std::vector<std::vector<NFElement>> rows;
  for (const auto& [x, y] : pairs) {
    std::vector<NFElement> row(4, zero);
    if (x.infinite && y.infinite) {
      row[2] = one;
    } else if (x.infinite) {
      NFElement yv = promote(y.value, field);
      row[0] = one;
      row[2] = -yv;
    } else if (y.infinite) {
      NFElement xv = promote(x.value, field);
      row[2] = xv;
      row[3] = one;
    } else {
      NFElement xv = promote(x.value, field);
      NFElement yv = promote(y.value, field);
      row[0] = xv;
      row[1] = one;
      row[2] = -(yv * xv);
      row[3] = -yv;
    }
    rows.push_back(std::move(row));
  }

  // row reduce, then read off the nullspace
  size_t nrows = rows.size();
  std::vector<int> pivot_col;
  size_t r = 0;
  for (int col = 0; col < 4 && r < nrows; ++col) {
    size_t sel = nrows;
    for (size_t i = r; i < nrows; ++i)
      if (!rows[i][static_cast<size_t>(col)].is_zero()) {
        sel = i;
        break;
      }
    if (sel == nrows) continue;
    std::swap(rows[r], rows[sel]);
    NFElement inv = rows[r][static_cast<size_t>(col)].inverse();
    for (int cc = 0; cc < 4; ++cc)
      rows[r][static_cast<size_t>(cc)] = rows[r][static_cast<size_t>(cc)] * inv;
    for (size_t i = 0; i < nrows; ++i) {
      if (i == r) continue;
      NFElement f = rows[i][static_cast<size_t>(col)];
      if (f.is_zero()) continue;
      for (int cc = 0; cc < 4; ++cc)
        rows[i][static_cast<size_t>(cc)] =
            rows[i][static_cast<size_t>(cc)] - f * rows[r][static_cast<size_t>(cc)];
    }
    pivot_col.push_back(col);
    ++r;
  }

  std::vector<std::vector<NFElement>> basis;
  std::vector<char> is_pivot(4, 0);
  for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = 1;
  for (int free_col = 0; free_col < 4; ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    std::vector<NFElement> v(4, zero);
    v[static_cast<size_t>(free_col)] = one;
    for (size_t i = 0; i < pivot_col.size(); ++i)
      v[static_cast<size_t>(pivot_col[i])] =
          -rows[i][static_cast<size_t>(free_col)];
    basis.push_back(std::move(v));
  }

  auto det_of = [](const std::vector<NFElement>& v) {
    return v[0] * v[3] - v[1] * v[2];
  };
  auto to_map = [](const std::vector<NFElement>& v) {
    std::vector<NFElement> w = v;
    for (const NFElement& x : v) {
      if (!x.is_zero()) {
        NFElement inv = x.inverse();
        for (NFElement& y : w) y = y * inv;
        break;
      }
    }
    return MoebiusMap{w[0], w[1], w[2], w[3]};
  };

  for (const auto& v : basis)
    if (!det_of(v).is_zero()) return to_map(v);
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = i + 1; j < basis.size(); ++j) {
      std::vector<NFElement> v(4, zero);
      for (int c = 0; c < 4; ++c)
        v[static_cast<size_t>(c)] =
            basis[i][static_cast<size_t>(c)] + basis[j][static_cast<size_t>(c)];
      if (!det_of(v).is_zero()) return to_map(v);
    }
  }
  // the determinant is a quadratic form; vanishing on all basis vectors and
  // pairwise sums forces it to vanish on the whole solution space
  return std::nullopt;
}

namespace {

// term array, or {"factors": [{"terms": [...], "pow": n}, ...], "scale": c}
UniPoly poly_spec_from_json(const nlohmann::json& j, const FieldPtr& field) {
  if (j.is_array()) return to_unipoly(multipoly_from_json(j, field), 0);
  UniPoly acc{NFElement::one(field)};
  for (const auto& f : j.at("factors")) {
    UniPoly base = to_unipoly(multipoly_from_json(f.at("terms"), field), 0);
    int power = f.value("pow", 1);
    if (power < 0) throw value_error("negative factor power");
    acc = uni_mul(acc, uni_pow(base, power));
  }
  if (j.contains("scale")) acc = uni_scale(acc, nf_from_json(j.at("scale"), field));
  return uni_trim(std::move(acc));
}

}  // namespace

RationalMap rational_map_from_json(const nlohmann::json& j) {
  try {
    return rational_map_from_json(j, field_from_json(j.at("field")));
  } catch (const nlohmann::json::exception& e) {
    throw value_error(std::string("malformed map: ") + e.what());
  }
}

RationalMap rational_map_from_json(const nlohmann::json& j,
                                   const FieldPtr& field) {
  try {
    UniPoly num = poly_spec_from_json(j.at("num"), field);
    UniPoly den = poly_spec_from_json(j.at("den"), field);
    return make_rational_map(std::move(num), std::move(den), field);
  } catch (const nlohmann::json::exception& e) {
    throw value_error(std::string("malformed map: ") + e.what());
  }
}

WeierstrassModel weierstrass_model_from_json(const nlohmann::json& j) {
  try {
    FieldPtr field = field_from_json(j.at("field"));
    UniPoly a = poly_spec_from_json(j.at("a"), field);
    UniPoly b = poly_spec_from_json(j.at("b"), field);
    return WeierstrassModel{std::move(a), std::move(b), field};
  } catch (const nlohmann::json::exception& e) {
    throw value_error(std::string("malformed model: ") + e.what());
  }
}

BasePoint base_point_from_json(const nlohmann::json& j, const FieldPtr& field) {
  if (j.is_string() && j.get<std::string>() == "inf")
    return BasePoint::at_infinity();
  return BasePoint::finite(nf_from_json(j, field));
}

MoebiusMap moebius_from_json(const nlohmann::json& j, const FieldPtr& field) {
  try {
    return MoebiusMap{
        nf_from_json(j.at("a"), field), nf_from_json(j.at("b"), field),
        nf_from_json(j.at("c"), field), nf_from_json(j.at("d"), field)};
  } catch (const nlohmann::json::exception& e) {
    throw value_error(std::string("malformed map: ") + e.what());
  }
}

}  // namespace k3x
