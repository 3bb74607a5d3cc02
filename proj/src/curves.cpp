#include "k3x/curves.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <utility>

#include "k3x/json_io.hpp"

namespace k3x {

namespace {

// column order for the truncated-monomial linear algebra: graded, then by
// exponent of the first variable; matches GradedLex on (i, j, 0)
int monomial_index(int i, int j) {
  int d = i + j;
  return d * (d + 1) / 2 + i;
}

int monomial_count(int n) { return (n + 1) * (n + 2) / 2; }

using SparseRow = std::vector<std::pair<int, NFElement>>;  // sorted by column

SparseRow row_combine(const SparseRow& r, const NFElement& c,
                      const SparseRow& p) {
  SparseRow out;
  out.reserve(r.size() + p.size());
  size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.push_back(r[i]);
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -(c * p[j].second));
      ++j;
    } else {
      NFElement x = r[i].second - c * p[j].second;
      if (!x.is_zero()) out.emplace_back(r[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

long sparse_rank(std::vector<SparseRow> rows) {
  std::map<int, SparseRow> pivots;
  long rank = 0;
  std::sort(rows.begin(), rows.end(),
            [](const SparseRow& a, const SparseRow& b) {
              return a.size() < b.size();
            });
  for (auto& row : rows) {
    SparseRow cur = std::move(row);
    while (!cur.empty()) {
      auto it = pivots.find(cur.front().first);
      if (it == pivots.end()) break;
      cur = row_combine(cur, cur.front().second, it->second);
    }
    if (cur.empty()) continue;
    NFElement inv = cur.front().second.inverse();
    for (auto& [col, val] : cur) val = val * inv;
    int lead = cur.front().first;
    pivots.emplace(lead, std::move(cur));
    ++rank;
  }
  return rank;
}

int lowest_degree(const MultiPoly& p) {
  int best = -1;
  for (const auto& [e, c] : p.terms()) {
    int d = e[0] + e[1] + e[2];
    if (best < 0 || d < best) best = d;
  }
  return best;
}

// dimension of span(monomials of degree <= n) modulo the truncations of
// all monomial multiples of the generators
long truncated_quotient_dim(const std::vector<MultiPoly>& gens, int n) {
  std::vector<SparseRow> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int ord = lowest_degree(g);
    for (int a = 0; a + ord <= n; ++a) {
      for (int b = 0; a + b + ord <= n; ++b) {
        SparseRow r;
        for (const auto& [e, c] : g.terms()) {
          int i = e[0] + a, j = e[1] + b;
          if (i + j <= n) r.emplace_back(monomial_index(i, j), c);
        }
        if (!r.empty()) rows.push_back(std::move(r));
      }
    }
  }
  return monomial_count(n) - sparse_rank(std::move(rows));
}

long stabilized_dimension(const std::vector<MultiPoly>& gens, int cap,
                          const char* what) {
  long prev1 = -1, prev2 = -2;
  for (int n = 1; n <= cap; ++n) {
    long d = truncated_quotient_dim(gens, n);
    if (d == prev1 && d == prev2 && n > 2 * d) return d;
    prev2 = prev1;
    prev1 = d;
  }
  throw value_error(std::string(what) +
                    " dimension does not stabilize below the degree cap");
}

void check_local_equation(const MultiPoly& f) {
  if (f.is_zero()) throw value_error("zero local equation");
  for (const auto& [e, c] : f.terms()) {
    if (e[2] != 0)
      throw value_error("local equation must use variables 0 and 1 only");
    if (e[0] == 0 && e[1] == 0)
      throw value_error("local equation does not vanish at the origin");
  }
}

NFElement term_coeff(const MultiPoly& p, const Exp& e) {
  auto it = p.terms().find(e);
  if (it == p.terms().end()) return NFElement::zero(p.field());
  return it->second;
}

// the two indices other than chart, in increasing order
std::pair<int, int> other_indices(int chart) {
  int a = chart == 0 ? 1 : 0;
  int b = chart == 2 ? 1 : 2;
  return {a, b};
}

MultiPoly promote_multipoly(const MultiPoly& p, const FieldPtr& field) {
  std::vector<std::pair<Exp, NFElement>> terms;
  for (const auto& [e, c] : p.terms()) terms.emplace_back(e, promote(c, field));
  return MultiPoly::from_terms(field, std::move(terms));
}

PlaneCurve line_as_curve(const ProjLine& l) {
  const FieldPtr& field = l[0].field();
  std::vector<std::pair<Exp, NFElement>> terms;
  for (int i = 0; i < 3; ++i) {
    Exp e{0, 0, 0};
    e[i] = 1;
    if (!l[i].is_zero()) terms.emplace_back(e, l[i]);
  }
  return make_plane_curve(MultiPoly::from_terms(field, std::move(terms)));
}

// spanning points of the line: for the first index a with l[a] != 0 and
// each other index j, the point with entry l[a] at j and -l[j] at a
std::pair<std::array<NFElement, 3>, std::array<NFElement, 3>> line_basis(
    const ProjLine& l) {
  const FieldPtr& field = l[0].field();
  int a = -1;
  for (int i = 0; i < 3 && a < 0; ++i)
    if (!l[i].is_zero()) a = i;
  if (a < 0) throw value_error("zero line");
  auto [j1, j2] = other_indices(a);
  std::array<NFElement, 3> u{NFElement::zero(field), NFElement::zero(field),
                             NFElement::zero(field)};
  std::array<NFElement, 3> v = u;
  u[a] = -l[j1];
  u[j1] = l[a];
  v[a] = -l[j2];
  v[j2] = l[a];
  return {u, v};
}

// restriction of the curve along u + t v as a polynomial in t
UniPoly restrict_to_line(const PlaneCurve& c,
                         const std::array<NFElement, 3>& u,
                         const std::array<NFElement, 3>& v) {
  const FieldPtr& field = c.field();
  std::vector<MultiPoly> images;
  MultiPoly t = MultiPoly::variable(0, field);
  for (int i = 0; i < 3; ++i)
    images.push_back(MultiPoly::constant(u[i]) + t * v[i]);
  return to_unipoly(c.poly.substitute(images), 0);
}

UniPoly reduce_mod(const UniPoly& a, const UniPoly& q) {
  if (uni_degree(a) < uni_degree(q)) return a;
  return uni_divmod(a, q).second;
}

// evaluate at the point whose coordinates are polynomials in t, modulo q
UniPoly eval_mod(const MultiPoly& p, const std::array<UniPoly, 3>& xs,
                 const UniPoly& q) {
  const FieldPtr& field = p.field();
  std::array<std::vector<UniPoly>, 3> pows;
  for (int v = 0; v < 3; ++v) pows[v].push_back(UniPoly{NFElement::one(field)});
  auto power = [&](int v, int e) -> const UniPoly& {
    while (static_cast<int>(pows[v].size()) <= e)
      pows[v].push_back(reduce_mod(uni_mul(pows[v].back(), xs[v]), q));
    return pows[v][e];
  };
  UniPoly acc;
  for (const auto& [e, c] : p.terms()) {
    UniPoly term{c};
    for (int v = 0; v < 3; ++v)
      if (e[v] > 0) term = reduce_mod(uni_mul(term, power(v, e[v])), q);
    acc = uni_add(acc, term);
  }
  return reduce_mod(acc, q);
}

// rational row reduction that remembers how each stored row was built
// from the inserted ones
class TrackedEchelon {
 public:
  TrackedEchelon(size_t width, size_t tracks)
      : width_(width), tracks_(tracks) {}

  // insert the next row; returns the dependency coefficients over the
  // previously inserted rows when the row is dependent, nullopt otherwise
  std::optional<std::vector<Rat>> insert(const std::vector<Rat>& data) {
    std::vector<Rat> row = data;
    std::vector<Rat> track(tracks_, Rat(0));
    track[inserted_] = 1;
    reduce(row, track);
    size_t lead = lead_of(row);
    if (lead == width_) {
      std::vector<Rat> dep(track.begin(), track.begin() + inserted_ + 1);
      ++inserted_;
      return dep;
    }
    Rat inv = 1 / row[lead];
    for (auto& x : row) x *= inv;
    for (auto& x : track) x *= inv;
    pivots_[lead] = {std::move(row), std::move(track)};
    ++inserted_;
    return std::nullopt;
  }

  // express a probe vector over the inserted rows; nullopt if outside the span
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& data) const {
    std::vector<Rat> row = data;
    std::vector<Rat> combo(tracks_, Rat(0));
    for (const auto& [lead, pr] : pivots_) {
      if (row[lead] == 0) continue;
      Rat c = row[lead];
      for (size_t k = 0; k < width_; ++k) row[k] -= c * pr.first[k];
      for (size_t k = 0; k < tracks_; ++k) combo[k] += c * pr.second[k];
    }
    if (lead_of(row) != width_) return std::nullopt;
    combo.resize(inserted_);
    return combo;
  }

 private:
  void reduce(std::vector<Rat>& row, std::vector<Rat>& track) const {
    for (const auto& [lead, pr] : pivots_) {
      if (row[lead] == 0) continue;
      Rat c = row[lead];
      for (size_t k = 0; k < width_; ++k) row[k] -= c * pr.first[k];
      for (size_t k = 0; k < tracks_; ++k) track[k] -= c * pr.second[k];
    }
  }

  size_t lead_of(const std::vector<Rat>& row) const {
    for (size_t k = 0; k < width_; ++k)
      if (row[k] != 0) return k;
    return width_;
  }

  size_t width_, tracks_;
  size_t inserted_ = 0;
  std::map<size_t, std::pair<std::vector<Rat>, std::vector<Rat>>> pivots_;
};

std::vector<Rat> flatten_pair(const UniPoly& el, int base_degree) {
  std::vector<Rat> out(2 * base_degree, Rat(0));
  for (size_t part = 0; part < 2; ++part) {
    if (el.size() <= part) continue;
    const auto& coeffs = el[part].coeffs();
    for (int i = 0; i < base_degree; ++i)
      out[part * base_degree + i] = coeffs[i];
  }
  return out;
}

NFElement map_through(const NFElement& x, const FieldPtr& big,
                      const NFElement& base_gen) {
  const auto& coeffs = x.coeffs();
  NFElement acc = NFElement::zero(big);
  for (size_t i = coeffs.size(); i-- > 0;)
    acc = acc * base_gen + NFElement(big, coeffs[i]);
  return acc;
}

std::string render_config(const std::vector<int>& cfg) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < cfg.size(); ++i) {
    if (i) os << ",";
    os << cfg[i];
  }
  os << "]";
  return os.str();
}

ProjLine line_from_json(const nlohmann::json& j, const FieldPtr& field) {
  if (!j.is_array() || j.size() != 3)
    throw value_error("line wants three coefficients");
  return ProjLine{nf_from_json(j[0], field), nf_from_json(j[1], field),
                  nf_from_json(j[2], field)};
}

}  // namespace

ProjPoint ProjPoint::make(NFElement a, NFElement b, NFElement c) {
  FieldPtr field = common_field(common_field(a.field(), b.field()), c.field());
  ProjPoint p{{promote(a, field), promote(b, field), promote(c, field)}};
  if (p.coords[0].is_zero() && p.coords[1].is_zero() && p.coords[2].is_zero())
    throw value_error("projective point wants a nonzero coordinate");
  return p;
}

bool ProjPoint::operator==(const ProjPoint& o) const {
  FieldPtr f = common_field(field(), o.field());
  std::array<NFElement, 3> a, b;
  for (int i = 0; i < 3; ++i) {
    a[i] = promote(coords[i], f);
    b[i] = promote(o.coords[i], f);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

std::string ProjPoint::str() const {
  std::ostringstream os;
  os << "[" << coords[0].str() << " : " << coords[1].str() << " : "
     << coords[2].str() << "]";
  return os.str();
}

NFElement line_at(const ProjLine& l, const ProjPoint& p) {
  FieldPtr f = p.field();
  for (int i = 0; i < 3; ++i) f = common_field(f, l[i].field());
  NFElement acc = NFElement::zero(f);
  for (int i = 0; i < 3; ++i)
    acc = acc + promote(l[i], f) * promote(p.coords[i], f);
  return acc;
}

PlaneCurve make_plane_curve(MultiPoly p) {
  if (p.is_zero()) throw value_error("zero curve");
  if (!p.is_homogeneous()) throw value_error("curve wants a homogeneous polynomial");
  int d = p.total_degree();
  return PlaneCurve{std::move(p), d};
}

bool on_curve(const PlaneCurve& c, const ProjPoint& p) {
  FieldPtr f = common_field(c.field(), p.field());
  MultiPoly poly = promote_multipoly(c.poly, f);
  std::vector<NFElement> at{promote(p.coords[0], f), promote(p.coords[1], f),
                            promote(p.coords[2], f)};
  return poly.evaluate(at).is_zero();
}

bool is_singular_at(const PlaneCurve& c, const ProjPoint& p) {
  if (!on_curve(c, p)) throw value_error("point is not on the curve");
  FieldPtr f = common_field(c.field(), p.field());
  MultiPoly poly = promote_multipoly(c.poly, f);
  std::vector<NFElement> at{promote(p.coords[0], f), promote(p.coords[1], f),
                            promote(p.coords[2], f)};
  for (int v = 0; v < 3; ++v)
    if (!poly.derivative(v).evaluate(at).is_zero()) return false;
  return true;
}

MultiPoly localize_at(const PlaneCurve& c, const ProjPoint& p) {
  FieldPtr f = common_field(c.field(), p.field());
  MultiPoly poly = promote_multipoly(c.poly, f);
  std::array<NFElement, 3> at{promote(p.coords[0], f), promote(p.coords[1], f),
                              promote(p.coords[2], f)};
  int chart = -1;
  for (int i = 0; i < 3 && chart < 0; ++i)
    if (!at[i].is_zero()) chart = i;
  auto [j1, j2] = other_indices(chart);
  std::vector<MultiPoly> images(3, MultiPoly(f));
  images[chart] = MultiPoly::constant(at[chart]);
  images[j1] = MultiPoly::constant(at[j1]) + MultiPoly::variable(0, f);
  images[j2] = MultiPoly::constant(at[j2]) + MultiPoly::variable(1, f);
  return poly.substitute(images);
}

long milnor_number(const MultiPoly& f_local, int degree_cap) {
  check_local_equation(f_local);
  std::vector<MultiPoly> gens{f_local.derivative(0), f_local.derivative(1)};
  return stabilized_dimension(gens, degree_cap, "local algebra");
}

LocalClassification ade_classify(const MultiPoly& f_local, int degree_cap) {
  check_local_equation(f_local);
  const FieldPtr& f = f_local.field();
  if (!term_coeff(f_local, {1, 0, 0}).is_zero() ||
      !term_coeff(f_local, {0, 1, 0}).is_zero())
    throw value_error("local equation is not singular at the origin");
  long mu = milnor_number(f_local, degree_cap);
  NFElement c20 = term_coeff(f_local, {2, 0, 0});
  NFElement c11 = term_coeff(f_local, {1, 1, 0});
  NFElement c02 = term_coeff(f_local, {0, 2, 0});
  NFElement four(f, Rat(4));
  NFElement det = four * c20 * c02 - c11 * c11;
  int corank;
  if (!det.is_zero())
    corank = 0;
  else if (!c20.is_zero() || !c11.is_zero() || !c02.is_zero())
    corank = 1;
  else
    corank = 2;
  if (corank == 0) {
    if (mu != 1) throw value_error("nondegenerate point with dimension above one");
    return {1, 0, "A1"};
  }
  if (corank == 1) {
    if (mu < 2) throw value_error("degenerate point with dimension below two");
    return {mu, 1, "A" + std::to_string(mu)};
  }
  UniPoly cubic;
  for (int i = 3; i >= 0; --i)
    cubic.push_back(term_coeff(f_local, {i, 3 - i, 0}));
  std::reverse(cubic.begin(), cubic.end());
  cubic = uni_trim(std::move(cubic));
  if (cubic.empty()) throw value_error("not a simple singularity");
  std::vector<int> parts;
  if (uni_degree(cubic) >= 1)
    for (const auto& [mult, deg] : squarefree_multiplicity_profile(cubic))
      parts.insert(parts.end(), deg, mult);
  if (3 - uni_degree(cubic) > 0) parts.push_back(3 - uni_degree(cubic));
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  if (parts == std::vector<int>{1, 1, 1}) {
    if (mu != 4) throw value_error("three tangent lines with dimension away from four");
    return {4, 2, "D4"};
  }
  if (parts == std::vector<int>{2, 1}) {
    if (mu < 5) throw value_error("repeated tangent line with dimension below five");
    return {mu, 2, "D" + std::to_string(mu)};
  }
  if (mu >= 6 && mu <= 8) return {mu, 2, "E" + std::to_string(mu)};
  throw value_error("not a simple singularity");
}

long intersection_multiplicity(const PlaneCurve& c, const PlaneCurve& d,
                               const ProjPoint& p, int degree_cap) {
  FieldPtr f = common_field(common_field(c.field(), d.field()), p.field());
  PlaneCurve cc{promote_multipoly(c.poly, f), c.degree};
  PlaneCurve dd{promote_multipoly(d.poly, f), d.degree};
  ProjPoint pp{{promote(p.coords[0], f), promote(p.coords[1], f),
                promote(p.coords[2], f)}};
  std::vector<MultiPoly> gens{localize_at(cc, pp), localize_at(dd, pp)};
  return stabilized_dimension(gens, degree_cap, "intersection ideal");
}

PlaneCurve cremona(CremonaKind kind, const PlaneCurve& c) {
  const FieldPtr& f = c.field();
  MultiPoly x = MultiPoly::variable(0, f);
  MultiPoly y = MultiPoly::variable(1, f);
  MultiPoly z = MultiPoly::variable(2, f);
  std::vector<MultiPoly> images;
  std::vector<int> strips;
  switch (kind) {
    case CremonaKind::standard:
      images = {y * z, x * z, x * y};
      strips = {0, 1, 2};
      break;
    case CremonaKind::tangent:
      images = {y * y, x * y, x * z};
      strips = {0, 1};
      break;
    case CremonaKind::osculating:
      images = {x * x, x * y, y * y - x * z};
      strips = {0};
      break;
  }
  MultiPoly t = c.poly.substitute(images);
  if (t.is_zero()) throw value_error("curve is exceptional for the transformation");
  for (int var : strips) t.strip_variable_power(var);
  if (t.total_degree() <= 0)
    throw value_error("curve is exceptional for the transformation");
  return make_plane_curve(std::move(t));
}

PlaneCurve nodal_cubic(const FieldPtr& field) {
  NFElement one = NFElement::one(field);
  return make_plane_curve(MultiPoly::from_terms(
      field, {{Exp{1, 1, 1}, one}, {Exp{3, 0, 0}, one}, {Exp{0, 3, 0}, -one}}));
}

ProjPoint nodal_cubic_point(const NFElement& t) {
  if (t.is_zero()) throw value_error("parameter must be invertible");
  NFElement one = NFElement::one(t.field());
  return ProjPoint::make(t, t * t, t * t * t - one);
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  FieldPtr f =
      common_field(common_field(a.field(), b.field()), c.field());
  std::array<std::array<NFElement, 3>, 3> m;
  for (int i = 0; i < 3; ++i) {
    m[0][i] = promote(a.coords[i], f);
    m[1][i] = promote(b.coords[i], f);
    m[2][i] = promote(c.coords[i], f);
  }
  NFElement det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                  m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                  m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return det.is_zero();
}

QuadraticExtension extend_by_quadratic(const FieldPtr& base,
                                       const UniPoly& q) {
  if (uni_degree(q) != 2) throw value_error("quadratic factor expected");
  int n = base->degree();
  if (2 * n > 4)
    throw value_error("extension degree exceeds the supported bound");
  UniPoly qm = uni_scale(q, q[2].inverse());
  NFElement gen = NFElement::generator(base);
  for (long ctry : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 4L, -4L, 5L, -5L}) {
    UniPoly gamma{gen * NFElement(base, Rat(ctry)), NFElement::one(base)};
    TrackedEchelon ech(2 * n, 2 * n + 1);
    UniPoly power{NFElement::one(base)};
    std::optional<std::vector<Rat>> dep;
    int k = 0;
    for (; k <= 2 * n; ++k) {
      dep = ech.insert(flatten_pair(power, n));
      if (dep) break;
      power = reduce_mod(uni_mul(power, gamma), qm);
    }
    if (!dep || k < 2 * n) continue;
    std::vector<Rat> minpoly = *dep;  // gamma^(2n) + sum dep_j gamma^j = 0
    FieldPtr big;
    try {
      big = NumberField::make(std::move(minpoly));
    } catch (const value_error&) {
      throw value_error("factor is not irreducible over the base field");
    }
    UniPoly base_in_pair{gen};
    auto combo = ech.solve(flatten_pair(base_in_pair, n));
    if (!combo) continue;
    std::vector<Rat> coords(2 * n, Rat(0));
    for (size_t i = 0; i < combo->size() && i < coords.size(); ++i)
      coords[i] = (*combo)[i];
    NFElement base_gen(big, std::move(coords));
    NFElement root = NFElement::generator(big) -
                     base_gen * NFElement(big, Rat(ctry));
    return {big, base_gen, root};
  }
  throw value_error("no primitive element found for the extension");
}

PairCertificate classify_conjugate_pair(const PlaneCurve& c,
                                        const ProjLine& line,
                                        int degree_cap) {
  FieldPtr f = c.field();
  for (int i = 0; i < 3; ++i) f = common_field(f, line[i].field());
  ProjLine l{promote(line[0], f), promote(line[1], f), promote(line[2], f)};
  PlaneCurve curve{promote_multipoly(c.poly, f), c.degree};
  auto [u, v] = line_basis(l);
  UniPoly g = restrict_to_line(curve, u, v);
  if (g.empty()) throw value_error("line is a component of the curve");
  UniPoly q;
  int found = 0;
  for (const auto& [mult, factor] : squarefree_factors(g)) {
    if (mult >= 2 && uni_degree(factor) == 2) {
      q = factor;
      ++found;
    }
  }
  if (found != 1)
    throw value_error("no unique conjugate-pair factor on the line");

  // joint checks in base[t]/(q) at the two points u + t v
  std::array<UniPoly, 3> xs;
  for (int i = 0; i < 3; ++i) xs[i] = uni_trim(UniPoly{u[i], v[i]});
  if (!eval_mod(curve.poly, xs, q).empty())
    throw value_error("pair points are not on the curve");
  for (int var = 0; var < 3; ++var)
    if (!eval_mod(curve.poly.derivative(var), xs, q).empty())
      throw value_error("pair points are not singular");

  // Hessian of the affine chart where the basis keeps a constant coordinate
  int a = -1;
  for (int i = 0; i < 3 && a < 0; ++i)
    if (!l[i].is_zero()) a = i;
  auto [j1, j2] = other_indices(a);
  MultiPoly aff = curve.poly.substitute_var(j1, MultiPoly::constant(l[a]));
  MultiPoly faa = aff.derivative(a).derivative(a);
  MultiPoly fbb = aff.derivative(j2).derivative(j2);
  MultiPoly fab = aff.derivative(a).derivative(j2);
  UniPoly haa = eval_mod(faa, xs, q);
  UniPoly hbb = eval_mod(fbb, xs, q);
  UniPoly hab = eval_mod(fab, xs, q);
  UniPoly hdet = reduce_mod(
      uni_sub(uni_mul(haa, hbb), uni_mul(hab, hab)), q);
  if (!hdet.empty()) {
    UniPoly common = uni_gcd(hdet, q);
    if (uni_degree(common) == 1)
      throw value_error("pair factor splits over the base field");
    return {q, 1, 0, "A1"};
  }

  // degenerate pair: classify one representative over the extension
  QuadraticExtension ext = extend_by_quadratic(f, q);
  std::vector<std::pair<Exp, NFElement>> big_terms;
  for (const auto& [e, coeff] : curve.poly.terms())
    big_terms.emplace_back(e, map_through(coeff, ext.field, ext.base_gen));
  PlaneCurve big{MultiPoly::from_terms(ext.field, std::move(big_terms)),
                 curve.degree};
  std::array<NFElement, 3> rep;
  for (int i = 0; i < 3; ++i)
    rep[i] = map_through(u[i], ext.field, ext.base_gen) +
             ext.root * map_through(v[i], ext.field, ext.base_gen);
  ProjPoint p{{rep[0], rep[1], rep[2]}};
  if (!is_singular_at(big, p))
    throw value_error("pair representative is not singular");
  LocalClassification lc = ade_classify(localize_at(big, p), degree_cap);
  return {q, lc.milnor, lc.hessian_corank, lc.ade_type};
}

std::vector<int> preferred_pencil_config(
    const std::vector<std::pair<int, bool>>& a_points) {
  int on = 0;
  for (const auto& [k, t] : a_points) on += t ? 1 : 0;
  if (on != 1)
    throw value_error("exactly one singular point must lie on the tangent line");
  if (a_points.size() > 6) throw value_error("too many fibers");
  std::vector<int> out;
  for (const auto& [k, t] : a_points) out.push_back(t ? k + 7 : k + 1);
  while (out.size() < 6) out.push_back(1);
  std::sort(out.begin(), out.end());
  return out;
}

bool CurveReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string CurveReport::str() const {
  std::ostringstream os;
  os << name << ":\n";
  for (const auto& c : checks)
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.label << ": "
       << c.details << "\n";
  return os.str();
}

PlaneCurve plane_curve_from_json(const nlohmann::json& entry) {
  try {
    FieldPtr field = field_from_json(entry.at("field"));
    return make_plane_curve(multipoly_from_json(entry.at("poly"), field));
  } catch (const nlohmann::json::exception& e) {
    throw value_error(std::string("malformed curve entry: ") + e.what());
  }
}

ProjPoint proj_point_from_json(const nlohmann::json& j,
                               const FieldPtr& field) {
  if (!j.is_array() || j.size() != 3)
    throw value_error("point wants three coordinates");
  return ProjPoint::make(nf_from_json(j[0], field), nf_from_json(j[1], field),
                         nf_from_json(j[2], field));
}

CurveReport verify_catalog_entry(const nlohmann::json& entry) {
  CurveReport rep;
  rep.name = entry.at("name").get<std::string>();
  auto add = [&rep](const std::string& label, bool pass,
                    const std::string& details) {
    rep.checks.push_back({label, pass, details});
  };

  PlaneCurve curve = plane_curve_from_json(entry);
  int want_degree = entry.at("degree").get<int>();
  add("curve-shape", curve.degree == want_degree,
      "homogeneous of degree " + std::to_string(curve.degree));
  const auto& claims = entry.at("claims");

  {
    ProjLine nc = line_from_json(claims.at("not_component_line"), curve.field());
    auto [u, v] = line_basis(nc);
    bool nonzero = !restrict_to_line(curve, u, v).empty();
    add("not-a-component", nonzero,
        nonzero ? "stated line does not divide the curve"
                : "stated line divides the curve");
  }

  struct Certified {
    std::string type;
    bool is_pair = false;
    ProjPoint point{{NFElement(Rat(1)), NFElement(), NFElement()}};
    ProjLine pair_line{};
    UniPoly pair_factor;
    long milnor = 0;
  };
  std::vector<Certified> certified;
  std::optional<ProjLine> tangent;
  bool sing_ok = true;

  for (const auto& sj : claims.at("singularities")) {
    std::string want = sj.at("type").get<std::string>();
    if (sj.contains("point")) {
      ProjPoint p = proj_point_from_json(sj.at("point"), curve.field());
      std::string label = "singularity " + p.str();
      try {
        if (!on_curve(curve, p)) throw value_error("point is not on the curve");
        if (!is_singular_at(curve, p)) throw value_error("point is not singular");
        LocalClassification lc = ade_classify(localize_at(curve, p));
        bool pass = lc.ade_type == want;
        add(label, pass,
            "type " + lc.ade_type + ", milnor " + std::to_string(lc.milnor) +
                ", corank " + std::to_string(lc.hessian_corank) +
                (pass ? "" : ", claimed " + want));
        sing_ok = sing_ok && pass;
        Certified cert;
        cert.type = lc.ade_type;
        cert.point = p;
        cert.milnor = lc.milnor;
        certified.push_back(std::move(cert));
      } catch (const value_error& e) {
        add(label, false, e.what());
        sing_ok = false;
      }
      if (sj.contains("tangent")) {
        ProjLine t = line_from_json(sj.at("tangent"), curve.field());
        std::string tlabel = "tangent at " + p.str();
        try {
          bool through = line_at(t, p).is_zero();
          long im = intersection_multiplicity(curve, line_as_curve(t), p);
          bool pass = through && im >= 4;
          add(tlabel, pass,
              "meets the curve with multiplicity " + std::to_string(im));
          sing_ok = sing_ok && pass;
          if (pass) tangent = t;
        } catch (const value_error& e) {
          add(tlabel, false, e.what());
          sing_ok = false;
        }
      }
    } else {
      ProjLine pl = line_from_json(sj.at("pair_line"), curve.field());
      std::string label = "conjugate pair on " + line_as_curve(pl).poly.str();
      try {
        PairCertificate pc = classify_conjugate_pair(curve, pl);
        bool pass = pc.ade_type == want;
        add(label, pass,
            "type " + pc.ade_type + " at both points, milnor " +
                std::to_string(pc.milnor) +
                (pass ? "" : ", claimed " + want));
        sing_ok = sing_ok && pass;
        Certified cert;
        cert.type = pc.ade_type;
        cert.is_pair = true;
        cert.pair_line = pl;
        cert.pair_factor = pc.factor;
        cert.milnor = pc.milnor;
        certified.push_back(std::move(cert));
      } catch (const value_error& e) {
        add(label, false, e.what());
        sing_ok = false;
      }
    }
  }

  {
    std::string label = "fiber-configuration";
    std::vector<int> want;
    for (const auto& n : claims.at("config")) want.push_back(n.get<int>());
    if (!sing_ok || !tangent) {
      add(label, false, "singularity certification incomplete");
    } else {
      try {
        std::vector<std::pair<int, bool>> a_points;
        long mu_total = 0;
        for (const auto& cert : certified) {
          mu_total += cert.is_pair ? 2 * cert.milnor : cert.milnor;
          if (cert.type == "E6") continue;
          if (cert.type.empty() || cert.type[0] != 'A')
            throw value_error("fiber bookkeeping wants A-type points");
          int k = std::stoi(cert.type.substr(1));
          if (cert.is_pair) {
            auto [u, v] = line_basis(cert.pair_line);
            NFElement lu = line_at(*tangent, ProjPoint{{u[0], u[1], u[2]}});
            NFElement lv = line_at(*tangent, ProjPoint{{v[0], v[1], v[2]}});
            UniPoly along =
                reduce_mod(uni_trim(UniPoly{lu, lv}), cert.pair_factor);
            bool on_t = along.empty();
            a_points.emplace_back(k, on_t);
            a_points.emplace_back(k, on_t);
          } else {
            a_points.emplace_back(k, line_at(*tangent, cert.point).is_zero());
          }
        }
        std::vector<int> got = preferred_pencil_config(a_points);
        int sum = 0;
        for (int n : got) sum += n;
        bool pass = got == want && sum == 24;
        add(label, pass,
            render_config(got) + (pass ? ", sum 24" : ", claimed " + render_config(want)));
        add("local-dimension-bound", mu_total <= 19,
            "sum of milnor numbers " + std::to_string(mu_total));
      } catch (const value_error& e) {
        add(label, false, e.what());
      }
    }
  }
  return rep;
}

CurveReport verify_cubic_instance(const nlohmann::json& entry) {
  CurveReport rep;
  rep.name = entry.at("name").get<std::string>();
  auto add = [&rep](const std::string& label, bool pass,
                    const std::string& details) {
    rep.checks.push_back({label, pass, details});
  };

  PlaneCurve curve = plane_curve_from_json(entry);
  add("curve-shape", curve.degree == entry.at("degree").get<int>(),
      "homogeneous of degree " + std::to_string(curve.degree));
  const auto& claims = entry.at("claims");
  const FieldPtr& field = curve.field();

  {
    Rat s0 = rat_from_json(claims.at("s_value"));
    int want = claims.at("satisfied_factor").get<int>();
    std::vector<int> vanishing;
    int idx = 0;
    for (const auto& fj : claims.at("constraint_factors")) {
      UniPoly factor;
      for (const auto& cj : fj)
        factor.push_back(NFElement(field, rat_from_json(cj)));
      factor = uni_trim(std::move(factor));
      if (uni_eval(factor, NFElement(field, s0)).is_zero())
        vanishing.push_back(idx);
      ++idx;
    }
    bool pass = vanishing == std::vector<int>{want};
    std::ostringstream os;
    os << "parameter " << rat_str(s0) << " satisfies factor " << want
       << " of the constraint";
    if (!pass) {
      os << "; vanishing factors:";
      for (int k : vanishing) os << " " << k;
    }
    add("constraint-root", pass, os.str());
  }

  {
    ProjPoint dp = proj_point_from_json(claims.at("double_point"), field);
    std::string details;
    bool pass = false;
    try {
      pass = on_curve(curve, dp) && is_singular_at(curve, dp);
      if (pass) {
        LocalClassification lc = ade_classify(localize_at(curve, dp));
        details = "singular of type " + lc.ade_type + " at " + dp.str();
      } else {
        details = "point is not singular";
      }
    } catch (const value_error& e) {
      details = e.what();
    }
    add("double-point", pass, details);
  }

  {
    const auto& pj = claims.at("parametrization_image");
    MultiPoly t = MultiPoly::variable(0, field);
    MultiPoly one = MultiPoly::constant(NFElement::one(field));
    MultiPoly image = curve.poly.substitute({t, t * t, t * t * t - one});
    UniPoly r = to_unipoly(image, 0);
    std::vector<Rat> roots;
    for (const auto& rj : pj.at("value_roots")) roots.push_back(rat_from_json(rj));
    std::vector<int> mults;
    for (const auto& mj : pj.at("value_mults")) mults.push_back(mj.get<int>());
    UniPoly expected{r.empty() ? NFElement::one(field) : r.back()};
    for (size_t i = 0; i < roots.size(); ++i) {
      UniPoly lin{NFElement(field, -roots[i]), NFElement::one(field)};
      for (int k = 0; k < mults[i]; ++k) expected = uni_mul(expected, lin);
    }
    bool shape = !r.empty() && r == expected;
    bool points_match =
        nodal_cubic_point(NFElement(field, roots.at(0))) ==
            proj_point_from_json(pj.at("q_mult5"), field) &&
        nodal_cubic_point(NFElement(field, roots.at(1))) ==
            proj_point_from_json(pj.at("qprime_mult4"), field);
    add("parametrization-image", shape && points_match,
        shape ? "restriction to the nodal cubic vanishes only at the stated parameters"
              : "restriction does not match the stated root pattern");
  }

  {
    const auto& aj = claims.at("aligned");
    ProjPoint a = proj_point_from_json(aj.at(0), field);
    ProjPoint b = proj_point_from_json(aj.at(1), field);
    ProjPoint c = proj_point_from_json(aj.at(2), field);
    bool pass = collinear(a, b, c);
    add("aligned", pass,
        a.str() + ", " + b.str() + ", " + c.str() +
            (pass ? " are collinear" : " are not collinear"));
  }
  return rep;
}

}  // namespace k3x
