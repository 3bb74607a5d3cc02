#include "k3x/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace k3x {

Lattice::Lattice(IntMatrix g, std::vector<std::string> names)
    : gram(std::move(g)), labels(std::move(names)) {
  if (!gram.is_symmetric()) throw value_error("gram matrix not symmetric");
  if (gram.rows() > 0 && det(gram) == 0)
    throw value_error("degenerate pairing");
  if (!labels.empty() && static_cast<int>(labels.size()) != gram.rows())
    throw value_error("label count != rank");
}

int Lattice::label_index(const std::string& name) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == name) return static_cast<int>(i);
  throw value_error("unknown basis label: " + name);
}

namespace {

IntMatrix dynkin_gram(int n, const std::vector<std::pair<int, int>>& edges) {
  IntMatrix g(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = -2;
  for (auto [a, b] : edges) {
    g(a, b) = 1;
    g(b, a) = 1;
  }
  return g;
}

}  // namespace

Lattice root_lattice(char kind, int n) {
  std::vector<std::pair<int, int>> edges;
  switch (kind) {
    case 'A':
      if (n < 1) throw value_error("A_n needs n >= 1");
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case 'D':
      if (n < 4) throw value_error("D_n needs n >= 4");
      for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw value_error("E_n needs n in {6,7,8}");
      for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(2, n - 1);
      break;
    default:
      throw value_error("root lattice kind must be A, D or E");
  }
  return Lattice(dynkin_gram(n, edges));
}

Lattice hyperbolic_plane() {
  IntMatrix g(2, 2);
  g(0, 1) = 1;
  g(1, 0) = 1;
  return Lattice(std::move(g));
}

Lattice k3_lattice() {
  Lattice l = hyperbolic_plane();
  l = direct_sum(l, hyperbolic_plane());
  l = direct_sum(l, hyperbolic_plane());
  l = direct_sum(l, root_lattice('E', 8));
  l = direct_sum(l, root_lattice('E', 8));
  return l;
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  int n = a.rank(), m = b.rank();
  IntMatrix g(n + m, n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = a.gram(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(n + i, n + j) = b.gram(i, j);
  std::vector<std::string> labels;
  if (!a.labels.empty() || !b.labels.empty()) {
    labels.resize(static_cast<size_t>(n + m));
    for (int i = 0; i < n; ++i)
      labels[static_cast<size_t>(i)] =
          a.labels.empty() ? "" : a.labels[static_cast<size_t>(i)];
    for (int i = 0; i < m; ++i)
      labels[static_cast<size_t>(n + i)] =
          b.labels.empty() ? "" : b.labels[static_cast<size_t>(i)];
  }
  return Lattice(std::move(g), std::move(labels));
}

Int determinant(const Lattice& l) { return det(l.gram); }

bool is_even(const Lattice& l) {
  for (int i = 0; i < l.rank(); ++i)
    if (l.gram(i, i) % 2 != 0) return false;
  return true;
}

std::pair<int, int> signature(const Lattice& l) {
  QMatrix m = to_rational(l.gram);
  int n = m.rows();
  int pos = 0, neg = 0;
  std::vector<bool> used(static_cast<size_t>(n), false);
  for (int step = 0; step < n; ++step) {
    // prefer a nonzero diagonal pivot among unused indices
    int piv = -1;
    for (int i = 0; i < n; ++i)
      if (!used[static_cast<size_t>(i)] && m(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) {
      // all remaining diagonal zero: find off-diagonal pair and symmetrize
      int a = -1, b = -1;
      for (int i = 0; i < n && a < 0; ++i) {
        if (used[static_cast<size_t>(i)]) continue;
        for (int j = i + 1; j < n; ++j) {
          if (used[static_cast<size_t>(j)]) continue;
          if (m(i, j) != 0) {
            a = i;
            b = j;
            break;
          }
        }
      }
      if (a < 0) break;  // remaining block zero (degenerate, guarded earlier)
      // row/col b added to a gives diagonal entry 2 m(a,b)
      for (int c = 0; c < n; ++c) m(a, c) += m(b, c);
      for (int r = 0; r < n; ++r) m(r, a) += m(r, b);
      piv = a;
    }
    Rat d = m(piv, piv);
    if (d > 0)
      ++pos;
    else
      ++neg;
    used[static_cast<size_t>(piv)] = true;
    // clear the pivot row/column on the unused block
    for (int r = 0; r < n; ++r) {
      if (r == piv || used[static_cast<size_t>(r)] || m(r, piv) == 0) continue;
      Rat f = m(r, piv) / d;
      for (int c = 0; c < n; ++c) m(r, c) -= f * m(piv, c);
      for (int c = 0; c < n; ++c) m(c, r) -= f * m(c, piv);
    }
  }
  return {pos, neg};
}

QMatrix dual_basis(const Lattice& l) { return inverse(to_rational(l.gram)); }

Int FiniteQuadraticForm::group_order() const {
  Int p = 1;
  for (const Int& d : orders) p *= d;
  return p;
}

Rat FiniteQuadraticForm::q_of(const std::vector<Int>& x) const {
  Rat acc(0);
  for (int i = 0; i < ngens(); ++i) {
    acc += Rat(x[static_cast<size_t>(i)] * x[static_cast<size_t>(i)]) *
           q[static_cast<size_t>(i)];
    for (int j = i + 1; j < ngens(); ++j)
      acc += Rat(2 * x[static_cast<size_t>(i)] * x[static_cast<size_t>(j)]) *
             b[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return mod2z(acc);
}

Rat FiniteQuadraticForm::b_of(const std::vector<Int>& x,
                              const std::vector<Int>& y) const {
  Rat acc(0);
  for (int i = 0; i < ngens(); ++i)
    for (int j = 0; j < ngens(); ++j)
      acc += Rat(x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)]) *
             b[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return mod1(acc);
}

bool FiniteQuadraticForm::operator==(const FiniteQuadraticForm& o) const {
  return orders == o.orders && q == o.q && b == o.b;
}

namespace {

// build the invariant-factor presentation from generators of a quotient
// Z^k / R Z^k with known q/b data on the ambient generators
FiniteQuadraticForm canonicalize(
    const IntMatrix& relations,
    const std::function<Rat(const std::vector<Int>&)>& qfun,
    const std::function<Rat(const std::vector<Int>&, const std::vector<Int>&)>&
        bfun) {
  SmithForm f = smith_normal_form(relations);
  int k = relations.rows();
  QMatrix uinv = inverse(to_rational(f.u));
  FiniteQuadraticForm out;
  std::vector<std::vector<Int>> gens;
  for (int i = 0; i < k; ++i) {
    Int d = f.d(i, i);
    if (d <= 1) continue;
    std::vector<Int> g(static_cast<size_t>(k));
    for (int r = 0; r < k; ++r) {
      if (!is_integer(uinv(r, i))) throw value_error("unimodular inverse");
      g[static_cast<size_t>(r)] = uinv(r, i).get_num();
    }
    out.orders.push_back(d);
    gens.push_back(std::move(g));
  }
  int m = static_cast<int>(gens.size());
  out.q.resize(static_cast<size_t>(m));
  out.b.assign(static_cast<size_t>(m),
               std::vector<Rat>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i) {
    out.q[static_cast<size_t>(i)] = qfun(gens[static_cast<size_t>(i)]);
    for (int j = 0; j < m; ++j)
      out.b[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          bfun(gens[static_cast<size_t>(i)], gens[static_cast<size_t>(j)]);
  }
  return out;
}

}  // namespace

Rat pairing(const Lattice& l, const std::vector<Rat>& x,
            const std::vector<Rat>& y) {
  int n = l.rank();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw value_error("vector length does not match lattice rank");
  Rat acc(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      acc += x[static_cast<size_t>(i)] * Rat(l.gram(i, j)) *
             y[static_cast<size_t>(j)];
  return acc;
}

DiscriminantGroup discriminant_group_full(const Lattice& l) {
  if (!is_even(l))
    throw value_error("discriminant form needs an even lattice");
  // L^dual/L = Z^n / G Z^n; SNF UGV = D gives generators col_i(V)/d_i in
  // lattice coordinates
  SmithForm f = smith_normal_form(l.gram);
  int n = l.rank();
  DiscriminantGroup out;
  for (int i = 0; i < n; ++i) {
    Int d = f.d(i, i);
    if (d <= 1) continue;
    std::vector<Rat> v(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) v[static_cast<size_t>(r)] = frac(f.v(r, i), d);
    out.form.orders.push_back(d);
    out.generators.push_back(std::move(v));
  }
  int m = static_cast<int>(out.generators.size());
  out.form.q.resize(static_cast<size_t>(m));
  out.form.b.assign(static_cast<size_t>(m),
                    std::vector<Rat>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i) {
    out.form.q[static_cast<size_t>(i)] = mod2z(
        pairing(l, out.generators[static_cast<size_t>(i)],
                out.generators[static_cast<size_t>(i)]));
    for (int j = 0; j < m; ++j)
      out.form.b[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          mod1(pairing(l, out.generators[static_cast<size_t>(i)],
                       out.generators[static_cast<size_t>(j)]));
  }
  return out;
}

FiniteQuadraticForm discriminant_group(const Lattice& l) {
  return discriminant_group_full(l).form;
}

FiniteQuadraticForm fqf_negate(const FiniteQuadraticForm& f) {
  FiniteQuadraticForm out = f;
  for (Rat& x : out.q) x = mod2z(-x);
  for (auto& row : out.b)
    for (Rat& x : row) x = mod1(-x);
  return out;
}

FiniteQuadraticForm fqf_direct_sum(const FiniteQuadraticForm& a,
                                   const FiniteQuadraticForm& b) {
  int ka = a.ngens(), kb = b.ngens();
  int k = ka + kb;
  FiniteQuadraticForm joined;
  joined.orders.reserve(static_cast<size_t>(k));
  for (const Int& d : a.orders) joined.orders.push_back(d);
  for (const Int& d : b.orders) joined.orders.push_back(d);
  joined.q.resize(static_cast<size_t>(k));
  joined.b.assign(static_cast<size_t>(k), std::vector<Rat>(static_cast<size_t>(k)));
  for (int i = 0; i < ka; ++i) joined.q[static_cast<size_t>(i)] = a.q[static_cast<size_t>(i)];
  for (int i = 0; i < kb; ++i)
    joined.q[static_cast<size_t>(ka + i)] = b.q[static_cast<size_t>(i)];
  for (int i = 0; i < ka; ++i)
    for (int j = 0; j < ka; ++j)
      joined.b[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          a.b[static_cast<size_t>(i)][static_cast<size_t>(j)];
  for (int i = 0; i < kb; ++i)
    for (int j = 0; j < kb; ++j)
      joined.b[static_cast<size_t>(ka + i)][static_cast<size_t>(ka + j)] =
          b.b[static_cast<size_t>(i)][static_cast<size_t>(j)];
  // already an invariant-factor chain?
  bool chain = true;
  for (size_t i = 0; i + 1 < joined.orders.size(); ++i)
    if (joined.orders[i + 1] % joined.orders[i] != 0) chain = false;
  if (chain) return joined;
  IntMatrix rel(k, k);
  for (int i = 0; i < k; ++i) rel(i, i) = joined.orders[static_cast<size_t>(i)];
  return canonicalize(
      rel, [&](const std::vector<Int>& x) { return joined.q_of(x); },
      [&](const std::vector<Int>& x, const std::vector<Int>& y) {
        return joined.b_of(x, y);
      });
}

Int element_order_in_disc(const Lattice& l, const std::vector<Rat>& x) {
  if (static_cast<int>(x.size()) != l.rank())
    throw value_error("coordinate length != rank");
  // dual membership: pairing with each basis vector integral
  for (int i = 0; i < l.rank(); ++i) {
    Rat p(0);
    for (int j = 0; j < l.rank(); ++j)
      p += Rat(l.gram(i, j)) * x[static_cast<size_t>(j)];
    if (!is_integer(p)) throw value_error("vector is not in the dual lattice");
  }
  Int k = 1;
  for (const Rat& c : x)
    mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), c.get_den().get_mpz_t());
  return k;
}

namespace {

using Elt = std::vector<Int>;  // exponents mod orders

Elt add_elt(const Elt& a, const Elt& b, const std::vector<Int>& orders) {
  Elt r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] + b[i];
    mpz_fdiv_r(r[i].get_mpz_t(), r[i].get_mpz_t(), orders[i].get_mpz_t());
  }
  return r;
}

std::vector<Elt> all_elements(const std::vector<Int>& orders) {
  std::vector<Elt> out;
  Elt cur(orders.size(), Int(0));
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == orders.size()) {
      out.push_back(cur);
      return;
    }
    for (Int v = 0; v < orders[i]; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

Int elt_order(const Elt& x, const std::vector<Int>& orders) {
  Int k = 1;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Int g;
    mpz_gcd(g.get_mpz_t(), x[i].get_mpz_t(), orders[i].get_mpz_t());
    Int o = orders[i] / g;
    mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), o.get_mpz_t());
  }
  return k;
}

}  // namespace

std::optional<IntMatrix> fqf_isomorphic(const FiniteQuadraticForm& a,
                                        const FiniteQuadraticForm& b) {
  if (a.group_order() != b.group_order()) return std::nullopt;
  if (a.ngens() == 0) return IntMatrix(0, 0);
  std::vector<Elt> belts = all_elements(b.orders);
  // candidate images per a-generator: matching order and q-value
  std::vector<std::vector<Elt>> candidates(static_cast<size_t>(a.ngens()));
  for (int i = 0; i < a.ngens(); ++i) {
    for (const Elt& e : belts) {
      if (elt_order(e, b.orders) != a.orders[static_cast<size_t>(i)]) continue;
      if (b.q_of(e) != a.q[static_cast<size_t>(i)]) continue;
      candidates[static_cast<size_t>(i)].push_back(e);
    }
    if (candidates[static_cast<size_t>(i)].empty()) return std::nullopt;
  }
  std::vector<Elt> chosen(static_cast<size_t>(a.ngens()));
  // subgroup generated by chosen images must be everything
  auto generates = [&]() {
    std::map<Elt, bool> seen;
    std::vector<Elt> frontier{Elt(b.orders.size(), Int(0))};
    seen[frontier[0]] = true;
    while (!frontier.empty()) {
      Elt cur = frontier.back();
      frontier.pop_back();
      for (const Elt& g : chosen) {
        Elt nxt = add_elt(cur, g, b.orders);
        if (!seen.count(nxt)) {
          seen[nxt] = true;
          frontier.push_back(nxt);
        }
      }
    }
    return Int(static_cast<long>(seen.size())) == b.group_order();
  };
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == a.ngens()) return generates();
    for (const Elt& cand : candidates[static_cast<size_t>(i)]) {
      bool ok = true;
      for (int j = 0; j < i; ++j)
        if (b.b_of(cand, chosen[static_cast<size_t>(j)]) !=
            a.b[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen[static_cast<size_t>(i)] = cand;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  IntMatrix w(b.ngens(), a.ngens());
  for (int j = 0; j < a.ngens(); ++j)
    for (int i = 0; i < b.ngens(); ++i)
      w(i, j) = chosen[static_cast<size_t>(j)][static_cast<size_t>(i)];
  return w;
}

ComplementReport check_complement_duality(const Lattice& l,
                                          const IntMatrix& j1_rows) {
  Int dl = determinant(l);
  if (dl != 1 && dl != -1)
    throw value_error("ambient lattice must be unimodular");
  if (!is_even(l)) throw value_error("ambient lattice must be even");
  int n = l.rank(), k = j1_rows.rows();
  if (j1_rows.cols() != n) throw value_error("sublattice basis width != rank");
  // primitivity: all invariant factors of the basis matrix are 1
  SmithForm sf = smith_normal_form(j1_rows);
  for (int i = 0; i < std::min(k, n); ++i)
    if (sf.d(i, i) != 1) throw value_error("sublattice not primitive");
  // orthogonal complement: integer kernel of M = B*G via SNF; the
  // zero-diagonal columns of V form a basis of the saturated kernel
  IntMatrix m = j1_rows * l.gram;
  SmithForm sm = smith_normal_form(m);
  int r = 0;
  for (int i = 0; i < std::min(k, n); ++i)
    if (sm.d(i, i) != 0) ++r;
  IntMatrix c(n - r, n);
  for (int i = r; i < n; ++i)
    for (int row = 0; row < n; ++row) c(i - r, row) = sm.v(row, i);
  auto restrict_gram = [&](const IntMatrix& basis) {
    return basis * l.gram * basis.transpose();
  };
  ComplementReport rep;
  rep.j1 = Lattice(restrict_gram(j1_rows));
  rep.j2 = Lattice(restrict_gram(c));
  rep.q1 = discriminant_group(rep.j1);
  rep.q2 = discriminant_group(rep.j2);
  rep.groups_isomorphic = rep.q1.orders == rep.q2.orders;
  rep.q_negated = fqf_isomorphic(rep.q1, fqf_negate(rep.q2)).has_value();
  return rep;
}

std::vector<Rat> neg_q_values(const FiniteQuadraticForm& f) {
  std::vector<Rat> out;
  out.reserve(f.q.size());
  for (const Rat& x : f.q) out.push_back(mod2z(-x));
  return out;
}

}  // namespace k3x
