#include "k3x/glue.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace k3x {

namespace {

Int lcm_int(const Int& a, const Int& b) {
  Int g, l;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  l = a / g * b;
  return abs(l);
}

std::vector<Rat> unit_vector(int n, int i) {
  std::vector<Rat> v(static_cast<size_t>(n), Rat(0));
  v[static_cast<size_t>(i)] = 1;
  return v;
}

std::vector<Rat> scale_vec(const std::vector<Rat>& v, const Rat& c) {
  std::vector<Rat> out = v;
  for (Rat& x : out) x *= c;
  return out;
}

std::vector<Rat> add_vec(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> out = a;
  for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

// canonical representative of a dual vector modulo the lattice
std::vector<Rat> mod_lattice(const std::vector<Rat>& v) {
  std::vector<Rat> out = v;
  for (Rat& x : out) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(),
               x.get_den().get_mpz_t());
    x -= Rat(fl);
  }
  return out;
}

bool is_zero_vec(const std::vector<Rat>& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

Extension extend(const GlueSpec& spec) {
  const Lattice& base = spec.base;
  int n = base.rank();
  for (const auto& v : spec.glue_vectors) {
    if (static_cast<int>(v.size()) != n)
      throw value_error("glue vector length does not match the base rank");
    for (int j = 0; j < n; ++j)
      if (!is_integer(pairing(base, v, unit_vector(n, j))))
        throw value_error("glue vector pairs non-integrally with the base");
  }
  for (size_t a = 0; a < spec.glue_vectors.size(); ++a)
    for (size_t b = a; b < spec.glue_vectors.size(); ++b) {
      Rat p = pairing(base, spec.glue_vectors[a], spec.glue_vectors[b]);
      if (!is_integer(p))
        throw value_error("glue vectors pair non-integrally with each other");
      if (a == b && p.get_num() % 2 != 0)
        throw value_error("odd norm glue vector");
    }

  Int d(1);
  for (const auto& v : spec.glue_vectors)
    for (const Rat& x : v) d = lcm_int(d, x.get_den());
  int k = static_cast<int>(spec.glue_vectors.size());
  IntMatrix stacked(n + k, n);
  for (int i = 0; i < n; ++i) stacked(i, i) = d;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) {
      Rat scaled = spec.glue_vectors[static_cast<size_t>(i)]
                                    [static_cast<size_t>(j)] *
                   Rat(d);
      stacked(n + i, j) = scaled.get_num();
    }
  IntMatrix h = hnf_rows(stacked);
  if (h.rows() != n) throw value_error("degenerate glue span");
  QMatrix basis(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) basis(i, j) = frac(h(i, j), d);

  Rat bd = det(basis);
  Rat idx_rat = Rat(1) / abs(bd);
  if (!is_integer(idx_rat)) throw value_error("extension index is not integral");
  Int index = idx_rat.get_num();

  QMatrix gram_rat = basis * to_rational(base.gram) * basis.transpose();
  IntMatrix gram2 = to_integer(gram_rat);
  Extension out{Lattice(std::move(gram2)), std::move(basis), index};
  if (abs(determinant(base)) != index * index * abs(determinant(out.lattice)))
    throw value_error("determinant bookkeeping failed in extend");
  if (!is_even(out.lattice)) throw value_error("odd norm glue vector");
  return out;
}

std::vector<Int> coords_in_extension(const Extension& ext,
                                     const std::vector<Rat>& v) {
  std::vector<Rat> x;
  if (!solve(ext.basis.transpose(), v, x))
    throw value_error("vector is not in the extension span");
  std::vector<Int> out;
  out.reserve(x.size());
  for (const Rat& c : x) {
    if (!is_integer(c)) throw value_error("vector is not in the extension");
    out.push_back(c.get_num());
  }
  return out;
}

Int order_mod_extension(const Extension& ext, const std::vector<Rat>& x) {
  std::vector<Rat> y;
  if (!solve(ext.basis.transpose(), x, y))
    throw value_error("vector is outside the rational span");
  Int ord(1);
  for (const Rat& c : y) ord = lcm_int(ord, c.get_den());
  return ord;
}

PairingReport glue_pairings_check(
    const GlueSpec& spec,
    const std::vector<std::pair<std::string, Rat>>& expected) {
  const Lattice& base = spec.base;
  int n = base.rank();
  auto resolve = [&](const std::string& name) -> std::vector<Rat> {
    if (name == "s") {
      if (spec.glue_vectors.empty())
        throw value_error("no glue vector to pair against");
      return spec.glue_vectors.front();
    }
    return unit_vector(n, base.label_index(name));
  };
  PairingReport report;
  for (const auto& [label, value] : expected) {
    std::vector<Rat> lhs, rhs;
    auto dot = label.find('.');
    if (dot != std::string::npos) {
      lhs = resolve(label.substr(0, dot));
      rhs = resolve(label.substr(dot + 1));
    } else {
      lhs = resolve("s");
      rhs = resolve(label);
    }
    PairingReport::Item item;
    item.label = label;
    item.expected = value;
    item.actual = pairing(base, lhs, rhs);
    item.ok = item.actual == item.expected;
    report.items.push_back(item);
    report.ok = report.ok && item.ok;
  }
  return report;
}

FiniteQuadraticForm disc_of_extension(const Lattice& l) {
  return discriminant_group(l);
}

RootSystemReport roots(const Lattice& l) {
  auto [pos, neg] = signature(l);
  int n = l.rank();
  if (pos != 0 || neg != n)
    throw value_error("root search needs a negative definite lattice");
  if (n > 19) throw value_error("root search supports rank up to 19");

  // -gram is positive definite; decompose as sum_i d_i (x_i + c_i)^2
  QMatrix a = to_rational(l.gram);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = -a(i, j);
  std::vector<Rat> diag(static_cast<size_t>(n));
  QMatrix r = QMatrix::identity(n);
  for (int i = 0; i < n; ++i) {
    diag[static_cast<size_t>(i)] = a(i, i);
    for (int j = i + 1; j < n; ++j) r(i, j) = a(i, j) / a(i, i);
    for (int p = i + 1; p < n; ++p)
      for (int q = i + 1; q < n; ++q)
        a(p, q) -= a(i, p) * a(i, q) / a(i, i);
  }

  std::vector<std::vector<Int>> found;
  std::vector<Int> x(static_cast<size_t>(n), Int(0));
  // descend from the last coordinate with the remaining norm budget
  auto search = [&](auto&& self, int i, const Rat& budget) -> void {
    if (i < 0) {
      if (budget == 0) {
        bool zero = true;
        for (const Int& c : x)
          if (c != 0) zero = false;
        if (!zero) found.push_back(x);
      }
      return;
    }
    Rat center(0);
    for (int j = i + 1; j < n; ++j)
      center += r(i, j) * Rat(x[static_cast<size_t>(j)]);
    Rat neg_center = -center;
    Int start;
    mpz_fdiv_q(start.get_mpz_t(), neg_center.get_num().get_mpz_t(),
               neg_center.get_den().get_mpz_t());
    const Rat& di = diag[static_cast<size_t>(i)];
    for (Int t = start;; t -= 1) {
      Rat off = Rat(t) + center;
      Rat cost = di * off * off;
      if (cost > budget) break;
      x[static_cast<size_t>(i)] = t;
      self(self, i - 1, budget - cost);
    }
    for (Int t = start + 1;; t += 1) {
      Rat off = Rat(t) + center;
      Rat cost = di * off * off;
      if (cost > budget) break;
      x[static_cast<size_t>(i)] = t;
      self(self, i - 1, budget - cost);
    }
    x[static_cast<size_t>(i)] = 0;
  };
  search(search, n - 1, Rat(2));
  std::sort(found.begin(), found.end());

  // connected components of the nonzero-pairing graph
  int m = static_cast<int>(found.size());
  std::vector<int> parent(static_cast<size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  };
  auto pair_int = [&](const std::vector<Int>& u, const std::vector<Int>& v) {
    Int acc(0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        acc += u[static_cast<size_t>(i)] * l.gram(i, j) *
               v[static_cast<size_t>(j)];
    return acc;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (pair_int(found[static_cast<size_t>(i)],
                   found[static_cast<size_t>(j)]) != 0) {
        int a2 = find(i), b2 = find(j);
        if (a2 != b2) parent[static_cast<size_t>(a2)] = b2;
      }
  std::map<int, std::vector<int>> comps;
  for (int i = 0; i < m; ++i) comps[find(i)].push_back(i);

  RootSystemReport report;
  report.roots = found;
  for (const auto& [rep, members] : comps) {
    QMatrix span(static_cast<int>(members.size()), n);
    for (size_t i = 0; i < members.size(); ++i)
      for (int j = 0; j < n; ++j)
        span(static_cast<int>(i), j) =
            Rat(found[static_cast<size_t>(members[i])][static_cast<size_t>(j)]);
    int rk = rank(span);
    int count = static_cast<int>(members.size());
    if (count == rk * (rk + 1))
      report.components.emplace_back('A', rk);
    else if (rk >= 4 && count == 2 * rk * (rk - 1))
      report.components.emplace_back('D', rk);
    else if ((rk == 6 && count == 72) || (rk == 7 && count == 126) ||
             (rk == 8 && count == 240))
      report.components.emplace_back('E', rk);
    else
      throw value_error("root component is not of Dynkin type");
  }
  std::sort(report.components.begin(), report.components.end());
  return report;
}

std::string dynkin_str(const std::vector<std::pair<char, int>>& components) {
  std::string out;
  for (const auto& [kind, rk] : components) {
    if (!out.empty()) out += "+";
    out += kind;
    out += std::to_string(rk);
  }
  if (out.empty()) out = "0";
  return out;
}

namespace {

Int elt_order_mod(const std::vector<Int>& x, const std::vector<Int>& orders) {
  Int ord(1);
  for (size_t i = 0; i < orders.size(); ++i) {
    Int g;
    mpz_gcd(g.get_mpz_t(), x[i].get_mpz_t(), orders[i].get_mpz_t());
    ord = lcm_int(ord, orders[i] / g);
  }
  return ord;
}

std::vector<Int> add_mod(const std::vector<Int>& x, const std::vector<Int>& y,
                         const std::vector<Int>& orders) {
  std::vector<Int> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    out[i] = x[i] + y[i];
    mpz_fdiv_r(out[i].get_mpz_t(), out[i].get_mpz_t(), orders[i].get_mpz_t());
  }
  return out;
}

using EltSet = std::set<std::vector<Int>>;

EltSet close_under(const EltSet& current, const std::vector<Int>& extra,
                   const std::vector<Int>& orders, size_t cap) {
  EltSet out = current;
  std::queue<std::vector<Int>> todo;
  if (out.insert(extra).second) todo.push(extra);
  while (!todo.empty()) {
    std::vector<Int> e = todo.front();
    todo.pop();
    std::vector<std::vector<Int>> snapshot(out.begin(), out.end());
    for (const auto& f : snapshot) {
      std::vector<Int> s = add_mod(e, f, orders);
      if (out.insert(s).second) {
        if (out.size() > cap) return out;
        todo.push(s);
      }
    }
  }
  return out;
}

std::string lattice_key(const IntMatrix& m) {
  std::string key;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      key += m(i, j).get_str();
      key += ',';
    }
  return key;
}

}  // namespace

std::vector<Extension> even_overlattices(const Lattice& base, const Int& n) {
  auto [pos, neg] = signature(base);
  if (pos != 0 && neg != 0)
    throw value_error("overlattice search needs a definite lattice");
  if (n < 1) throw value_error("index must be positive");
  if (n == 1) return {extend(GlueSpec{base, {}})};

  DiscriminantGroup dg = discriminant_group_full(base);
  const std::vector<Int>& orders = dg.form.orders;
  size_t k = orders.size();
  Int total = dg.form.group_order();
  if (total > 20000)
    throw value_error("discriminant group too large for the search");
  if (total % n != 0) return {};

  // all elements killed by n whose q-value is even
  std::vector<std::vector<Int>> candidates;
  std::vector<Int> cursor(k, Int(0));
  while (true) {
    Int ord = elt_order_mod(cursor, orders);
    if (ord > 1 && n % ord == 0 && mod2z(dg.form.q_of(cursor)) == 0)
      candidates.push_back(cursor);
    size_t pos2 = 0;
    while (pos2 < k) {
      cursor[pos2] += 1;
      if (cursor[pos2] < orders[pos2]) break;
      cursor[pos2] = 0;
      ++pos2;
    }
    if (pos2 == k) break;
  }
  std::sort(candidates.begin(), candidates.end());

  size_t n_sz = static_cast<size_t>(n.get_ui());
  std::set<std::vector<std::vector<Int>>> seen_subgroups;
  std::vector<EltSet> isotropic;
  EltSet start;
  start.insert(std::vector<Int>(k, Int(0)));

  auto record = [&](const EltSet& h) {
    std::vector<std::vector<Int>> key(h.begin(), h.end());
    if (!seen_subgroups.insert(key).second) return;
    // every element must have even q-value; generators alone are not
    // enough because cross terms contribute odd multiples of b
    for (const auto& e : h)
      if (mod2z(dg.form.q_of(e)) != 0) return;
    isotropic.push_back(h);
  };

  auto dfs = [&](auto&& self, const EltSet& h, size_t first) -> void {
    if (h.size() == n_sz) {
      record(h);
      return;
    }
    for (size_t i = first; i < candidates.size(); ++i) {
      if (h.count(candidates[i])) continue;
      EltSet grown = close_under(h, candidates[i], orders, n_sz);
      if (grown.size() > n_sz || n_sz % grown.size() != 0) continue;
      self(self, grown, i + 1);
    }
  };
  dfs(dfs, start, 0);

  std::vector<Extension> out;
  std::set<std::string> seen_lattices;
  int rank_n = base.rank();
  for (const EltSet& h : isotropic) {
    GlueSpec spec{base, {}};
    for (const auto& e : h) {
      if (elt_order_mod(e, orders) == 1) continue;
      std::vector<Rat> lift(static_cast<size_t>(rank_n), Rat(0));
      for (size_t i = 0; i < k; ++i)
        lift = add_vec(lift, scale_vec(dg.generators[i], Rat(e[i])));
      spec.glue_vectors.push_back(mod_lattice(lift));
    }
    Extension ext = extend(spec);
    if (ext.index != n)
      throw value_error("subgroup order does not match the extension index");
    QMatrix scaled = ext.basis;
    for (int i = 0; i < scaled.rows(); ++i)
      for (int j = 0; j < scaled.cols(); ++j) scaled(i, j) *= Rat(n);
    std::string key = lattice_key(hnf_rows(to_integer(scaled)));
    if (seen_lattices.insert(key).second) out.push_back(std::move(ext));
  }
  std::sort(out.begin(), out.end(), [](const Extension& a, const Extension& b) {
    return lattice_key(a.lattice.gram) < lattice_key(b.lattice.gram);
  });
  return out;
}

Lattice glue_anti_isometry(const AntiIsometrySpec& spec) {
  const Lattice& s = spec.s;
  int ns = s.rank();
  int nt = spec.t.rows();
  Lattice joined = s;
  std::vector<std::vector<Rat>> glue;

  if (nt > 0) {
    Lattice t(spec.t);
    auto [tp, tn] = signature(t);
    if (tp != nt || !is_even(t))
      throw value_error("transcendental side must be even positive definite");
    if (abs(determinant(s)) != determinant(t))
      throw value_error("determinants of the two sides do not match");
    if (spec.b.rows() != nt || spec.b.cols() != nt ||
        static_cast<int>(spec.eps.size()) != nt)
      throw value_error("generator-image data has the wrong shape");

    QMatrix tinv = inverse(to_rational(t.gram));
    std::vector<std::vector<Rat>> g(static_cast<size_t>(nt)),
        phi(static_cast<size_t>(nt));
    for (int j = 0; j < nt; ++j) {
      g[static_cast<size_t>(j)].resize(static_cast<size_t>(nt));
      for (int i = 0; i < nt; ++i)
        g[static_cast<size_t>(j)][static_cast<size_t>(i)] = tinv(i, j);
    }
    for (int j = 0; j < nt; ++j) {
      std::vector<Rat> img(static_cast<size_t>(ns), Rat(0));
      for (int i = 0; i < nt; ++i)
        img = add_vec(img, scale_vec(spec.eps[static_cast<size_t>(i)],
                                     Rat(spec.b(i, j))));
      phi[static_cast<size_t>(j)] = img;
    }
    for (const auto& e : spec.eps)
      for (int j = 0; j < ns; ++j)
        if (!is_integer(pairing(s, e, unit_vector(ns, j))))
          throw value_error("generator is not a dual vector");

    // relations of the dual generators are the columns of the gram of T;
    // each must map into S for the homomorphism to be well defined
    for (int c = 0; c < nt; ++c) {
      std::vector<Rat> img(static_cast<size_t>(ns), Rat(0));
      for (int j = 0; j < nt; ++j)
        img = add_vec(img, scale_vec(phi[static_cast<size_t>(j)],
                                     Rat(t.gram(j, c))));
      for (const Rat& x : img)
        if (!is_integer(x))
          throw value_error("generator images do not respect the relations");
    }
    for (int i = 0; i < nt; ++i) {
      Rat qs = mod2z(pairing(s, phi[static_cast<size_t>(i)],
                             phi[static_cast<size_t>(i)]));
      Rat qt = mod2z(-pairing(t, g[static_cast<size_t>(i)],
                              g[static_cast<size_t>(i)]));
      if (qs != qt)
        throw value_error("generator images do not negate the quadratic form");
      for (int j = i + 1; j < nt; ++j) {
        Rat bs = mod1(pairing(s, phi[static_cast<size_t>(i)],
                              phi[static_cast<size_t>(j)]));
        Rat bt = mod1(-pairing(t, g[static_cast<size_t>(i)],
                               g[static_cast<size_t>(j)]));
        if (bs != bt)
          throw value_error("generator images do not negate the pairing");
      }
    }
    // bijectivity: the images must generate the whole discriminant group
    std::set<std::vector<Rat>> image;
    image.insert(std::vector<Rat>(static_cast<size_t>(ns), Rat(0)));
    std::queue<std::vector<Rat>> todo;
    for (const auto& p : phi) {
      std::vector<Rat> rep = mod_lattice(p);
      if (image.insert(rep).second) todo.push(rep);
    }
    while (!todo.empty()) {
      std::vector<Rat> e = todo.front();
      todo.pop();
      for (const auto& p : phi) {
        std::vector<Rat> sum = mod_lattice(add_vec(e, p));
        if (image.insert(sum).second) todo.push(sum);
      }
    }
    if (Int(static_cast<long>(image.size())) != abs(determinant(s)))
      throw value_error("generator images miss part of the discriminant group");

    joined = direct_sum(s, t);
    for (int j = 0; j < nt; ++j) {
      std::vector<Rat> v = phi[static_cast<size_t>(j)];
      v.insert(v.end(), g[static_cast<size_t>(j)].begin(),
               g[static_cast<size_t>(j)].end());
      glue.push_back(std::move(v));
    }
  }

  Extension ext = extend(GlueSpec{joined, glue});
  if (abs(determinant(ext.lattice)) != 1)
    throw value_error("glued lattice is not unimodular");
  if (!is_even(ext.lattice)) throw value_error("glued lattice is not even");
  auto [p2, n2] = signature(ext.lattice);
  if (p2 != 3 || n2 != 19)
    throw value_error("glued lattice does not have signature (3,19)");
  return ext.lattice;
}

RootSystemReport fiber_root_classes(const Lattice& l,
                                    const std::vector<Int>& f) {
  int n = l.rank();
  if (static_cast<int>(f.size()) != n)
    throw value_error("fiber class length does not match the lattice rank");
  Int g(0);
  for (const Int& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 1) throw value_error("fiber class must be primitive");
  std::vector<Rat> frat(f.begin(), f.end());
  if (pairing(l, frat, frat) != 0)
    throw value_error("fiber class must be isotropic");

  IntMatrix prow(1, n);
  for (int j = 0; j < n; ++j) {
    Int acc(0);
    for (int i = 0; i < n; ++i) acc += f[static_cast<size_t>(i)] * l.gram(i, j);
    prow(0, j) = acc;
  }
  SmithForm sf = smith_normal_form(prow);
  IntMatrix kern(n - 1, n);
  {
    int row = 0;
    for (int j = 0; j < n; ++j) {
      bool zero = sf.d(0, j) == 0;
      if (j == 0 && sf.d(0, 0) != 0) zero = false;
      if (!zero) continue;
      for (int i = 0; i < n; ++i) kern(row, i) = sf.v(i, j);
      ++row;
    }
    if (row != n - 1) throw value_error("fiber pairing row is degenerate");
  }

  // coordinates of F in the saturated kernel basis
  std::vector<Rat> c;
  if (!solve(to_rational(kern).transpose(), frat, c))
    throw value_error("fiber class escapes its own orthogonal complement");
  IntMatrix crow(1, n - 1);
  for (int i = 0; i < n - 1; ++i) {
    if (!is_integer(c[static_cast<size_t>(i)]))
      throw value_error("fiber class is not integral in the kernel basis");
    crow(0, i) = c[static_cast<size_t>(i)].get_num();
  }
  SmithForm sc = smith_normal_form(crow);
  if (sc.d(0, 0) != 1)
    throw value_error("fiber class is imprimitive in its orthogonal complement");
  IntMatrix w = to_integer(inverse(to_rational(sc.v)));
  bool negated = true;
  for (int i = 0; i < n - 1; ++i)
    if (w(0, i) != crow(0, i)) negated = false;
  if (!negated) {
    for (int i = 0; i < n - 1; ++i) {
      if (w(0, i) != -crow(0, i))
        throw value_error("unimodular completion failed");
      w(0, i) = -w(0, i);
    }
  }

  IntMatrix newbasis = w * kern;
  IntMatrix quot(n - 2, n);
  for (int i = 1; i < n - 1; ++i)
    for (int j = 0; j < n; ++j) quot(i - 1, j) = newbasis(i, j);
  IntMatrix qgram(n - 2, n - 2);
  for (int i = 0; i < n - 2; ++i)
    for (int j = 0; j < n - 2; ++j) {
      Int acc(0);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          acc += quot(i, a) * l.gram(a, b) * quot(j, b);
      qgram(i, j) = acc;
    }
  return roots(Lattice(std::move(qgram)));
}

namespace {

// ADE type with the given rank and determinant, if any
std::optional<std::pair<char, int>> ade_by_rank_det(int rk, const Int& d) {
  if (d == rk + 1) return std::make_pair('A', rk);
  if (rk >= 4 && d == 4) return std::make_pair('D', rk);
  if (rk == 6 && d == 3) return std::make_pair('E', 6);
  if (rk == 7 && d == 2) return std::make_pair('E', 7);
  if (rk == 8 && d == 1) return std::make_pair('E', 8);
  return std::nullopt;
}

void index_assignments(const std::vector<Int>& block_dets, size_t at,
                       const Int& left, std::vector<Int>& current,
                       std::vector<std::vector<Int>>& out) {
  if (at == block_dets.size()) {
    if (left == 1) out.push_back(current);
    return;
  }
  for (Int nb(1); nb * nb <= block_dets[at] || nb <= left; nb += 1) {
    if (nb > left) break;
    if (left % nb != 0) continue;
    if (block_dets[at] % (nb * nb) != 0) continue;
    current.push_back(nb);
    index_assignments(block_dets, at + 1, left / nb, current, out);
    current.pop_back();
  }
}

}  // namespace

CaseReport root_extension_case_analysis(const std::vector<int>& a_ranks,
                                        const Int& n) {
  for (int r : a_ranks)
    if (r < 1)
      throw value_error("unsupported input shape: A-type subscripts only");
  if (a_ranks.empty())
    throw value_error("unsupported input shape: no summands");
  if (n <= 1) throw value_error("extension index must exceed 1");

  CaseReport report;
  report.summands = a_ranks;
  report.index = n;
  int k = static_cast<int>(a_ranks.size());

  // set partitions by restricted growth strings
  std::vector<int> rgs(static_cast<size_t>(k), 0);
  std::set<std::string> seen;
  auto emit = [&](const std::vector<int>& assign) {
    int nblocks = *std::max_element(assign.begin(), assign.end()) + 1;
    std::vector<std::vector<int>> blocks(static_cast<size_t>(nblocks));
    for (int i = 0; i < k; ++i)
      blocks[static_cast<size_t>(assign[static_cast<size_t>(i)])].push_back(i);
    std::vector<Int> dets(static_cast<size_t>(nblocks), Int(1));
    for (int b = 0; b < nblocks; ++b)
      for (int i : blocks[static_cast<size_t>(b)])
        dets[static_cast<size_t>(b)] *= a_ranks[static_cast<size_t>(i)] + 1;

    std::vector<std::vector<Int>> assignments;
    std::vector<Int> scratch;
    index_assignments(dets, 0, n, scratch, assignments);
    for (const auto& idxs : assignments) {
      CaseGrouping grouping;
      grouping.blocks = blocks;
      grouping.block_index = idxs;
      bool consistent = true;
      for (int b = 0; b < nblocks && consistent; ++b) {
        const Int& nb = idxs[static_cast<size_t>(b)];
        if (nb == 1) {
          // unmerged blocks must be singletons to avoid restating finer
          // partitions
          if (blocks[static_cast<size_t>(b)].size() != 1) {
            consistent = false;
            break;
          }
          grouping.targets.emplace_back(
              'A', a_ranks[static_cast<size_t>(
                       blocks[static_cast<size_t>(b)].front())]);
          continue;
        }
        int rk = 0;
        for (int i : blocks[static_cast<size_t>(b)])
          rk += a_ranks[static_cast<size_t>(i)];
        auto target =
            ade_by_rank_det(rk, dets[static_cast<size_t>(b)] / (nb * nb));
        if (!target) {
          consistent = false;
          break;
        }
        grouping.targets.push_back(*target);
      }
      if (!consistent) continue;

      std::string key;
      {
        std::vector<std::string> parts;
        for (int b = 0; b < nblocks; ++b) {
          std::string p;
          std::vector<int> ranks_in;
          for (int i : blocks[static_cast<size_t>(b)])
            ranks_in.push_back(a_ranks[static_cast<size_t>(i)]);
          std::sort(ranks_in.begin(), ranks_in.end());
          for (int rr : ranks_in) p += std::to_string(rr) + ",";
          p += "@" + idxs[static_cast<size_t>(b)].get_str();
          p += "->";
          p += grouping.targets[static_cast<size_t>(b)].first;
          p += std::to_string(grouping.targets[static_cast<size_t>(b)].second);
          parts.push_back(p);
        }
        std::sort(parts.begin(), parts.end());
        for (const auto& p : parts) key += p + ";";
      }
      if (!seen.insert(key).second) continue;

      grouping.search = CaseGrouping::Search::confirmed;
      for (int b = 0; b < nblocks; ++b) {
        const Int& nb = idxs[static_cast<size_t>(b)];
        if (nb == 1) continue;
        Lattice block_lat = root_lattice(
            'A',
            a_ranks[static_cast<size_t>(blocks[static_cast<size_t>(b)][0])]);
        for (size_t i = 1; i < blocks[static_cast<size_t>(b)].size(); ++i)
          block_lat = direct_sum(
              block_lat,
              root_lattice('A', a_ranks[static_cast<size_t>(
                                    blocks[static_cast<size_t>(b)][i])]));
        bool hit = false;
        for (const Extension& ext : even_overlattices(block_lat, nb)) {
          RootSystemReport rs = roots(ext.lattice);
          if (rs.components.size() == 1 &&
              rs.components.front() == grouping.targets[static_cast<size_t>(b)])
            hit = true;
        }
        if (!hit) grouping.search = CaseGrouping::Search::refuted;
      }
      report.consistent.push_back(std::move(grouping));
    }
  };

  // iterate restricted growth strings
  auto next_rgs = [&](std::vector<int>& a) -> bool {
    int kk = static_cast<int>(a.size());
    for (int i = kk - 1; i > 0; --i) {
      int maxprefix = 0;
      for (int j = 0; j < i; ++j) maxprefix = std::max(maxprefix, a[static_cast<size_t>(j)]);
      if (a[static_cast<size_t>(i)] <= maxprefix) {
        a[static_cast<size_t>(i)] += 1;
        for (int j = i + 1; j < kk; ++j) a[static_cast<size_t>(j)] = 0;
        return true;
      }
    }
    return false;
  };
  emit(rgs);
  while (next_rgs(rgs)) emit(rgs);
  return report;
}

namespace {

Lattice labelled_root(char kind, int n, const std::string& stem) {
  Lattice l = root_lattice(kind, n);
  for (int i = 1; i <= n; ++i) l.labels.push_back(stem + std::to_string(i));
  return l;
}

Lattice section_fiber_plane() {
  IntMatrix g(2, 2);
  g(0, 0) = -2;
  g(0, 1) = 1;
  g(1, 0) = 1;
  g(1, 1) = 0;
  return Lattice(std::move(g), {"O", "F"});
}

}  // namespace

GlueSpec s35_spec() {
  Lattice base = section_fiber_plane();
  Lattice a1g = root_lattice('A', 1);
  a1g.labels = {"G"};
  Lattice a1h = root_lattice('A', 1);
  a1h.labels = {"H"};
  base = direct_sum(base, a1g);
  base = direct_sum(base, a1h);
  base = direct_sum(base, labelled_root('A', 5, "J"));
  base = direct_sum(base, labelled_root('A', 11, "th"));

  std::vector<Rat> s(20, Rat(0));
  s[0] = 1;             // O
  s[1] = 2;             // 2F
  s[2] = frac(-1, 2);    // -G/2
  s[3] = frac(-1, 2);    // -H/2
  for (int i = 1; i <= 6; ++i) s[static_cast<size_t>(8 + i)] = frac(-i, 2);
  for (int i = 7; i <= 11; ++i)
    s[static_cast<size_t>(8 + i)] = frac(-(12 - i), 2);
  return GlueSpec{std::move(base), {std::move(s)}};
}

GlueSpec s53_spec() {
  Lattice base = section_fiber_plane();
  base = direct_sum(base, labelled_root('A', 2, "G"));
  base = direct_sum(base, labelled_root('A', 2, "H"));
  base = direct_sum(base, labelled_root('A', 3, "J"));
  base = direct_sum(base, labelled_root('A', 11, "th"));

  std::vector<Rat> s(20, Rat(0));
  s[0] = 1;           // O
  s[1] = 2;           // 2F
  s[2] = frac(-2, 3);  // G1
  s[3] = frac(-1, 3);  // G2
  s[4] = frac(-2, 3);  // H1
  s[5] = frac(-1, 3);  // H2
  for (int i = 1; i <= 11; ++i) s[static_cast<size_t>(8 + i)] = frac(-2 * i, 3);
  for (int i = 5; i <= 11; ++i) s[static_cast<size_t>(8 + i)] += Rat(i - 4);
  return GlueSpec{std::move(base), {std::move(s)}};
}

}  // namespace k3x
