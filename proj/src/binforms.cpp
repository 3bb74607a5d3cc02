#include "k3x/binforms.hpp"

#include <algorithm>

namespace k3x {

IntMatrix BinaryForm::gram() const {
  IntMatrix g(2, 2);
  g(0, 0) = b11;
  g(0, 1) = b12;
  g(1, 0) = b12;
  g(1, 1) = b22;
  return g;
}

bool BinaryForm::operator<(const BinaryForm& o) const {
  if (b11 != o.b11) return b11 < o.b11;
  if (b12 != o.b12) return b12 < o.b12;
  return b22 < o.b22;
}

bool is_positive_definite(const BinaryForm& f) {
  return f.b11 > 0 && f.det() > 0;
}

bool is_even(const BinaryForm& f) {
  return f.b11 % 2 == 0 && f.b22 % 2 == 0;
}

bool is_reduced(const BinaryForm& f) {
  Int t = 2 * abs(f.b12);
  if (t > f.b11 || f.b11 > f.b22) return false;
  if (f.b12 < 0 && (t == f.b11 || f.b11 == f.b22)) return false;
  return true;
}

namespace {

// right-multiply the accumulated transform by [[1,k],[0,1]] and apply
// the same column operation to the form
void translate(BinaryForm& f, IntMatrix& u, const Int& k) {
  f.b22 += 2 * k * f.b12 + k * k * f.b11;
  f.b12 += k * f.b11;
  u(0, 1) += k * u(0, 0);
  u(1, 1) += k * u(1, 0);
}

// right-multiply by [[0,-1],[1,0]]: swaps the basis vectors up to sign
void swap_basis(BinaryForm& f, IntMatrix& u) {
  std::swap(f.b11, f.b22);
  f.b12 = -f.b12;
  for (int i = 0; i < 2; ++i) {
    Int a = u(i, 0);
    u(i, 0) = u(i, 1);
    u(i, 1) = -a;
  }
}

// nearest integer to -b12/b11, so that b12 + k*b11 lands in [-b11/2, b11/2]
Int centering_shift(const BinaryForm& f) {
  Int q, r;
  Int num = -f.b12;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), f.b11.get_mpz_t());
  if (2 * r > f.b11) q += 1;
  return q;
}

}  // namespace

ReducedForm reduce(const BinaryForm& f) {
  if (!is_positive_definite(f)) throw value_error("form is not positive definite");
  BinaryForm g = f;
  IntMatrix u = IntMatrix::identity(2);
  while (true) {
    if (2 * abs(g.b12) > g.b11) translate(g, u, centering_shift(g));
    if (g.b11 > g.b22) {
      swap_basis(g, u);
      continue;
    }
    break;
  }
  if (g.b12 < 0) {
    if (-2 * g.b12 == g.b11)
      translate(g, u, Int(1));
    else if (g.b11 == g.b22)
      swap_basis(g, u);
  }
  return {g, u};
}

std::vector<BinaryForm> enumerate_by_det(const Int& d) {
  std::vector<BinaryForm> out;
  for (Int b11 = 2; 3 * b11 * b11 <= 4 * d; b11 += 2) {
    Int half = b11 / 2;
    for (Int b12 = -half; b12 <= half; ++b12) {
      Int num = d + b12 * b12;
      if (num % b11 != 0) continue;
      BinaryForm f{b11, b12, num / b11};
      if (is_even(f) && is_reduced(f)) out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<std::vector<Rat>, std::vector<Rat>> dual_generators(const BinaryForm& f) {
  Int d = f.det();
  if (d == 0) throw value_error("singular form");
  std::vector<Rat> g1{frac(f.b22, d), frac(-f.b12, d)};
  std::vector<Rat> g2{frac(-f.b12, d), frac(f.b11, d)};
  return {g1, g2};
}

Int dual_order(const std::vector<Rat>& g) {
  Int order = 1;
  for (const Rat& c : g) order = lcm(order, Int(c.get_den()));
  return order;
}

Lattice form_lattice(const BinaryForm& f) {
  return Lattice{f.gram(), {"e1", "e2"}};
}

std::vector<TranscendentalMatch> match_transcendental(const Lattice& s) {
  if (s.rank() != 20) throw value_error("lattice is not rank 20");
  if (!is_even(s)) throw value_error("odd lattice");
  auto [pos, neg] = signature(s);
  if (pos != 1 || neg != 19) throw value_error("signature is not (1,19)");
  FiniteQuadraticForm target = fqf_negate(discriminant_group(s));
  std::vector<TranscendentalMatch> out;
  for (const BinaryForm& f : enumerate_by_det(abs(determinant(s)))) {
    FiniteQuadraticForm qt = discriminant_group(form_lattice(f));
    if (auto w = fqf_isomorphic(qt, target)) out.push_back({f, *w});
  }
  return out;
}

}  // namespace k3x
