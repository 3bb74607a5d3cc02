#ifndef K3X_LATTICE_HPP
#define K3X_LATTICE_HPP

#include <optional>
#include <string>
#include <vector>

#include "k3x/matrix.hpp"

namespace k3x {

struct Lattice {
  IntMatrix gram;                   // symmetric, non-degenerate
  std::vector<std::string> labels;  // empty or one per basis vector

  Lattice() = default;
  explicit Lattice(IntMatrix g, std::vector<std::string> names = {});
  int rank() const { return gram.rows(); }
  int label_index(const std::string& name) const;  // throws if unknown
};

Lattice root_lattice(char kind, int n);  // 'A' n>=1, 'D' n>=4, 'E' n in 6..8
Lattice hyperbolic_plane();              // U = [[0,1],[1,0]]
Lattice k3_lattice();                    // U^3 + E8^2
Lattice direct_sum(const Lattice& a, const Lattice& b);

Int determinant(const Lattice& l);
bool is_even(const Lattice& l);
// (positive, negative) inertia by exact symmetric pivoting
std::pair<int, int> signature(const Lattice& l);
// columns of gram^{-1}: dual basis vectors in lattice coordinates
QMatrix dual_basis(const Lattice& l);

// finite abelian group in invariant-factor presentation carrying the
// discriminant quadratic form: q in Q/2Z on generators, b in Q/Z pairwise
struct FiniteQuadraticForm {
  std::vector<Int> orders;          // d_1 | d_2 | ..., all > 1
  std::vector<Rat> q;               // representatives in [0,2)
  std::vector<std::vector<Rat>> b;  // representatives in [0,1), symmetric

  int ngens() const { return static_cast<int>(orders.size()); }
  Int group_order() const;

  // values on an arbitrary element given as generator exponents
  Rat q_of(const std::vector<Int>& x) const;
  Rat b_of(const std::vector<Int>& x, const std::vector<Int>& y) const;

  bool operator==(const FiniteQuadraticForm& o) const;
};

FiniteQuadraticForm discriminant_group(const Lattice& l);  // even lattices only

// discriminant group together with dual-vector generators (rational
// coordinates in the lattice basis, generator i of order orders[i])
struct DiscriminantGroup {
  FiniteQuadraticForm form;
  std::vector<std::vector<Rat>> generators;
};

DiscriminantGroup discriminant_group_full(const Lattice& l);

// bilinear pairing of rational vectors in lattice coordinates
Rat pairing(const Lattice& l, const std::vector<Rat>& x,
            const std::vector<Rat>& y);
FiniteQuadraticForm fqf_negate(const FiniteQuadraticForm& f);
FiniteQuadraticForm fqf_direct_sum(const FiniteQuadraticForm& a,
                                   const FiniteQuadraticForm& b);

// least k >= 1 with k*x in L; x in lattice coordinates, must pair
// integrally with the whole basis
Int element_order_in_disc(const Lattice& l, const std::vector<Rat>& x);

// generator-image matrix: column j = exponents of the image of b's
// generator j in terms of a's generators... returned as images of a's
// generators inside b (rows index b-generators, columns a-generators)
std::optional<IntMatrix> fqf_isomorphic(const FiniteQuadraticForm& a,
                                        const FiniteQuadraticForm& b);

struct ComplementReport {
  Lattice j1, j2;
  FiniteQuadraticForm q1, q2;
  bool groups_isomorphic = false;
  bool q_negated = false;
  bool ok() const { return groups_isomorphic && q_negated; }
};

// L unimodular even; j1_rows = basis of a primitive non-degenerate
// sublattice in L coordinates
ComplementReport check_complement_duality(const Lattice& l,
                                          const IntMatrix& j1_rows);

// q-values of the generators, negated, as "-q" lists for report printing
std::vector<Rat> neg_q_values(const FiniteQuadraticForm& f);

}  // namespace k3x

#endif
