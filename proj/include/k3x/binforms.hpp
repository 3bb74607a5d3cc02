#ifndef K3X_BINFORMS_HPP
#define K3X_BINFORMS_HPP

#include <utility>
#include <vector>

#include "k3x/lattice.hpp"
#include "k3x/matrix.hpp"
#include "k3x/rational.hpp"

namespace k3x {

// positive definite even rank-2 form with Gram [[b11,b12],[b12,b22]]
struct BinaryForm {
  Int b11;
  Int b12;
  Int b22;

  Int det() const { return b11 * b22 - b12 * b12; }
  IntMatrix gram() const;

  bool operator==(const BinaryForm& o) const {
    return b11 == o.b11 && b12 == o.b12 && b22 == o.b22;
  }
  bool operator<(const BinaryForm& o) const;
};

bool is_positive_definite(const BinaryForm& f);
bool is_even(const BinaryForm& f);

// reduced convention: 2|b12| <= b11 <= b22, with b12 >= 0 whenever
// 2|b12| = b11 or b11 = b22; one representative per SL2(Z) orbit
bool is_reduced(const BinaryForm& f);

struct ReducedForm {
  BinaryForm form;
  IntMatrix transform;  // in SL2(Z); transform^T gram transform = reduced
};

ReducedForm reduce(const BinaryForm& f);

// all reduced positive definite even forms of the given determinant,
// sorted lexicographically on (b11, b12, b22)
std::vector<BinaryForm> enumerate_by_det(const Int& d);

// columns of the inverse Gram: dual basis vectors g1, g2 in the e-basis
std::pair<std::vector<Rat>, std::vector<Rat>> dual_generators(const BinaryForm& f);

// order of a rational vector modulo the integer lattice
Int dual_order(const std::vector<Rat>& g);

// the form as a rank-2 lattice, for discriminant-group computations
Lattice form_lattice(const BinaryForm& f);

struct TranscendentalMatch {
  BinaryForm form;
  // column j gives the image of the form's j-th discriminant generator
  // over the generators of the negated discriminant form of the input
  IntMatrix witness;
};

// all reduced even forms of determinant |det S| whose discriminant form
// is anti-isometric to that of S, each with an anti-isometry witness
std::vector<TranscendentalMatch> match_transcendental(const Lattice& s);

}  // namespace k3x

#endif  // K3X_BINFORMS_HPP
