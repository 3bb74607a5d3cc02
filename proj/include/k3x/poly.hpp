#ifndef K3X_POLY_HPP
#define K3X_POLY_HPP

#include <array>
#include <map>
#include <vector>

#include "k3x/numberfield.hpp"

namespace k3x {

using Exp = std::array<int, 3>;

// graded lexicographic: compare total degree, then exponents left to right
struct GradedLex {
  bool operator()(const Exp& a, const Exp& b) const {
    int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
    if (da != db) return da < db;
    return a < b;
  }
};

// polynomial in up to three variables over a fixed number field;
// zero coefficients never stored
class MultiPoly {
 public:
  using TermMap = std::map<Exp, NFElement, GradedLex>;

  explicit MultiPoly(FieldPtr field = NumberField::rationals())
      : field_(std::move(field)) {}

  static MultiPoly constant(const NFElement& c);
  static MultiPoly variable(int var, const FieldPtr& field);
  static MultiPoly from_terms(FieldPtr field,
                              std::vector<std::pair<Exp, NFElement>> terms);

  const FieldPtr& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exp& e, const NFElement& c);

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const NFElement& c) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly pow(unsigned e) const;

  int total_degree() const;  // -1 for zero
  int degree_in(int var) const;
  bool is_homogeneous() const;
  bool uses_only(int var) const;

  MultiPoly derivative(int var) const;
  NFElement evaluate(const std::vector<NFElement>& point) const;
  // simultaneous substitution of polynomials for all three variables
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  // substitute a polynomial for one variable, keep the others
  MultiPoly substitute_var(int var, const MultiPoly& image) const;

  // divide by var^k for the maximal k; returns k
  int strip_variable_power(int var);
  // exact division by a single variable power, throws if not divisible
  MultiPoly divide_by_monomial(int var, int k) const;

  // homogenize a 2-variable polynomial (vars 0,1) to degree d with var 2
  MultiPoly homogenize(int var, int d) const;

  std::string str() const;

 private:
  FieldPtr field_;
  TermMap terms_;
};

// dense univariate view over the coefficient field
using UniPoly = std::vector<NFElement>;  // ascending, trimmed

UniPoly to_unipoly(const MultiPoly& p, int var);
MultiPoly from_unipoly(const UniPoly& u, int var, const FieldPtr& field);

int uni_degree(const UniPoly& p);  // -1 for zero
UniPoly uni_trim(UniPoly p);
UniPoly uni_add(const UniPoly& a, const UniPoly& b);
UniPoly uni_sub(const UniPoly& a, const UniPoly& b);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
UniPoly uni_scale(const UniPoly& a, const NFElement& c);
// quotient and remainder, divisor nonzero
std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b);
UniPoly uni_derivative(const UniPoly& a);
NFElement uni_eval(const UniPoly& a, const NFElement& x);

// monic gcd over the field (Euclid); gcd(0,0) errors
UniPoly uni_gcd(UniPoly a, UniPoly b);

// Sylvester-matrix determinant
NFElement resultant(const UniPoly& p, const UniPoly& q, const FieldPtr& field);

// p = c * prod q_i^i with q_i squarefree, pairwise coprime (Yun);
// returns (multiplicity, monic q_i) for each nonempty level
std::vector<std::pair<int, UniPoly>> squarefree_factors(const UniPoly& p);
// returns (multiplicity, degree of q_i) for each nonempty level
std::vector<std::pair<int, int>> squarefree_multiplicity_profile(const UniPoly& p);

}  // namespace k3x

#endif
