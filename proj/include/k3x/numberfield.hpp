#ifndef K3X_NUMBERFIELD_HPP
#define K3X_NUMBERFIELD_HPP

#include <memory>
#include <vector>

#include "k3x/rational.hpp"

namespace k3x {

// Q[v]/(m(v)) with m monic of degree 1..4, irreducible over Q.
// Degree 1 with m = v is the rationals themselves.
class NumberField {
 public:
  // coefficients ascending, c0..cn; normalized to monic at construction
  explicit NumberField(std::vector<Rat> min_poly);

  int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
  const std::vector<Rat>& min_poly() const { return min_poly_; }

  static std::shared_ptr<const NumberField> rationals();
  static std::shared_ptr<const NumberField> make(std::vector<Rat> min_poly);

  bool same_field(const NumberField& other) const {
    return min_poly_ == other.min_poly_;
  }

 private:
  std::vector<Rat> min_poly_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class NFElement {
 public:
  NFElement() : field_(NumberField::rationals()), coeffs_(1, Rat(0)) {}
  NFElement(FieldPtr field, std::vector<Rat> coeffs);
  NFElement(FieldPtr field, const Rat& r);
  explicit NFElement(const Rat& r) : NFElement(NumberField::rationals(), r) {}
  explicit NFElement(long n) : NFElement(Rat(n)) {}

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // throws unless is_rational()

  NFElement operator-() const;
  NFElement operator+(const NFElement& o) const;
  NFElement operator-(const NFElement& o) const;
  NFElement operator*(const NFElement& o) const;
  NFElement inverse() const;  // throws on zero
  NFElement operator/(const NFElement& o) const { return *this * o.inverse(); }
  bool operator==(const NFElement& o) const;
  bool operator!=(const NFElement& o) const { return !(*this == o); }
  // total order for canonical container keys (field-wise lexicographic)
  bool operator<(const NFElement& o) const;

  NFElement pow(unsigned long e) const;

  std::string str() const;

  // generator v of the field (or the rational 0 for degree 1)
  static NFElement generator(const FieldPtr& field);
  static NFElement zero(const FieldPtr& field) { return NFElement(field, Rat(0)); }
  static NFElement one(const FieldPtr& field) { return NFElement(field, Rat(1)); }

 private:
  FieldPtr field_;
  std::vector<Rat> coeffs_;  // length = field degree
  void check_compatible(const NFElement& o) const;
};

// unify two fields: both rational, or identical min_poly, or one rational
// (promoted into the other); throws on genuinely distinct extensions
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);
NFElement promote(const NFElement& x, const FieldPtr& field);

}  // namespace k3x

#endif
