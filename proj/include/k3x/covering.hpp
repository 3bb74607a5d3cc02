#ifndef K3X_COVERING_HPP
#define K3X_COVERING_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "k3x/poly.hpp"

namespace k3x {

// permutation of {0..d-1} as the list of images
using Perm = std::vector<int>;

Perm perm_identity(int d);
Perm perm_compose(const Perm& a, const Perm& b);  // apply b, then a
Perm perm_inverse(const Perm& p);
int perm_order(const Perm& p);
bool perm_is_even(const Perm& p);

// partition of the covering degree, parts weakly decreasing
struct CycleType {
  std::vector<int> parts;

  int degree() const;
  bool operator==(const CycleType& o) const { return parts == o.parts; }
  bool operator<(const CycleType& o) const { return parts < o.parts; }
  std::string str() const;
};

CycleType make_cycle_type(std::vector<int> parts);  // validates positivity
CycleType cycle_type_of(const Perm& p);
// cycles in consecutive blocks, largest first
Perm canonical_of_type(const CycleType& t);

struct PermutationTriple {
  Perm s0, s1, sinf;  // s0*s1*sinf = id, generated group transitive
};

bool triple_is_valid(const PermutationTriple& t);

// representatives of simultaneous-conjugacy classes of transitive triples
// with the given cycle types; exhaustive enumeration, degree capped at 8
std::vector<PermutationTriple> triples_with_types(const CycleType& t0,
                                                  const CycleType& t1,
                                                  const CycleType& tinf);

struct GroupId {
  long order = 0;
  bool abelian = false;
  bool all_even = false;  // sign character trivial on the generators
  std::string label;      // "Z/n", "Dn" (n = order), "A4", "S4", "order n"
};

// full element closure, degree capped at 12
GroupId group_of(const PermutationTriple& t);

// 2g - 2 = -2d + sum over all parts e of (e - 1);
// throws "no such cover" on odd or negative result
long riemann_hurwitz_genus(int d, const CycleType& t0, const CycleType& t1,
                           const CycleType& tinf);

// genus of the Galois cover of degree |G| with ramification order
// ord(sigma_i) over branch point i
long galois_closure_genus(const PermutationTriple& t);

// point of the base line: finite value in the field, or infinity
struct BasePoint {
  bool infinite = false;
  NFElement value;

  static BasePoint at_infinity() { return BasePoint{true, NFElement()}; }
  static BasePoint finite(const NFElement& v) { return BasePoint{false, v}; }
  bool operator==(const BasePoint& o) const;
  std::string str() const;
};

// z -> num(z)/den(z), coprime, den nonzero
struct RationalMap {
  UniPoly num, den;
  FieldPtr field;

  int degree() const;
};

// divides out the gcd; throws on zero denominator
RationalMap make_rational_map(UniPoly num, UniPoly den, FieldPtr field);

// multiplicity partition of the fiber over c, infinity included via
// degree bookkeeping
CycleType ramification_profile(const RationalMap& w, const BasePoint& c);

// y^2 = x^3 + a(s) x + b(s) with nonzero discriminant
struct WeierstrassModel {
  UniPoly a, b;
  FieldPtr field;
};

UniPoly weierstrass_discriminant(const WeierstrassModel& m);

// squarefree factor of the discriminant (or the place at infinity)
// carrying ord Delta and the multiplicative-reduction flag
struct FiberPlace {
  bool at_infinity = false;
  UniPoly factor;  // monic, empty for the infinite place
  int degree = 1;
  int ord = 0;
  bool multiplicative = false;

  std::string str() const;
};

std::vector<FiberPlace> weierstrass_fiber_orders(const WeierstrassModel& m);

// s -> (a s + b)/(c s + d), ad - bc != 0
struct MoebiusMap {
  NFElement a, b, c, d;

  std::string str() const;
};

BasePoint moebius_apply(const MoebiusMap& m, const BasePoint& p);

// true iff a(sigma(s)) = u^4 a(s) and b(sigma(s)) = u^6 b(s) as
// rational-function identities
bool verify_base_change_automorphism(const WeierstrassModel& m,
                                     const MoebiusMap& sigma,
                                     const RationalMap& u);

// solves the three-parameter linear system for a fractional linear map
// sending each source to its target; none when every solution degenerates
std::optional<MoebiusMap> fractional_linear_exists(
    const std::vector<std::pair<BasePoint, BasePoint>>& pairs);

// {"field": {...}, "num": [terms], "den": [terms]} (MultiPoly terms, var 0)
RationalMap rational_map_from_json(const nlohmann::json& j);
// same layout without the field key
RationalMap rational_map_from_json(const nlohmann::json& j,
                                   const FieldPtr& field);
// {"field": {...}, "a": [terms], "b": [terms]}
WeierstrassModel weierstrass_model_from_json(const nlohmann::json& j);
BasePoint base_point_from_json(const nlohmann::json& j, const FieldPtr& field);
MoebiusMap moebius_from_json(const nlohmann::json& j, const FieldPtr& field);

}  // namespace k3x

#endif
