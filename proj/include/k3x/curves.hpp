#ifndef K3X_CURVES_HPP
#define K3X_CURVES_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "k3x/poly.hpp"

namespace k3x {

// point of the projective plane, coordinates not all zero
struct ProjPoint {
  std::array<NFElement, 3> coords;

  static ProjPoint make(NFElement a, NFElement b, NFElement c);
  const FieldPtr& field() const { return coords[0].field(); }
  bool operator==(const ProjPoint& o) const;  // up to a scalar
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  std::string str() const;
};

// line a x + b y + c z = 0, coefficients not all zero
using ProjLine = std::array<NFElement, 3>;

NFElement line_at(const ProjLine& l, const ProjPoint& p);

// homogeneous nonzero ternary polynomial
struct PlaneCurve {
  MultiPoly poly;
  int degree = 0;

  const FieldPtr& field() const { return poly.field(); }
};

PlaneCurve make_plane_curve(MultiPoly p);

bool on_curve(const PlaneCurve& c, const ProjPoint& p);
// all three partials vanish; requires p on c
bool is_singular_at(const PlaneCurve& c, const ProjPoint& p);

// dehomogenize at a chart where p has an invertible coordinate and
// translate p to the origin; result lives in variables 0 and 1
MultiPoly localize_at(const PlaneCurve& c, const ProjPoint& p);

// dimension of the local algebra modulo the Jacobian ideal at the origin,
// by truncated linear algebra on monomials of degree <= N for growing N;
// accepted once the value repeats twice and N exceeds twice the value
long milnor_number(const MultiPoly& f_local, int degree_cap = 32);

struct LocalClassification {
  long milnor = 0;
  int hessian_corank = 0;
  std::string ade_type;  // "A<n>", "D<n>", "E6", "E7", "E8"
};

// simple-singularity classification of a local equation at the origin
LocalClassification ade_classify(const MultiPoly& f_local,
                                 int degree_cap = 32);

// local intersection number of two curves at a common point, by the same
// truncated linear algebra on the ideal of the pair
long intersection_multiplicity(const PlaneCurve& c, const PlaneCurve& d,
                               const ProjPoint& p, int degree_cap = 32);

enum class CremonaKind { standard, tangent, osculating };

// strict transform: substitute the quadratic map and strip the maximal
// powers of its exceptional coordinates
PlaneCurve cremona(CremonaKind kind, const PlaneCurve& c);

// the nodal cubic x y z + x^3 - y^3 and its parametrization
PlaneCurve nodal_cubic(const FieldPtr& field);
// [t : t^2 : t^3 - 1], defined for invertible t
ProjPoint nodal_cubic_point(const NFElement& t);

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

// single-generator model of base[t]/(q) for monic quadratic q that is
// irreducible over the base; total degree over Q stays within the
// number-field bound
struct QuadraticExtension {
  FieldPtr field;
  NFElement base_gen;  // image of the base generator
  NFElement root;      // image of the adjoined root of q
};

QuadraticExtension extend_by_quadratic(const FieldPtr& base,
                                       const UniPoly& q);

// two conjugate singular points cut out on a line by a quadratic factor,
// certified jointly in base[t]/(q) and, when the type needs it, at one
// representative over the extension
struct PairCertificate {
  UniPoly factor;  // monic quadratic over the base field
  long milnor = 0;
  int hessian_corank = 0;
  std::string ade_type;
};

PairCertificate classify_conjugate_pair(const PlaneCurve& c,
                                        const ProjLine& line,
                                        int degree_cap = 32);

// fiber orders of the preferred pencil through the distinguished center:
// the A_k point on the center's tangent line contributes k + 7, every
// other A_k contributes k + 1, padded with 1s to six entries
std::vector<int> preferred_pencil_config(
    const std::vector<std::pair<int, bool>>& a_points);

struct ClaimCheck {
  std::string label;
  bool pass = false;
  std::string details;
};

struct CurveReport {
  std::string name;
  std::vector<ClaimCheck> checks;

  bool all_pass() const;
  std::string str() const;
};

PlaneCurve plane_curve_from_json(const nlohmann::json& entry);
ProjPoint proj_point_from_json(const nlohmann::json& j,
                               const FieldPtr& field);

// certify a sextic catalog entry: the stated line is not a component,
// every claimed singular point has the claimed type, tangent incidences
// hold, and the preferred-pencil bookkeeping reproduces the configuration
CurveReport verify_catalog_entry(const nlohmann::json& entry);

// certify a parametrized-cubic entry: root membership of the stated
// parameter in the stated constraint factor, the double point, the image
// of the nodal-cubic parametrization, and the alignment of the quoted
// points
CurveReport verify_cubic_instance(const nlohmann::json& entry);

}  // namespace k3x

#endif
