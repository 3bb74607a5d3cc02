#ifndef K3X_JSON_IO_HPP
#define K3X_JSON_IO_HPP

#include <json.hpp>

#include "k3x/lattice.hpp"
#include "k3x/poly.hpp"

namespace k3x {

using json = nlohmann::json;

json load_json_file(const std::string& path);  // throws value_error

Rat rat_from_json(const json& j);  // "p/q" string or integer
json rat_to_json(const Rat& r);

FieldPtr field_from_json(const json& j);  // {"minpoly": [c0, ...]}
json field_to_json(const FieldPtr& f);

// {"field": {...}, "coeffs": [...]} | bare rational | coordinate list
// (the last needs the ambient field supplied)
NFElement nf_from_json(const json& j, const FieldPtr& field = nullptr);
json nf_to_json(const NFElement& x);

// [{"exp": [e1,e2,e3], "coeff": ...}, ...]
MultiPoly multipoly_from_json(const json& j, const FieldPtr& field = nullptr);
json multipoly_to_json(const MultiPoly& p);

IntMatrix intmatrix_from_json(const json& j);
json intmatrix_to_json(const IntMatrix& m);

Lattice lattice_from_json(const json& j);  // {"gram": [[..]], "labels": [..]}
json lattice_to_json(const Lattice& l);

json fqf_to_json(const FiniteQuadraticForm& f);
FiniteQuadraticForm fqf_from_json(const json& j);

// default catalog directory: $K3X_CATALOG, else compile-time default
std::string catalog_dir();

}  // namespace k3x

#endif
