#include "k3x/json_io.hpp"

#include <cstdlib>
#include <fstream>

#ifndef K3X_DEFAULT_CATALOG
#define K3X_DEFAULT_CATALOG "data"
#endif

namespace k3x {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw value_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw value_error("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

Rat rat_from_json(const json& j) {
  if (j.is_string()) return rat_parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw value_error("expected rational as string or integer");
}

json rat_to_json(const Rat& r) { return rat_str(r); }

FieldPtr field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("minpoly"))
    throw value_error("field needs a minpoly array");
  std::vector<Rat> mp;
  for (const auto& c : j.at("minpoly")) mp.push_back(rat_from_json(c));
  return NumberField::make(std::move(mp));
}

json field_to_json(const FieldPtr& f) {
  json mp = json::array();
  for (const Rat& c : f->min_poly()) mp.push_back(rat_to_json(c));
  return json{{"minpoly", mp}};
}

NFElement nf_from_json(const json& j, const FieldPtr& field) {
  if (j.is_string() || j.is_number_integer()) {
    Rat r = rat_from_json(j);
    return field ? NFElement(field, r) : NFElement(r);
  }
  if (j.is_array()) {
    if (!field) throw value_error("coordinate list needs an ambient field");
    std::vector<Rat> coeffs;
    for (const auto& c : j) coeffs.push_back(rat_from_json(c));
    coeffs.resize(static_cast<size_t>(field->degree()), Rat(0));
    return NFElement(field, std::move(coeffs));
  }
  if (j.is_object()) {
    FieldPtr f = field_from_json(j.at("field"));
    std::vector<Rat> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rat_from_json(c));
    coeffs.resize(static_cast<size_t>(f->degree()), Rat(0));
    return NFElement(f, std::move(coeffs));
  }
  throw value_error("bad number field element encoding");
}

json nf_to_json(const NFElement& x) {
  if (x.field()->degree() == 1) return rat_to_json(x.coeffs()[0]);
  json coeffs = json::array();
  for (const Rat& c : x.coeffs()) coeffs.push_back(rat_to_json(c));
  return json{{"field", field_to_json(x.field())}, {"coeffs", coeffs}};
}

MultiPoly multipoly_from_json(const json& j, const FieldPtr& field) {
  if (!j.is_array()) throw value_error("polynomial must be a term list");
  FieldPtr f = field ? field : NumberField::rationals();
  // a term with an embedded field wins over the default
  for (const auto& t : j)
    if (t.contains("coeff") && t.at("coeff").is_object())
      f = field_from_json(t.at("coeff").at("field"));
  MultiPoly p(f);
  for (const auto& t : j) {
    const auto& ej = t.at("exp");
    Exp e{0, 0, 0};
    for (size_t v = 0; v < 3 && v < ej.size(); ++v) e[v] = ej[v].get<int>();
    p.add_term(e, nf_from_json(t.at("coeff"), f));
  }
  return p;
}

json multipoly_to_json(const MultiPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) {
    out.push_back(json{{"exp", json::array({e[0], e[1], e[2]})},
                       {"coeff", nf_to_json(c)}});
  }
  return out;
}

IntMatrix intmatrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw value_error("matrix must be non-empty");
  int rows = static_cast<int>(j.size());
  int cols = static_cast<int>(j.at(0).size());
  IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j.at(static_cast<size_t>(r)).size()) != cols)
      throw value_error("ragged matrix rows");
    for (int c = 0; c < cols; ++c) {
      const auto& e = j.at(static_cast<size_t>(r)).at(static_cast<size_t>(c));
      if (e.is_string())
        m(r, c) = Int(e.get<std::string>());
      else
        m(r, c) = Int(e.get<long>());
    }
  }
  return m;
}

json intmatrix_to_json(const IntMatrix& m) {
  json out = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) {
      if (m(r, c).fits_slong_p())
        row.push_back(m(r, c).get_si());
      else
        row.push_back(m(r, c).get_str());
    }
    out.push_back(row);
  }
  return out;
}

Lattice lattice_from_json(const json& j) {
  IntMatrix g = intmatrix_from_json(j.at("gram"));
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
  return Lattice(std::move(g), std::move(labels));
}

json lattice_to_json(const Lattice& l) {
  json out{{"gram", intmatrix_to_json(l.gram)}};
  if (!l.labels.empty()) out["labels"] = l.labels;
  return out;
}

json fqf_to_json(const FiniteQuadraticForm& f) {
  json orders = json::array(), q = json::array(), b = json::array();
  for (const Int& d : f.orders) orders.push_back(d.get_si());
  for (const Rat& x : f.q) q.push_back(rat_to_json(x));
  for (const auto& row : f.b) {
    json r = json::array();
    for (const Rat& x : row) r.push_back(rat_to_json(x));
    b.push_back(r);
  }
  return json{{"orders", orders}, {"q", q}, {"b", b}};
}

FiniteQuadraticForm fqf_from_json(const json& j) {
  FiniteQuadraticForm f;
  for (const auto& d : j.at("orders")) f.orders.push_back(Int(d.get<long>()));
  for (const auto& x : j.at("q")) f.q.push_back(rat_from_json(x));
  for (const auto& row : j.at("b")) {
    std::vector<Rat> r;
    for (const auto& x : row) r.push_back(rat_from_json(x));
    f.b.push_back(std::move(r));
  }
  return f;
}

std::string catalog_dir() {
  if (const char* env = std::getenv("K3X_CATALOG")) return env;
  return K3X_DEFAULT_CATALOG;
}

}  // namespace k3x
