#ifndef K3X_RATIONAL_HPP
#define K3X_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace k3x {

using Int = mpz_class;
using Rat = mpq_class;

struct value_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// mpq_class(num, den) does not canonicalize; route every two-part
// construction through here
inline Rat frac(const Int& num, const Int& den) {
  if (den == 0) throw value_error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// "p/q" or "p"; canonicalized, denominator > 0
inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw value_error("bad rational literal: " + s);
  r.canonicalize();
  if (r.get_den() <= 0)
    throw value_error("non-positive denominator: " + s);
  return r;
}

inline std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// representative of r mod n*Z in [0, n)
inline Rat rat_mod(const Rat& r, const Rat& n) {
  Rat q = r / n;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r - Rat(fl) * n;
}

inline Rat mod2z(const Rat& r) { return rat_mod(r, 2); }
inline Rat mod1(const Rat& r) { return rat_mod(r, 1); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace k3x

#endif
