#ifndef K3X_GLUE_HPP
#define K3X_GLUE_HPP

#include <string>
#include <vector>

#include "k3x/lattice.hpp"

namespace k3x {

// an even overlattice presented by glue vectors: rational coordinate
// vectors in the base basis that pair integrally with the base and with
// each other and have even self-pairing
struct GlueSpec {
  Lattice base;
  std::vector<std::vector<Rat>> glue_vectors;
};

// result of extend(): the overlattice in a new basis, the basis rows in
// base coordinates, and the index of the base in the overlattice
struct Extension {
  Lattice lattice;
  QMatrix basis;
  Int index;
};

Extension extend(const GlueSpec& spec);

// coordinates of a rational vector (base coordinates) in the extension
// basis; throws if the vector is not in the extension
std::vector<Int> coords_in_extension(const Extension& ext,
                                     const std::vector<Rat>& v);

// least k >= 1 with k*x in the extension; x pairs integrally with it
Int order_mod_extension(const Extension& ext, const std::vector<Rat>& x);

// pairings of the first glue vector s against labelled base vectors:
// entry ("X", v) checks s.X = v, ("s", v) checks s.s = v, and the
// two-label form ("X.Y", v) checks X.Y = v within the base
struct PairingReport {
  struct Item {
    std::string label;
    Rat expected;
    Rat actual;
    bool ok = false;
  };
  std::vector<Item> items;
  bool ok = true;
};

PairingReport glue_pairings_check(
    const GlueSpec& spec,
    const std::vector<std::pair<std::string, Rat>>& expected);

FiniteQuadraticForm disc_of_extension(const Lattice& l);

// roots (norm -2 vectors) of a negative-definite lattice with the
// component decomposition of their span
struct RootSystemReport {
  std::vector<std::vector<Int>> roots;
  std::vector<std::pair<char, int>> components;  // sorted Dynkin types

  int root_count() const { return static_cast<int>(roots.size()); }
};

RootSystemReport roots(const Lattice& l);

std::string dynkin_str(const std::vector<std::pair<char, int>>& components);

// all even integral overlattices of the given index, from isotropic
// subgroups of the discriminant form, deduplicated as sublattices of
// the dual
std::vector<Extension> even_overlattices(const Lattice& base, const Int& n);

// anti-isometry gluing data: T-generator j (column j of the dual-basis
// matrix T^{-1}) maps to sum_i eps_i * b(i, j) in the discriminant
// group of s
struct AntiIsometrySpec {
  Lattice s;
  IntMatrix t;                        // positive definite even gram
  std::vector<std::vector<Rat>> eps;  // dual vectors, s coordinates
  IntMatrix b;
};

// builds the even unimodular overlattice of S + T certified by the
// anti-isometry witness; asserts |det| = 1, even, signature (3,19)
Lattice glue_anti_isometry(const AntiIsometrySpec& spec);

// root classes orthogonal to an isotropic primitive vector F, computed
// in the quotient F_perp / ZF
RootSystemReport fiber_root_classes(const Lattice& l,
                                    const std::vector<Int>& f);

// one grouping of A-type summands into proposed extensions: the blocks,
// the per-block index, the per-block ADE target (singletons keep
// themselves), and the verdict of the overlattice search
struct CaseGrouping {
  std::vector<std::vector<int>> blocks;           // summand indices
  std::vector<Int> block_index;                   // 1 on unmerged blocks
  std::vector<std::pair<char, int>> targets;      // per block
  enum class Search { not_run, confirmed, refuted } search = Search::not_run;
};

struct CaseReport {
  std::vector<int> summands;  // A-type subscripts
  Int index;
  std::vector<CaseGrouping> consistent;  // determinant bookkeeping passes
};

// enumerates groupings of A-type summands into index-n extensions whose
// determinant bookkeeping admits an ADE target, then searches each
// candidate by isotropic-subgroup enumeration and root matching
CaseReport root_extension_case_analysis(const std::vector<int>& a_ranks,
                                        const Int& n);

// the two explicit rank-20 gluings: base lattice with labelled basis
// plus one glue vector
GlueSpec s35_spec();
GlueSpec s53_spec();

}  // namespace k3x

#endif
