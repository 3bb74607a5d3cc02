#ifndef K3X_FIBRATION_HPP
#define K3X_FIBRATION_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "k3x/lattice.hpp"
#include "k3x/rational.hpp"

namespace k3x {

// singular fiber multiplicities of a semi-stable elliptic K3 with six
// singular fibers; entries are positive and sum to 24. The canonical
// presentation is ascending, but operations also accept a fixed
// non-ascending ordering (quotient fibrations inherit the ordering of
// the fibration upstairs).
struct FiberConfig {
  std::vector<Int> n;
};

// ascending canonical configuration; throws unless six positive
// ascending entries summing to 24
FiberConfig fiber_config(const std::vector<Int>& n);

// component numbers hit by a section, one residue mod n_i per fiber
struct SectionTuple {
  std::vector<Int> a;
};

// sum over fibers of a_i (n_i - a_i) / n_i
Rat contribution(const FiberConfig& c, const SectionTuple& s);

// order of the tuple in the direct sum of the component groups Z/n_i
Int section_order(const FiberConfig& c, const SectionTuple& s);

// nonzero and contribution exactly 4: the arithmetic constraint on a
// torsion section disjoint from the zero section
bool is_torsion_candidate(const FiberConfig& c, const SectionTuple& s);

// lexicographically least image under per-fiber orientation flips
// a_i -> n_i - a_i and permutations of fibers with equal n_i
SectionTuple relabel_normalize(const FiberConfig& c, const SectionTuple& s);

struct TorsionGroup {
  std::vector<SectionTuple> generators;
  std::vector<SectionTuple> elements;  // sorted, in relabel-canonical form

  Int order() const { return Int(static_cast<long>(elements.size())); }
};

// all subgroups of the direct sum of the Z/n_i whose nonzero elements
// are all torsion candidates, one representative per relabelling class,
// sorted by order then elements
std::vector<TorsionGroup> enumerate_torsion_groups(const FiberConfig& c);

// configuration of the fibration induced on the quotient by a
// prime-order torsion section: fibers the section misses are multiplied
// by p, fibers it hits are divided; the result is sorted ascending
FiberConfig quotient_config(const FiberConfig& c, const SectionTuple& s);

// (product of the n_i) / mw_order^2, the Picard determinant predicted
// by the section count
Rat shioda_tate_det(const FiberConfig& c, const Int& mw_order);

// Picard lattice for a trivial section group: U plus one A_{n_i - 1}
// summand per fiber with n_i >= 2
Lattice trivial_mw_picard(const FiberConfig& c);

struct GroupCheck {
  std::string name;
  Int order = 0;
  bool cyclic_candidate_found = false;
  bool generator_matches = true;  // stays true when no generator is listed
};

struct SectionCheck {
  std::vector<Int> tuple;
  Int stated_order = 0;
  bool candidate = false;
  bool order_matches = false;
};

struct ExclusionCheck {
  int m = 0;
  bool section_ok = false;         // the 2-torsion tuple is a candidate
  bool quotient_matches = false;   // stated quotient config reproduced
  std::vector<SectionCheck> induced;
  bool ok = false;
};

struct RowReport {
  int m = 0;
  FiberConfig config;
  bool config_ok = false;
  std::vector<GroupCheck> groups;
  bool listed_subset_of_candidates = false;
  bool ok = false;
};

struct TableReport {
  std::vector<RowReport> rows;
  std::vector<ExclusionCheck> exclusions;
  bool ok = false;
};

// catalog: {"rows": [{"m", "config", "groups": [{"name", "order",
// "generator"?}]}], "exclusions": [{"m", "section", "quotient_ordered",
// "induced_sections": [{"tuple", "order"}]}]}
TableReport theorem_table_check(const nlohmann::json& catalog);

}  // namespace k3x

#endif  // K3X_FIBRATION_HPP
