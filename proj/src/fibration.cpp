#include "k3x/fibration.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace k3x {

namespace {

using Elt = std::vector<Int>;

void validate_config(const FiberConfig& c) {
  if (c.n.size() != 6) throw value_error("configuration must have six entries");
  Int total = 0;
  for (const Int& v : c.n) {
    if (v < 1) throw value_error("configuration entries must be positive");
    total += v;
  }
  if (total != 24) throw value_error("configuration total must be 24");
}

Int mod_n(const Int& a, const Int& n) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

Elt reduced_tuple(const FiberConfig& c, const SectionTuple& s) {
  if (s.a.size() != 6) throw value_error("section tuple must have six entries");
  Elt r(6);
  for (int i = 0; i < 6; ++i)
    r[static_cast<size_t>(i)] =
        mod_n(s.a[static_cast<size_t>(i)], c.n[static_cast<size_t>(i)]);
  return r;
}

Int component_order(const Int& a, const Int& n) {
  if (a == 0) return 1;
  return n / gcd(a, n);
}

bool is_zero(const Elt& e) {
  for (const Int& v : e)
    if (v != 0) return false;
  return true;
}

// fiber permutations preserving the multiplicities, as index maps
// (result[i] tells which input position lands at i), and the positions
// where an orientation flip acts nontrivially
struct RelabelSet {
  std::vector<std::vector<int>> perms;
  std::vector<int> flippable;
};

RelabelSet relabellings(const FiberConfig& c) {
  RelabelSet out;
  std::map<Int, std::vector<int>> classes;
  for (int i = 0; i < 6; ++i) classes[c.n[static_cast<size_t>(i)]].push_back(i);
  out.perms.push_back({0, 1, 2, 3, 4, 5});
  for (const auto& [value, idx] : classes) {
    if (idx.size() < 2) continue;
    std::vector<int> arrangement = idx;
    std::vector<std::vector<int>> expanded;
    do {
      for (std::vector<int> p : out.perms) {
        for (size_t k = 0; k < idx.size(); ++k)
          p[static_cast<size_t>(idx[k])] = arrangement[k];
        expanded.push_back(std::move(p));
      }
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    out.perms = std::move(expanded);
  }
  for (int i = 0; i < 6; ++i)
    if (c.n[static_cast<size_t>(i)] >= 3) out.flippable.push_back(i);
  return out;
}

Elt apply_relabelling(const FiberConfig& c, const Elt& e,
                      const std::vector<int>& perm, unsigned mask,
                      const std::vector<int>& flippable) {
  Elt t(6);
  for (int i = 0; i < 6; ++i)
    t[static_cast<size_t>(i)] = e[static_cast<size_t>(perm[static_cast<size_t>(i)])];
  for (size_t k = 0; k < flippable.size(); ++k) {
    if (!(mask & (1u << k))) continue;
    size_t i = static_cast<size_t>(flippable[k]);
    if (t[i] != 0) t[i] = c.n[i] - t[i];
  }
  return t;
}

Elt normalize_elt(const FiberConfig& c, const Elt& e, const RelabelSet& rl) {
  Elt best;
  bool have = false;
  for (const auto& perm : rl.perms)
    for (unsigned mask = 0; mask < (1u << rl.flippable.size()); ++mask) {
      Elt t = apply_relabelling(c, e, perm, mask, rl.flippable);
      if (!have || t < best) {
        best = std::move(t);
        have = true;
      }
    }
  return best;
}

std::vector<Elt> normalize_group(const FiberConfig& c, const std::vector<Elt>& elts,
                                 const RelabelSet& rl) {
  std::vector<Elt> best;
  bool have = false;
  for (const auto& perm : rl.perms)
    for (unsigned mask = 0; mask < (1u << rl.flippable.size()); ++mask) {
      std::vector<Elt> image;
      image.reserve(elts.size());
      for (const Elt& e : elts)
        image.push_back(apply_relabelling(c, e, perm, mask, rl.flippable));
      std::sort(image.begin(), image.end());
      if (!have || image < best) {
        best = std::move(image);
        have = true;
      }
    }
  return best;
}

Elt add_elts(const FiberConfig& c, const Elt& x, const Elt& y) {
  Elt r(6);
  for (size_t i = 0; i < 6; ++i) r[i] = mod_n(x[i] + y[i], c.n[i]);
  return r;
}

std::set<Elt> close_subgroup(const FiberConfig& c, const std::set<Elt>& seed) {
  std::set<Elt> out = seed;
  out.insert(Elt(6, Int(0)));
  std::vector<Elt> frontier(out.begin(), out.end());
  while (!frontier.empty()) {
    Elt cur = frontier.back();
    frontier.pop_back();
    for (const Elt& g : seed) {
      Elt nxt = add_elts(c, cur, g);
      if (out.insert(nxt).second) frontier.push_back(nxt);
    }
  }
  return out;
}

Int elt_order(const FiberConfig& c, const Elt& e) {
  Int order = 1;
  for (size_t i = 0; i < 6; ++i)
    order = lcm(order, component_order(e[i], c.n[i]));
  return order;
}

std::vector<Elt> greedy_generators(const FiberConfig& c, const std::vector<Elt>& elts) {
  std::vector<Elt> gens;
  std::set<Elt> span{Elt(6, Int(0))};
  while (span.size() < elts.size()) {
    const Elt* pick = nullptr;
    Int pick_order = 0;
    for (const Elt& e : elts) {
      if (span.count(e)) continue;
      Int o = elt_order(c, e);
      if (pick == nullptr || o > pick_order || (o == pick_order && e < *pick)) {
        pick = &e;
        pick_order = o;
      }
    }
    gens.push_back(*pick);
    std::set<Elt> seed(gens.begin(), gens.end());
    span = close_subgroup(c, seed);
  }
  return gens;
}

bool is_prime_int(const Int& p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<Int> json_tuple(const nlohmann::json& j) {
  std::vector<Int> out;
  for (const auto& v : j) out.push_back(Int(v.get<long>()));
  return out;
}

}  // namespace

FiberConfig fiber_config(const std::vector<Int>& n) {
  FiberConfig c{n};
  validate_config(c);
  for (size_t i = 1; i < c.n.size(); ++i)
    if (c.n[i] < c.n[i - 1]) throw value_error("configuration must be ascending");
  return c;
}

Rat contribution(const FiberConfig& c, const SectionTuple& s) {
  validate_config(c);
  Elt a = reduced_tuple(c, s);
  Rat total(0);
  for (size_t i = 0; i < 6; ++i) total += frac(a[i] * (c.n[i] - a[i]), c.n[i]);
  return total;
}

Int section_order(const FiberConfig& c, const SectionTuple& s) {
  validate_config(c);
  return elt_order(c, reduced_tuple(c, s));
}

bool is_torsion_candidate(const FiberConfig& c, const SectionTuple& s) {
  validate_config(c);
  Elt a = reduced_tuple(c, s);
  if (is_zero(a)) return false;
  return contribution(c, s) == 4;
}

SectionTuple relabel_normalize(const FiberConfig& c, const SectionTuple& s) {
  validate_config(c);
  RelabelSet rl = relabellings(c);
  return SectionTuple{normalize_elt(c, reduced_tuple(c, s), rl)};
}

std::vector<TorsionGroup> enumerate_torsion_groups(const FiberConfig& c) {
  validate_config(c);
  std::vector<Elt> cands;
  Elt cur(6, Int(0));
  while (true) {
    if (!is_zero(cur) && contribution(c, SectionTuple{cur}) == 4) cands.push_back(cur);
    size_t i = 0;
    while (i < 6) {
      cur[i] += 1;
      if (cur[i] < c.n[i]) break;
      cur[i] = 0;
      ++i;
    }
    if (i == 6) break;
  }
  std::set<Elt> candset(cands.begin(), cands.end());

  std::set<std::vector<Elt>> seen;
  std::vector<std::vector<Elt>> subgroups;
  auto record_and_descend = [&](auto&& self, const std::set<Elt>& group,
                                size_t start) -> void {
    subgroups.emplace_back(group.begin(), group.end());
    for (size_t j = start; j < cands.size(); ++j) {
      if (group.count(cands[j])) continue;
      std::set<Elt> seed = group;
      seed.insert(cands[j]);
      std::set<Elt> closure = close_subgroup(c, seed);
      bool all_candidates = true;
      for (const Elt& e : closure)
        if (!is_zero(e) && !candset.count(e)) {
          all_candidates = false;
          break;
        }
      if (!all_candidates) continue;
      std::vector<Elt> key(closure.begin(), closure.end());
      if (!seen.insert(key).second) continue;
      self(self, closure, j + 1);
    }
  };
  std::set<Elt> trivial{Elt(6, Int(0))};
  seen.insert(std::vector<Elt>(trivial.begin(), trivial.end()));
  record_and_descend(record_and_descend, trivial, 0);

  RelabelSet rl = relabellings(c);
  std::set<std::vector<Elt>> canonical;
  for (const auto& g : subgroups) canonical.insert(normalize_group(c, g, rl));

  std::vector<TorsionGroup> out;
  for (const auto& elts : canonical) {
    TorsionGroup g;
    for (const Elt& e : elts) g.elements.push_back(SectionTuple{e});
    for (const Elt& e : greedy_generators(c, elts)) g.generators.push_back(SectionTuple{e});
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [](const TorsionGroup& x, const TorsionGroup& y) {
    if (x.elements.size() != y.elements.size())
      return x.elements.size() < y.elements.size();
    for (size_t i = 0; i < x.elements.size(); ++i) {
      if (x.elements[i].a != y.elements[i].a) return x.elements[i].a < y.elements[i].a;
    }
    return false;
  });
  return out;
}

FiberConfig quotient_config(const FiberConfig& c, const SectionTuple& s) {
  validate_config(c);
  if (!is_torsion_candidate(c, s)) throw value_error("section is not a torsion candidate");
  Elt a = reduced_tuple(c, s);
  Int p = elt_order(c, a);
  if (!is_prime_int(p)) throw value_error("section order is not prime");
  FiberConfig out;
  for (size_t i = 0; i < 6; ++i) {
    if (a[i] == 0) {
      out.n.push_back(p * c.n[i]);
    } else {
      if (component_order(a[i], c.n[i]) != p)
        throw value_error("nonzero component whose order in Z/n_i is not p");
      out.n.push_back(c.n[i] / p);
    }
  }
  std::sort(out.n.begin(), out.n.end());
  Int total = 0;
  for (const Int& v : out.n) total += v;
  if (total != 24) throw value_error("quotient configuration total is not 24");
  return out;
}

Rat shioda_tate_det(const FiberConfig& c, const Int& mw_order) {
  validate_config(c);
  if (mw_order < 1) throw value_error("group order must be positive");
  Int prod = 1;
  for (const Int& v : c.n) prod *= v;
  return frac(prod, mw_order * mw_order);
}

Lattice trivial_mw_picard(const FiberConfig& c) {
  validate_config(c);
  Lattice out = hyperbolic_plane();
  for (const Int& v : c.n) {
    if (v < 2) continue;
    out = direct_sum(out, root_lattice('A', static_cast<int>(v.get_si()) - 1));
  }
  return out;
}

TableReport theorem_table_check(const nlohmann::json& catalog) {
  TableReport report;
  try {
    std::map<int, FiberConfig> configs_by_m;
    for (const auto& row : catalog.at("rows")) {
      RowReport r;
      r.m = row.at("m").get<int>();
      r.config = FiberConfig{json_tuple(row.at("config"))};
      try {
        r.config = fiber_config(r.config.n);
        r.config_ok = true;
      } catch (const value_error&) {
        r.config_ok = false;
      }
      configs_by_m[r.m] = r.config;
      std::vector<TorsionGroup> groups;
      if (r.config_ok) groups = enumerate_torsion_groups(r.config);
      RelabelSet rl = relabellings(r.config);
      r.listed_subset_of_candidates = r.config_ok;
      for (const auto& gj : row.at("groups")) {
        GroupCheck gc;
        gc.name = gj.at("name").get<std::string>();
        gc.order = Int(gj.at("order").get<long>());
        for (const TorsionGroup& g : groups) {
          if (g.order() != gc.order) continue;
          bool cyclic = false;
          for (const SectionTuple& e : g.elements)
            if (elt_order(r.config, e.a) == gc.order) cyclic = true;
          if (!cyclic) continue;
          if (gj.contains("generator")) {
            Elt want = normalize_elt(r.config,
                                     reduced_tuple(r.config, SectionTuple{json_tuple(gj.at("generator"))}),
                                     rl);
            bool contains = false;
            for (const SectionTuple& e : g.elements)
              if (normalize_elt(r.config, e.a, rl) == want) contains = true;
            if (!contains) continue;
          }
          gc.cyclic_candidate_found = true;
          break;
        }
        if (gj.contains("generator")) gc.generator_matches = gc.cyclic_candidate_found;
        if (!gc.cyclic_candidate_found) r.listed_subset_of_candidates = false;
        r.groups.push_back(std::move(gc));
      }
      r.ok = r.config_ok && r.listed_subset_of_candidates;
      report.rows.push_back(std::move(r));
    }
    if (catalog.contains("exclusions")) {
      for (const auto& ex : catalog.at("exclusions")) {
        ExclusionCheck ec;
        ec.m = ex.at("m").get<int>();
        auto it = configs_by_m.find(ec.m);
        if (it == configs_by_m.end()) throw value_error("malformed catalog: exclusion references a missing row");
        const FiberConfig& cfg = it->second;
        SectionTuple s{json_tuple(ex.at("section"))};
        ec.section_ok = is_torsion_candidate(cfg, s);
        FiberConfig stated{json_tuple(ex.at("quotient_ordered"))};
        validate_config(stated);
        if (ec.section_ok) {
          FiberConfig q = quotient_config(cfg, s);
          std::vector<Int> sorted_stated = stated.n;
          std::sort(sorted_stated.begin(), sorted_stated.end());
          ec.quotient_matches = q.n == sorted_stated;
        }
        for (const auto& ind : ex.at("induced_sections")) {
          SectionCheck sc;
          sc.tuple = json_tuple(ind.at("tuple"));
          sc.stated_order = Int(ind.at("order").get<long>());
          SectionTuple t{sc.tuple};
          sc.candidate = is_torsion_candidate(stated, t);
          sc.order_matches = section_order(stated, t) == sc.stated_order;
          ec.induced.push_back(std::move(sc));
        }
        ec.ok = ec.section_ok && ec.quotient_matches;
        for (const SectionCheck& sc : ec.induced)
          ec.ok = ec.ok && sc.candidate && sc.order_matches;
        report.exclusions.push_back(std::move(ec));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw value_error(std::string("malformed catalog: ") + e.what());
  }
  report.ok = true;
  for (const RowReport& r : report.rows) report.ok = report.ok && r.ok;
  for (const ExclusionCheck& ec : report.exclusions) report.ok = report.ok && ec.ok;
  return report;
}

}  // namespace k3x
