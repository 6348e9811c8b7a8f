#include "cgt/carter.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>

#include "cgt/backtrack.hpp"
#include "cgt/induced_aut.hpp"
#include "cgt/quotient.hpp"
#include "cgt/subgroup.hpp"

namespace cgt {

VerifyCarterResult verify_carter(const PermGroup& g, const PermGroup& k, const Engine& eng) {
  VerifyCarterResult out;
  for (const auto& x : k.generators())
    if (!g.contains(x)) {
      out.failure = "not a subgroup of the ambient group";
      return out;
    }
  SeriesData lcs = lower_central_series(k);
  for (const auto& t : lcs.terms) out.certificate.lower_central_orders.push_back(t.order());
  if (!lcs.reached_trivial) {
    out.failure = "not nilpotent";
    return out;
  }
  PermGroup n = normalizer(g, k, eng);
  out.certificate.normalizer_order = n.order();
  if (n.order() != k.order()) {
    out.failure = "not self-normalizing (normalizer has order " + std::to_string(n.order()) + ")";
    return out;
  }
  out.ok = true;
  return out;
}

// ---------------------------------------------------------------------------
// solvable case

namespace {

// Solvability guarantees a minimal normal subgroup is elementary abelian;
// checked rather than assumed.
std::uint64_t elementary_abelian_prime(const PermGroup& y, const std::string& phase) {
  auto primes = prime_factors(y.order());
  if (primes.size() != 1) throw group_error(phase, "minimal normal subgroup is not a p-group");
  for (const auto& a : y.generators()) {
    if (a.order() != primes[0]) throw group_error(phase, "minimal normal subgroup is not elementary abelian");
    for (const auto& b : y.generators())
      if (a * b != b * a) throw group_error(phase, "minimal normal subgroup is not abelian");
  }
  return primes[0];
}

}  // namespace

PermGroup carter_solvable(const PermGroup& g, const Engine& eng) {
  if (!is_solvable(g)) throw group_error("carter-solvable", "input group is not solvable");
  if (is_nilpotent(g)) return g;
  PermGroup y = smallest_minimal_normal(g, eng);
  std::uint64_t p = elementary_abelian_prime(y, "carter-solvable");
  QuotientData q = quotient_group(g, y, eng);
  PermGroup kbar = carter_solvable(q.image(), eng);
  PermGroup k1 = q.preimage(kbar);
  PermGroup hall = hall_pprime_solvable(k1, p, eng);
  return normalizer(k1, hall, eng).with_reduced_generators();
}

// ---------------------------------------------------------------------------
// nilpotent subgroup enumeration

namespace {

// Cheap isomorphism-invariant key: order, orbit sizes, element orders.
std::string fingerprint(const PermGroup& k) {
  std::ostringstream os;
  os << k.order() << '|';
  auto colors = k.orbit_size_colors();
  std::sort(colors.begin(), colors.end());
  for (int c : colors) os << c << ',';
  os << '|';
  if (k.order() <= 2048) {
    std::vector<std::uint64_t> orders;
    for (const auto& e : k.elements(2048)) orders.push_back(e.order());
    std::sort(orders.begin(), orders.end());
    for (auto o : orders) os << o << ',';
  } else {
    std::vector<std::uint64_t> orders;
    for (const auto& e : k.generators()) orders.push_back(e.order());
    std::sort(orders.begin(), orders.end());
    for (auto o : orders) os << o << ',';
  }
  return os.str();
}

std::uint64_t least_coset_prime(const Permutation& y, const PermGroup& h) {
  std::uint64_t o = y.order();
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d * d <= o; ++d)
    if (o % d == 0) {
      divisors.push_back(d);
      divisors.push_back(o / d);
    }
  std::sort(divisors.begin(), divisors.end());
  divisors.erase(std::unique(divisors.begin(), divisors.end()), divisors.end());
  for (std::uint64_t d : divisors)
    if (h.contains(y.power(static_cast<std::int64_t>(d)))) return d;
  return o;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool group_less(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  std::vector<std::vector<int>> ka, kb;
  for (const auto& g : a.generators()) ka.push_back(g.images());
  for (const auto& g : b.generators()) kb.push_back(g.images());
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka < kb;
}

}  // namespace

NilpotentEnumResult nilpotent_subgroups_enum(const PermGroup& g, const Engine& eng) {
  if (g.order() > eng.limits.enum_order_fingerprint)
    throw capacity_error("nilpotent-enum", "order " + std::to_string(g.order()) + " exceeds the enumeration budget " +
                                               std::to_string(eng.limits.enum_order_fingerprint));
  NilpotentEnumResult out;
  out.classes.push_back(PermGroup(g.degree(), {}, g.limits()));
  // fingerprint -> indices into accepted/rejected pools
  std::map<std::string, std::vector<std::size_t>> accepted_fp, rejected_fp;
  std::vector<PermGroup> rejected;
  accepted_fp[fingerprint(out.classes[0])].push_back(0);

  auto known = [&](const PermGroup& k, const std::string& fp, const std::map<std::string, std::vector<std::size_t>>& pool_fp,
                   const std::vector<PermGroup>& pool) {
    auto it = pool_fp.find(fp);
    if (it == pool_fp.end()) return false;
    for (std::size_t idx : it->second)
      if (conjugating_element(g, pool[idx], k, eng).has_value()) return true;
    return false;
  };

  for (std::size_t qi = 0; qi < out.classes.size(); ++qi) {
    PermGroup h = out.classes[qi];
    PermGroup n = normalizer(g, h, eng);
    auto elems = n.elements(eng.limits.element_list);
    std::sort(elems.begin(), elems.end());
    for (const auto& y : elems) {
      if (h.contains(y)) continue;
      std::uint64_t e = least_coset_prime(y, h);
      if (!is_prime_u64(e)) continue;
      PermGroup k = h.extended_with({y}).with_reduced_generators();
      std::string fp = fingerprint(k);
      if (known(k, fp, accepted_fp, out.classes) || known(k, fp, rejected_fp, rejected)) continue;
      if (is_nilpotent(k)) {
        accepted_fp[fp].push_back(out.classes.size());
        out.classes.push_back(std::move(k));
      } else {
        rejected_fp[fp].push_back(rejected.size());
        rejected.push_back(std::move(k));
      }
      if (out.classes.size() + rejected.size() > 250000) {
        out.complete = false;
        return out;
      }
    }
  }
  std::sort(out.classes.begin(), out.classes.end(), group_less);
  return out;
}

std::vector<PermGroup> brute_force_carter(const PermGroup& g, const Engine& eng, std::vector<std::string>* flags) {
  NilpotentEnumResult enumerated = nilpotent_subgroups_enum(g, eng);
  if (!enumerated.complete) throw capacity_error("brute-carter", "nilpotent enumeration exhausted its budget");
  std::vector<PermGroup> out;
  for (const auto& h : enumerated.classes)
    if (normalizer(g, h, eng).order() == h.order()) out.push_back(h);
  if (out.size() > 1 && flags)
    flags->push_back("conjugacy violation: " + std::to_string(out.size()) +
                     " Carter classes found in a group of order " + std::to_string(g.order()));
  return out;
}

// ---------------------------------------------------------------------------
// existence decision

namespace {

std::optional<PermGroup> self_normalizing_sylow(const PermGroup& g, const Engine& eng) {
  for (std::uint64_t p : prime_factors(g.order())) {
    PermGroup syl = sylow_subgroup(g, p, eng);
    if (normalizer(g, syl, eng).order() == syl.order()) return syl;
  }
  return std::nullopt;
}

std::string label_or_order(const PermGroup& g, const Engine& eng) {
  try {
    return identify_simple_factor(g, eng).to_string();
  } catch (const group_error&) {
    return "group of order " + std::to_string(g.order());
  }
}

struct CarterCtx {
  const Engine& eng;
  std::vector<std::string> flags;
  int depth = 0;
};

CarterOutcome find_impl(const PermGroup& g, CarterCtx& ctx, const GroupHints& hints);

CarterOutcome outcome_exists(const PermGroup& g, PermGroup k, CarterCtx& ctx) {
  CarterOutcome out;
  VerifyCarterResult v = verify_carter(g, k, ctx.eng);
  if (!v.ok) throw group_error("carter-find", "constructed subgroup failed verification: " + v.failure);
  out.exists = true;
  out.subgroup = std::move(k);
  out.certificate = v.certificate;
  return out;
}

GroupHints hints_for_subgroup(const PermGroup& sub, const GroupHints& hints, const PermGroup& extra_normal) {
  GroupHints out;
  if (!extra_normal.is_trivial()) out.normal_subgroups.push_back(extra_normal);
  for (const auto& n : hints.normal_subgroups)
    if (n.order() < sub.order() && sub.contains_group(n)) out.normal_subgroups.push_back(n);
  for (const auto& t : hints.socle_factors)
    if (sub.contains_group(t)) out.socle_factors.push_back(t);
  return out;
}

CarterOutcome find_impl_body(const PermGroup& g, CarterCtx& ctx, const GroupHints& hints);

// capacity failures in the recursion are re-thrown with the path attached
CarterOutcome find_impl(const PermGroup& g, CarterCtx& ctx, const GroupHints& hints) {
  try {
    return find_impl_body(g, ctx, hints);
  } catch (capacity_error& e) {
    throw capacity_error(e.phase(), std::string(e.what()) + " [recursion depth " + std::to_string(ctx.depth) +
                                        ", group of order " + std::to_string(g.order()) + " on " +
                                        std::to_string(g.degree()) + " points]");
  }
}

CarterOutcome find_impl_body(const PermGroup& g, CarterCtx& ctx, const GroupHints& hints) {
  if (ctx.depth > 64) throw group_error("carter-find", "recursion depth exceeded");
  ctx.depth++;
  struct DepthGuard {
    CarterCtx& c;
    ~DepthGuard() { c.depth--; }
  } guard{ctx};

  if (is_nilpotent(g)) return outcome_exists(g, g, ctx);
  if (is_solvable(g)) return outcome_exists(g, carter_solvable(g, ctx.eng), ctx);

  GroupHints local = hints;
  local.normal_subgroups.push_back(g);  // fallback start for probing descent
  PermGroup h = smallest_minimal_normal(g, ctx.eng, local);

  QuotientData q = quotient_group(g, h, ctx.eng);
  GroupHints qhints;
  for (const auto& n : hints.normal_subgroups)
    if (n.order() > h.order() && n.contains_group(h)) qhints.normal_subgroups.push_back(q.image_of(n));
  CarterOutcome above = find_impl(q.image(), ctx, qhints);
  if (!above.exists) {
    above.witness->where = "quotient by a minimal normal subgroup of order " + std::to_string(h.order()) + "; " +
                           above.witness->where;
    return above;
  }

  PermGroup k = q.preimage(*above.subgroup).with_reduced_generators();
  if (k.order() < g.order()) {
    CarterOutcome inner = find_impl(k, ctx, hints_for_subgroup(k, hints, h));
    if (!inner.exists) {
      inner.witness->where = "preimage of the quotient Carter subgroup; " + inner.witness->where;
      return inner;
    }
    return outcome_exists(g, *inner.subgroup, ctx);
  }

  // here G/H is nilpotent and H is nonabelian (abelian H would make G solvable)
  PermGroup cent = centralizer(g, h, ctx.eng);
  if (!cent.is_trivial()) {
    QuotientData qc = quotient_group(g, cent, ctx.eng);
    CarterOutcome above_c = find_impl(qc.image(), ctx, {});
    if (!above_c.exists) {
      above_c.witness->where = "quotient by the socle centralizer; " + above_c.witness->where;
      return above_c;
    }
    PermGroup pre = qc.preimage(*above_c.subgroup);
    if (!is_solvable(pre))
      throw group_error("carter-find", "preimage over a nilpotent centralizer is expected to be solvable");
    return outcome_exists(g, carter_solvable(pre, ctx.eng), ctx);
  }

  auto factors = split_minimal_normal(g, h, ctx.eng, local);
  if (factors.size() == 1) {
    // base case: G embeds into the automorphisms of one simple group
    if (auto syl = self_normalizing_sylow(g, ctx.eng)) return outcome_exists(g, *syl, ctx);
    auto classes = brute_force_carter(g, ctx.eng, &ctx.flags);
    if (!classes.empty()) return outcome_exists(g, classes.front(), ctx);
    CarterOutcome out;
    out.exists = false;
    CarterWitness w;
    w.where = "enumeration over " + label_or_order(g, ctx.eng);
    w.group = g;
    w.label = label_or_order(g, ctx.eng);
    w.brute_confirmed = true;
    out.witness = std::move(w);
    return out;
  }

  WreathEmbedData wd = wreath_embed(g, factors, ctx.eng);
  GroupHints ahints;
  ahints.normal_subgroups.push_back(h);
  for (const auto& t : factors) {
    ahints.normal_subgroups.push_back(t);
    ahints.socle_factors.push_back(t);
  }
  CarterOutcome diag = find_impl(wd.g_cap_a, ctx, ahints);
  if (!diag.exists) {
    diag.witness->where = "block-diagonal part of the wreath embedding; " + diag.witness->where;
    return diag;
  }

  // R = product over i of (M^{pi_i} n T_i), pulled back to the full degree
  std::vector<Permutation> r_gens;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    PermGroup ki_local = wd.project(*diag.subgroup, static_cast<int>(i));
    PermGroup ti_local = wd.project(factors[i], static_cast<int>(i));
    auto elems = ki_local.elements(ctx.eng.limits.element_list);
    std::vector<Permutation> inter;
    for (const auto& x : elems)
      if (!x.is_identity() && ti_local.contains(x)) inter.push_back(x);
    PermGroup inter_grp = PermGroup(ki_local.degree(), inter, ki_local.limits()).with_reduced_generators();
    for (const auto& x : inter_grp.generators()) r_gens.push_back(wd.unproject(x, static_cast<int>(i)));
  }
  PermGroup nm = normalizer(g, *diag.subgroup, ctx.eng);
  PermGroup s = nm.extended_with(r_gens);
  if (!is_solvable(s))
    throw group_error("carter-find", "normalizer-times-socle-intersection is expected to be solvable");
  return outcome_exists(g, carter_solvable(s, ctx.eng), ctx);
}

}  // namespace

CarterOutcome carter_find(const PermGroup& g, const Engine& eng, const GroupHints& hints) {
  CarterCtx ctx{eng, {}, 0};
  CarterOutcome out = find_impl(g, ctx, hints);
  out.flags = std::move(ctx.flags);
  return out;
}

// ---------------------------------------------------------------------------
// condition (E)

namespace {

struct CellDecision {
  bool exists = false;
  std::string method;
};

CellDecision decide_carter_exists(const PermGroup& w, const Engine& eng, std::vector<std::string>& flags) {
  CellDecision out;
  if (is_nilpotent(w)) {
    out.exists = true;
    out.method = "nilpotent";
    return out;
  }
  if (is_solvable(w)) {
    out.exists = true;
    out.method = "solvable";
    return out;
  }
  if (self_normalizing_sylow(w, eng).has_value()) {
    out.exists = true;
    out.method = "sylow";
    return out;
  }
  if (w.order() <= eng.limits.enum_order_fingerprint) {
    out.exists = !brute_force_carter(w, eng, &flags).empty();
    out.method = "brute";
    return out;
  }
  CarterOutcome rec = carter_find(w, eng);
  out.exists = rec.exists;
  out.method = "recursion";
  return out;
}

}  // namespace

ConditionEReport check_condition_E(const PermGroup& g, const ChiefSeriesData& series, const Engine& eng) {
  ConditionEReport report;
  if (series.terms.empty() || !series.terms.front().same_group_as(g) || !series.terms.back().is_trivial())
    throw group_error("condition-e", "chief series endpoints do not match the group");

  int n_levels = static_cast<int>(series.factors.size());
  for (int i = 0; i < n_levels; ++i) {
    QuotientData q_below = quotient_group(g, series.terms[i + 1], eng);
    PermGroup g_i_bar = q_below.image_of(series.terms[i]);

    PermGroup k_i = g_i_bar;  // complete preimage of the trivial group at i == 0
    bool kbar_exists = true;
    if (i > 0) {
      QuotientData q_top = quotient_group(q_below.image(), g_i_bar, eng);
      GroupHints top_hints;
      for (int j = 0; j < i; ++j) top_hints.normal_subgroups.push_back(q_top.image_of(q_below.image_of(series.terms[j])));
      CarterOutcome above = carter_find(q_top.image(), eng, top_hints);
      for (auto& f : above.flags) report.flags.push_back(f);
      if (!above.exists) {
        kbar_exists = false;
        report.level_notes.push_back("level " + std::to_string(i) +
                                     ": no Carter subgroup above this level; cells pass vacuously");
      } else {
        k_i = q_top.preimage(*above.subgroup).with_reduced_generators();
      }
    }
    if (!kbar_exists) continue;
    report.level_notes.push_back("level " + std::to_string(i) + ": lifted Carter subgroup of order " +
                                 std::to_string(k_i.order()));

    // cells of this level; conjugate factors inherit the decision of the
    // factor a K_i-generator maps onto them
    int k_count = series.factors[i].multiplicity;
    std::vector<PermGroup> section_groups;
    std::vector<int> source(k_count, -1);      // transfer source, or -1
    std::vector<int> distinct;                 // indices deciding for themselves
    for (int j = 0; j < k_count; ++j) {
      PermGroup t_ij = q_below.image_of(series.factors[i].factor_preimages[j]);
      for (int dj : distinct) {
        bool found = false;
        for (const auto& x : k_i.generators()) {
          bool match = section_groups[dj].order() == t_ij.order();
          for (const auto& s : section_groups[dj].generators()) {
            if (!match) break;
            if (!t_ij.contains(s.conjugated_by(x))) match = false;
          }
          if (match) {
            found = true;
            break;
          }
        }
        if (found) {
          source[j] = dj;
          break;
        }
      }
      if (source[j] == -1) distinct.push_back(j);
      section_groups.push_back(std::move(t_ij));
    }

    std::vector<InducedAutResult> auts(k_count);
    std::vector<CellDecision> decisions(k_count);
    std::vector<std::vector<std::string>> cell_flags(k_count);
    auto run_cell = [&](int j) {
      Section sec{q_below.image(), section_groups[j], PermGroup(q_below.image().degree(), {}, g.limits())};
      auts[j] = induced_aut(k_i, sec, eng);
      decisions[j] = decide_carter_exists(auts[j].aut, eng, cell_flags[j]);
    };
    if (eng.threads > 1 && distinct.size() > 1) {
      std::vector<std::future<void>> futures;
      for (int j : distinct) futures.push_back(std::async(std::launch::async, run_cell, j));
      for (auto& f : futures) f.get();
    } else {
      for (int j : distinct) run_cell(j);
    }
    for (int j : distinct)
      for (const auto& f : cell_flags[j]) report.flags.push_back(f);

    for (int j = 0; j < k_count; ++j) {
      int src = source[j] == -1 ? j : source[j];
      ConditionECell cell;
      cell.level = i;
      cell.factor = j;
      cell.aut_order = auts[src].aut.order();
      cell.method = source[j] == -1 ? decisions[src].method
                                    : decisions[src].method + " (transferred along a conjugation)";
      cell.exists = decisions[src].exists;
      report.cells.push_back(cell);
      if (!cell.exists) {
        CarterWitness w;
        w.where = "chief level " + std::to_string(i) + ", factor " + std::to_string(j);
        w.group = auts[src].aut;
        w.label = label_or_order(auts[src].aut, eng);
        w.brute_confirmed = decisions[src].method == "brute";
        report.witness = std::move(w);
        report.satisfied = false;
        return report;
      }
    }
  }
  report.satisfied = true;
  return report;
}

}  // namespace cgt
