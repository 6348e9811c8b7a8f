#include "cgt/series.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cgt/backtrack.hpp"
#include "cgt/quotient.hpp"
#include "cgt/subgroup.hpp"

namespace cgt {

namespace {

bool is_normal_in(const PermGroup& g, const PermGroup& n) {
  for (const auto& x : g.generators())
    for (const auto& a : n.generators())
      if (!n.contains(a.conjugated_by(x))) return false;
  return true;
}

// Deterministic ordering: smaller order first, then the lexicographically
// least generator image list.
bool group_less(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  std::vector<std::vector<int>> ka, kb;
  for (const auto& g : a.generators()) ka.push_back(g.images());
  for (const auto& g : b.generators()) kb.push_back(g.images());
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka < kb;
}

// Canonical generator of a prime-order cyclic subgroup: the least of the
// nontrivial powers.
Permutation canonical_cyclic_gen(const Permutation& x) {
  Permutation best = x;
  Permutation cur = x * x;
  while (!cur.is_identity()) {
    if (cur < best) best = cur;
    cur = cur * x;
  }
  return best;
}

// All distinct normal closures of prime-order cyclic subgroups generated by
// elements of `inside`, closures taken under conjugation by `amb`.
std::vector<PermGroup> prime_element_closures(const PermGroup& amb, const PermGroup& inside, std::uint64_t cap) {
  auto elems = inside.elements(cap);
  std::set<Permutation> seen_gens;
  std::vector<PermGroup> closures;
  for (const auto& x : elems) {
    if (x.is_identity()) continue;
    std::uint64_t o = x.order();
    auto ps = prime_factors(o);
    Permutation y = x.power(static_cast<std::int64_t>(o / ps[0]));  // prime order
    Permutation canon = canonical_cyclic_gen(y);
    if (!seen_gens.insert(canon).second) continue;
    PermGroup cl = normal_closure(amb, PermGroup(amb.degree(), {canon}, amb.limits()));
    bool dup = false;
    for (const auto& c : closures)
      if (c.same_group_as(cl)) {
        dup = true;
        break;
      }
    if (!dup) closures.push_back(std::move(cl));
  }
  return closures;
}

std::vector<PermGroup> minimal_by_containment(std::vector<PermGroup> cands) {
  std::vector<PermGroup> out;
  for (const auto& c : cands) {
    bool minimal = true;
    for (const auto& d : cands)
      if (d.order() < c.order() && c.contains_group(d)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), group_less);
  return out;
}

// Probe a large normal subgroup for minimality with sampled closures;
// returns a proper nontrivial G-normal subgroup if one turns up.
std::optional<PermGroup> probe_for_smaller(const PermGroup& g, const PermGroup& n, const Engine& eng, int samples) {
  Rng rng(eng.seed);
  std::optional<PermGroup> best;
  auto consider = [&](const Permutation& x) {
    if (x.is_identity()) return;
    std::uint64_t o = x.order();
    Permutation y = x.power(static_cast<std::int64_t>(o / prime_factors(o)[0]));
    PermGroup cl = normal_closure(g, PermGroup(g.degree(), {y}, g.limits()));
    if (cl.order() < n.order() && (!best || cl.order() < best->order())) best = cl;
  };
  for (const auto& x : n.generators()) consider(x);
  for (int i = 0; i < samples; ++i) consider(n.random_element(rng));
  return best;
}

}  // namespace

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g, const Engine& eng, const GroupHints& hints) {
  if (g.is_trivial()) return {};
  if (g.order() <= eng.limits.enum_order)
    return minimal_by_containment(prime_element_closures(g, g, eng.limits.enum_order));

  // beyond the enumeration budget, hinted normal subgroups are walked down
  // to minimal ones by sampled closure probing
  std::vector<PermGroup> cands;
  for (const auto& hint : hints.normal_subgroups) {
    if (hint.is_trivial() || !is_normal_in(g, hint)) continue;
    PermGroup cur = hint;
    for (;;) {
      if (cur.order() <= eng.limits.enum_order) {
        auto closures = prime_element_closures(g, cur, eng.limits.enum_order);
        cands.insert(cands.end(), closures.begin(), closures.end());
        break;
      }
      auto smaller = probe_for_smaller(g, cur, eng, 50);
      if (!smaller) {
        cands.push_back(cur);
        break;
      }
      cur = *smaller;
    }
  }
  if (cands.empty())
    throw capacity_error("minimal-normal",
                         "order " + std::to_string(g.order()) + " exceeds the enumeration budget and no usable hints");
  std::vector<PermGroup> dedup;
  for (auto& c : cands) {
    bool dup = false;
    for (const auto& d : dedup)
      if (d.same_group_as(c)) {
        dup = true;
        break;
      }
    if (!dup) dedup.push_back(std::move(c));
  }
  return minimal_by_containment(std::move(dedup));
}

PermGroup smallest_minimal_normal(const PermGroup& g, const Engine& eng, const GroupHints& hints) {
  auto all = minimal_normal_subgroups(g, eng, hints);
  if (all.empty()) throw group_error("minimal-normal", "trivial group has no minimal normal subgroup");
  return all.front();  // sorted by (order, generator list)
}

// ---------------------------------------------------------------------------
// chief series

namespace {

std::vector<PermGroup> chain_from_hints(const PermGroup& g, const GroupHints& hints) {
  std::vector<PermGroup> cands;
  for (const auto& h : hints.normal_subgroups) {
    if (h.is_trivial() || h.order() == g.order()) continue;
    if (!is_normal_in(g, h)) throw group_error("chief-series", "hinted subgroup is not normal");
    cands.push_back(h);
  }
  std::sort(cands.begin(), cands.end(), [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
  // greedy maximal chain; a totally ordered hint set passes through intact,
  // incomparable candidates are dropped deterministically
  std::vector<PermGroup> chain;
  for (auto& h : cands) {
    if (!chain.empty() && (chain.back().same_group_as(h) || !h.contains_group(chain.back()))) continue;
    chain.push_back(std::move(h));
  }
  chain.push_back(g);
  return chain;
}

// Minimal G-normal subgroup strictly above `bottom` and inside `top`,
// returned as a subgroup of g.
PermGroup next_chief_term(const PermGroup& g, const PermGroup& bottom, const PermGroup& top, const Engine& eng) {
  QuotientData q = quotient_group(g, bottom, eng);
  PermGroup top_bar = q.image_of(top);
  if (top_bar.order() <= eng.limits.enum_order) {
    auto closures = prime_element_closures(q.image(), top_bar, eng.limits.enum_order);
    auto mins = minimal_by_containment(std::move(closures));
    return q.preimage(mins.front());
  }
  PermGroup cur = top_bar;
  for (;;) {
    auto smaller = probe_for_smaller(q.image(), cur, eng, 50);
    if (!smaller) return q.preimage(cur);
    cur = *smaller;
    if (cur.order() <= eng.limits.enum_order) {
      auto closures = prime_element_closures(q.image(), cur, eng.limits.enum_order);
      auto mins = minimal_by_containment(std::move(closures));
      return q.preimage(mins.front());
    }
  }
}

// Greedy basis of an elementary abelian group, least elements first.
std::vector<Permutation> elementary_abelian_basis(const PermGroup& f, std::uint64_t p, std::uint64_t cap) {
  auto elems = f.elements(cap);
  std::sort(elems.begin(), elems.end());
  std::vector<Permutation> basis;
  PermGroup span(f.degree(), {}, f.limits());
  for (const auto& x : elems) {
    if (x.is_identity() || span.contains(x)) continue;
    if (x.order() != p) throw group_error("chief-series", "abelian chief factor is not elementary abelian");
    basis.push_back(x);
    span = span.extended_with({x});
    if (span.order() == f.order()) break;
  }
  return basis;
}

}  // namespace

std::vector<PermGroup> split_minimal_normal(const PermGroup& g, const PermGroup& h, const Engine& eng,
                                            const GroupHints& hints) {
  // hinted factors, validated: normal in h, orders multiply up to |h|
  if (!hints.socle_factors.empty()) {
    std::vector<PermGroup> fs;
    std::uint64_t prod = 1;
    bool ok = true;
    for (const auto& t : hints.socle_factors) {
      if (!h.contains_group(t) || !is_normal_in(h, t)) {
        ok = false;
        break;
      }
      prod *= t.order();
      fs.push_back(t);
    }
    if (ok && prod == h.order() && !fs.empty()) return fs;
  }

  if (h.order() <= eng.limits.enum_order) {
    auto mins = minimal_by_containment(prime_element_closures(h, h, eng.limits.enum_order));
    std::uint64_t prod = 1;
    for (const auto& t : mins) prod *= t.order();
    if (prod != h.order())
      throw group_error("chief-series", "factor decomposition mismatch inside a minimal normal subgroup");
    return mins;
  }

  // large nonabelian case: seed a factor as a double centralizer and close
  // under conjugation
  Rng rng(eng.seed);
  for (int tries = 0; tries < 20; ++tries) {
    Permutation x = h.random_element(rng);
    if (x.is_identity()) continue;
    std::uint64_t o = x.order();
    x = x.power(static_cast<std::int64_t>(o / prime_factors(o)[0]));
    PermGroup c1 = centralizer(h, x, eng);
    PermGroup t = centralizer(h, c1, eng);
    if (t.is_trivial() || t.order() == h.order()) continue;
    // probe t for simplicity
    bool simple = true;
    Rng rng2(eng.seed + 1);
    for (int s = 0; s < 20 && simple; ++s) {
      Permutation y = t.random_element(rng2);
      if (y.is_identity()) continue;
      PermGroup cl = normal_closure(t, PermGroup(t.degree(), {y}, t.limits()));
      if (cl.order() != t.order()) simple = false;
    }
    if (!simple) continue;
    // conjugates of t under g cover the remaining factors
    std::vector<PermGroup> factors{t};
    std::uint64_t prod = t.order();
    for (std::size_t i = 0; i < factors.size(); ++i) {
      for (const auto& s : g.generators()) {
        PermGroup img = factors[i].conjugated_by(s);
        bool known = false;
        for (const auto& f : factors)
          if (f.same_group_as(img)) {
            known = true;
            break;
          }
        if (!known) {
          prod *= img.order();
          factors.push_back(std::move(img));
        }
      }
    }
    if (prod == h.order()) {
      std::sort(factors.begin(), factors.end(), group_less);
      return factors;
    }
  }
  throw capacity_error("chief-series", "could not split a large minimal normal subgroup into simple factors");
}

ChiefSeriesData chief_series(const PermGroup& g, const Engine& eng, const GroupHints& hints) {
  ChiefSeriesData out;
  std::vector<PermGroup> asc{PermGroup(g.degree(), {}, g.limits())};
  for (const auto& target : chain_from_hints(g, hints)) {
    while (asc.back().order() < target.order())
      asc.push_back(next_chief_term(g, asc.back(), target, eng));
  }
  out.terms.assign(asc.rbegin(), asc.rend());

  for (std::size_t i = 0; i + 1 < out.terms.size(); ++i) {
    QuotientData q = quotient_group(g, out.terms[i + 1], eng);
    PermGroup fbar = q.image_of(out.terms[i]);
    ChiefFactor cf;
    cf.order = fbar.order();
    bool abelian = true;
    for (const auto& a : fbar.generators()) {
      for (const auto& b : fbar.generators())
        if (a * b != b * a) {
          abelian = false;
          break;
        }
      if (!abelian) break;
    }
    if (abelian) {
      std::uint64_t p = prime_factors(cf.order)[0];
      auto basis = elementary_abelian_basis(fbar, p, eng.limits.element_list);
      cf.multiplicity = static_cast<int>(basis.size());
      for (const auto& b : basis)
        cf.factor_preimages.push_back(q.preimage(PermGroup(fbar.degree(), {b}, fbar.limits())));
      cf.label = identify_simple_factor(PermGroup(fbar.degree(), {basis.front()}, fbar.limits()), eng);
    } else {
      GroupHints pushed;
      for (const auto& t : hints.socle_factors)
        if (out.terms[i].contains_group(t)) pushed.socle_factors.push_back(q.image_of(t));
      auto factors = split_minimal_normal(q.image(), fbar, eng, pushed);
      cf.multiplicity = static_cast<int>(factors.size());
      cf.label = identify_simple_factor(factors.front(), eng);
      for (const auto& t : factors) cf.factor_preimages.push_back(q.preimage(t));
    }
    out.factors.push_back(std::move(cf));
  }
  return out;
}

// ---------------------------------------------------------------------------
// simple type labels

namespace {

std::uint64_t psl2_order(std::uint64_t q) { return q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1); }

const std::uint64_t kAltOrders[] = {0, 1, 1, 3, 12, 60, 360, 2520, 20160, 181440};

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace

std::string SimpleTypeLabel::to_string() const {
  std::string s;
  switch (kind) {
    case Kind::cyclic:
      s = "cyclic " + std::to_string(parameter);
      break;
    case Kind::alternating:
      s = "alternating " + std::to_string(parameter);
      break;
    case Kind::psl2:
      s = "psl2 " + std::to_string(parameter);
      break;
    case Kind::other:
      s = "simple of order " + std::to_string(order);
      break;
  }
  for (const auto& a : aliases) s += " = " + a;
  if (ambiguous) s += " (order-ambiguous)";
  return s;
}

SimpleTypeLabel identify_simple_factor(const PermGroup& t, const Engine& eng) {
  // simplicity: every nontrivial normal closure is the whole group
  auto check = [&](const Permutation& x) {
    if (x.is_identity()) return;
    PermGroup cl = normal_closure(t, PermGroup(t.degree(), {x}, t.limits()));
    if (cl.order() != t.order()) {
      std::string wit;
      for (const auto& gen : cl.generators()) wit += gen.to_cycle_string() + " ";
      throw group_error("identify", "not simple; witness normal subgroup of order " + std::to_string(cl.order()) +
                                        " generated by " + wit);
    }
  };
  if (t.is_trivial()) throw group_error("identify", "trivial group is not simple");
  if (t.order() <= 5000) {
    for (const auto& cl : prime_element_closures(t, t, 5000))
      if (cl.order() != t.order())
        throw group_error("identify", "not simple; witness normal subgroup of order " + std::to_string(cl.order()));
  } else {
    Rng rng(eng.seed);
    for (const auto& x : t.generators()) check(x);
    for (int i = 0; i < 50; ++i) check(t.random_element(rng));
  }

  SimpleTypeLabel label;
  label.order = t.order();
  if (is_prime(label.order)) {
    label.kind = SimpleTypeLabel::Kind::cyclic;
    label.parameter = label.order;
    return label;
  }
  for (std::uint64_t n = 5; n <= 9; ++n) {
    if (label.order == kAltOrders[n]) {
      label.kind = SimpleTypeLabel::Kind::alternating;
      label.parameter = n;
      if (n == 5) label.aliases = {"psl2 4", "psl2 5"};
      if (n == 6) label.aliases = {"psl2 9"};
      if (n == 8) label.ambiguous = true;  // another simple group shares this order
      return label;
    }
  }
  for (std::uint64_t q : {7, 8, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32}) {
    if (label.order == psl2_order(q)) {
      label.kind = SimpleTypeLabel::Kind::psl2;
      label.parameter = q;
      return label;
    }
  }
  label.kind = SimpleTypeLabel::Kind::other;
  return label;
}

void verify_chief_series(const PermGroup& g, const ChiefSeriesData& s, const Engine& eng) {
  if (s.terms.empty() || !s.terms.front().same_group_as(g) || !s.terms.back().is_trivial())
    throw group_error("chief-series", "series endpoints are wrong");
  for (std::size_t i = 0; i < s.terms.size(); ++i) {
    if (!is_normal_in(g, s.terms[i])) throw group_error("chief-series", "series term is not normal in the group");
    if (i + 1 < s.terms.size() && !s.terms[i].contains_group(s.terms[i + 1]))
      throw group_error("chief-series", "series terms are not descending");
  }
  for (std::size_t i = 0; i + 1 < s.terms.size(); ++i) {
    const ChiefFactor& cf = s.factors[i];
    std::uint64_t expect = 1;
    for (int j = 0; j < cf.multiplicity; ++j) expect *= cf.label.order;
    if (cf.order != s.terms[i].order() / s.terms[i + 1].order() || expect != cf.order)
      throw group_error("chief-series", "factor order mismatch at level " + std::to_string(i));
    // minimality probing in the quotient
    QuotientData q = quotient_group(g, s.terms[i + 1], eng);
    PermGroup fbar = q.image_of(s.terms[i]);
    Rng rng(eng.seed + i);
    for (int probe = 0; probe < 50; ++probe) {
      Permutation x = fbar.random_element(rng);
      if (x.is_identity()) continue;
      std::uint64_t o = x.order();
      Permutation y = x.power(static_cast<std::int64_t>(o / prime_factors(o)[0]));
      PermGroup cl = normal_closure(q.image(), PermGroup(fbar.degree(), {y}, fbar.limits()));
      if (cl.order() != fbar.order())
        throw group_error("chief-series", "factor at level " + std::to_string(i) + " is not minimal normal");
    }
  }
}

}  // namespace cgt
