#include "cgt/subgroup.hpp"

#include <algorithm>

#include "cgt/quotient.hpp"
#include "cgt/series.hpp"

namespace cgt {

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t out = 1;
  while (n % p == 0) {
    out *= p;
    n /= p;
  }
  return out;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

PermGroup normal_closure(const PermGroup& g, const PermGroup& s) {
  PermGroup cur = s.with_reduced_generators();
  std::vector<Permutation> work = cur.generators();
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (const auto& x : g.generators()) {
      Permutation c = work[i].conjugated_by(x);
      if (!cur.contains(c)) {
        cur = cur.extended_with({c});
        work.push_back(std::move(c));
      }
    }
  }
  return cur;
}

PermGroup commutator_group(const PermGroup& ambient, const PermGroup& a, const PermGroup& b) {
  std::vector<Permutation> gens;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) {
      Permutation c = commutator(x, y);
      if (!c.is_identity()) gens.push_back(std::move(c));
    }
  return normal_closure(ambient, PermGroup(ambient.degree(), gens, ambient.limits()));
}

SeriesData derived_series(const PermGroup& g) {
  SeriesData out;
  out.terms.push_back(g);
  for (;;) {
    const PermGroup& last = out.terms.back();
    if (last.is_trivial()) {
      out.reached_trivial = true;
      break;
    }
    PermGroup d = commutator_group(last, last, last);
    if (d.order() == last.order()) break;  // perfect tail
    out.terms.push_back(std::move(d));
  }
  return out;
}

bool is_solvable(const PermGroup& g) { return derived_series(g).reached_trivial; }

SeriesData lower_central_series(const PermGroup& g) {
  SeriesData out;
  out.terms.push_back(g);
  for (;;) {
    const PermGroup& last = out.terms.back();
    if (last.is_trivial()) {
      out.reached_trivial = true;
      break;
    }
    PermGroup next = commutator_group(g, last, g);
    if (next.order() == last.order()) break;
    out.terms.push_back(std::move(next));
  }
  return out;
}

bool is_nilpotent(const PermGroup& g) {
  std::uint64_t n = g.order();
  if (n == 1) return true;
  if (prime_factors(n).size() == 1) return true;  // p-groups
  return lower_central_series(g).reached_trivial;
}

namespace {

// A pure p-element (order a power of p) obtained from generators, pairwise
// products, or seeded random elements.
Permutation find_p_element(const PermGroup& g, std::uint64_t p, Rng& rng) {
  auto project = [&](const Permutation& x) -> std::optional<Permutation> {
    std::uint64_t o = x.order();
    if (o % p != 0) return std::nullopt;
    return x.power(static_cast<std::int64_t>(o / p_part(o, p)));
  };
  for (const auto& x : g.generators())
    if (auto z = project(x)) return *z;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (i != j)
        if (auto z = project(gens[i] * gens[j])) return *z;
  for (int tries = 0; tries < 20000; ++tries)
    if (auto z = project(g.random_element(rng))) return *z;
  throw capacity_error("sylow", "no p-element found within the sampling budget");
}

// Least e > 0 with y^e in P.
std::uint64_t coset_order(const Permutation& y, const PermGroup& p_grp) {
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
    if (p_grp.contains(y.power(static_cast<std::int64_t>(d)))) return d;
  return o;
}

}  // namespace

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, const Engine& eng) {
  std::uint64_t target = p_part(g.order(), p);
  if (target == 1) return PermGroup(g.degree(), {}, g.limits());
  Rng rng(eng.seed);
  Permutation z = find_p_element(g, p, rng);
  PermGroup syl(g.degree(), {z}, g.limits());
  while (syl.order() < target) {
    PermGroup n = normalizer(g, syl, eng);
    // p divides [N:P] whenever P is not yet Sylow; extend by an element of
    // coset order p inside N
    bool extended = false;
    auto try_extend = [&](const Permutation& y) {
      std::uint64_t e = coset_order(y, syl);
      if (e == 1 || e % p != 0) return false;
      Permutation y2 = y.power(static_cast<std::int64_t>(e / p));
      if (syl.contains(y2)) return false;
      syl = syl.extended_with({y2}).with_reduced_generators();
      return true;
    };
    for (const auto& y : n.generators())
      if ((extended = try_extend(y))) break;
    if (!extended)
      for (int tries = 0; tries < 20000; ++tries)
        if ((extended = try_extend(n.random_element(rng)))) break;
    if (!extended) throw capacity_error("sylow", "normalizer ascent stalled within the sampling budget");
  }
  return syl;
}

namespace {

// Complement to an elementary abelian p-group Y inside k (p coprime to
// [k:Y]), by zero-cohomology averaging over the quotient.
PermGroup coprime_complement(const PermGroup& k, const PermGroup& y, std::uint64_t p, const Engine& eng) {
  QuotientData q = quotient_group(k, y, eng);
  std::uint64_t n = q.image().order();
  if (n == 1) return PermGroup(k.degree(), {}, k.limits());
  auto q_elems = q.image().elements(eng.limits.element_list);
  std::vector<Permutation> lifts;
  lifts.reserve(q_elems.size());
  for (const auto& e : q_elems) lifts.push_back(q.lift(e));
  std::unordered_map<Permutation, std::size_t, PermHash> index;
  for (std::size_t i = 0; i < q_elems.size(); ++i) index.emplace(q_elems[i], i);
  auto tau = [&](const Permutation& img) { return lifts[index.at(img)]; };

  // d(x) = B(x)^{-1/n} with B(x) the product of the cocycle over the fiber;
  // then x -> d(x) tau(x) is a homomorphism and its image a complement.
  std::uint64_t n_inv = 1;
  while ((n_inv * (n % p)) % p != 1) ++n_inv;  // p is prime, n coprime to p
  std::vector<Permutation> comp_gens;
  for (const auto& gq : q.image().generators()) {
    Permutation big(k.degree());
    const Permutation tg = tau(gq);
    for (std::size_t zi = 0; zi < q_elems.size(); ++zi) {
      // c(g, z) = tau(g) tau(z) tau(gz)^-1
      big = big * (tg * lifts[zi] * tau(gq * q_elems[zi]).inverse());
    }
    Permutation d = big.power(-static_cast<std::int64_t>(n_inv));
    comp_gens.push_back(d * tg);
  }
  PermGroup comp(k.degree(), comp_gens, k.limits());
  if (comp.order() != n) throw group_error("hall", "complement construction failed");
  return comp;
}

}  // namespace

PermGroup hall_pprime_solvable(const PermGroup& g, std::uint64_t p, const Engine& eng) {
  if (!is_solvable(g)) throw group_error("hall", "input group is not solvable");
  if (g.order() % p != 0) return g;
  if (g.is_trivial()) return g;
  PermGroup y = smallest_minimal_normal(g, eng);
  auto primes = prime_factors(y.order());
  if (primes.size() != 1) throw group_error("hall", "minimal normal subgroup of a solvable group must be a q-group");
  for (const auto& a : y.generators())
    for (const auto& b : y.generators())
      if (a * b != b * a) throw group_error("hall", "minimal normal subgroup of a solvable group must be abelian");
  std::uint64_t q = primes[0];
  QuotientData quot = quotient_group(g, y, eng);
  PermGroup hall_image = hall_pprime_solvable(quot.image(), p, eng);
  PermGroup k = quot.preimage(hall_image);
  if (q != p) return k;
  return coprime_complement(k, y, p, eng);
}

}  // namespace cgt
