#include <doctest.h>

#include <algorithm>

#include "cgt/subgroup.hpp"
#include "test_util.hpp"

using namespace testutil;
using cgt::Engine;
using cgt::Permutation;
using cgt::PermGroup;

namespace {

// Brute-force normalizer scan, independent of the backtrack path.
PermGroup scan_normalizer(const PermGroup& g, const PermGroup& h) {
  std::vector<Permutation> gens;
  for (const auto& x : g.elements(20000)) {
    bool ok = true;
    for (const auto& a : h.generators())
      if (!h.contains(a.conjugated_by(x))) {
        ok = false;
        break;
      }
    if (ok) gens.push_back(x);
  }
  return PermGroup(g.degree(), gens);
}

PermGroup scan_centralizer(const PermGroup& g, const Permutation& z) {
  std::vector<Permutation> gens;
  for (const auto& x : g.elements(20000))
    if (x * z == z * x) gens.push_back(x);
  return PermGroup(g.degree(), gens);
}

}  // namespace

TEST_SUITE_BEGIN("subgroup");

TEST_CASE("normalizer of the Klein four subgroup in S4 is the whole group") {
  auto s4 = sym(4);
  auto v4 = from_cycles(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
  auto n = cgt::normalizer(s4, v4);
  CHECK(n.order() == 24);
  CHECK(n.order() == scan_normalizer(s4, v4).order());
}

TEST_CASE("normalizer of a group in itself") {
  auto a4 = alt(4);
  CHECK(cgt::normalizer(a4, a4).order() == 12);
}

TEST_CASE("normalizer of a Sylow 2-subgroup of A5 has order 12") {
  auto a5 = alt(5);
  auto syl = cgt::sylow_subgroup(a5, 2);
  CHECK(syl.order() == 4);
  auto n = cgt::normalizer(a5, syl);
  CHECK(n.order() == 12);
  CHECK(scan_normalizer(a5, syl).order() == 12);
}

TEST_CASE("normalizer backtrack agrees with element scans on mixed cases") {
  auto s4 = sym(4);
  auto h1 = from_cycles(4, {{{0, 1, 2, 3}}});  // C4
  CHECK(cgt::normalizer(s4, h1).order() == scan_normalizer(s4, h1).order());
  auto s5 = sym(5);
  auto h2 = from_cycles(5, {{{0, 1, 2, 3, 4}}});  // C5, normalizer F20
  CHECK(cgt::normalizer(s5, h2).order() == 20);
  auto d = dihedral(6);
  auto h3 = from_cycles(6, {{{1, 5}, {2, 4}}});
  CHECK(cgt::normalizer(d, h3).order() == scan_normalizer(d, h3).order());
}

TEST_CASE("normalizer sampled self-consistency") {
  auto s5 = sym(5);
  auto h = from_cycles(5, {{{0, 1, 2, 3, 4}}});
  auto n = cgt::normalizer(s5, h);
  cgt::Rng rng(1);
  int outside_fixing = 0;
  for (int i = 0; i < 100; ++i) {
    auto x = s5.random_element(rng);
    bool normalizes = true;
    for (const auto& a : h.generators())
      if (!h.contains(a.conjugated_by(x))) normalizes = false;
    if (normalizes != n.contains(x)) ++outside_fixing;
  }
  CHECK(outside_fixing == 0);
}

TEST_CASE("centralizer of a 3-cycle in S3") {
  auto s3 = sym(3);
  auto z = Permutation::from_cycles(3, {{0, 1, 2}});
  auto c = cgt::centralizer(s3, z);
  CHECK(c.order() == 3);
  CHECK(c.contains(z));
}

TEST_CASE("centralizer of the identity is everything") {
  auto s4 = sym(4);
  CHECK(cgt::centralizer(s4, Permutation(4)).order() == 24);
}

TEST_CASE("centralizer agrees with scans") {
  auto s6 = sym(6);
  auto z = Permutation::from_cycles(6, {{0, 1}, {2, 3, 4}});
  CHECK(cgt::centralizer(s6, z).order() == scan_centralizer(s6, z).order());
  auto h = from_cycles(6, {{{0, 1, 2}}, {{3, 4, 5}}});
  auto c = cgt::centralizer(s6, h);
  // scan for the subgroup case
  std::vector<Permutation> gens;
  for (const auto& x : s6.elements(1000)) {
    bool ok = true;
    for (const auto& a : h.generators())
      if (x * a != a * x) ok = false;
    if (ok) gens.push_back(x);
  }
  CHECK(c.order() == PermGroup(6, gens).order());
}

TEST_CASE("derived series of S4") {
  auto ds = cgt::derived_series(sym(4));
  std::vector<std::uint64_t> orders;
  for (const auto& t : ds.terms) orders.push_back(t.order());
  CHECK(orders == std::vector<std::uint64_t>{24, 12, 4, 1});
  CHECK(ds.reached_trivial);
  CHECK(cgt::is_solvable(sym(4)));
}

TEST_CASE("A5 is perfect, hence not solvable") {
  auto ds = cgt::derived_series(alt(5));
  CHECK(ds.terms.back().order() == 60);
  CHECK_FALSE(ds.reached_trivial);
  CHECK_FALSE(cgt::is_solvable(alt(5)));
}

TEST_CASE("the trivial group is solvable and nilpotent") {
  PermGroup t(3);
  CHECK(cgt::is_solvable(t));
  CHECK(cgt::is_nilpotent(t));
}

TEST_CASE("dihedral of order 8 is nilpotent, S3 is not") {
  CHECK(cgt::is_nilpotent(dihedral(4)));
  CHECK_FALSE(cgt::is_nilpotent(sym(3)));
  auto lcs = cgt::lower_central_series(sym(3));
  CHECK(lcs.terms.back().order() == 3);
}

TEST_CASE("cyclic groups are nilpotent") {
  for (int n : {2, 6, 12, 30}) CHECK(cgt::is_nilpotent(cyclic(n)));
}

TEST_CASE("nilpotency agrees with all Sylow subgroups being normal") {
  std::vector<PermGroup> corpus{sym(3), sym(4),          alt(4),          dihedral(4),         dihedral(6),
                                cyclic(12), from_cycles(6, {{{0, 1, 2}}, {{3, 4}}}),  // C3 x C2
                                from_cycles(7, {{{0, 1, 2, 3, 4, 5, 6}}})};
  for (const auto& g : corpus) {
    bool all_normal = true;
    for (auto p : cgt::prime_factors(g.order())) {
      auto syl = cgt::sylow_subgroup(g, p);
      for (const auto& x : g.generators())
        for (const auto& a : syl.generators())
          if (!syl.contains(a.conjugated_by(x))) all_normal = false;
    }
    CHECK(cgt::is_nilpotent(g) == all_normal);
  }
}

TEST_CASE("sylow subgroup orders are the exact p-parts") {
  CHECK(cgt::sylow_subgroup(sym(4), 2).order() == 8);
  CHECK(cgt::sylow_subgroup(sym(4), 3).order() == 3);
  CHECK(cgt::sylow_subgroup(sym(3), 5).order() == 1);
  CHECK(cgt::sylow_subgroup(alt(5), 2).order() == 4);
  CHECK(cgt::sylow_subgroup(alt(5), 5).order() == 5);
  CHECK(cgt::sylow_subgroup(sym(6), 2).order() == 16);
  CHECK(cgt::sylow_subgroup(sym(6), 3).order() == 9);
}

TEST_CASE("hall p'-subgroups of solvable groups") {
  CHECK(cgt::hall_pprime_solvable(sym(4), 2).order() == 3);
  CHECK(cgt::hall_pprime_solvable(cyclic(12), 3).order() == 4);
  CHECK(cgt::hall_pprime_solvable(cyclic(12), 5).order() == 12);  // p does not divide
  CHECK(cgt::hall_pprime_solvable(sym(4), 3).order() == 8);
  auto d6 = dihedral(6);  // order 12
  CHECK(cgt::hall_pprime_solvable(d6, 2).order() == 3);
  CHECK(cgt::hall_pprime_solvable(d6, 3).order() == 4);
  CHECK_THROWS_AS(cgt::hall_pprime_solvable(alt(5), 2), cgt::group_error);
}

TEST_CASE("hall subgroup output is a p'-group of full coprime order") {
  std::vector<PermGroup> corpus{sym(4), dihedral(6), cyclic(30), from_cycles(6, {{{0, 1, 2}}, {{3, 4}}})};
  for (const auto& g : corpus)
    for (auto p : cgt::prime_factors(g.order())) {
      auto hall = cgt::hall_pprime_solvable(g, p);
      CHECK(hall.order() * cgt::p_part(g.order(), p) == g.order());
      CHECK(cgt::p_part(hall.order(), p) == 1);
    }
}

TEST_CASE("normal closure examples") {
  auto s3 = sym(3);
  auto a3 = from_cycles(3, {{{0, 1, 2}}});
  CHECK(cgt::normal_closure(s3, a3).order() == 3);
  auto c2 = from_cycles(3, {{{0, 1}}});
  CHECK(cgt::normal_closure(s3, c2).order() == 6);
  auto s4 = sym(4);
  auto dbl = from_cycles(4, {{{0, 1}, {2, 3}}});
  CHECK(cgt::normal_closure(s4, dbl).order() == 4);
}

TEST_CASE("conjugating element search") {
  auto s4 = sym(4);
  auto a = from_cycles(4, {{{0, 1}}});
  auto b = from_cycles(4, {{{2, 3}}});
  auto x = cgt::conjugating_element(s4, a, b);
  REQUIRE(x.has_value());
  CHECK(b.same_group_as(a.conjugated_by(*x)));
  // non-conjugate pair: C4 vs V4
  auto c4 = from_cycles(4, {{{0, 1, 2, 3}}});
  auto v4 = from_cycles(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
  CHECK_FALSE(cgt::conjugating_element(s4, c4, v4).has_value());
}

TEST_CASE("backtrack node budget raises a capacity error") {
  cgt::Engine eng;
  eng.limits.backtrack_nodes = 3;
  auto s6 = sym(6);
  auto h = from_cycles(6, {{{0, 1, 2}}});
  CHECK_THROWS_AS(cgt::normalizer(s6, h, eng), cgt::capacity_error);
}

TEST_SUITE_END();
