#include <doctest.h>

#include "cgt/groupspec.hpp"
#include "cgt/induced_aut.hpp"
#include "cgt/subgroup.hpp"
#include "test_util.hpp"

using namespace testutil;
using cgt::Permutation;
using cgt::PermGroup;
using cgt::Section;

TEST_SUITE_BEGIN("induced_aut");

TEST_CASE("conjugation on an abelian group by itself is trivial") {
  auto c6 = cyclic(6);
  Section sec{c6, c6, PermGroup(6)};
  auto res = cgt::induced_aut(c6, sec);
  CHECK(res.aut.order() == 1);
  CHECK(res.kernel.order() == 6);
}

TEST_CASE("S3 induces an automorphism group of order 2 on its 3-cycle subgroup") {
  auto s3 = sym(3);
  auto a3 = from_cycles(3, {{{0, 1, 2}}});
  Section sec{s3, a3, PermGroup(3)};
  auto res = cgt::induced_aut(s3, sec);
  CHECK(res.n_sub.order() == 6);
  CHECK(res.aut.order() == 2);
  CHECK(res.kernel.order() == 3);
  CHECK(res.aut.order() * res.kernel.order() == res.n_sub.order());
}

TEST_CASE("order product identity holds on assorted sections") {
  auto s4 = sym(4);
  auto v4 = from_cycles(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
  auto a4 = alt(4);
  std::vector<Section> secs = {
      {s4, v4, PermGroup(4)},
      {s4, a4, v4},
      {s4, a4, PermGroup(4)},
      {s4, from_cycles(4, {{{0, 1, 2, 3}}}), from_cycles(4, {{{0, 2}, {1, 3}}})},
  };
  for (const auto& sec : secs) {
    auto res = cgt::induced_aut(s4, sec);
    CHECK(res.aut.order() * res.kernel.order() == res.n_sub.order());
    // kernel elements act trivially on every coset (sampled)
    auto q = cgt::quotient_group(sec.a, sec.b);
    cgt::Rng rng(5);
    for (int i = 0; i < 20; ++i) {
      auto a = sec.a.random_element(rng);
      for (const auto& c : res.kernel.generators()) CHECK(q.apply(a.conjugated_by(c)) == q.apply(a));
    }
  }
}

TEST_CASE("restriction route is used for a simple factor with trivial B") {
  // A5 x A5 with swap; section = first factor
  std::vector<Permutation> gens;
  auto a5 = alt(5);
  auto lift5 = [](const Permutation& g, int shift) {
    std::vector<int> img(10);
    for (int i = 0; i < 10; ++i) img[i] = i;
    for (int i = 0; i < 5; ++i) img[i + shift] = g[i] + shift;
    return Permutation(img);
  };
  for (const auto& g : a5.generators()) gens.push_back(lift5(g, 0));
  for (const auto& g : a5.generators()) gens.push_back(lift5(g, 5));
  std::vector<int> sw(10);
  for (int i = 0; i < 5; ++i) {
    sw[i] = i + 5;
    sw[i + 5] = i;
  }
  gens.push_back(Permutation(sw));
  PermGroup w(10, gens);
  PermGroup t1(10, {gens[0], gens[1]});
  Section sec{w, t1, PermGroup(10)};
  auto res = cgt::induced_aut(w, sec);
  CHECK(res.route == "restriction");
  CHECK(res.n_sub.order() == 7200 / 2);
  CHECK(res.aut.order() == 60);  // A5 acting on itself inside Sym5 restricted to 5 points... inner only
  CHECK(res.kernel.order() == 60);
}

TEST_CASE("lemma-style quotient invariance of induced automorphisms") {
  auto s4 = sym(4);
  auto v4 = from_cycles(4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
  auto q = cgt::quotient_group(s4, v4);
  // section: the order-3 subgroup of the quotient
  PermGroup qg = q.image();
  PermGroup a3q(qg.degree());
  for (const auto& e : qg.elements(6))
    if (e.order() == 3) {
      a3q = PermGroup(qg.degree(), {e});
      break;
    }
  Section sec{qg, a3q, PermGroup(qg.degree())};
  auto inv = cgt::induced_aut_quotient_invariance(q, sec);
  CHECK(inv.orders_equal);
  CHECK(inv.actions_equivalent);
  CHECK(inv.aut_order_direct == 2);
}

TEST_CASE("quotient invariance for the trivial kernel is immediate") {
  auto s3 = sym(3);
  auto q = cgt::quotient_group(s3, PermGroup(3));
  auto a3 = from_cycles(3, {{{0, 1, 2}}});
  Section sec{s3, a3, PermGroup(3)};
  auto inv = cgt::induced_aut_quotient_invariance(q, sec);
  CHECK(inv.holds());
}

TEST_CASE("wreath embedding of S5 over its socle") {
  auto s5 = sym(5);
  auto a5 = alt(5);
  auto wd = cgt::wreath_embed(s5, {a5});
  CHECK(wd.embedding->image().order() == 120);
  CHECK(wd.g_cap_a.order() == 120);  // k = 1: the factor action is trivial
  CHECK(wd.aut_factors_local.size() == 1);
  CHECK(wd.aut_factors_local[0].order() == 120);
}

TEST_CASE("wreath embedding of A5 wr C2 splits the socle") {
  std::vector<Permutation> gens;
  auto a5 = alt(5);
  auto lift5 = [](const Permutation& g, int shift) {
    std::vector<int> img(10);
    for (int i = 0; i < 10; ++i) img[i] = i;
    for (int i = 0; i < 5; ++i) img[i + shift] = g[i] + shift;
    return Permutation(img);
  };
  for (const auto& g : a5.generators()) gens.push_back(lift5(g, 0));
  for (const auto& g : a5.generators()) gens.push_back(lift5(g, 5));
  std::vector<int> sw(10);
  for (int i = 0; i < 5; ++i) {
    sw[i] = i + 5;
    sw[i + 5] = i;
  }
  gens.push_back(Permutation(sw));
  PermGroup w(10, gens);
  PermGroup t1(10, {gens[0], gens[1]});
  PermGroup t2(10, {gens[2], gens[3]});
  auto wd = cgt::wreath_embed(w, {t1, t2});
  CHECK(wd.embedding->image().order() == w.order());
  CHECK(wd.g_cap_a.order() == 3600);
  CHECK(wd.transitive_on_factors);
  CHECK(wd.factor_action->image().order() == 2);
  // the ambient contains the image
  for (const auto& p : wd.embedding->image().generators()) CHECK(wd.wreath_ambient.contains(p));
}

TEST_CASE("wreath embedding of the degree-56 example preserves its order") {
  auto built = cgt::build_group(cgt::parse_spec("(paper_example)"));
  auto wd = cgt::wreath_embed(built.group, {*built.named("socle.0"), *built.named("socle.1")});
  CHECK(wd.embedding->image().order() == built.group.order());
  CHECK(wd.g_cap_a.order() == built.named("gm")->order());
  REQUIRE(wd.aut_factors_local.size() == 2);
  CHECK(wd.aut_factors_local[0].order() == 29484);
  CHECK(wd.aut_factors_local[1].order() == 29484);
  CHECK(wd.transitive_on_factors);
}

TEST_CASE("wreath embedding rejects a nontrivial socle centralizer") {
  // direct product A5 x C2: centralizer of the A5 factor contains the C2
  std::vector<Permutation> gens;
  auto a5 = alt(5);
  for (const auto& g : a5.generators()) {
    std::vector<int> img(7);
    for (int i = 0; i < 5; ++i) img[i] = g[i];
    img[5] = 5;
    img[6] = 6;
    gens.push_back(Permutation(img));
  }
  gens.push_back(Permutation::from_cycles(7, {{5, 6}}));
  PermGroup g(7, gens);
  PermGroup t(7, {gens[0], gens[1]});
  CHECK_THROWS_AS(cgt::wreath_embed(g, {t}), cgt::group_error);
}

TEST_SUITE_END();
