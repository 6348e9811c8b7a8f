// Cross-cutting property sweeps over the construction-language corpus.

#include <doctest.h>

#include "cgt/carter.hpp"
#include "cgt/groupspec.hpp"
#include "cgt/subgroup.hpp"

using cgt::PermGroup;

namespace {

const std::vector<std::string>& sweep_corpus() {
  static const std::vector<std::string> c = {
      "(cyclic 6)",  "(cyclic 12)", "(cyclic 30)", "(dihedral 4)", "(dihedral 6)", "(dihedral 10)",
      "(sym 3)",     "(sym 4)",     "(alt 4)",     "(alt 5)",      "(sym 5)",      "(psl2 7)",
      "(psl2 9)",    "(psigmal2 9)", "(wreath (cyclic 2) 3)", "(wreath (sym 3) 2)", "(wreath (cyclic 3) 2)",
      "(direct (sym 4) (sym 3))",   "(direct (alt 5) (cyclic 2))", "(wreath (dihedral 4) 2)",
      "(gens 8 (((0 2 1 3) (4 6 5 7)) ((0 4 1 5) (2 7 3 6))))",
      "(subgroup (sym 5) ((0 1 2 3 4) (1 2 4 3)))",
      "(alt 6)", "(wreath (cyclic 2) 4)", "(cyclic 60)",
  };
  return c;
}

}  // namespace

TEST_SUITE_BEGIN("properties");

TEST_CASE("index order equals brute-force closure size across the corpus") {
  for (const auto& expr : sweep_corpus()) {
    auto g = cgt::build_group(cgt::parse_spec(expr)).group;
    if (g.order() > 5000) continue;
    auto elems = cgt::closure_elements(g.degree(), g.generators(), 5000);
    INFO(expr);
    CHECK(g.order() == elems.size());
  }
}

TEST_CASE("membership is closed under products across the corpus") {
  cgt::Rng rng(0);
  for (const auto& expr : sweep_corpus()) {
    auto g = cgt::build_group(cgt::parse_spec(expr)).group;
    for (int i = 0; i < 100; ++i) {
      auto a = g.random_element(rng);
      auto b = g.random_element(rng);
      INFO(expr);
      CHECK(g.contains(a * b));
    }
  }
}

TEST_CASE("nilpotency agrees with normality of every Sylow subgroup") {
  for (const auto& expr : sweep_corpus()) {
    auto g = cgt::build_group(cgt::parse_spec(expr)).group;
    if (g.order() > 2000 || g.order() < 2) continue;
    bool all_normal = true;
    std::uint64_t product = 1;
    for (auto p : cgt::prime_factors(g.order())) {
      auto syl = cgt::sylow_subgroup(g, p);
      product *= syl.order();
      for (const auto& x : g.generators())
        for (const auto& a : syl.generators())
          if (!syl.contains(a.conjugated_by(x))) all_normal = false;
    }
    INFO(expr);
    CHECK(product == g.order());
    CHECK(cgt::is_nilpotent(g) == all_normal);
  }
}

TEST_CASE("sylow subgroups match the p-part under several seeds, up to conjugacy") {
  for (const auto& expr : {"(sym 4)", "(wreath (sym 3) 2)", "(dihedral 6)"}) {
    auto g = cgt::build_group(cgt::parse_spec(expr)).group;
    for (auto p : cgt::prime_factors(g.order())) {
      PermGroup base = cgt::sylow_subgroup(g, p);
      CHECK(base.order() == cgt::p_part(g.order(), p));
      for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
        cgt::Engine eng;
        eng.seed = seed;
        PermGroup other = cgt::sylow_subgroup(g, p, eng);
        CHECK(other.order() == base.order());
        auto c = cgt::conjugating_element(g, base, other);
        REQUIRE(c.has_value());
        CHECK(other.same_group_as(base.conjugated_by(*c)));
      }
    }
  }
}

TEST_CASE("carter_solvable across seeds stays in one conjugacy class") {
  for (const auto& expr : {"(sym 4)", "(wreath (sym 3) 2)", "(subgroup (sym 5) ((0 1 2 3 4) (1 2 4 3)))"}) {
    auto g = cgt::build_group(cgt::parse_spec(expr)).group;
    PermGroup base = cgt::carter_solvable(g);
    for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
      cgt::Engine eng;
      eng.seed = seed;
      PermGroup k = cgt::carter_solvable(g, eng);
      auto c = cgt::conjugating_element(g, base, k);
      REQUIRE(c.has_value());
      CHECK(k.same_group_as(base.conjugated_by(*c)));
    }
  }
}

TEST_SUITE_END();
