#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgt/engine.hpp"
#include "cgt/group.hpp"

namespace cgt {

// Depth-first search over a stabilizer chain for the set of elements
// satisfying a conjunction of constraints.  In subgroup mode the constraint
// set must be closed under products and inverses; found elements prune the
// remaining tree via orbit-minimality under the growing known subgroup.
struct SearchSpec {
  // Each pair (u, v) constrains g to conjugate u to v: u * g == g * v.
  // Inverse pairs are added automatically.
  std::vector<std::pair<Permutation, Permutation>> intertwine;
  // Optional per-point colors; an element may only map x to y when
  // color_dom[x] == color_img[y].
  std::vector<int> color_dom, color_img;
  // Authoritative acceptance test for a fully determined element.
  std::function<bool(const Permutation&)> leaf_test;
  // Known elements of the target subgroup (subgroup mode).
  std::vector<Permutation> seed;
  // Stop at the first accepted element instead of collecting a subgroup.
  bool find_first = false;
  std::uint64_t node_budget = 100'000'000;
  std::string phase = "backtrack";
};

// Subgroup mode: returns the full subgroup of `g` cut out by the constraints.
PermGroup subgroup_search(const PermGroup& g, SearchSpec spec);

// Find-first mode: the first element found, if any.
std::optional<Permutation> element_search(const PermGroup& g, SearchSpec spec);

// N_G(H) = {x in G : H^x = H}.  H need not be contained in G.
PermGroup normalizer(const PermGroup& g, const PermGroup& h, const Engine& eng = Engine::defaults());

// C_G(H) and C_G(z).
PermGroup centralizer(const PermGroup& g, const PermGroup& h, const Engine& eng = Engine::defaults());
PermGroup centralizer(const PermGroup& g, const Permutation& z, const Engine& eng = Engine::defaults());

// Some x in G with A^x = B (resp. a^x = b), if one exists.
std::optional<Permutation> conjugating_element(const PermGroup& g, const PermGroup& a, const PermGroup& b,
                                               const Engine& eng = Engine::defaults());
std::optional<Permutation> conjugating_element(const PermGroup& g, const Permutation& a, const Permutation& b,
                                               const Engine& eng = Engine::defaults());

}  // namespace cgt
