#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "cgt/engine.hpp"
#include "cgt/perm.hpp"

namespace cgt {

// One level of a stabilizer chain: the base point, the strong generators
// fixing all earlier base points, and the basic orbit with a transversal.
// Transversals are stored as explicit permutations for small degrees and as
// a Schreier tree (parent point + generator label) above kSchreierThreshold.
struct ChainLevel {
  int base = -1;
  std::vector<Permutation> gens;
  std::vector<int> orbit;    // discovery order; orbit.front() == base
  std::vector<int> pos;      // point -> index into orbit, or -1
  std::vector<Permutation> reps;  // explicit mode: base^reps[i] == orbit[i]
  std::vector<int> parent;   // schreier mode: orbit index of predecessor
  std::vector<int> via;      // schreier mode: index into gens
  bool explicit_reps = true;

  // The transversal element u with base^u == point.
  Permutation rep(int point) const;
};

// Base and strong generating set.  Immutable once built.
class Bsgs {
 public:
  // Deterministic Schreier-Sims.  Base points are taken from `base_hint`
  // first (skipping unmoved points), then by first-moved-point order.
  static Bsgs build(int degree, const std::vector<Permutation>& gens, const Limits& limits,
                    const std::vector<int>& base_hint = {});

  int degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  const std::vector<ChainLevel>& levels() const { return levels_; }
  std::vector<int> base() const;

  bool contains(const Permutation& g) const;
  // Strips g through levels [from, end); returns the residue and the level
  // index at which sifting stopped (levels_.size() on full success).
  std::pair<Permutation, std::size_t> sift(const Permutation& g, std::size_t from = 0) const;

  // All strong generators fixing base points [0, level) pointwise; level 0
  // gives a generating set of the whole group.
  std::vector<Permutation> stabilizer_gens(std::size_t level) const;
  std::uint64_t stabilizer_order(std::size_t level) const;

  // Deterministic element listing; throws capacity_error beyond `cap`.
  std::vector<Permutation> elements(std::uint64_t cap) const;
  Permutation random_element(Rng& rng) const;

  // Canonical representative of the right coset (*this)*g, i.e. the element
  // of the coset minimizing the image sequence of the base.  Well-defined:
  // two elements of one coset canonicalize identically.
  Permutation canonical_coset_rep(const Permutation& g) const;

 private:
  int degree_ = 0;
  std::uint64_t order_ = 1;
  std::vector<ChainLevel> levels_;
  friend class BsgsBuilder;
};

// Degree + generators with a lazily built, shared BSGS index.  Copies share
// the index slot, so the chain is built at most once per logical group; the
// index itself is immutable and safe to read from several threads.
class PermGroup {
 public:
  PermGroup() : PermGroup(0) {}
  explicit PermGroup(int degree, Limits limits = {});
  PermGroup(int degree, std::vector<Permutation> gens, Limits limits = {});

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const Limits& limits() const { return limits_; }

  bool is_trivial() const { return order() == 1; }
  std::uint64_t order() const { return index().order(); }
  bool contains(const Permutation& g) const;
  bool contains_group(const PermGroup& h) const;  // every generator of h sifts
  bool same_group_as(const PermGroup& h) const;   // mutual containment

  std::vector<int> orbit(int point) const;
  std::vector<std::vector<int>> orbits() const;        // all orbits, ascending least point
  std::vector<int> orbit_size_colors() const;          // per point: size of its orbit
  std::vector<int> support() const;                    // moved points, ascending

  const Bsgs& index() const;  // built on first use
  Bsgs rebuilt_index(const std::vector<int>& base_hint) const;

  std::vector<Permutation> elements(std::uint64_t cap) const { return index().elements(cap); }
  Permutation random_element(Rng& rng) const { return index().random_element(rng); }

  PermGroup conjugated_by(const Permutation& x) const;
  // Adds generators (with index rebuild on demand).
  PermGroup extended_with(const std::vector<Permutation>& more) const;

  // Drops generators that do not enlarge the group; deterministic.
  PermGroup with_reduced_generators() const;

  // Pointwise stabilizer of the given points.
  PermGroup pointwise_stabilizer(const std::vector<int>& points) const;

  // Restriction to an invariant point set, relabelled to 0..|points|-1.
  // Every generator must stabilize the set.
  PermGroup restricted_to(const std::vector<int>& points) const;

  Permutation identity() const { return Permutation(degree_); }

 private:
  struct IndexSlot;
  int degree_ = 0;
  std::vector<Permutation> gens_;
  Limits limits_;
  std::shared_ptr<IndexSlot> slot_;
};

// Breadth-first closure of a generating set; independent of the BSGS path.
// Throws capacity_error when more than `cap` elements appear.
std::vector<Permutation> closure_elements(int degree, const std::vector<Permutation>& gens, std::uint64_t cap);

}  // namespace cgt
