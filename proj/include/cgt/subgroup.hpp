#pragma once

#include <cstdint>
#include <vector>

#include "cgt/backtrack.hpp"
#include "cgt/engine.hpp"
#include "cgt/group.hpp"

namespace cgt {

// A descending subgroup series; `reached_trivial` marks whether the final
// term is the trivial group (otherwise the series stabilized above it).
struct SeriesData {
  std::vector<PermGroup> terms;
  bool reached_trivial = false;
};

// Smallest normal subgroup of g containing s (closure under conjugation).
PermGroup normal_closure(const PermGroup& g, const PermGroup& s);

// Subgroup generated by [a, b] for generators a of A and b of B, closed
// under conjugation by `ambient`.
PermGroup commutator_group(const PermGroup& ambient, const PermGroup& a, const PermGroup& b);

SeriesData derived_series(const PermGroup& g);
bool is_solvable(const PermGroup& g);

SeriesData lower_central_series(const PermGroup& g);
bool is_nilpotent(const PermGroup& g);

// Sylow p-subgroup by normalizer ascent from a p-element; returns the
// trivial subgroup when p does not divide |g|.
PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, const Engine& eng = Engine::defaults());

// Hall p'-subgroup of a solvable group, built along a chief series; rejects
// non-solvable input.
PermGroup hall_pprime_solvable(const PermGroup& g, std::uint64_t p, const Engine& eng = Engine::defaults());

std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace cgt
