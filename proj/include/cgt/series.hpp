#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgt/engine.hpp"
#include "cgt/group.hpp"

namespace cgt {

struct SimpleTypeLabel {
  enum class Kind { cyclic, alternating, psl2, other };
  Kind kind = Kind::other;
  std::uint64_t order = 0;
  std::uint64_t parameter = 0;  // p for cyclic, n for alternating, q for psl2
  // Order coincidences naming the same abstract group.
  std::vector<std::string> aliases;
  // Set when the order alone does not pin down the isomorphism type.
  bool ambiguous = false;

  std::string to_string() const;
};

struct ChiefFactor {
  std::uint64_t order = 0;  // |G_i / G_{i+1}|
  int multiplicity = 0;     // number of simple direct factors
  SimpleTypeLabel label;
  // T~_{i,j}: subgroups of G containing G_{i+1}, with T~/G_{i+1} the j-th
  // simple factor of G_i/G_{i+1}.
  std::vector<PermGroup> factor_preimages;
};

// G = terms[0] > terms[1] > ... > terms.back() = 1, every term normal in G,
// every factor minimal normal in the corresponding quotient.
struct ChiefSeriesData {
  std::vector<PermGroup> terms;
  std::vector<ChiefFactor> factors;
};

// Knowledge recorded by group builders; consumed as candidate inputs and
// re-verified where it matters.
struct GroupHints {
  std::vector<PermGroup> normal_subgroups;
  std::vector<PermGroup> socle_factors;
};

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g, const Engine& eng = Engine::defaults(),
                                                const GroupHints& hints = {});
PermGroup smallest_minimal_normal(const PermGroup& g, const Engine& eng = Engine::defaults(),
                                  const GroupHints& hints = {});

ChiefSeriesData chief_series(const PermGroup& g, const Engine& eng = Engine::defaults(), const GroupHints& hints = {});

// Decompose a minimal normal subgroup h of g into its simple direct factors.
std::vector<PermGroup> split_minimal_normal(const PermGroup& g, const PermGroup& h, const Engine& eng,
                                            const GroupHints& hints = {});

// Label a verified-simple group by order; throws group_error (naming a
// witness normal subgroup) when the input is not simple.
SimpleTypeLabel identify_simple_factor(const PermGroup& t, const Engine& eng = Engine::defaults());

// Re-checks normality of every term and probes factor minimality with
// sampled normal closures; throws group_error on violation.
void verify_chief_series(const PermGroup& g, const ChiefSeriesData& s, const Engine& eng = Engine::defaults());

}  // namespace cgt
