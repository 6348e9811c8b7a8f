#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgt/engine.hpp"
#include "cgt/group.hpp"
#include "cgt/series.hpp"

namespace cgt {

struct CarterCertificate {
  std::vector<std::uint64_t> lower_central_orders;  // of the found subgroup
  std::uint64_t normalizer_order = 0;               // in the ambient group
};

struct VerifyCarterResult {
  bool ok = false;
  std::string failure;  // names the property that broke
  CarterCertificate certificate;
};

// Certifies that k is a Carter subgroup of g: nilpotent (lower central
// series reaches the trivial group) and self-normalizing.
VerifyCarterResult verify_carter(const PermGroup& g, const PermGroup& k, const Engine& eng = Engine::defaults());

struct CarterWitness {
  std::string where;   // recursion path / chief-series cell of the failure
  PermGroup group;     // the group without a Carter subgroup
  std::string label;   // isomorphism-type label when recognized
  bool brute_confirmed = false;  // enumeration ran and found nothing
};

struct CarterOutcome {
  bool exists = false;
  std::optional<PermGroup> subgroup;
  std::optional<CarterCertificate> certificate;
  std::optional<CarterWitness> witness;
  std::vector<std::string> flags;  // observed anomalies, e.g. a conjugacy violation
};

// Carter subgroup of a solvable group: recursion through a minimal normal
// elementary abelian subgroup, a Hall complement, and its normalizer.
PermGroup carter_solvable(const PermGroup& g, const Engine& eng = Engine::defaults());

struct NilpotentEnumResult {
  std::vector<PermGroup> classes;  // one representative per conjugacy class
  bool complete = true;
};

// Every nilpotent subgroup of g up to conjugacy, by cyclic extension from
// the trivial subgroup; dedup is fingerprint-gated conjugacy search.
NilpotentEnumResult nilpotent_subgroups_enum(const PermGroup& g, const Engine& eng = Engine::defaults());

// The nilpotent self-normalizing subgroups of g up to conjugacy.  Finding
// two or more classes would contradict conjugacy of Carter subgroups and is
// flagged through `flags`.
std::vector<PermGroup> brute_force_carter(const PermGroup& g, const Engine& eng = Engine::defaults(),
                                          std::vector<std::string>* flags = nullptr);

struct ConditionECell {
  int level = 0;
  int factor = 0;
  std::uint64_t aut_order = 0;
  std::string method;  // how existence was decided
  bool exists = false;
};

struct ConditionEReport {
  bool satisfied = false;
  std::vector<ConditionECell> cells;
  std::vector<std::string> level_notes;  // per level: lifted Carter subgroup data
  std::optional<CarterWitness> witness;  // first failing cell
  std::vector<std::string> flags;
};

// The normal-series existence criterion: walk the chief series, lift the
// Carter subgroup of each upper quotient, and decide Carter existence in
// the induced automorphism group of every simple factor.
ConditionEReport check_condition_E(const PermGroup& g, const ChiefSeriesData& series,
                                   const Engine& eng = Engine::defaults());

// Existence decision with a constructed subgroup or a nonexistence witness.
CarterOutcome carter_find(const PermGroup& g, const Engine& eng = Engine::defaults(), const GroupHints& hints = {});

}  // namespace cgt
