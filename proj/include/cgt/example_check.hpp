#pragma once

#include <string>
#include <vector>

#include "cgt/carter.hpp"
#include "cgt/engine.hpp"
#include "cgt/groupspec.hpp"

namespace cgt {

struct ExampleStatement {
  int number = 0;
  std::string claim;
  bool pass = false;
  std::vector<std::string> details;
};

// End-to-end verification of the packaged degree-56 counterexample: a group
// whose composition factors all have induced automorphism groups with Carter
// subgroups, with a Carter subgroup in a normal subgroup of nilpotent index,
// and still no Carter subgroup overall.
struct ExampleReport {
  ExampleStatement statements[4];
  bool all_pass = false;
  ConditionEReport condition_e;
  CarterOutcome outcome;  // final existence decision on the full group
  std::uint64_t group_order = 0;
  int group_degree = 0;
};

ExampleReport verify_example(const Engine& eng = Engine::defaults());

}  // namespace cgt
