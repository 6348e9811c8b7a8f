#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cgt/engine.hpp"
#include "cgt/group.hpp"
#include "cgt/series.hpp"

namespace cgt {

// Parenthesized prefix construction language:
//   expr := "(" kind args ")"
//   kinds: sym n | alt n | cyclic n | dihedral n | psl2 q | psigmal2 q
//        | direct expr expr | wreath expr k | subgroup expr gens-block
//        | gens degree gens-block | paper_example
//   gens-block := "(" perm+ ")"
//   perm  := cycle | "(" cycle+ ")"      (bare cycle = one-cycle permutation)
//   cycle := "(" int+ ")"                (0-based points)
//   comments: "#" to end of line
struct ConstructionAst {
  enum class Kind { gens, sym, alt, cyclic, dihedral, psl2, psigmal2, direct, wreath, subgroup, paper_example };
  Kind kind = Kind::paper_example;
  std::uint64_t number = 0;  // n, q, wreath copy count, or gens degree
  std::vector<std::vector<std::vector<int>>> perms;  // gens-block, generator-major
  std::vector<ConstructionAst> children;

  bool operator==(const ConstructionAst& o) const;
};

// Total and side-effect free; throws group_error with line:column on syntax
// errors and on semantic violations (bad q, bad degree).
ConstructionAst parse_spec(const std::string& text);
std::string render_spec(const ConstructionAst& ast);

struct BuiltGroup {
  PermGroup group;
  // insertion-ordered: construction-provided names like "socle", "base",
  // "gm", "swap"
  std::vector<std::pair<std::string, PermGroup>> named_subgroups;
  GroupHints hints;
  ConstructionAst provenance;

  const PermGroup* named(const std::string& name) const;
};

BuiltGroup build_group(const ConstructionAst& ast, const Engine& eng = Engine::defaults());
BuiltGroup build_paper_example(const Engine& eng = Engine::defaults());

// GF(q) for prime powers q <= 32, with a fixed primitive polynomial per q so
// generator matrices and the resulting permutations are reproducible.
class Field {
 public:
  explicit Field(std::uint64_t q);
  int q() const { return q_; }
  int p() const { return p_; }
  int e() const { return e_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;
  int frobenius(int a) const { return frob_[a]; }
  int primitive() const { return primitive_; }

 private:
  int q_ = 0, p_ = 0, e_ = 0, primitive_ = 0;
  std::vector<int> add_, mul_, neg_, frob_;
};

// PSL2(q) acting on the projective line ordered infinity, 0, 1, ..., q-1.
std::vector<Permutation> psl2_generators(const Field& f);
Permutation frobenius_on_line(const Field& f);

}  // namespace cgt
