#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cgt/engine.hpp"
#include "cgt/group.hpp"
#include "cgt/homomorphism.hpp"
#include "cgt/quotient.hpp"

namespace cgt {

// A section A/B of an ambient group: B normal in A.
struct Section {
  PermGroup ambient;
  PermGroup a;
  PermGroup b;
};

// Aut_H(A/B): the action induced by N_H(A/B) = N_H(A) n N_H(B) on the
// section, realized as a permutation group; kernel C_H(A/B).
struct InducedAutResult {
  PermGroup n_sub;   // N_H(A/B), at ambient degree
  PermGroup aut;     // the induced automorphism group, faithful
  PermGroup kernel;  // C_H(A/B), at ambient degree
  std::shared_ptr<Homomorphism> action;  // N_H(A/B) -> aut
  // "restriction": aut acts on the natural support of A (trivial B);
  // "section-elements": aut permutes the elements of A/B.
  std::string route;
};

InducedAutResult induced_aut(const PermGroup& h, const Section& sec, const Engine& eng = Engine::defaults());

// Computes Aut through the group and through the quotient independently and
// exhibits an equivariant bijection between the two section actions.
struct SectionInvariance {
  std::uint64_t aut_order_direct = 0;  // through the quotient group
  std::uint64_t aut_order_pulled = 0;  // through the full group
  bool orders_equal = false;
  bool actions_equivalent = false;
  bool holds() const { return orders_equal && actions_equivalent; }
};

SectionInvariance induced_aut_quotient_invariance(const QuotientData& q, const Section& sec_in_image,
                                                  const Engine& eng = Engine::defaults());

// The embedding of g into (Aut_G(T_1) x ... x Aut_G(T_k)) semidirect Sym_k
// acting on the disjoint union of the factor supports.  Requires trivial
// C_G(<T_1,...,T_k>).
struct WreathEmbedData {
  std::vector<PermGroup> factors;           // T_i, subgroups of g
  std::vector<std::vector<int>> supports;   // global points of copy i
  std::vector<int> copy_offset;             // start of copy i in the union
  int union_degree = 0;
  std::vector<PermGroup> aut_factors_local;  // Aut_G(T_i) on local points
  PermGroup aut_product;                     // their product on the union
  std::shared_ptr<Homomorphism> embedding;   // g -> Sym(union), injective
  std::shared_ptr<Homomorphism> factor_action;  // g -> Sym(k)
  PermGroup g_cap_a;                         // kernel of factor_action, in g
  PermGroup wreath_ambient;                  // the full codomain, on the union
  bool transitive_on_factors = false;

  // Projection of a subgroup of g_cap_a to factor i, on local points.
  PermGroup project(const PermGroup& sub, int i) const;
  // Extend an element of T_i's local action back to the ambient degree.
  Permutation unproject(const Permutation& local_elem, int i) const;
};

WreathEmbedData wreath_embed(const PermGroup& g, std::vector<PermGroup> socle_factors,
                             const Engine& eng = Engine::defaults());

}  // namespace cgt
