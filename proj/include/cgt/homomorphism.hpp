#pragma once

#include <memory>
#include <vector>

#include "cgt/engine.hpp"
#include "cgt/group.hpp"

namespace cgt {

// A homomorphism between permutation groups, given by generator pairs
// (g_i, im_i).  Internally the graph {(phi(g), g)} is indexed as a
// permutation group on the disjoint union of the two domains (image points
// first); sifting by image-side base points lifts, sifting by domain-side
// base points applies.  Construction verifies that the pairs define a
// function: any pair-group element with identity domain part must have
// identity image part.
class Homomorphism {
 public:
  Homomorphism(int dom_degree, int img_degree, std::vector<std::pair<Permutation, Permutation>> gen_pairs,
               Limits limits = {});

  int dom_degree() const { return dom_degree_; }
  int img_degree() const { return img_degree_; }

  const PermGroup& domain() const { return domain_; }
  const PermGroup& image() const { return image_; }
  const PermGroup& kernel() const;

  Permutation apply(const Permutation& dom_elem) const;
  // Any preimage of img_elem; throws group_error when not in the image.
  Permutation lift(const Permutation& img_elem) const;

  PermGroup image_of(const PermGroup& sub) const;
  // Complete preimage: lifted generators together with the kernel.
  PermGroup preimage_of(const PermGroup& img_sub) const;

 private:
  struct Lazy;
  int dom_degree_, img_degree_;
  Limits limits_;
  PermGroup domain_, image_;
  std::vector<Permutation> pair_gens_;  // on img_degree_ + dom_degree_ points
  std::shared_ptr<Lazy> lazy_;

  const Bsgs& img_first_chain() const;
  const Bsgs& dom_first_chain() const;
  Permutation img_part(const Permutation& pair) const;
  Permutation dom_part(const Permutation& pair) const;
};

}  // namespace cgt
