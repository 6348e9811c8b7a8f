#pragma once

#include <memory>
#include <unordered_map>

#include "cgt/engine.hpp"
#include "cgt/group.hpp"
#include "cgt/homomorphism.hpp"

namespace cgt {

// A faithful permutation representation of G/N together with the
// epimorphism and a section.  Strategy: the quotient acting on the orbits
// of N when that action is faithful, otherwise on the right cosets of N
// (subject to the quotient degree cap).
class QuotientData {
 public:
  const PermGroup& group() const { return group_; }
  const PermGroup& kernel() const { return kernel_; }
  const PermGroup& image() const { return image_; }

  Permutation apply(const Permutation& g) const;
  Permutation lift(const Permutation& img_elem) const;

  PermGroup image_of(const PermGroup& sub) const;
  // Complete preimage: lifted generators plus the kernel.
  PermGroup preimage(const PermGroup& img_sub) const;

 private:
  enum class Mode { whole, identity, blocks, cosets };
  friend QuotientData quotient_group(const PermGroup&, const PermGroup&, const Engine&);

  struct HomSlot;
  Mode mode_ = Mode::identity;
  PermGroup group_, kernel_, image_;
  // blocks mode
  std::vector<int> block_of_;   // point -> block id
  std::vector<int> block_rep_;  // block id -> least point
  std::shared_ptr<HomSlot> hom_slot_;  // built on first lift
  // cosets mode
  std::vector<Permutation> coset_rep_;
  std::unordered_map<Permutation, int, PermHash> coset_index_;

  const Homomorphism& hom() const;
};

QuotientData quotient_group(const PermGroup& g, const PermGroup& n, const Engine& eng = Engine::defaults());

}  // namespace cgt
