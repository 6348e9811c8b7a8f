#include "cgt/quotient.hpp"

#include <algorithm>

namespace cgt {

namespace {

Permutation block_action(const Permutation& g, const std::vector<int>& block_of, int n_blocks,
                         const std::vector<int>& block_rep) {
  std::vector<int> img(n_blocks);
  for (int b = 0; b < n_blocks; ++b) img[b] = block_of[g[block_rep[b]]];
  return Permutation(std::move(img));
}

}  // namespace

struct QuotientData::HomSlot {
  std::once_flag flag;
  std::shared_ptr<Homomorphism> value;
};

const Homomorphism& QuotientData::hom() const {
  std::call_once(hom_slot_->flag, [this] {
    std::vector<std::pair<Permutation, Permutation>> pairs;
    for (const auto& g : group_.generators()) pairs.emplace_back(g, apply(g));
    hom_slot_->value =
        std::make_shared<Homomorphism>(group_.degree(), image_.degree(), std::move(pairs), group_.limits());
  });
  return *hom_slot_->value;
}

Permutation QuotientData::apply(const Permutation& g) const {
  switch (mode_) {
    case Mode::whole:
      return Permutation(1);
    case Mode::identity:
      return g;
    case Mode::blocks:
      return block_action(g, block_of_, image_.degree(), block_rep_);
    case Mode::cosets: {
      std::vector<int> img(coset_rep_.size());
      const Bsgs& nchain = kernel_.index();
      for (std::size_t i = 0; i < coset_rep_.size(); ++i)
        img[i] = coset_index_.at(nchain.canonical_coset_rep(coset_rep_[i] * g));
      return Permutation(std::move(img));
    }
  }
  throw group_error("quotient", "bad mode");
}

Permutation QuotientData::lift(const Permutation& img_elem) const {
  switch (mode_) {
    case Mode::whole:
      return Permutation(group_.degree());
    case Mode::identity:
      return img_elem;
    case Mode::blocks:
      return hom().lift(img_elem);
    case Mode::cosets: {
      // the coset-N*e stabilizer in the image is trivial, so the image of
      // the representative of the coset img_elem(identity coset) is img_elem
      if (!image_.contains(img_elem)) throw group_error("quotient", "element not in the quotient image");
      int pt0 = coset_index_.at(kernel_.index().canonical_coset_rep(Permutation(group_.degree())));
      return coset_rep_[img_elem[pt0]];
    }
  }
  throw group_error("quotient", "bad mode");
}

PermGroup QuotientData::image_of(const PermGroup& sub) const {
  std::vector<Permutation> gens;
  for (const auto& g : sub.generators()) gens.push_back(apply(g));
  return PermGroup(image_.degree(), std::move(gens), image_.limits());
}

PermGroup QuotientData::preimage(const PermGroup& img_sub) const {
  std::vector<Permutation> gens;
  for (const auto& g : img_sub.generators()) gens.push_back(lift(g));
  for (const auto& k : kernel_.generators()) gens.push_back(k);
  return PermGroup(group_.degree(), std::move(gens), group_.limits());
}

QuotientData quotient_group(const PermGroup& g, const PermGroup& n, const Engine& eng) {
  if (g.degree() != n.degree()) throw group_error("quotient", "degree mismatch");
  for (const auto& a : n.generators())
    if (!g.contains(a)) throw group_error("quotient", "kernel subgroup not contained in the group");
  for (const auto& x : g.generators())
    for (const auto& a : n.generators())
      if (!n.contains(a.conjugated_by(x))) throw group_error("quotient", "subgroup is not normal");

  QuotientData out;
  out.group_ = g;
  out.kernel_ = n;

  std::uint64_t index = g.order() / n.order();
  if (index == 1) {
    out.mode_ = QuotientData::Mode::whole;
    out.image_ = PermGroup(1, {}, g.limits());
    return out;
  }
  if (n.order() == 1) {
    out.mode_ = QuotientData::Mode::identity;
    out.image_ = g;
    return out;
  }

  // action on the orbits of N, when faithful for G/N
  {
    auto orbs = n.orbits();
    if (orbs.size() > 1) {
      int n_blocks = static_cast<int>(orbs.size());
      std::vector<int> block_of(g.degree(), -1), rep(n_blocks, -1);
      for (int b = 0; b < n_blocks; ++b) {
        rep[b] = orbs[b].front();
        for (int p : orbs[b]) block_of[p] = b;
      }
      std::vector<Permutation> img_gens;
      for (const auto& x : g.generators()) img_gens.push_back(block_action(x, block_of, n_blocks, rep));
      PermGroup image(n_blocks, img_gens, g.limits());
      if (image.order() == index) {
        out.mode_ = QuotientData::Mode::blocks;
        out.block_of_ = std::move(block_of);
        out.block_rep_ = std::move(rep);
        out.image_ = std::move(image);
        out.hom_slot_ = std::make_shared<QuotientData::HomSlot>();
        return out;
      }
    }
  }

  // fall back to the action on right cosets of N
  if (index > static_cast<std::uint64_t>(eng.limits.quotient_degree_cap))
    throw capacity_error("quotient", "coset action degree " + std::to_string(index) + " exceeds cap " +
                                         std::to_string(eng.limits.quotient_degree_cap));
  const Bsgs& nchain = n.index();
  std::vector<Permutation> reps{nchain.canonical_coset_rep(Permutation(g.degree()))};
  std::unordered_map<Permutation, int, PermHash> idx;
  idx.emplace(reps[0], 0);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (const auto& x : g.generators()) {
      Permutation next = nchain.canonical_coset_rep(reps[i] * x);
      if (idx.emplace(next, static_cast<int>(reps.size())).second) reps.push_back(std::move(next));
    }
  }
  if (reps.size() != index) throw group_error("quotient", "coset enumeration mismatch");
  std::vector<Permutation> img_gens;
  for (const auto& x : g.generators()) {
    std::vector<int> img(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) img[i] = idx.at(nchain.canonical_coset_rep(reps[i] * x));
    img_gens.push_back(Permutation(std::move(img)));
  }
  out.mode_ = QuotientData::Mode::cosets;
  out.coset_rep_ = std::move(reps);
  out.coset_index_ = std::move(idx);
  out.image_ = PermGroup(static_cast<int>(index), img_gens, g.limits());
  if (out.image_.order() != index) throw group_error("quotient", "coset action is not faithful for the quotient");
  return out;
}

}  // namespace cgt
