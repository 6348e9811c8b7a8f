#include "cgt/homomorphism.hpp"

#include <mutex>
#include <numeric>
#include <optional>

namespace cgt {

struct Homomorphism::Lazy {
  std::once_flag img_flag, dom_flag, ker_flag;
  std::optional<Bsgs> img_first, dom_first;
  std::optional<PermGroup> kernel;
};

namespace {

Permutation make_pair_perm(const Permutation& img, const Permutation& dom) {
  std::vector<int> v(img.degree() + dom.degree());
  for (int i = 0; i < img.degree(); ++i) v[i] = img[i];
  for (int i = 0; i < dom.degree(); ++i) v[img.degree() + i] = img.degree() + dom[i];
  return Permutation(std::move(v));
}

}  // namespace

Homomorphism::Homomorphism(int dom_degree, int img_degree,
                           std::vector<std::pair<Permutation, Permutation>> gen_pairs, Limits limits)
    : dom_degree_(dom_degree), img_degree_(img_degree), limits_(limits), lazy_(std::make_shared<Lazy>()) {
  std::vector<Permutation> dom_gens, img_gens;
  for (auto& [d, i] : gen_pairs) {
    if (d.degree() != dom_degree_ || i.degree() != img_degree_)
      throw group_error("homomorphism", "generator pair degree mismatch");
    pair_gens_.push_back(make_pair_perm(i, d));
    dom_gens.push_back(std::move(d));
    img_gens.push_back(std::move(i));
  }
  Limits pair_limits = limits_;
  pair_limits.max_degree = std::max(pair_limits.max_degree, dom_degree_ + img_degree_);
  domain_ = PermGroup(dom_degree_, dom_gens, limits_);
  image_ = PermGroup(img_degree_, img_gens, limits_);
  limits_ = pair_limits;

  // well-defined: an element trivial on the domain side must be trivial on
  // the image side, i.e. |pair group| == |domain|
  if (dom_first_chain().order() != domain_.order())
    throw group_error("homomorphism", "generator images do not define a homomorphism");
}

Permutation Homomorphism::img_part(const Permutation& pair) const {
  std::vector<int> v(img_degree_);
  for (int i = 0; i < img_degree_; ++i) v[i] = pair[i];
  return Permutation(std::move(v));
}

Permutation Homomorphism::dom_part(const Permutation& pair) const {
  std::vector<int> v(dom_degree_);
  for (int i = 0; i < dom_degree_; ++i) v[i] = pair[img_degree_ + i] - img_degree_;
  return Permutation(std::move(v));
}

const Bsgs& Homomorphism::img_first_chain() const {
  // The hint is a complete base of the image group, so every pair-group
  // element with a nontrivial image part moves a prefix point: all levels
  // after the prefix carry pure kernel generators.
  std::call_once(lazy_->img_flag, [this] {
    lazy_->img_first = Bsgs::build(img_degree_ + dom_degree_, pair_gens_, limits_, image_.index().base());
  });
  return *lazy_->img_first;
}

const Bsgs& Homomorphism::dom_first_chain() const {
  std::call_once(lazy_->dom_flag, [this] {
    std::vector<int> hint;
    for (int b : domain_.index().base()) hint.push_back(img_degree_ + b);
    lazy_->dom_first = Bsgs::build(img_degree_ + dom_degree_, pair_gens_, limits_, hint);
  });
  return *lazy_->dom_first;
}

const PermGroup& Homomorphism::kernel() const {
  std::call_once(lazy_->ker_flag, [this] {
    const Bsgs& chain = img_first_chain();
    std::size_t cut = 0;
    const auto& lvls = chain.levels();
    while (cut < lvls.size() && lvls[cut].base < img_degree_) ++cut;
    std::vector<Permutation> gens;
    for (const auto& pg : chain.stabilizer_gens(cut)) gens.push_back(dom_part(pg));
    lazy_->kernel = PermGroup(dom_degree_, gens, limits_).with_reduced_generators();
  });
  return *lazy_->kernel;
}

Permutation Homomorphism::apply(const Permutation& dom_elem) const {
  // Sift the virtual pair (?, dom_elem) by domain-side base points and
  // mirror the transversal factors on the image side: if the domain part is
  // u_m * ... * u_1, the image is the same product of image parts.
  const Bsgs& chain = dom_first_chain();
  Permutation h = dom_elem;
  std::vector<Permutation> factors;
  for (const auto& lv : chain.levels()) {
    if (lv.base < img_degree_) break;  // domain side fully sifted
    int delta = h[lv.base - img_degree_] + img_degree_;
    if (lv.pos[delta] == -1) throw group_error("homomorphism", "element not in the domain group");
    Permutation u = lv.rep(delta);
    h = h * dom_part(u).inverse();
    factors.push_back(img_part(u));
  }
  if (!h.is_identity()) throw group_error("homomorphism", "element not in the domain group");
  Permutation img(img_degree_);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) img = img * *it;
  return img;
}

Permutation Homomorphism::lift(const Permutation& img_elem) const {
  const Bsgs& chain = img_first_chain();
  Permutation h = img_elem;
  std::vector<Permutation> factors;
  for (const auto& lv : chain.levels()) {
    if (lv.base >= img_degree_) break;
    int delta = h[lv.base];
    if (lv.pos[delta] == -1) throw group_error("homomorphism", "element not in the image group");
    Permutation u = lv.rep(delta);
    h = h * img_part(u).inverse();
    factors.push_back(dom_part(u));
  }
  if (!h.is_identity()) throw group_error("homomorphism", "element not in the image group");
  Permutation d(dom_degree_);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) d = d * *it;
  return d;
}

PermGroup Homomorphism::image_of(const PermGroup& sub) const {
  std::vector<Permutation> gens;
  for (const auto& g : sub.generators()) gens.push_back(apply(g));
  return PermGroup(img_degree_, std::move(gens), image_.limits());
}

PermGroup Homomorphism::preimage_of(const PermGroup& img_sub) const {
  std::vector<Permutation> gens;
  for (const auto& g : img_sub.generators()) gens.push_back(lift(g));
  for (const auto& k : kernel().generators()) gens.push_back(k);
  return PermGroup(dom_degree_, std::move(gens), domain_.limits());
}

}  // namespace cgt
