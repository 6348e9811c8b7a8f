#include "cgt/group.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

namespace cgt {

namespace {
// Above this degree, transversals switch to Schreier trees to bound memory.
constexpr int kSchreierThreshold = 600;
}  // namespace

Permutation ChainLevel::rep(int point) const {
  int idx = pos[point];
  if (explicit_reps) return reps[idx];
  // Walk the Schreier tree from `point` back to the base, then compose the
  // edge labels base-to-point.
  std::vector<int> edges;
  while (parent[idx] != -1) {
    edges.push_back(via[idx]);
    idx = parent[idx];
  }
  Permutation u(static_cast<int>(pos.size()));
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) u = u * gens[*it];
  return u;
}

// ---------------------------------------------------------------------------
// Schreier-Sims

class BsgsBuilder {
 public:
  BsgsBuilder(int degree, const Limits& limits, std::vector<int> base_hint)
      : degree_(degree), limits_(limits), hint_(std::move(base_hint)) {}

  Bsgs run(const std::vector<Permutation>& gens) {
    // Hint points form a forced base prefix; trivial basic orbits are kept
    // so that levels after the prefix fix every hinted point.
    std::vector<bool> hinted(degree_, false);
    for (int p : hint_) {
      if (p < 0 || p >= degree_) throw group_error("index", "base hint point out of range");
      if (hinted[p]) continue;
      hinted[p] = true;
      new_level(p);
    }
    for (const auto& g : gens) {
      if (g.degree() != degree_) throw group_error("index", "generator degree mismatch");
      insert(g);
    }
    complete();
    Bsgs out;
    out.degree_ = degree_;
    out.levels_.reserve(levels_.size());
    for (auto& lv : levels_) out.levels_.push_back(static_cast<ChainLevel&&>(lv));
    out.order_ = 1;
    for (const auto& lv : out.levels_) out.order_ *= lv.orbit.size();
    return out;
  }

 private:
  struct Level : ChainLevel {
    std::size_t pairs_done = 0;  // (orbit, gen) pairs processed, orbit-major
  };

  int degree_;
  Limits limits_;
  std::vector<int> hint_;
  std::vector<Level> levels_;

  void check_caps() {
    if (degree_ > limits_.max_degree)
      throw capacity_error("index", "degree " + std::to_string(degree_) + " exceeds cap " +
                                        std::to_string(limits_.max_degree));
    std::uint64_t ord = 1;
    for (const auto& lv : levels_) {
      std::uint64_t n = lv.orbit.size();
      if (n != 0 && ord > limits_.max_order / n)
        throw capacity_error("index", "group order exceeds cap " + std::to_string(limits_.max_order));
      ord *= n;
    }
  }

  void new_level(int base) {
    Level lv;
    lv.base = base;
    lv.explicit_reps = degree_ <= kSchreierThreshold;
    lv.pos.assign(degree_, -1);
    lv.orbit.push_back(lv.base);
    lv.pos[lv.base] = 0;
    if (lv.explicit_reps)
      lv.reps.push_back(Permutation(degree_));
    else {
      lv.parent.push_back(-1);
      lv.via.push_back(-1);
    }
    levels_.push_back(std::move(lv));
  }

  int next_base_point(const Permutation& g) const {
    for (int p = 0; p < degree_; ++p)
      if (g[p] != p) return p;
    return -1;
  }

  // Files g under every level whose base prefix it fixes; creates a new
  // level when g fixes the entire current base.
  void insert(const Permutation& g) {
    if (g.is_identity()) return;
    std::size_t deepest = 0;
    while (deepest < levels_.size() && g[levels_[deepest].base] == levels_[deepest].base) ++deepest;
    if (deepest == levels_.size()) new_level(next_base_point(g));
    for (std::size_t l = 0; l <= deepest; ++l) {
      levels_[l].gens.push_back(g);
      levels_[l].pairs_done = 0;
      extend_orbit(l);
    }
    check_caps();
  }

  // Incremental orbit extension: existing entries keep their order and
  // representatives, so discovery order is reproducible.
  void extend_orbit(std::size_t l) {
    Level& lv = levels_[l];
    for (std::size_t qi = 0; qi < lv.orbit.size(); ++qi) {
      int p = lv.orbit[qi];
      for (std::size_t gi = 0; gi < lv.gens.size(); ++gi) {
        int q = lv.gens[gi][p];
        if (lv.pos[q] != -1) continue;
        lv.pos[q] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(q);
        if (lv.explicit_reps)
          lv.reps.push_back(lv.reps[qi] * lv.gens[gi]);
        else {
          lv.parent.push_back(static_cast<int>(qi));
          lv.via.push_back(static_cast<int>(gi));
        }
      }
    }
  }

  std::pair<Permutation, std::size_t> strip(Permutation h, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      int delta = h[levels_[l].base];
      if (levels_[l].pos[delta] == -1) return {std::move(h), l};
      h = h * levels_[l].rep(delta).inverse();
    }
    return {std::move(h), levels_.size()};
  }

  // Verify levels deepest-first; every Schreier generator of a verified
  // level must sift to the identity through the rest of the chain.  A
  // residue files new strong generators at levels 0..stuck, so verification
  // must resume at the DEEPEST touched level: levels between the current
  // one and `stuck` lose their verified status when they gain a generator.
  void complete() {
    if (levels_.empty()) return;
    std::size_t i = levels_.size() - 1;
    for (;;) {
      Level& lv = levels_[i];
      extend_orbit(i);
      bool restarted = false;
      while (lv.pairs_done < lv.orbit.size() * lv.gens.size()) {
        std::size_t oi = lv.pairs_done / lv.gens.size();
        std::size_t gi = lv.pairs_done % lv.gens.size();
        ++lv.pairs_done;
        int p = lv.orbit[oi];
        const Permutation& s = lv.gens[gi];
        int q = s[p];
        Permutation schreier = lv.rep(p) * s * lv.rep(q).inverse();
        if (schreier.is_identity()) continue;
        auto [residue, stuck] = strip(std::move(schreier), i + 1);
        if (residue.is_identity()) continue;
        i = insert_residue(std::move(residue), stuck);
        restarted = true;
        break;
      }
      if (restarted) continue;
      if (i == 0) break;
      --i;
    }
  }

  // h fixes base[0..stuck-1]; file it at levels 0..stuck (a new level is
  // created when it fixes the whole base).  Returns the deepest level that
  // received the generator.
  std::size_t insert_residue(Permutation h, std::size_t stuck) {
    if (stuck == levels_.size()) {
      insert(std::move(h));
      return levels_.size() - 1;
    }
    for (std::size_t l = 0; l <= stuck; ++l) {
      levels_[l].gens.push_back(h);
      levels_[l].pairs_done = 0;
      extend_orbit(l);
    }
    check_caps();
    return stuck;
  }
};

Bsgs Bsgs::build(int degree, const std::vector<Permutation>& gens, const Limits& limits,
                 const std::vector<int>& base_hint) {
  if (degree > limits.max_degree)
    throw capacity_error("index",
                         "degree " + std::to_string(degree) + " exceeds cap " + std::to_string(limits.max_degree));
  BsgsBuilder b(degree, limits, base_hint);
  return b.run(gens);
}

std::vector<int> Bsgs::base() const {
  std::vector<int> b;
  b.reserve(levels_.size());
  for (const auto& lv : levels_) b.push_back(lv.base);
  return b;
}

std::pair<Permutation, std::size_t> Bsgs::sift(const Permutation& g, std::size_t from) const {
  Permutation h = g;
  for (std::size_t l = from; l < levels_.size(); ++l) {
    int delta = h[levels_[l].base];
    if (levels_[l].pos[delta] == -1) return {std::move(h), l};
    h = h * levels_[l].rep(delta).inverse();
  }
  return {std::move(h), levels_.size()};
}

bool Bsgs::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw group_error("membership", "degree mismatch");
  auto [residue, level] = sift(g);
  return level == levels_.size() && residue.is_identity();
}

std::vector<Permutation> Bsgs::stabilizer_gens(std::size_t level) const {
  if (level >= levels_.size()) return {};
  return levels_[level].gens;
}

std::uint64_t Bsgs::stabilizer_order(std::size_t level) const {
  std::uint64_t ord = 1;
  for (std::size_t l = level; l < levels_.size(); ++l) ord *= levels_[l].orbit.size();
  return ord;
}

std::vector<Permutation> Bsgs::elements(std::uint64_t cap) const {
  if (order_ > cap)
    throw capacity_error("elements", "order " + std::to_string(order_) + " exceeds listing cap " + std::to_string(cap));
  std::vector<Permutation> out;
  out.reserve(order_);
  out.push_back(Permutation(degree_));
  // G^(l) = union over the basic orbit of G^(l+1) * u; build upward.
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(out.size() * levels_[l].orbit.size());
    for (std::size_t oi = 0; oi < levels_[l].orbit.size(); ++oi) {
      Permutation u = levels_[l].rep(levels_[l].orbit[oi]);
      for (const auto& h : out) next.push_back(h * u);
    }
    out = std::move(next);
  }
  return out;
}

Permutation Bsgs::random_element(Rng& rng) const {
  Permutation g(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const auto& lv = levels_[l];
    g = g * lv.rep(lv.orbit[rng.below(lv.orbit.size())]);
  }
  return g;
}

Permutation Bsgs::canonical_coset_rep(const Permutation& g) const {
  // Greedily minimize the image of each base point over the coset.  The
  // minimum at each level is coset-invariant, so the result is canonical.
  Permutation r = g;
  for (const auto& lv : levels_) {
    int best_point = -1, best_image = degree_;
    for (int p : lv.orbit) {
      int img = r[p];
      if (img < best_image) {
        best_image = img;
        best_point = p;
      }
    }
    r = lv.rep(best_point) * r;
  }
  return r;
}

// ---------------------------------------------------------------------------
// PermGroup

struct PermGroup::IndexSlot {
  std::once_flag flag;
  std::shared_ptr<const Bsgs> value;
};

PermGroup::PermGroup(int degree, Limits limits)
    : degree_(degree), limits_(limits), slot_(std::make_shared<IndexSlot>()) {}

PermGroup::PermGroup(int degree, std::vector<Permutation> gens, Limits limits)
    : degree_(degree), limits_(limits), slot_(std::make_shared<IndexSlot>()) {
  for (auto& g : gens) {
    if (g.degree() != degree_) throw group_error("group", "generator degree mismatch");
    if (!g.is_identity()) gens_.push_back(std::move(g));
  }
}

const Bsgs& PermGroup::index() const {
  std::call_once(slot_->flag, [this] { slot_->value = std::make_shared<const Bsgs>(Bsgs::build(degree_, gens_, limits_)); });
  return *slot_->value;
}

Bsgs PermGroup::rebuilt_index(const std::vector<int>& base_hint) const {
  return Bsgs::build(degree_, gens_, limits_, base_hint);
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw group_error("membership", "degree mismatch");
  return index().contains(g);
}

bool PermGroup::contains_group(const PermGroup& h) const {
  for (const auto& g : h.generators())
    if (!contains(g)) return false;
  return true;
}

bool PermGroup::same_group_as(const PermGroup& h) const {
  return order() == h.order() && contains_group(h);
}

std::vector<int> PermGroup::orbit(int point) const {
  if (point < 0 || point >= degree_) throw group_error("orbit", "point out of range");
  std::vector<int> orb{point};
  std::vector<bool> seen(degree_, false);
  seen[point] = true;
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (const auto& g : gens_) {
      int q = g[orb[i]];
      if (!seen[q]) {
        seen[q] = true;
        orb.push_back(q);
      }
    }
  return orb;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(degree_, false);
  for (int p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    auto orb = orbit(p);
    for (int q : orb) seen[q] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<int> PermGroup::orbit_size_colors() const {
  std::vector<int> color(degree_, 0);
  for (const auto& orb : orbits())
    for (int p : orb) color[p] = static_cast<int>(orb.size());
  return color;
}

std::vector<int> PermGroup::support() const {
  std::vector<bool> moved(degree_, false);
  for (const auto& g : gens_)
    for (int p = 0; p < degree_; ++p)
      if (g[p] != p) moved[p] = true;
  std::vector<int> out;
  for (int p = 0; p < degree_; ++p)
    if (moved[p]) out.push_back(p);
  return out;
}

PermGroup PermGroup::conjugated_by(const Permutation& x) const {
  std::vector<Permutation> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g.conjugated_by(x));
  return PermGroup(degree_, std::move(gens), limits_);
}

PermGroup PermGroup::extended_with(const std::vector<Permutation>& more) const {
  std::vector<Permutation> gens = gens_;
  gens.insert(gens.end(), more.begin(), more.end());
  return PermGroup(degree_, std::move(gens), limits_);
}

PermGroup PermGroup::with_reduced_generators() const {
  std::vector<Permutation> kept;
  PermGroup cur(degree_, {}, limits_);
  for (const auto& g : gens_) {
    if (cur.contains(g)) continue;
    kept.push_back(g);
    cur = PermGroup(degree_, kept, limits_);
  }
  return cur;
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<int>& points) const {
  Bsgs chain = rebuilt_index(points);
  // Strong generators fixing every requested point generate the stabilizer.
  std::size_t cut = 0;
  const auto& lvls = chain.levels();
  std::vector<bool> wanted(degree_, false);
  for (int p : points) wanted[p] = true;
  while (cut < lvls.size() && wanted[lvls[cut].base]) ++cut;
  return PermGroup(degree_, chain.stabilizer_gens(cut), limits_).with_reduced_generators();
}

PermGroup PermGroup::restricted_to(const std::vector<int>& points) const {
  std::vector<int> local(degree_, -1);
  for (std::size_t i = 0; i < points.size(); ++i) local[points[i]] = static_cast<int>(i);
  std::vector<Permutation> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) {
    std::vector<int> img(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      int q = g[points[i]];
      if (local[q] == -1) throw group_error("restriction", "generator does not stabilize the point set");
      img[i] = local[q];
    }
    gens.push_back(Permutation(std::move(img)));
  }
  return PermGroup(static_cast<int>(points.size()), std::move(gens), limits_);
}

std::vector<Permutation> closure_elements(int degree, const std::vector<Permutation>& gens, std::uint64_t cap) {
  std::vector<Permutation> elems{Permutation(degree)};
  std::unordered_set<Permutation, PermHash> seen{elems.front()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Permutation h = elems[i] * g;
      if (seen.insert(h).second) {
        if (elems.size() + 1 > cap) throw capacity_error("closure", "closure exceeds cap " + std::to_string(cap));
        elems.push_back(std::move(h));
      }
    }
  }
  return elems;
}

}  // namespace cgt
