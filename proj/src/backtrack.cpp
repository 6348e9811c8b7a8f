#include "cgt/backtrack.hpp"

#include <algorithm>

namespace cgt {

namespace {

// Stabilizer of one point inside k, via a chain rebased at that point.
PermGroup point_stabilizer(const PermGroup& k, int point) {
  bool moved = false;
  for (const auto& g : k.generators())
    if (g[point] != point) {
      moved = true;
      break;
    }
  if (!moved) return k;
  Bsgs chain = k.rebuilt_index({point});
  return PermGroup(k.degree(), chain.stabilizer_gens(1), k.limits()).with_reduced_generators();
}

class Backtracker {
 public:
  Backtracker(const PermGroup& g, SearchSpec spec)
      : group_(g), chain_(g.index()), spec_(std::move(spec)), degree_(g.degree()) {
    // closing the constraint list under inverses sharpens propagation
    auto pairs = spec_.intertwine;
    for (const auto& [u, v] : pairs) spec_.intertwine.emplace_back(u.inverse(), v.inverse());
    pimg_.assign(degree_, -1);
    pinv_.assign(degree_, -1);
    known_ = PermGroup(degree_, spec_.seed, group_.limits()).with_reduced_generators();
  }

  PermGroup run_subgroup() {
    dfs(0, Permutation(degree_), known_);
    return known_;
  }

  std::optional<Permutation> run_first() {
    dfs(0, Permutation(degree_), PermGroup(degree_, {}, group_.limits()));
    return first_;
  }

 private:
  const PermGroup& group_;
  const Bsgs& chain_;
  SearchSpec spec_;
  int degree_;

  std::vector<int> pimg_, pinv_;  // partial images forced by constraints
  std::vector<int> trail_;
  PermGroup known_;
  std::uint64_t nodes_ = 0;
  std::optional<Permutation> first_;

  bool colors_ok(int x, int y) const {
    return spec_.color_dom.empty() || spec_.color_dom[x] == spec_.color_img[y];
  }

  // Closes the forced-image relation over the intertwine pairs.
  // Returns false on conflict; trail records assignments for undo.
  bool assign(int x0, int y0, std::size_t trail_mark) {
    std::vector<std::pair<int, int>> queue{{x0, y0}};
    while (!queue.empty()) {
      auto [x, y] = queue.back();
      queue.pop_back();
      if (pimg_[x] == y) continue;
      if (pimg_[x] != -1 || pinv_[y] != -1 || !colors_ok(x, y)) {
        undo_to(trail_mark);
        return false;
      }
      pimg_[x] = y;
      pinv_[y] = x;
      trail_.push_back(x);
      for (const auto& [u, v] : spec_.intertwine) queue.emplace_back(u[x], v[y]);
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      int x = trail_.back();
      trail_.pop_back();
      pinv_[pimg_[x]] = -1;
      pimg_[x] = -1;
    }
  }

  static bool minimal_in_orbit(const PermGroup& k, int point) {
    std::vector<int> orb{point};
    std::vector<bool> seen(static_cast<std::size_t>(k.degree()), false);
    seen[point] = true;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const auto& g : k.generators()) {
        int q = g[orb[i]];
        if (!seen[q]) {
          if (q < point) return false;
          seen[q] = true;
          orb.push_back(q);
        }
      }
    return true;
  }

  // `stab` under-approximates Stab_known(chosen image prefix); staleness
  // after the known subgroup grows only weakens the prune, never soundness.
  // Returns true when unwinding after a find-first hit.
  bool dfs(std::size_t level, const Permutation& partial, const PermGroup& stab) {
    if (level == chain_.levels().size()) {
      for (int x = 0; x < degree_; ++x)
        if (pimg_[x] != -1 && partial[x] != pimg_[x]) return false;
      if (!spec_.leaf_test(partial)) return false;
      if (spec_.find_first) {
        first_ = partial;
        return true;
      }
      if (!partial.is_identity() && !known_.contains(partial)) known_ = known_.extended_with({partial});
      return false;
    }

    const ChainLevel& lv = chain_.levels()[level];
    int b = lv.base;

    // candidate images of b under any completion, ascending for determinism
    std::vector<std::pair<int, int>> cands;  // (delta, orbit point gamma)
    cands.reserve(lv.orbit.size());
    for (int gamma : lv.orbit) cands.emplace_back(partial[gamma], gamma);
    std::sort(cands.begin(), cands.end());

    for (auto [delta, gamma] : cands) {
      if (++nodes_ > spec_.node_budget)
        throw capacity_error(spec_.phase, "node budget " + std::to_string(spec_.node_budget) + " exhausted");
      if (pimg_[b] != -1 && pimg_[b] != delta) continue;
      if (pinv_[delta] != -1 && pinv_[delta] != b) continue;
      if (!colors_ok(b, delta)) continue;
      // at the root the freshly grown known subgroup prunes directly
      const PermGroup& prune_group = (level == 0 && !spec_.find_first) ? known_ : stab;
      if (!spec_.find_first && !prune_group.is_trivial() && !minimal_in_orbit(prune_group, delta)) continue;

      std::size_t mark = trail_.size();
      if (pimg_[b] == -1 && !assign(b, delta, mark)) continue;
      bool stop;
      if (spec_.find_first || prune_group.is_trivial() || level + 1 == chain_.levels().size())
        stop = dfs(level + 1, lv.rep(gamma) * partial, prune_group);
      else
        stop = dfs(level + 1, lv.rep(gamma) * partial, point_stabilizer(prune_group, delta));
      undo_to(mark);
      if (stop) return true;
    }
    return false;
  }
};

}  // namespace

PermGroup subgroup_search(const PermGroup& g, SearchSpec spec) {
  Backtracker bt(g, std::move(spec));
  return bt.run_subgroup();
}

std::optional<Permutation> element_search(const PermGroup& g, SearchSpec spec) {
  spec.find_first = true;
  Backtracker bt(g, std::move(spec));
  return bt.run_first();
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h, const Engine& eng) {
  if (g.degree() != h.degree()) throw group_error("normalizer", "degree mismatch");
  auto normalizes = [&](const Permutation& x) {
    for (const auto& a : h.generators())
      if (!h.contains(a.conjugated_by(x))) return false;
    return true;
  };
  bool all = true;
  for (const auto& x : g.generators())
    if (!normalizes(x)) {
      all = false;
      break;
    }
  if (all) return g;  // h is normal in g (covers h == g as well)

  SearchSpec spec;
  spec.phase = "normalizer";
  spec.node_budget = eng.limits.backtrack_nodes;
  spec.color_dom = spec.color_img = h.orbit_size_colors();
  spec.leaf_test = normalizes;
  for (const auto& a : h.generators())
    if (g.contains(a)) spec.seed.push_back(a);
  for (const auto& x : g.generators())
    if (normalizes(x)) spec.seed.push_back(x);
  return subgroup_search(g, std::move(spec));
}

namespace {

PermGroup centralizer_impl(const PermGroup& g, const std::vector<Permutation>& zs, const Engine& eng,
                           const std::vector<Permutation>& extra_seed) {
  auto commutes = [&](const Permutation& x) {
    for (const auto& z : zs)
      if (x * z != z * x) return false;
    return true;
  };
  bool all = true;
  for (const auto& x : g.generators())
    if (!commutes(x)) {
      all = false;
      break;
    }
  if (all) return g;

  SearchSpec spec;
  spec.phase = "centralizer";
  spec.node_budget = eng.limits.backtrack_nodes;
  for (const auto& z : zs) spec.intertwine.emplace_back(z, z);
  spec.leaf_test = commutes;
  for (const auto& x : g.generators())
    if (commutes(x)) spec.seed.push_back(x);
  for (const auto& x : extra_seed)
    if (commutes(x) && g.contains(x)) spec.seed.push_back(x);
  return subgroup_search(g, std::move(spec));
}

}  // namespace

PermGroup centralizer(const PermGroup& g, const PermGroup& h, const Engine& eng) {
  if (g.degree() != h.degree()) throw group_error("centralizer", "degree mismatch");
  return centralizer_impl(g, h.generators(), eng, h.generators());
}

PermGroup centralizer(const PermGroup& g, const Permutation& z, const Engine& eng) {
  if (g.degree() != z.degree()) throw group_error("centralizer", "degree mismatch");
  if (z.is_identity()) return g;
  return centralizer_impl(g, {z}, eng, {z});
}

std::optional<Permutation> conjugating_element(const PermGroup& g, const PermGroup& a, const PermGroup& b,
                                               const Engine& eng) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.same_group_as(b)) return Permutation(g.degree());
  SearchSpec spec;
  spec.phase = "conjugacy";
  spec.node_budget = eng.limits.backtrack_nodes;
  spec.color_dom = a.orbit_size_colors();
  spec.color_img = b.orbit_size_colors();
  spec.leaf_test = [&](const Permutation& x) {
    for (const auto& s : a.generators())
      if (!b.contains(s.conjugated_by(x))) return false;
    return true;
  };
  return element_search(g, std::move(spec));
}

std::optional<Permutation> conjugating_element(const PermGroup& g, const Permutation& a, const Permutation& b,
                                               const Engine& eng) {
  SearchSpec spec;
  spec.phase = "conjugacy";
  spec.node_budget = eng.limits.backtrack_nodes;
  spec.intertwine.emplace_back(a, b);
  spec.leaf_test = [&](const Permutation& x) { return a.conjugated_by(x) == b; };
  return element_search(g, std::move(spec));
}

}  // namespace cgt
