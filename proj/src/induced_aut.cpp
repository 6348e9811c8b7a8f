#include "cgt/induced_aut.hpp"

#include <algorithm>
#include <unordered_map>

#include "cgt/backtrack.hpp"

namespace cgt {

namespace {

// The centralizer of the restricted action inside the full symmetric group
// on its domain is trivial iff the action is transitive and the point
// stabilizer fixes exactly one point.
bool trivial_full_sym_centralizer(const PermGroup& local) {
  if (local.degree() == 0) return false;
  if (static_cast<int>(local.orbit(0).size()) != local.degree()) return false;
  PermGroup stab = local.pointwise_stabilizer({0});
  int fixed = 0;
  for (int p = 0; p < local.degree(); ++p) {
    bool f = true;
    for (const auto& g : stab.generators())
      if (g[p] != p) {
        f = false;
        break;
      }
    if (f) ++fixed;
  }
  return fixed == 1;
}

// Conjugation action of n_sub on the elements of the section A/B.
InducedAutResult section_element_action(const PermGroup& n_sub, const Section& sec, const Engine& eng) {
  QuotientData q = quotient_group(sec.a, sec.b, eng);
  auto elems = q.image().elements(eng.limits.element_list);
  std::sort(elems.begin(), elems.end());
  std::unordered_map<Permutation, int, PermHash> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<int>(i));
  std::vector<Permutation> lifts;
  lifts.reserve(elems.size());
  for (const auto& e : elems) lifts.push_back(q.lift(e));

  int n_pts = static_cast<int>(elems.size());
  std::vector<std::pair<Permutation, Permutation>> pairs;
  for (const auto& x : n_sub.generators()) {
    std::vector<int> img(n_pts);
    for (int i = 0; i < n_pts; ++i) img[i] = index.at(q.apply(lifts[i].conjugated_by(x)));
    pairs.emplace_back(x, Permutation(std::move(img)));
  }
  InducedAutResult out;
  out.n_sub = n_sub;
  out.action = std::make_shared<Homomorphism>(n_sub.degree(), n_pts, std::move(pairs), n_sub.limits());
  out.aut = out.action->image();
  out.kernel = out.action->kernel();
  out.route = "section-elements";
  return out;
}

}  // namespace

InducedAutResult induced_aut(const PermGroup& h, const Section& sec, const Engine& eng) {
  if (!sec.a.contains_group(sec.b)) throw group_error("induced-aut", "B is not contained in A");
  for (const auto& x : sec.a.generators())
    for (const auto& y : sec.b.generators())
      if (!sec.b.contains(y.conjugated_by(x))) throw group_error("induced-aut", "B is not normal in A");

  // N_H(A/B) = N_{N_H(A)}(B)
  PermGroup n_sub = normalizer(h, sec.a, eng);
  if (!sec.b.is_trivial()) n_sub = normalizer(n_sub, sec.b, eng);

  if (sec.b.is_trivial()) {
    auto supp = sec.a.support();
    if (!supp.empty()) {
      PermGroup local = sec.a.restricted_to(supp);
      if (trivial_full_sym_centralizer(local)) {
        // elements of N fixing the support pointwise are exactly C_H(A),
        // so restriction to the support realizes the induced action
        std::vector<std::pair<Permutation, Permutation>> pairs;
        for (const auto& x : n_sub.generators()) {
          std::vector<int> img(supp.size());
          std::vector<int> pos(h.degree(), -1);
          for (std::size_t i = 0; i < supp.size(); ++i) pos[supp[i]] = static_cast<int>(i);
          for (std::size_t i = 0; i < supp.size(); ++i) img[i] = pos[x[supp[i]]];
          pairs.emplace_back(x, Permutation(std::move(img)));
        }
        InducedAutResult out;
        out.n_sub = n_sub;
        out.action =
            std::make_shared<Homomorphism>(n_sub.degree(), static_cast<int>(supp.size()), std::move(pairs),
                                           n_sub.limits());
        out.aut = out.action->image();
        out.kernel = out.action->kernel();
        out.route = "restriction";
        return out;
      }
    }
  }
  return section_element_action(n_sub, sec, eng);
}

SectionInvariance induced_aut_quotient_invariance(const QuotientData& q, const Section& sec_in_image,
                                                  const Engine& eng) {
  SectionInvariance out;
  // direct: through the quotient group
  Section direct = sec_in_image;
  direct.ambient = q.image();
  InducedAutResult via_quotient = induced_aut(q.image(), direct, eng);

  // pulled back: through the full group, on the preimage section
  Section pulled;
  pulled.ambient = q.group();
  pulled.a = q.preimage(sec_in_image.a);
  pulled.b = q.preimage(sec_in_image.b);
  InducedAutResult via_group = induced_aut(q.group(), pulled, eng);

  out.aut_order_direct = via_quotient.aut.order();
  out.aut_order_pulled = via_group.aut.order();
  out.orders_equal = out.aut_order_direct == out.aut_order_pulled;

  // explicit equivalence on the section elements: psi maps a coset of B' in
  // A' to the corresponding coset of B in A through the quotient map
  QuotientData q1 = quotient_group(pulled.a, pulled.b, eng);
  QuotientData q2 = quotient_group(sec_in_image.a, sec_in_image.b, eng);
  auto elems1 = q1.image().elements(eng.limits.element_list);
  std::sort(elems1.begin(), elems1.end());
  std::unordered_map<Permutation, Permutation, PermHash> psi;
  std::unordered_map<Permutation, int, PermHash> hit;
  for (const auto& e : elems1) {
    Permutation img = q2.apply(q.apply(q1.lift(e)));
    psi.emplace(e, img);
    ++hit[img];
  }
  bool bijective = true;
  for (const auto& [k, v] : hit)
    if (v != 1) bijective = false;
  bijective = bijective && hit.size() == elems1.size();

  bool equivariant = bijective;
  if (equivariant) {
    for (const auto& x : via_group.n_sub.generators()) {
      Permutation xq = q.apply(x);
      for (const auto& e : elems1) {
        Permutation lhs = psi.at(q1.apply(q1.lift(e).conjugated_by(x)));
        Permutation rhs = q2.apply(q2.lift(psi.at(e)).conjugated_by(xq));
        if (lhs != rhs) {
          equivariant = false;
          break;
        }
      }
      if (!equivariant) break;
    }
  }
  out.actions_equivalent = equivariant;
  return out;
}

// ---------------------------------------------------------------------------
// wreath embedding

PermGroup WreathEmbedData::project(const PermGroup& sub, int i) const {
  return sub.restricted_to(supports[i]);
}

Permutation WreathEmbedData::unproject(const Permutation& local_elem, int i) const {
  std::vector<int> img(g_cap_a.degree());
  for (int p = 0; p < g_cap_a.degree(); ++p) img[p] = p;
  for (std::size_t l = 0; l < supports[i].size(); ++l) img[supports[i][l]] = supports[i][local_elem[l]];
  return Permutation(std::move(img));
}

WreathEmbedData wreath_embed(const PermGroup& g, std::vector<PermGroup> socle_factors, const Engine& eng) {
  if (socle_factors.empty()) throw group_error("wreath-embed", "no socle factors given");
  int k = static_cast<int>(socle_factors.size());

  std::vector<Permutation> socle_gens;
  for (const auto& t : socle_factors)
    for (const auto& x : t.generators()) socle_gens.push_back(x);
  PermGroup socle(g.degree(), socle_gens, g.limits());
  PermGroup cent = centralizer(g, socle, eng);
  if (!cent.is_trivial())
    throw group_error("wreath-embed", "the factors have a nontrivial centralizer of order " +
                                          std::to_string(cent.order()));

  WreathEmbedData out;
  out.factors = std::move(socle_factors);
  for (const auto& t : out.factors) {
    auto supp = t.support();
    out.copy_offset.push_back(out.union_degree);
    out.union_degree += static_cast<int>(supp.size());
    out.supports.push_back(std::move(supp));
  }

  // the factor permutation induced by x: T_i^x = T_{tau(i)}
  auto factor_image = [&](const Permutation& x) {
    std::vector<int> tau(k, -1);
    for (int i = 0; i < k; ++i) {
      Permutation probe = out.factors[i].generators().front().conjugated_by(x);
      for (int j = 0; j < k; ++j) {
        if (out.factors[j].contains(probe)) {
          for (const auto& s : out.factors[i].generators())
            if (!out.factors[j].contains(s.conjugated_by(x)))
              throw group_error("wreath-embed", "conjugation does not permute the factors");
          tau[i] = j;
          break;
        }
      }
      if (tau[i] == -1) throw group_error("wreath-embed", "conjugation does not permute the factors");
    }
    return Permutation(std::move(tau));
  };

  std::vector<std::vector<int>> local_of(k);
  for (int i = 0; i < k; ++i) {
    local_of[i].assign(g.degree(), -1);
    for (std::size_t l = 0; l < out.supports[i].size(); ++l) local_of[i][out.supports[i][l]] = static_cast<int>(l);
  }
  auto embed_elem = [&](const Permutation& x, const Permutation& tau) {
    std::vector<int> img(out.union_degree);
    for (int i = 0; i < k; ++i) {
      int j = tau[i];
      for (std::size_t l = 0; l < out.supports[i].size(); ++l) {
        int q = x[out.supports[i][l]];
        int lq = local_of[j][q];
        if (lq == -1) throw group_error("wreath-embed", "factor support is not permuted consistently");
        img[out.copy_offset[i] + static_cast<int>(l)] = out.copy_offset[j] + lq;
      }
    }
    return Permutation(std::move(img));
  };

  std::vector<std::pair<Permutation, Permutation>> phi_pairs, tau_pairs;
  for (const auto& x : g.generators()) {
    Permutation tau = factor_image(x);
    phi_pairs.emplace_back(x, embed_elem(x, tau));
    tau_pairs.emplace_back(x, std::move(tau));
  }
  out.embedding = std::make_shared<Homomorphism>(g.degree(), out.union_degree, std::move(phi_pairs), g.limits());
  if (out.embedding->image().order() != g.order())
    throw group_error("wreath-embed", "embedding failed to preserve the order");
  out.factor_action = std::make_shared<Homomorphism>(g.degree(), k, std::move(tau_pairs), g.limits());
  out.g_cap_a = out.factor_action->kernel();
  out.transitive_on_factors =
      k == 1 || static_cast<int>(out.factor_action->image().orbit(0).size()) == k;

  // Aut_G(T_i) realized on the local points of T_i
  std::vector<Permutation> prod_gens;
  for (int i = 0; i < k; ++i) {
    PermGroup n_i = normalizer(g, out.factors[i], eng);
    PermGroup local = n_i.restricted_to(out.supports[i]);
    PermGroup t_local = out.factors[i].restricted_to(out.supports[i]);
    if (!trivial_full_sym_centralizer(t_local))
      throw group_error("wreath-embed", "factor action does not realize its induced automorphism group");
    out.aut_factors_local.push_back(local);
    for (const auto& a : local.generators()) {
      std::vector<int> img(out.union_degree);
      for (int p = 0; p < out.union_degree; ++p) img[p] = p;
      for (std::size_t l = 0; l < out.supports[i].size(); ++l)
        img[out.copy_offset[i] + static_cast<int>(l)] = out.copy_offset[i] + a[static_cast<int>(l)];
      prod_gens.push_back(Permutation(std::move(img)));
    }
  }
  out.aut_product = PermGroup(out.union_degree, prod_gens, g.limits());

  // full codomain: the product extended by copy alignments when the factor
  // set is permuted transitively
  std::vector<Permutation> ambient_gens = prod_gens;
  if (out.transitive_on_factors && k > 1) {
    // conjugators c_i with T_0^{c_i} = T_i, found by walking generator images
    std::vector<Permutation> conj(k, Permutation(g.degree()));
    std::vector<bool> have(k, false);
    have[0] = true;
    std::vector<int> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int i = queue[qi];
      for (const auto& x : g.generators()) {
        int j = out.factor_action->apply(x)[i];
        if (!have[j]) {
          have[j] = true;
          conj[j] = conj[i] * x;
          queue.push_back(j);
        }
      }
    }
    auto sym_gen = [&](const Permutation& s) {
      // (i, p) -> (s(i), p aligned through c_i^-1 c_{s(i)})
      std::vector<int> img(out.union_degree);
      for (int i = 0; i < k; ++i) {
        int j = s[i];
        Permutation move = conj[i].inverse() * conj[j];
        for (std::size_t l = 0; l < out.supports[i].size(); ++l)
          img[out.copy_offset[i] + static_cast<int>(l)] =
              out.copy_offset[j] + local_of[j][move[out.supports[i][l]]];
      }
      return Permutation(std::move(img));
    };
    std::vector<int> cyc(k);
    for (int i = 0; i < k; ++i) cyc[i] = (i + 1) % k;
    ambient_gens.push_back(sym_gen(Permutation(std::move(cyc))));
    if (k > 2) {
      std::vector<int> swp(k);
      for (int i = 0; i < k; ++i) swp[i] = i;
      std::swap(swp[0], swp[1]);
      ambient_gens.push_back(sym_gen(Permutation(std::move(swp))));
    }
  }
  out.wreath_ambient = PermGroup(out.union_degree, ambient_gens, g.limits());
  return out;
}

}  // namespace cgt
