#include "bb/gallagher.hpp"

#include <algorithm>
#include <set>

#include "bb/classes.hpp"
#include "bb/dade.hpp"

namespace bb {

namespace {

Cyclotomic class_sum_value(const ClassFunction& chi, const Perm& g) {
  const auto& K = chi.group().classes();
  auto size = static_cast<std::int64_t>(K.size(K.class_of(g)));
  return chi.at(g) * Rational(size, chi.degree());
}

// L with L/N = C_{G/N}(gN).
PermGroup coset_centralizer(const Quotient& q, const Perm& g) {
  return q.hom.preimage(centralizer(q.group, q.hom(g)));
}

std::size_t index_in(const CharacterTable& T, const ClassFunction& chi) {
  auto idx = T.index_of(chi);
  if (!idx) throw std::logic_error("expected an irreducible character");
  return *idx;
}

bool extends(const ClassFunction& psi, const PermGroup& G) {
  for (const Perm& g : G.generators())
    if (!(conjugate(psi, g) == psi)) return false;
  return find_extension(psi, G).has_value();
}

}  // namespace

std::string to_string(Regime r) {
  switch (r) {
    case Regime::defect_zero: return "defect-zero";
    case Regime::central_defect: return "central-defect";
    case Regime::ramification_full: return "ramification-full";
  }
  return "?";
}

BlockMapReport upsilon(const ClassFunction& theta_tilde, const PermGroup& N, const Quotient& quotient,
                       std::uint32_t p) {
  const PermGroup& G = theta_tilde.group();
  auto images = gallagher_bijection(theta_tilde, N, quotient);
  auto BN = block_partition(N, p);
  auto BG = block_partition(G, p);
  auto BQ = block_partition(quotient.group, p);

  BlockMapReport r;
  r.prime = p;
  r.block_of_theta = BN->block_of(index_in(*character_table(N), restrict(theta_tilde, N)));
  r.well_defined = true;
  for (const auto& beta : BQ->blocks()) {
    std::size_t img = BG->block_of(images[beta.members.front()]);
    for (auto i : beta.members) r.well_defined = r.well_defined && BG->block_of(images[i]) == img;
    r.map.push_back(img);
  }
  r.covering = blocks_covering(G, N, r.block_of_theta, p);
  r.fibers.resize(r.covering.size());
  std::set<std::size_t> hit(r.map.begin(), r.map.end());
  for (std::size_t beta = 0; beta < r.map.size(); ++beta) {
    auto it = std::find(r.covering.begin(), r.covering.end(), r.map[beta]);
    if (it != r.covering.end()) r.fibers[static_cast<std::size_t>(it - r.covering.begin())].push_back(beta);
  }
  r.surjective = hit == std::set<std::size_t>(r.covering.begin(), r.covering.end());
  r.bijective = r.well_defined && r.surjective && hit.size() == r.map.size();
  return r;
}

ProductFormula product_formula_check(const ClassFunction& theta_tilde, const PermGroup& N, const Quotient& quotient,
                                     std::size_t eta_bar, const Perm& g) {
  const ClassFunction& eb = (*character_table(quotient.group))[eta_bar];
  ClassFunction chi = gallagher_product(theta_tilde, pullback(eb, quotient.hom));
  PermGroup L = coset_centralizer(quotient, g);
  if (!L.contains(N)) throw std::logic_error("coset centralizer does not contain N");
  ProductFormula out;
  out.lhs = class_sum_value(chi, g);
  out.rhs = class_sum_value(restrict(theta_tilde, L), g) * class_sum_value(eb, quotient.hom(g));
  return out;
}

DefectZeroIdentity defect_zero_identity_check(const ClassFunction& theta_tilde, const PermGroup& N,
                                              const Quotient& quotient, const Perm& g, std::uint32_t p) {
  const PermGroup& G = theta_tilde.group();
  ClassFunction theta = restrict(theta_tilde, N);
  if (p_part(static_cast<std::uint64_t>(theta.degree()), p) != p_part(N.order(), p))
    throw NotDefectZero("defect_zero_identity_check: θ is not of defect zero");
  DefectZeroIdentity out;
  out.normal_order = N.order();
  std::vector<Perm> coset;
  for (const Perm& n : N.elements().all()) coset.push_back(g * n);
  for (const Perm& c : coset) out.coset_sum += theta_tilde.at(c) * theta_tilde.at(c.inverse());

  PermGroup L = coset_centralizer(quotient, g);
  ClassFunction tl = restrict(theta_tilde, L);
  const auto& red = *modular_reduction(G, p);
  for (const Perm& c : coset)
    if (!GaloisField::is_zero(red.reduce(class_sum_value(tl, c)))) {
      out.nonvanishing = c;
      break;
    }
  return out;
}

BlockMapReport bijectivity_regimes(const ClassFunction& theta_tilde, const PermGroup& N, const Quotient& quotient,
                                   std::uint32_t p) {
  const PermGroup& G = theta_tilde.group();
  BlockMapReport r = upsilon(theta_tilde, N, quotient, p);
  const Block& b = (*block_partition(N, p))[r.block_of_theta];
  if (b.defect == 0) r.regimes.push_back(Regime::defect_zero);
  if (join(b.defect_group, centralizer(G, b.defect_group)).order() == G.order())
    r.regimes.push_back(Regime::central_defect);
  // θ extends to G, so b is G-invariant.
  if (ramification_group(G, N, r.block_of_theta, p).subgroup.order() == G.order())
    r.regimes.push_back(Regime::ramification_full);
  return r;
}

bool ExtensionTransfer::holds() const { return rdz_extending.size() <= dz_extending.size(); }

ExtensionTransfer extension_transfer_check(const PermGroup& G, const PermGroup& N, const PermGroup& D,
                                           const ClassFunction& mu, std::uint32_t p) {
  if (!N.contains(D) || !is_normal(G, D)) throw NotNormal("extension_transfer_check: D must be normal in G inside N");
  if (!mu.group().same_object(D)) throw GroupMismatch("extension_transfer_check: μ must be a character of D");
  for (const Perm& g : G.generators())
    if (!(conjugate(mu, g) == mu)) throw NotInvariant("extension_transfer_check: μ is not G-invariant");
  auto T = character_table(N);
  const std::uint64_t quotient_p = p_part(N.order() / D.order(), p);
  const std::uint64_t mu_p = p_part(static_cast<std::uint64_t>(mu.degree()), p);
  ExtensionTransfer out;
  for (std::size_t i = 0; i < T->size(); ++i) {
    const ClassFunction& psi = (*T)[i];
    const std::uint64_t dp = p_part(static_cast<std::uint64_t>(psi.degree()), p);
    bool d_in_kernel = true;
    for (const Perm& d : D.generators()) d_in_kernel = d_in_kernel && psi.at(d) == psi[0];
    if (d_in_kernel && dp == quotient_p) {
      out.dz.push_back(i);
      if (extends(psi, G)) out.dz_extending.push_back(i);
    }
    if (dp == quotient_p * mu_p && !inner_product(restrict(psi, D), mu).is_zero()) {
      out.rdz.push_back(i);
      if (extends(psi, G)) out.rdz_extending.push_back(i);
    }
  }
  return out;
}

nlohmann::json to_json(const BlockMapReport& r) {
  nlohmann::json regimes = nlohmann::json::array();
  for (auto g : r.regimes) regimes.push_back(to_string(g));
  std::vector<std::size_t> fiber_sizes;
  for (const auto& f : r.fibers) fiber_sizes.push_back(f.size());
  return {{"prime", r.prime},
          {"block_of_theta", r.block_of_theta},
          {"map", r.map},
          {"covering", r.covering},
          {"fiber_sizes", fiber_sizes},
          {"well_defined", r.well_defined},
          {"surjective", r.surjective},
          {"bijective", r.bijective},
          {"regimes", regimes.empty() ? nlohmann::json::array({"none"}) : regimes}};
}

}  // namespace bb
