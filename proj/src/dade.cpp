#include "bb/dade.hpp"

#include "bb/classes.hpp"

namespace bb {

namespace {

PermGroup cyclic_subgroup(const Perm& y) { return PermGroup(y.degree(), {y}); }

std::size_t irr_index(const CharacterTable& T, const ClassFunction& chi) {
  auto idx = T.index_of(chi);
  if (!idx) throw std::logic_error("expected an irreducible character");
  return *idx;
}

// Stabilizer of η_i ∈ Irr(M) in a group S normalizing M.
PermGroup character_stabilizer(const PermGroup& S, const PermGroup& M, std::size_t i) {
  auto T = character_table(M);
  return orbit_stabilizer(S, i, [&](std::size_t x, const Perm& g) { return irr_index(*T, conjugate((*T)[x], g)); })
      .stabilizer;
}

// N-conjugates of D, at most `limit` of them, starting with D.
std::vector<PermGroup> conjugate_subgroups(const PermGroup& N, const PermGroup& D, std::size_t limit) {
  std::vector<PermGroup> out{D};
  for (std::size_t i = 0; i < out.size() && out.size() < limit; ++i)
    for (const Perm& g : N.generators()) {
      PermGroup E = conjugate(out[i], g);
      bool fresh = true;
      for (const auto& F : out) fresh = fresh && !F.same_group(E);
      if (fresh) out.push_back(E);
      if (out.size() >= limit) break;
    }
  return out;
}

RamificationWitness evaluate_choice(const PermGroup& G, const PermGroup& N, const PermGroup& D,
                                    const PermGroup& dcn, std::size_t eta) {
  RamificationWitness w{D, eta, dcn, {}, {}, {}, {}};
  w.K = character_stabilizer(join(D, centralizer(G, D)), dcn, eta);
  w.H = character_stabilizer(normalizer(N, D), dcn, eta);
  PairingContext ctx(join(w.H, w.K), dcn, (*character_table(dcn))[eta]);
  w.perp = perp(ctx, w.H, w.K);
  w.result = join(N, w.perp);
  return w;
}

}  // namespace

PairingContext::PairingContext(PermGroup X, PermGroup N, ClassFunction theta)
    : X_(std::move(X)), N_(std::move(N)), theta_(std::move(theta)) {
  if (!theta_.group().same_object(N_)) throw GroupMismatch("PairingContext: θ must be a character of N");
  if (!X_.contains(N_) || !is_normal(X_, N_)) throw NotNormal("PairingContext: N must be normal in X");
  for (const Perm& g : X_.generators())
    if (!(conjugate(theta_, g) == theta_)) throw NotInvariant("PairingContext: θ is not X-invariant");
}

const PairingContext::Entry& PairingContext::entry(const Perm& y) const {
  PermGroup J = join(N_, cyclic_subgroup(y));
  for (const auto& e : cache_)
    if (e.J.order() == J.order() && e.J.contains(y)) return e;
  Entry e{J, {}, {}};
  auto T = character_table(J);
  for (const auto& chi : T->irr()) {
    if (chi.degree() == theta_.degree() && restrict(chi, N_) == theta_) e.extensions.push_back(chi);
    if (chi.degree() == 1) {
      bool trivial_on_n = true;
      for (const Perm& n : N_.generators()) trivial_on_n = trivial_on_n && chi.at(n) == Cyclotomic(1);
      if (trivial_on_n) e.linear.push_back(chi);
    }
  }
  if (e.extensions.empty()) throw std::logic_error("θ has no extension to N<y>");
  cache_.push_back(std::move(e));
  return cache_.back();
}

Cyclotomic PairingContext::value(const Entry& e, const ClassFunction& psi, const Perm& x, const Perm& y) const {
  ClassFunction psix = conjugate(psi, x);
  for (const auto& lam : e.linear)
    if (lam * psi == psix) return lam.at(y);
  throw std::logic_error("ψ^x is not a Gallagher twist of ψ");
}

Cyclotomic PairingContext::pairing(const Perm& x, const Perm& y) const {
  if (!X_.contains(x) || !X_.contains(y)) throw GroupMismatch("pairing: arguments must lie in X");
  if (!N_.contains(commutator(x, y))) throw CommutatorNotInN("pairing: [x,y] is not in N");
  if (N_.contains(y)) return Cyclotomic(1);
  const Entry& e = entry(y);
  return value(e, e.extensions.front(), x, y);
}

std::vector<Cyclotomic> PairingContext::pairing_all_extensions(const Perm& x, const Perm& y) const {
  if (!X_.contains(x) || !X_.contains(y)) throw GroupMismatch("pairing: arguments must lie in X");
  if (!N_.contains(commutator(x, y))) throw CommutatorNotInN("pairing: [x,y] is not in N");
  const Entry& e = entry(y);
  std::vector<Cyclotomic> out;
  for (const auto& psi : e.extensions) out.push_back(value(e, psi, x, y));
  return out;
}

PermGroup perp(const PairingContext& ctx, const PermGroup& H, const PermGroup& K) {
  const PermGroup& N = ctx.normal();
  // Generators commuting modulo N suffice since N is normal.
  for (const Perm& h : H.generators())
    for (const Perm& k : K.generators())
      if (!N.contains(commutator(h, k))) throw CommutatorConditionFails("perp: [H,K] is not in N");
  PermGroup M = intersection(N, K);
  std::uint64_t count = 0;
  for (const Perm& k : K.elements().all()) {
    bool trivial = true;
    for (const Perm& h : H.generators()) trivial = trivial && ctx.pairing(k, h) == Cyclotomic(1);
    if (!trivial) continue;
    ++count;
    if (!M.contains(k)) M = join(M, cyclic_subgroup(k));
  }
  if (M.order() != count) throw std::logic_error("perp: the annihilator is not a subgroup");
  return M;
}

std::optional<bool> perp_restriction_invariant(const PairingContext& ctx, const PermGroup& H, const PermGroup& K) {
  auto rho = find_extension(ctx.theta(), K);
  if (!rho) return std::nullopt;
  PermGroup M = perp(ctx, H, K);
  ClassFunction nu = restrict(*rho, M);
  for (const Perm& h : H.generators())
    if (!(conjugate(nu, h) == nu)) return false;
  return true;
}

RamificationResult ramification_group(const PermGroup& G, const PermGroup& N, std::size_t b, std::uint32_t p) {
  for (const Perm& g : G.generators())
    if (conjugate_block(N, b, g, p) != b) throw NotInvariantBlock("ramification_group: b is not G-invariant");
  const PermGroup& D0 = (*block_partition(N, p))[b].defect_group;
  constexpr std::size_t kAllPairs = 8;
  auto defect_groups = conjugate_subgroups(N, D0, kAllPairs + 1);

  RamificationResult out;
  std::vector<std::pair<std::size_t, std::size_t>> plan;  // (defect group, position in canonical list)
  std::vector<CanonicalCharacters> canon;
  std::size_t total = 0;
  for (const auto& D : defect_groups) {
    canon.push_back(canonical_characters(N, b, D, p));
    total += canon.back().indices.size();
  }
  if (defect_groups.size() <= kAllPairs && total <= kAllPairs) {
    for (std::size_t d = 0; d < canon.size(); ++d)
      for (std::size_t e = 0; e < canon[d].indices.size(); ++e) plan.emplace_back(d, e);
    out.all_choices = true;
  } else {
    plan.emplace_back(0, 0);
    if (canon[0].indices.size() > 1) plan.emplace_back(0, 1);
    if (canon.size() > 1) plan.emplace_back(1, 0);
  }
  for (auto [d, e] : plan)
    out.witnesses.push_back(evaluate_choice(G, N, defect_groups[d], canon[d].subgroup, canon[d].indices[e]));
  out.subgroup = out.witnesses.front().result;
  for (const auto& w : out.witnesses)
    if (!w.result.same_group(out.subgroup)) throw ChoiceDependence("G[b] depends on the choice of (D, η)");
  if (!is_normal(G, out.subgroup)) throw std::logic_error("G[b] is not normal in G");
  return out;
}

bool CoveringUniqueness::holds() const {
  for (auto c : covering_counts)
    if (c != 1) return false;
  return true;
}

CoveringUniqueness unique_covering_check(const PermGroup& G, const PermGroup& N, std::size_t b, std::uint32_t p) {
  PermGroup Gb = ramification_group(G, N, b, p).subgroup;
  CoveringUniqueness out;
  out.intermediate = blocks_covering(Gb, N, b, p);
  for (auto Bp : out.intermediate) out.covering_counts.push_back(blocks_covering(G, Gb, Bp, p).size());
  return out;
}

QuotientCompatibility quotient_compat_check(const PermGroup& G, const PermGroup& N, std::size_t b,
                                            const PermGroup& Z, std::uint32_t p) {
  if (!is_normal(G, Z)) throw NotNormal("quotient_compat_check: Z must be normal");
  if (intersection(N, Z).order() != 1) throw std::invalid_argument("quotient_compat_check: N ∩ Z must be trivial");
  auto q = quotient(G, Z);
  auto image_of = [&](const PermGroup& H) {
    std::vector<Perm> gens;
    for (const Perm& h : H.generators()) gens.push_back(q.hom(h));
    return PermGroup(q.group.degree(), std::move(gens));
  };
  PermGroup Nbar = image_of(N);
  GroupHom iso(N, Nbar, [hom = q.hom](const Perm& g) { return hom(g); });
  auto BN = block_partition(N, p);
  const ClassFunction& theta = (*BN->table())[(*BN)[b].members.front()];
  auto Tbar = character_table(Nbar);
  std::optional<std::size_t> bar;
  for (std::size_t i = 0; i < Tbar->size() && !bar; ++i)
    if (pullback((*Tbar)[i], iso) == theta) bar = i;
  if (!bar) throw std::logic_error("quotient_compat_check: no image of θ in NZ/Z");
  std::size_t bbar = block_partition(Nbar, p)->block_of(*bar);

  QuotientCompatibility out;
  PermGroup Gb = ramification_group(G, N, b, p).subgroup;
  out.contains_z = Gb.contains(Z);
  out.image = image_of(Gb);
  out.quotient_side = ramification_group(q.group, Nbar, bbar, p).subgroup;
  return out;
}

nlohmann::json to_json(const RamificationResult& r) {
  auto gens = [](const PermGroup& H) {
    nlohmann::json a = nlohmann::json::array();
    for (const Perm& g : H.generators()) a.push_back(g.to_cycles());
    return a;
  };
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : r.witnesses)
    ws.push_back({{"defect_group", gens(w.defect_group)},
                  {"canonical_character", w.eta},
                  {"K_order", w.K.order()},
                  {"H_order", w.H.order()},
                  {"perp_order", w.perp.order()}});
  return {{"order", r.subgroup.order()}, {"generators", gens(r.subgroup)}, {"all_choices", r.all_choices}, {"witnesses", ws}};
}

}  // namespace bb
