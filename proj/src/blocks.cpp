#include "bb/blocks.hpp"

#include <map>

#include "bb/classes.hpp"

namespace bb {

namespace {

int p_valuation(std::uint64_t n, std::uint64_t p) {
  int v = 0;
  while (n % p == 0) n /= p, ++v;
  return v;
}

std::uint64_t ipow(std::uint64_t p, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= p;
  return r;
}

}  // namespace

std::vector<Cyclotomic> central_character(const ClassFunction& chi) {
  const auto& K = chi.group().classes();
  const Rational d(chi.degree());
  std::vector<Cyclotomic> out;
  for (std::size_t c = 0; c < K.count(); ++c)
    out.push_back(chi[c] * (Rational(static_cast<std::int64_t>(K.size(c))) / d));
  return out;
}

std::shared_ptr<const ModularReduction> modular_reduction(const PermGroup& G, std::uint32_t p) {
  return std::static_pointer_cast<const ModularReduction>(G.memo("modular_reduction:" + std::to_string(p), [&] {
    return std::static_pointer_cast<const void>(std::make_shared<const ModularReduction>(p, G.exponent()));
  }));
}

BlockSet::BlockSet(PermGroup G, std::uint32_t p)
    : group_(std::move(G)), p_(p), table_(character_table(group_)), red_(modular_reduction(group_, p)) {
  const auto& K = group_.classes();
  std::map<FieldVector, std::size_t> index;
  for (std::size_t i = 0; i < table_->size(); ++i) {
    FieldVector ls = lambda_star((*table_)[i], *red_);
    auto [it, fresh] = index.emplace(ls, blocks_.size());
    if (fresh) blocks_.push_back(Block{{}, std::move(ls), 0, PermGroup::trivial(group_.degree()), 0});
    blocks_[it->second].members.push_back(i);
    block_of_.push_back(it->second);
  }

  const int a = p_valuation(group_.order(), p);
  for (auto& B : blocks_) {
    int low = a;
    for (auto i : B.members) low = std::min(low, p_valuation(static_cast<std::uint64_t>(table_->degree(i)), p));
    B.defect = a - low;
    // Among classes with λ_B* ≠ 0, one with the smallest p-part of its
    // centralizer order is a defect class.
    std::optional<std::size_t> best;
    for (std::size_t c = 0; c < K.count(); ++c) {
      if (GaloisField::is_zero(B.lambda_star[c])) continue;
      if (!best || p_part(K.centralizer_order(c), p) < p_part(K.centralizer_order(*best), p)) best = c;
    }
    if (!best) throw DefectClassNotFound("central character vanishes on every class");
    if (p_part(K.centralizer_order(*best), p) != ipow(p, B.defect))
      throw DefectClassNotFound("defect class centralizer does not match the defect from degrees");
    B.defect_class = *best;
    B.defect_group = B.defect == 0 ? PermGroup::trivial(group_.degree())
                                   : sylow(centralizer(group_, K.representative(*best)), p);
  }
}

std::optional<std::size_t> BlockSet::find(const FieldVector& lambda_star) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (blocks_[b].lambda_star == lambda_star) return b;
  return std::nullopt;
}

std::shared_ptr<const BlockSet> block_partition(const PermGroup& G, std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("block_partition: p must be prime");
  return std::static_pointer_cast<const BlockSet>(G.memo("blocks:" + std::to_string(p), [&] {
    return std::static_pointer_cast<const void>(std::make_shared<const BlockSet>(G, p));
  }));
}

FieldVector lambda_star(const ClassFunction& chi, const ModularReduction& red) {
  FieldVector out;
  for (const auto& v : central_character(chi)) out.push_back(red.reduce(v));
  return out;
}

std::optional<std::size_t> block_induction(const PermGroup& H, std::size_t b, const PermGroup& G, std::uint32_t p) {
  auto BH = block_partition(H, p);
  auto BG = block_partition(G, p);
  const auto& red = BG->reduction();
  // λ_b is reduced through G's map so both sides live in one field.
  auto lb = lambda_star((*BH->table())[(*BH)[b].members.front()], red);
  auto fus = class_fusion(H, G);
  FieldVector induced(G.classes().count(), red.field().zero());
  for (std::size_t c = 0; c < fus.size(); ++c) induced[fus[c]] = red.field().add(induced[fus[c]], lb[c]);
  return BG->find(induced);
}

bool covers(const PermGroup& G, std::size_t B, const PermGroup& N, std::size_t b, std::uint32_t p) {
  auto BG = block_partition(G, p);
  auto BN = block_partition(N, p);
  auto TN = character_table(N);
  for (auto i : (*BG)[B].members)
    for (auto j : TN->constituents(restrict((*BG->table())[i], N)))
      if (BN->block_of(j) == b) return true;
  return false;
}

std::vector<std::size_t> blocks_covering(const PermGroup& G, const PermGroup& N, std::size_t b, std::uint32_t p) {
  std::vector<std::size_t> out;
  auto BG = block_partition(G, p);
  for (std::size_t B = 0; B < BG->size(); ++B)
    if (covers(G, B, N, b, p)) out.push_back(B);
  return out;
}

ClassFunction deflate(const ClassFunction& chi, const Quotient& q) {
  const PermGroup& G = chi.group();
  if (!G.same_object(q.hom.source())) throw GroupMismatch("deflate: quotient of another group");
  for (const Perm& z : q.hom.kernel().generators())
    if (!(chi.at(z) == chi[0])) throw KernelViolation("normal subgroup is not in the kernel");
  const auto& KQ = q.group.classes();
  std::vector<std::optional<Cyclotomic>> vals(KQ.count());
  std::size_t filled = 0;
  for (const Perm& g : G.elements().all()) {
    auto c = KQ.class_of(q.hom(g));
    if (vals[c]) continue;
    vals[c] = chi.at(g);
    if (++filled == vals.size()) break;
  }
  std::vector<Cyclotomic> out;
  for (auto& v : vals) out.push_back(*v);
  return ClassFunction(q.group, std::move(out));
}

std::size_t dominated_block(const PermGroup& G, std::size_t B, const Quotient& q, std::uint32_t p) {
  auto BG = block_partition(G, p);
  auto TQ = character_table(q.group);
  auto BQ = block_partition(q.group, p);
  std::optional<std::size_t> out;
  for (auto i : (*BG)[B].members) {
    const auto& chi = (*BG->table())[i];
    bool trivial = true;
    for (const Perm& z : q.hom.kernel().generators()) trivial = trivial && chi.at(z) == chi[0];
    if (!trivial) continue;
    auto idx = TQ->index_of(deflate(chi, q));
    if (!idx) throw std::logic_error("deflated character is not irreducible");
    std::size_t b = BQ->block_of(*idx);
    if (out && *out != b) throw std::logic_error("block dominates more than one block of the quotient");
    out = b;
  }
  if (!out) throw KernelViolation("no character of the block has the normal subgroup in its kernel");
  return *out;
}

CanonicalCharacters canonical_characters(const PermGroup& N, std::size_t b, const PermGroup& D, std::uint32_t p) {
  CanonicalCharacters out{join(D, centralizer(N, D)), {}};
  auto T = character_table(out.subgroup);
  auto BH = block_partition(out.subgroup, p);
  for (std::size_t i = 0; i < T->size(); ++i) {
    bool in_kernel = true;
    for (const Perm& d : D.generators()) in_kernel = in_kernel && (*T)[i].at(d) == (*T)[i][0];
    if (!in_kernel) continue;
    if (block_induction(out.subgroup, BH->block_of(i), N, p) == b) out.indices.push_back(i);
  }
  if (out.indices.empty()) throw NoCanonicalCharacter("no canonical character for the block");
  return out;
}

std::size_t conjugate_block(const PermGroup& N, std::size_t b, const Perm& g, std::uint32_t p) {
  auto BN = block_partition(N, p);
  const auto& theta = (*BN->table())[(*BN)[b].members.front()];
  auto idx = BN->table()->index_of(conjugate(theta, g));
  if (!idx) throw std::logic_error("conjugate character is not irreducible");
  return BN->block_of(*idx);
}

PermGroup block_stabilizer(const PermGroup& G, const PermGroup& N, std::size_t b, std::uint32_t p) {
  return orbit_stabilizer(G, b, [&](std::size_t x, const Perm& g) { return conjugate_block(N, x, g, p); }).stabilizer;
}

std::vector<std::size_t> block_orbit(const PermGroup& G, const PermGroup& N, std::size_t b, std::uint32_t p) {
  return orbit_stabilizer(G, b, [&](std::size_t x, const Perm& g) { return conjugate_block(N, x, g, p); }).points;
}

std::size_t brauer_correspondent(const PermGroup& N, std::size_t b, const PermGroup& NND, std::uint32_t p) {
  const Block& blk = (*block_partition(N, p))[b];
  auto BNN = block_partition(NND, p);
  for (std::size_t c = 0; c < BNN->size(); ++c)
    if ((*BNN)[c].defect == blk.defect && block_induction(NND, c, N, p) == b) return c;
  throw std::logic_error("no Brauer correspondent found");
}

HarrisKnorrCount harris_knorr_check(const PermGroup& G, const PermGroup& N, std::size_t b, std::uint32_t p) {
  const PermGroup& D = (*block_partition(N, p))[b].defect_group;
  PermGroup NG = normalizer(G, D);
  PermGroup NN = normalizer(N, D);
  std::size_t tilde = brauer_correspondent(N, b, NN, p);
  return {blocks_covering(G, N, b, p).size(), blocks_covering(NG, NN, tilde, p).size()};
}

nlohmann::json to_json(const BlockSet& blocks) {
  const auto& F = blocks.reduction().field();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& B : blocks.blocks()) {
    nlohmann::json ls = nlohmann::json::array(), gens = nlohmann::json::array();
    for (const auto& v : B.lambda_star) ls.push_back(F.to_string(v));
    for (const auto& g : B.defect_group.generators()) gens.push_back(g.to_cycles());
    arr.push_back({{"members", B.members},
                   {"defect", B.defect},
                   {"defect_group_order", B.defect_group.order()},
                   {"defect_group", gens},
                   {"lambda_star", ls}});
  }
  return {{"prime", blocks.prime()},
          {"field", {{"characteristic", F.characteristic()}, {"degree", F.degree()}, {"modulus", F.modulus()}}},
          {"blocks", arr}};
}

}  // namespace bb
