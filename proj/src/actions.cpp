#include "bb/actions.hpp"

#include <algorithm>
#include <numeric>

#include "bb/classes.hpp"

namespace bb {

ActionSpec::ActionSpec(PermGroup G, AutomorphismMaps maps) : group_(std::move(G)), maps_(std::move(maps)) {
  std::vector<Perm> gens;
  for (const auto& imgs : maps_.images) gens.emplace_back(automorphism_on_elements(group_, imgs));
  A_ = PermGroup(group_.elements().size(), std::move(gens));
  coprime_ = std::gcd(A_.order(), group_.order()) == 1;
}

ActionSpec trivial_action_spec(const PermGroup& G) { return ActionSpec(G, AutomorphismMaps{}); }

Perm ActionSpec::apply(const Perm& a, const Perm& g) const {
  const auto& E = group_.elements();
  return E[a[E.index_of(g)]];
}

PermGroup ActionSpec::apply(const Perm& a, const PermGroup& H) const {
  std::vector<Perm> gens;
  for (const Perm& h : H.generators()) gens.push_back(apply(a, h));
  return PermGroup(group_.degree(), std::move(gens));
}

std::size_t ActionSpec::class_image(const Perm& a, std::size_t c) const {
  const auto& K = group_.classes();
  return K.class_of_index(a[K.representative_index(c)]);
}

std::vector<std::size_t> ActionSpec::class_permutation(const Perm& a) const {
  std::vector<std::size_t> out(group_.classes().count());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = class_image(a, c);
  return out;
}

std::string to_string(ObjectKind k) {
  switch (k) {
    case ObjectKind::classes: return "classes";
    case ObjectKind::irr: return "irr";
    case ObjectKind::blocks: return "blocks";
    case ObjectKind::ibr: return "ibr";
  }
  return "?";
}

OrbitData orbits_from_generators(ObjectKind kind, std::size_t n,
                                 const std::vector<std::vector<std::size_t>>& generator_maps) {
  OrbitData out{kind, {}, {}};
  std::vector<bool> seen(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<std::size_t> orbit{x};
    seen[x] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& m : generator_maps)
        if (!seen[m[orbit[i]]]) {
          seen[m[orbit[i]]] = true;
          orbit.push_back(m[orbit[i]]);
        }
    std::sort(orbit.begin(), orbit.end());
    if (orbit.size() == 1) out.fixed.push_back(x);
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

bool check_coprime(const ActionSpec& spec) { return spec.coprime(); }

ClassFunction act(const ActionSpec& spec, const ClassFunction& chi, const Perm& a) {
  if (!chi.group().same_object(spec.group())) throw GroupMismatch("act: character of another group");
  Perm ainv = a.inverse();
  std::vector<Cyclotomic> vals;
  for (std::size_t c = 0; c < chi.size(); ++c) vals.push_back(chi[spec.class_image(ainv, c)]);
  return ClassFunction(spec.group(), std::move(vals));
}

std::vector<std::size_t> character_permutation(const ActionSpec& spec, const Perm& a) {
  auto T = character_table(spec.group());
  std::vector<std::size_t> out;
  for (const auto& chi : T->irr()) {
    auto idx = T->index_of(act(spec, chi, a));
    if (!idx) throw std::logic_error("image of an irreducible character is not irreducible");
    out.push_back(*idx);
  }
  return out;
}

std::vector<std::size_t> block_permutation(const ActionSpec& spec, std::uint32_t p, const Perm& a) {
  auto B = block_partition(spec.group(), p);
  auto chars = character_permutation(spec, a);
  std::vector<std::size_t> out;
  for (const auto& blk : B->blocks()) {
    std::size_t img = B->block_of(chars[blk.members.front()]);
    for (auto i : blk.members)
      if (B->block_of(chars[i]) != img) throw std::logic_error("block action is not well defined");
    out.push_back(img);
  }
  return out;
}

OrbitData act_on_classes(const ActionSpec& spec) {
  std::vector<std::vector<std::size_t>> maps;
  for (const Perm& a : spec.acting_group().generators()) maps.push_back(spec.class_permutation(a));
  return orbits_from_generators(ObjectKind::classes, spec.group().classes().count(), maps);
}

OrbitData act_on_characters(const ActionSpec& spec) {
  std::vector<std::vector<std::size_t>> maps;
  for (const Perm& a : spec.acting_group().generators()) maps.push_back(character_permutation(spec, a));
  return orbits_from_generators(ObjectKind::irr, character_table(spec.group())->size(), maps);
}

OrbitData act_on_blocks(const ActionSpec& spec, std::uint32_t p) {
  std::vector<std::vector<std::size_t>> maps;
  for (const Perm& a : spec.acting_group().generators()) maps.push_back(block_permutation(spec, p, a));
  return orbits_from_generators(ObjectKind::blocks, block_partition(spec.group(), p)->size(), maps);
}

std::vector<std::size_t> invariant_characters(const ActionSpec& spec) { return act_on_characters(spec).fixed; }

std::vector<std::size_t> invariant_blocks(const ActionSpec& spec, std::uint32_t p) {
  return act_on_blocks(spec, p).fixed;
}

GlaubermanCount glauberman_count_check(const ActionSpec& spec) {
  if (!spec.coprime()) throw NotCoprime("glauberman_count_check: |A| and |G| are not coprime");
  return {invariant_characters(spec).size(), act_on_classes(spec).fixed.size()};
}

nlohmann::json to_json(const OrbitData& orbits) {
  return {{"kind", to_string(orbits.kind)}, {"orbits", orbits.orbits}, {"fixed", orbits.fixed}};
}

}  // namespace bb
