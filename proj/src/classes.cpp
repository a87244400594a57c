#include "bb/classes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "bb/perm_group.hpp"

namespace bb {

ConjugacyClassSet::ConjugacyClassSet(const ElementIndex& elements,
                                     const std::vector<Perm>& generators,
                                     std::uint64_t group_order)
    : elements_(&elements), group_order_(group_order) {
  const std::size_t n = elements.size();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> raw_class(n, kUnset);
  std::vector<std::uint32_t> raw_rep;
  std::vector<std::uint64_t> raw_size;
  // Orbits of the conjugation action, found by closing under generators.
  std::vector<Perm> gen_inv;
  for (const Perm& g : generators) gen_inv.push_back(g.inverse());
  for (std::uint32_t e = 0; e < n; ++e) {
    if (raw_class[e] != kUnset) continue;
    auto id = static_cast<std::uint32_t>(raw_rep.size());
    raw_rep.push_back(e);
    std::vector<std::uint32_t> orbit{e};
    raw_class[e] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      const Perm& x = elements[orbit[i]];
      for (const Perm& g : generators) {
        std::uint32_t y = elements.index_of(x.conjugate_by(g));
        if (raw_class[y] == kUnset) {
          raw_class[y] = id;
          orbit.push_back(y);
        }
      }
    }
    raw_size.push_back(orbit.size());
  }

  std::vector<std::uint64_t> raw_order(raw_rep.size());
  for (std::size_t c = 0; c < raw_rep.size(); ++c) raw_order[c] = elements[raw_rep[c]].order();

  std::vector<std::uint32_t> perm(raw_rep.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::tie(raw_order[a], raw_size[a], raw_rep[a]) <
           std::tie(raw_order[b], raw_size[b], raw_rep[b]);
  });
  std::vector<std::uint32_t> new_id(raw_rep.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) new_id[perm[i]] = i;

  for (std::uint32_t i : perm) {
    reps_.push_back(elements[raw_rep[i]]);
    rep_index_.push_back(raw_rep[i]);
    sizes_.push_back(raw_size[i]);
    orders_.push_back(raw_order[i]);
  }
  class_of_.resize(n);
  for (std::size_t e = 0; e < n; ++e) class_of_[e] = new_id[raw_class[e]];

  inverse_.resize(count());
  for (std::size_t c = 0; c < count(); ++c)
    inverse_[c] = class_of_[elements.inverse(rep_index_[c])];

  std::uint64_t exp = 1;
  for (auto o : orders_) exp = std::lcm(exp, o);
  for (std::uint64_t p = 2; p <= exp; ++p) {
    if (exp % p) continue;
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    std::vector<std::uint32_t> pm(count());
    for (std::size_t c = 0; c < count(); ++c) pm[c] = power_class(c, static_cast<std::int64_t>(p));
    power_maps_.emplace(p, std::move(pm));
  }
}

std::uint32_t ConjugacyClassSet::class_of(const Perm& g) const {
  return class_of_[elements_->index_of(g)];
}

std::uint32_t ConjugacyClassSet::power_class(std::size_t c, std::int64_t k) const {
  auto o = static_cast<std::int64_t>(orders_[c]);
  std::int64_t r = ((k % o) + o) % o;
  return class_of(reps_[c].pow(r));
}

const std::vector<std::uint32_t>& ConjugacyClassSet::power_map(std::uint64_t prime) const {
  auto it = power_maps_.find(prime);
  if (it == power_maps_.end()) throw std::out_of_range("no power map for this prime");
  return it->second;
}

std::vector<std::uint32_t> ConjugacyClassSet::members(std::size_t c) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t e = 0; e < class_of_.size(); ++e)
    if (class_of_[e] == c) out.push_back(e);
  return out;
}

}  // namespace bb
