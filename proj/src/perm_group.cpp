#include "bb/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>

#include "bb/classes.hpp"

namespace bb {

ElementIndex::ElementIndex(std::vector<Perm> elements) : elements_(std::move(elements)) {
  index_.reserve(elements_.size() * 2);
  for (std::uint32_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  inverse_.resize(elements_.size());
  for (std::uint32_t i = 0; i < elements_.size(); ++i) inverse_[i] = index_of(elements_[i].inverse());
}

std::optional<std::uint32_t> ElementIndex::find(const Perm& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t ElementIndex::index_of(const Perm& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw NotASubgroup("element is not in the enumerated group");
  return it->second;
}

std::uint32_t ElementIndex::mul(std::uint32_t a, std::uint32_t b) const {
  return index_of(elements_[a] * elements_[b]);
}

namespace {

void compute_orbit(ChainLevel& level, std::size_t degree) {
  level.transversal.assign(degree, std::nullopt);
  level.orbit.clear();
  level.transversal[level.base] = Perm::identity(degree);
  level.orbit.push_back(level.base);
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    Perm::point x = level.orbit[i];
    for (const Perm& s : level.generators) {
      Perm::point y = s[x];
      if (!level.transversal[y]) {
        level.transversal[y] = *level.transversal[x] * s;
        level.orbit.push_back(y);
      }
    }
  }
}

// Sifts g starting at level `from`; returns residue and the level at which
// sifting stopped (levels.size() if it passed every level).
std::pair<Perm, std::size_t> sift_from(const std::vector<ChainLevel>& levels, Perm g,
                                       std::size_t from) {
  for (std::size_t i = from; i < levels.size(); ++i) {
    const auto& lv = levels[i];
    Perm::point b = g[lv.base];
    if (!lv.transversal[b]) return {std::move(g), i};
    g = g * lv.transversal[b]->inverse();
  }
  return {std::move(g), levels.size()};
}

Perm::point first_moved(const Perm& g) {
  for (Perm::point x = 0; x < g.degree(); ++x)
    if (g[x] != x) return x;
  return 0;
}

// Point with the largest orbit under gens; ties broken by smallest point.
Perm::point largest_orbit_point(const std::vector<Perm>& gens, std::size_t degree) {
  std::vector<int> comp(degree, -1);
  std::size_t best_size = 0;
  Perm::point best = 0;
  for (Perm::point s = 0; s < degree; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Perm::point> orb{s};
    comp[s] = static_cast<int>(s);
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const Perm& g : gens) {
        Perm::point y = g[orb[i]];
        if (comp[y] < 0) {
          comp[y] = static_cast<int>(s);
          orb.push_back(y);
        }
      }
    if (orb.size() > best_size) {
      best_size = orb.size();
      best = s;
    }
  }
  return best;
}

// Deterministic Schreier-Sims.
std::vector<ChainLevel> schreier_sims(std::size_t degree, const std::vector<Perm>& gens) {
  std::vector<ChainLevel> levels;
  std::vector<Perm> nontrivial;
  for (const Perm& g : gens)
    if (!g.is_identity()) nontrivial.push_back(g);
  if (nontrivial.empty()) return levels;

  ChainLevel top;
  top.base = largest_orbit_point(nontrivial, degree);
  if (std::all_of(nontrivial.begin(), nontrivial.end(),
                  [&](const Perm& g) { return g[top.base] == top.base; }))
    top.base = first_moved(nontrivial.front());
  levels.push_back(std::move(top));
  // Every generator must move some base point; extend the base greedily.
  for (const Perm& g : nontrivial) {
    bool moves = false;
    for (const auto& lv : levels) moves = moves || g[lv.base] != lv.base;
    if (!moves) {
      ChainLevel lv;
      lv.base = first_moved(g);
      levels.push_back(std::move(lv));
    }
  }
  for (const Perm& g : nontrivial) {
    for (std::size_t i = 0; i < levels.size(); ++i) {
      levels[i].generators.push_back(g);
      if (g[levels[i].base] != levels[i].base) break;
    }
  }
  for (auto& lv : levels) compute_orbit(lv, degree);

  std::size_t i = levels.size();
  while (i > 0) {
    std::size_t cur = i - 1;
    bool restarted = false;
    for (std::size_t oi = 0; oi < levels[cur].orbit.size() && !restarted; ++oi) {
      Perm::point beta = levels[cur].orbit[oi];
      for (std::size_t si = 0; si < levels[cur].generators.size() && !restarted; ++si) {
        const Perm& s = levels[cur].generators[si];
        const Perm& u_beta = *levels[cur].transversal[beta];
        const Perm& u_img = *levels[cur].transversal[s[beta]];
        Perm schreier = u_beta * s * u_img.inverse();
        auto [h, stop] = sift_from(levels, std::move(schreier), cur + 1);
        if (h.is_identity()) continue;
        if (stop == levels.size()) {
          ChainLevel nl;
          nl.base = first_moved(h);
          levels.push_back(std::move(nl));
        }
        for (std::size_t l = cur + 1; l <= stop; ++l) {
          levels[l].generators.push_back(h);
          compute_orbit(levels[l], degree);
        }
        i = stop + 1;
        restarted = true;
      }
    }
    if (!restarted) --i;
  }
  return levels;
}

}  // namespace

struct PermGroup::Impl {
  std::size_t degree = 0;
  std::vector<Perm> generators;
  std::vector<ChainLevel> chain;
  std::uint64_t order = 1;

  mutable std::once_flag elements_once;
  mutable std::unique_ptr<ElementIndex> elements;
  mutable std::once_flag classes_once;
  mutable std::unique_ptr<ConjugacyClassSet> classes;

  mutable std::mutex memo_mu;
  mutable std::map<std::string, std::shared_ptr<const void>> memo;
};

PermGroup::PermGroup() : impl_(std::make_shared<Impl>()) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : impl_(std::make_shared<Impl>()) {
  for (const Perm& g : generators)
    if (g.degree() != degree) throw MalformedPermutation("generator degree mismatch");
  impl_->degree = degree;
  impl_->generators = std::move(generators);
  impl_->chain = schreier_sims(degree, impl_->generators);
  std::uint64_t ord = 1;
  for (const auto& lv : impl_->chain) ord *= lv.orbit.size();
  impl_->order = ord;
}

PermGroup build_group(std::size_t degree, std::vector<Perm> generators) {
  return PermGroup(degree, std::move(generators));
}

std::size_t PermGroup::degree() const { return impl_->degree; }
const std::vector<Perm>& PermGroup::generators() const { return impl_->generators; }
std::uint64_t PermGroup::order() const { return impl_->order; }
std::span<const ChainLevel> PermGroup::chain() const { return impl_->chain; }

std::vector<Perm::point> PermGroup::base() const {
  std::vector<Perm::point> b;
  for (const auto& lv : impl_->chain) b.push_back(lv.base);
  return b;
}

Perm PermGroup::sift(const Perm& g) const {
  if (g.degree() != degree()) throw MalformedPermutation("degree mismatch in membership test");
  return sift_from(impl_->chain, g, 0).first;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree()) return false;
  return sift(g).is_identity();
}

bool PermGroup::contains(const PermGroup& h) const {
  if (h.degree() != degree()) return false;
  for (const Perm& g : h.generators())
    if (!contains(g)) return false;
  return true;
}

bool PermGroup::same_group(const PermGroup& other) const {
  return order() == other.order() && contains(other) && other.contains(*this);
}

std::shared_ptr<const void> PermGroup::memo(const std::string& key,
                                        const std::function<std::shared_ptr<const void>()>& make) const {
  {
    std::lock_guard lock(impl_->memo_mu);
    if (auto it = impl_->memo.find(key); it != impl_->memo.end()) return it->second;
  }
  // Built outside the lock so that `make` may itself use memos.
  auto value = make();
  std::lock_guard lock(impl_->memo_mu);
  return impl_->memo.emplace(key, std::move(value)).first->second;
}

const ElementIndex& PermGroup::elements() const {
  std::call_once(impl_->elements_once, [this] {
    if (order() > kMaxEnumeration)
      throw std::length_error("group too large to enumerate: order " + std::to_string(order()));
    std::vector<Perm> elts{identity()};
    // g = v_k ... v_1 with v_i in the level-i transversal.
    const auto& chain = impl_->chain;
    for (std::size_t li = chain.size(); li-- > 0;) {
      std::vector<Perm> next;
      next.reserve(elts.size() * chain[li].orbit.size());
      for (Perm::point x : chain[li].orbit) {
        const Perm& u = *chain[li].transversal[x];
        for (const Perm& e : elts) next.push_back(e * u);
      }
      elts = std::move(next);
    }
    impl_->elements = std::make_unique<ElementIndex>(std::move(elts));
  });
  return *impl_->elements;
}

const ConjugacyClassSet& PermGroup::classes() const {
  std::call_once(impl_->classes_once, [this] {
    impl_->classes = std::make_unique<ConjugacyClassSet>(elements(), generators(), order());
  });
  return *impl_->classes;
}

std::uint64_t PermGroup::exponent() const {
  const auto& cl = classes();
  std::uint64_t e = 1;
  for (std::size_t c = 0; c < cl.count(); ++c) e = std::lcm(e, cl.element_order(c));
  return e;
}

}  // namespace bb
