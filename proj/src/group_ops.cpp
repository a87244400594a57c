#include "bb/group_ops.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "bb/classes.hpp"

namespace bb {

namespace {

// Subgroup of G consisting of the elements satisfying pred; pred must
// describe a subgroup.  Generators are added only when the current span
// misses an element, so at most log2|result| rebuilds happen.
template <class Pred>
PermGroup subgroup_where(const PermGroup& G, Pred pred) {
  PermGroup result = PermGroup::trivial(G.degree());
  std::vector<Perm> gens;
  for (const Perm& x : G.elements().all()) {
    if (result.contains(x) || !pred(x)) continue;
    gens.push_back(x);
    result = PermGroup(G.degree(), gens);
  }
  return result;
}

std::vector<std::uint32_t> right_mult_images(const ElementIndex& elts, const Perm& g) {
  std::vector<std::uint32_t> out(elts.size());
  for (std::uint32_t i = 0; i < elts.size(); ++i) out[i] = elts.index_of(elts[i] * g);
  return out;
}

Perm index_perm(const std::vector<std::uint32_t>& v) {
  return Perm(std::vector<Perm::point>(v.begin(), v.end()));
}

}  // namespace

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n && n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

PermGroup subgroup(const PermGroup& G, std::vector<Perm> gens) {
  for (const Perm& g : gens)
    if (!G.contains(g)) throw NotASubgroup("generator " + g.to_cycles() + " is not in the group");
  return PermGroup(G.degree(), std::move(gens));
}

PermGroup join(const PermGroup& H, const PermGroup& K) {
  std::vector<Perm> gens = H.generators();
  for (const Perm& k : K.generators())
    if (!H.contains(k)) gens.push_back(k);
  return PermGroup(H.degree(), std::move(gens));
}

PermGroup centralizer(const PermGroup& G, const Perm& g) {
  return subgroup_where(G, [&](const Perm& x) { return x * g == g * x; });
}

PermGroup centralizer(const PermGroup& G, const PermGroup& H) {
  return subgroup_where(G, [&](const Perm& x) {
    return std::all_of(H.generators().begin(), H.generators().end(),
                       [&](const Perm& h) { return x * h == h * x; });
  });
}

PermGroup normalizer(const PermGroup& G, const PermGroup& H) {
  if (!G.contains(H)) throw NotASubgroup("normalizer: H is not a subgroup of G");
  return subgroup_where(G, [&](const Perm& x) {
    return std::all_of(H.generators().begin(), H.generators().end(),
                       [&](const Perm& h) { return H.contains(h.conjugate_by(x)); });
  });
}

PermGroup center(const PermGroup& G) { return centralizer(G, G); }

OrbitStabilizer orbit_stabilizer(const PermGroup& G, std::size_t start,
                                 const std::function<std::size_t(std::size_t, const Perm&)>& act) {
  OrbitStabilizer out{{start}, {G.identity()}, PermGroup::trivial(G.degree())};
  std::map<std::size_t, std::size_t> where{{start, 0}};
  std::vector<Perm> schreier;
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    for (const Perm& s : G.generators()) {
      std::size_t y = act(out.points[i], s);
      auto it = where.find(y);
      if (it == where.end()) {
        where.emplace(y, out.points.size());
        out.points.push_back(y);
        out.transversal.push_back(out.transversal[i] * s);
        continue;
      }
      Perm sg = out.transversal[i] * s * out.transversal[it->second].inverse();
      if (sg.is_identity() || out.stabilizer.contains(sg)) continue;
      schreier.push_back(sg);
      out.stabilizer = PermGroup(G.degree(), schreier);
    }
  }
  return out;
}

PermGroup intersection(const PermGroup& H, const PermGroup& K) {
  const PermGroup& small = H.order() <= K.order() ? H : K;
  const PermGroup& big = H.order() <= K.order() ? K : H;
  return subgroup_where(small, [&](const Perm& x) { return big.contains(x); });
}

PermGroup sylow(const PermGroup& G, std::uint64_t p) {
  const std::uint64_t target = p_part(G.order(), p);
  PermGroup P = PermGroup::trivial(G.degree());
  while (P.order() < target) {
    PermGroup N = normalizer(G, P);
    bool grown = false;
    for (const Perm& y : N.elements().all()) {
      if (P.contains(y)) continue;
      // Smallest k with y^k in P; take the p-part of the order of yP.
      std::uint64_t k = 1;
      Perm yk = y;
      while (!P.contains(yk)) {
        yk = yk * y;
        ++k;
      }
      std::uint64_t pk = p_part(k, p);
      if (pk == 1) continue;
      Perm x = y.pow(static_cast<std::int64_t>((k / pk) * (pk / p)));
      std::vector<Perm> gens = P.generators();
      gens.push_back(x);
      P = PermGroup(G.degree(), std::move(gens));
      grown = true;
      break;
    }
    if (!grown) throw std::logic_error("sylow: normalizer has no p-element outside P");
  }
  return P;
}

PermGroup normal_closure(const PermGroup& G, const PermGroup& H) {
  std::vector<Perm> gens;
  for (const Perm& h : H.generators())
    if (!h.is_identity()) gens.push_back(h);
  PermGroup N(G.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const Perm& g : G.generators()) {
      Perm c = gens[i].conjugate_by(g);
      if (!N.contains(c)) {
        gens.push_back(c);
        N = PermGroup(G.degree(), gens);
      }
    }
  }
  return N;
}

std::vector<PermGroup> normal_subgroups(const PermGroup& G) {
  std::vector<PermGroup> out{PermGroup::trivial(G.degree())};
  auto add = [&out](const PermGroup& N) {
    for (const auto& M : out)
      if (M.same_group(N)) return false;
    out.push_back(N);
    return true;
  };
  const auto& K = G.classes();
  std::vector<PermGroup> minimal_gens;
  for (std::size_t c = 1; c < K.count(); ++c) {
    PermGroup N = normal_closure(G, PermGroup(G.degree(), {K.representative(c)}));
    if (add(N)) minimal_gens.push_back(N);
  }
  // Every normal subgroup is a join of class closures.
  for (std::size_t i = 1; i < out.size(); ++i)
    for (const auto& C : minimal_gens)
      if (!out[i].contains(C)) add(join(out[i], C));
  std::stable_sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
  return out;
}

PermGroup commutator_subgroup(const PermGroup& G) {
  std::vector<Perm> comms;
  const auto& gs = G.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) comms.push_back(commutator(gs[i], gs[j]));
  return normal_closure(G, PermGroup(G.degree(), std::move(comms)));
}

PermGroup conjugate(const PermGroup& H, const Perm& g) {
  std::vector<Perm> gens;
  for (const Perm& h : H.generators()) gens.push_back(h.conjugate_by(g));
  return PermGroup(H.degree(), std::move(gens));
}

bool is_normal(const PermGroup& G, const PermGroup& N) {
  if (!G.contains(N)) return false;
  for (const Perm& n : N.generators())
    for (const Perm& g : G.generators())
      if (!N.contains(n.conjugate_by(g))) return false;
  return true;
}

bool is_central(const PermGroup& G, const PermGroup& Z) {
  if (!G.contains(Z)) return false;
  for (const Perm& z : Z.generators())
    for (const Perm& g : G.generators())
      if (z * g != g * z) return false;
  return true;
}

bool is_abelian(const PermGroup& G) { return is_central(G, G); }

std::optional<Perm> conjugating_element(const PermGroup& G, const PermGroup& H,
                                        const PermGroup& K) {
  if (H.order() != K.order()) return std::nullopt;
  for (const Perm& g : G.elements().all()) {
    bool ok = std::all_of(H.generators().begin(), H.generators().end(),
                          [&](const Perm& h) { return K.contains(h.conjugate_by(g)); });
    if (ok) return g;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

GroupHom::GroupHom(PermGroup source, PermGroup target, std::function<Perm(const Perm&)> map)
    : source_(std::move(source)),
      target_(std::move(target)),
      map_(std::move(map)),
      kernel_(std::make_shared<std::optional<PermGroup>>()) {
  for (const Perm& g : source_.generators()) generator_images_.push_back(map_(g));
}

GroupHom GroupHom::from_generator_images(const PermGroup& source, const PermGroup& target,
                                         const std::vector<Perm>& images) {
  if (images.size() != source.generators().size())
    throw std::invalid_argument("generator image count mismatch");
  const auto& elts = source.elements();
  auto table = std::make_shared<std::vector<std::optional<Perm>>>(elts.size());
  (*table)[0] = target.identity();
  std::vector<std::uint32_t> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::uint32_t x = queue[qi];
    for (std::size_t s = 0; s < images.size(); ++s) {
      std::uint32_t y = elts.index_of(elts[x] * source.generators()[s]);
      Perm img = *(*table)[x] * images[s];
      if (!(*table)[y]) {
        (*table)[y] = std::move(img);
        queue.push_back(y);
      } else if (*(*table)[y] != img) {
        throw NotAnAutomorphism("generator images do not define a homomorphism");
      }
    }
  }
  const ElementIndex* ep = &elts;
  return GroupHom(source, target,
                  [table, ep](const Perm& g) { return *(*table)[ep->index_of(g)]; });
}

const PermGroup& GroupHom::kernel() const {
  if (!kernel_->has_value()) {
    Perm id = target_.identity();
    *kernel_ = subgroup_where(source_, [&](const Perm& x) { return map_(x) == id; });
  }
  return **kernel_;
}

PermGroup GroupHom::image() const { return PermGroup(target_.degree(), generator_images_); }

PermGroup GroupHom::preimage(const PermGroup& K) const {
  return subgroup_where(source_, [&](const Perm& x) { return K.contains(map_(x)); });
}

bool GroupHom::verify(std::size_t samples) const {
  if (kernel().order() * image().order() != source_.order()) return false;
  const auto& elts = source_.elements();
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> pick(0, elts.size() - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    const Perm& a = elts[pick(rng)];
    const Perm& b = elts[pick(rng)];
    if (map_(a * b) != map_(a) * map_(b)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Quotient quotient(const PermGroup& G, const PermGroup& N) {
  if (!is_normal(G, N)) throw NotNormal("quotient: subgroup is not normal");
  const auto& elts = G.elements();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  auto coset_of = std::make_shared<std::vector<std::uint32_t>>(elts.size(), kUnset);
  std::vector<Perm> reps;
  for (std::uint32_t e = 0; e < elts.size(); ++e) {
    if ((*coset_of)[e] != kUnset) continue;
    auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(elts[e]);
    for (const Perm& n : N.elements().all()) (*coset_of)[elts.index_of(n * elts[e])] = c;
  }
  const std::size_t index = reps.size();
  auto reps_ptr = std::make_shared<std::vector<Perm>>(reps);
  const ElementIndex* ep = &elts;
  auto act = [coset_of, reps_ptr, ep](const Perm& x) {
    std::vector<Perm::point> img(reps_ptr->size());
    for (std::size_t c = 0; c < reps_ptr->size(); ++c)
      img[c] = (*coset_of)[ep->index_of((*reps_ptr)[c] * x)];
    return Perm(std::move(img));
  };
  std::vector<Perm> qgens;
  for (const Perm& g : G.generators()) qgens.push_back(act(g));
  PermGroup Q(index, std::move(qgens));
  GroupHom hom(G, Q, act);
  return Quotient{Q, hom, std::move(reps)};
}

std::vector<std::uint32_t> class_fusion(const PermGroup& H, const PermGroup& G) {
  const auto& hc = H.classes();
  const auto& gc = G.classes();
  std::vector<std::uint32_t> fus(hc.count());
  for (std::size_t c = 0; c < hc.count(); ++c) fus[c] = gc.class_of(hc.representative(c));
  return fus;
}

std::vector<std::uint32_t> automorphism_on_elements(const PermGroup& G,
                                                    const std::vector<Perm>& images) {
  for (const Perm& im : images)
    if (!G.contains(im)) throw NotAnAutomorphism("automorphism image lies outside the group");
  GroupHom h = [&] {
    try {
      return GroupHom::from_generator_images(G, G, images);
    } catch (const NotASubgroup&) {
      throw NotAnAutomorphism("automorphism image lies outside the group");
    }
  }();
  const auto& elts = G.elements();
  std::vector<std::uint32_t> out(elts.size());
  std::vector<bool> hit(elts.size(), false);
  for (std::uint32_t i = 0; i < elts.size(); ++i) {
    out[i] = elts.index_of(h(elts[i]));
    if (hit[out[i]]) throw NotAnAutomorphism("map is not injective");
    hit[out[i]] = true;
  }
  return out;
}

SemidirectProduct semidirect_product(const PermGroup& G, const AutomorphismMaps& action) {
  const auto& elts = G.elements();
  const std::size_t n = elts.size();
  std::vector<std::vector<std::uint32_t>> auts;
  for (const auto& imgs : action.images) auts.push_back(automorphism_on_elements(G, imgs));

  std::vector<Perm> normal_gens, comp_gens;
  for (const Perm& g : G.generators()) normal_gens.push_back(index_perm(right_mult_images(elts, g)));
  for (const auto& a : auts) comp_gens.push_back(index_perm(a));
  std::vector<Perm> all = normal_gens;
  all.insert(all.end(), comp_gens.begin(), comp_gens.end());
  PermGroup GA(n, all);
  PermGroup Gcopy(n, normal_gens);
  PermGroup Acopy(n, comp_gens);
  const ElementIndex* ep = &elts;
  GroupHom embed_g(G, GA, [ep](const Perm& g) {
    return index_perm(right_mult_images(*ep, g));
  });
  GroupHom embed_a(Acopy, GA, [](const Perm& a) { return a; });
  return SemidirectProduct{GA, embed_g, embed_a, Gcopy, Acopy, std::move(auts)};
}

DirectProduct direct_product(const PermGroup& G, const PermGroup& H) {
  const std::size_t dg = G.degree(), dh = H.degree();
  auto left = [dg, dh](const Perm& g) {
    std::vector<Perm::point> img(dg + dh);
    for (std::size_t x = 0; x < dg; ++x) img[x] = g[static_cast<Perm::point>(x)];
    for (std::size_t x = 0; x < dh; ++x) img[dg + x] = static_cast<Perm::point>(dg + x);
    return Perm(std::move(img));
  };
  auto right = [dg, dh](const Perm& h) {
    std::vector<Perm::point> img(dg + dh);
    for (std::size_t x = 0; x < dg; ++x) img[x] = static_cast<Perm::point>(x);
    for (std::size_t x = 0; x < dh; ++x)
      img[dg + x] = static_cast<Perm::point>(dg + h[static_cast<Perm::point>(x)]);
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  for (const Perm& g : G.generators()) gens.push_back(left(g));
  for (const Perm& h : H.generators()) gens.push_back(right(h));
  PermGroup D(dg + dh, std::move(gens));
  return DirectProduct{D, GroupHom(G, D, left), GroupHom(H, D, right)};
}

CentralProduct central_product(const PermGroup& G, const PermGroup& H, const std::vector<Perm>& zg,
                               const std::vector<Perm>& zh) {
  if (zg.size() != zh.size()) throw std::invalid_argument("central_product: generator count mismatch");
  PermGroup Zg = subgroup(G, zg), Zh = subgroup(H, zh);
  if (!is_central(G, Zg) || !is_central(H, Zh))
    throw NotCentral("central_product: identified subgroups must be central");
  if (Zg.order() != Zh.order())
    throw std::invalid_argument("central_product: identified subgroups differ in order");
  auto D = direct_product(G, H);
  std::vector<Perm> diag;
  for (std::size_t i = 0; i < zg.size(); ++i)
    diag.push_back(D.embed_first(zg[i]) * D.embed_second(zh[i]).inverse());
  PermGroup Z(D.group.degree(), std::move(diag));
  if (Z.order() != Zg.order())
    throw std::invalid_argument("central_product: supplied correspondence is not an isomorphism");
  auto q = quotient(D.group, Z);
  auto compose = [&q](const GroupHom& e) {
    GroupHom inner = e, outer = q.hom;
    return GroupHom(e.source(), q.group, [inner, outer](const Perm& g) { return outer(inner(g)); });
  };
  return {q.group, compose(D.embed_first), compose(D.embed_second)};
}

GroupHom regular_representation(const PermGroup& G) {
  const ElementIndex* ep = &G.elements();
  auto rho = [ep](const Perm& g) {
    std::vector<Perm::point> img(ep->size());
    for (std::uint32_t i = 0; i < ep->size(); ++i) img[i] = ep->index_of((*ep)[i] * g);
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  for (const Perm& g : G.generators()) gens.push_back(rho(g));
  return GroupHom(G, PermGroup(ep->size(), std::move(gens)), rho);
}

}  // namespace bb
