#include "bb/triples.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "bb/blocks.hpp"
#include "bb/classes.hpp"
#include "bb/dade.hpp"

namespace bb {

namespace {

std::uint64_t order_mod(std::uint64_t j, std::uint64_t L) { return L / std::gcd(j % L, L); }

// Values of f pushed along a surjection S -> T (T a subgroup of hom's target
// containing the image), read at the first preimage of each class.
ClassFunction push_forward(const ClassFunction& f, const GroupHom& hom, const PermGroup& T) {
  const auto& K = T.classes();
  std::vector<std::optional<Cyclotomic>> vals(K.count());
  std::size_t filled = 0;
  for (const Perm& s : f.group().elements().all()) {
    auto c = K.class_of(hom(s));
    if (vals[c]) continue;
    vals[c] = f.at(s);
    if (++filled == vals.size()) break;
  }
  std::vector<Cyclotomic> out;
  for (auto& v : vals) {
    if (!v) throw std::logic_error("push_forward: map is not onto");
    out.push_back(*v);
  }
  return ClassFunction(T, std::move(out));
}

bool is_scalar(const FFMat& m, SmallField::E& s) {
  s = m(0, 0);
  if (s == 0) return false;
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (m(i, j) != (i == j ? s : 0)) return false;
  return true;
}

}  // namespace

FFMat MatrixRepOverFF::operator()(const Perm& g) const { return (*matrices)(group.elements().index_of(g)); }

MatrixRepOverFF modular_rep_affording(const ClassFunction& theta, std::uint32_t ell, std::uint64_t seed) {
  const PermGroup& H = theta.group();
  if (!is_prime(ell) || H.order() % ell == 0 || (ell - 1) % H.exponent() != 0)
    throw std::invalid_argument("modular_rep_affording: need ℓ prime, ℓ ∤ |H| and exp(H) | ℓ - 1");
  auto F = std::make_shared<SmallField>(GaloisField(ell, 1));
  std::vector<std::size_t> classes(H.classes().count());
  std::iota(classes.begin(), classes.end(), 0);
  const auto& want = theta.values();
  std::mt19937_64 rng(seed);
  auto res = search_irreducibles(H, F, H.exponent(), classes, classes.size(),
                                 [&](const std::vector<Cyclotomic>& v) { return v == want; }, rng);
  for (auto& f : res.found) {
    if (f.values != want) continue;
    auto mats = std::make_shared<const ElementMatrices>(H, f.module);
    return MatrixRepOverFF{H, ell, std::move(f.module), std::move(mats)};
  }
  throw SplitFailure("modular_rep_affording: no module affording θ over GF(" + std::to_string(ell) + ")");
}

FFMat intertwiner(const MatrixRepOverFF& R, const Perm& x) {
  const auto& F = R.field();
  const std::size_t d = R.degree();
  const Perm xi = x.inverse();
  const auto& gens = R.group.generators();
  // Unknown P_ik sits at row i*d + k; one column per equation (gen, i, j) of
  // P A = B P with A = R(n), B = R(x n x^-1).
  FFMat sys(d * d, gens.size() * d * d);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Perm conj = x * gens[g] * xi;
    if (!R.group.contains(conj)) throw std::invalid_argument("intertwiner: x does not normalize the group");
    FFMat A = R(gens[g]), B = R(conj);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        std::size_t col = g * d * d + i * d + j;
        for (std::size_t k = 0; k < d; ++k) {
          sys(i * d + k, col) = F.add(sys(i * d + k, col), A(k, j));
          sys(k * d + j, col) = F.sub(sys(k * d + j, col), B(i, k));
        }
      }
  }
  FFMat null = left_nullspace(F, sys);
  if (null.rows != 1)
    throw NoIntertwiner("intertwiner: solution space has dimension " + std::to_string(null.rows));
  FFMat P(d, d);
  std::size_t lead = d * d;
  for (std::size_t u = 0; u < d * d; ++u)
    if (null(0, u) != 0 && lead == d * d) lead = u;
  auto inv = F.inv(null(0, lead));
  for (std::size_t u = 0; u < d * d; ++u) P.a[u] = F.mul(null(0, u), inv);
  if (rank(F, P) != d) throw NoIntertwiner("intertwiner: solution is singular");
  return P;
}

std::uint32_t next_splitting_prime(std::uint64_t modulus, std::uint32_t after) {
  for (std::uint64_t l = (after / modulus + 1) * modulus + 1;; l += modulus)
    if (is_prime(l)) {
      if (l > SmallField::kMaxSize) throw TriplesOutOfScope("next_splitting_prime: field too large");
      return static_cast<std::uint32_t>(l);
    }
}

std::size_t FactorSet::coset(const Perm& x) const { return coset_of[X->group.elements().index_of(x)]; }

FFMat FactorSet::projective(const Perm& x) const {
  std::size_t c = coset(x);
  return mat_mul(extension.field(), extension(x * transversal[c].inverse()), P[c]);
}

Cyclotomic FactorSet::value(std::size_t c1, std::size_t c2) const {
  return Cyclotomic::root_of_unity(static_cast<std::uint32_t>(e), static_cast<std::int64_t>(alpha[c1][c2]));
}

std::uint64_t FactorSet::scalar(const Perm& x, const Perm& y) const {
  const auto& F = extension.field();
  FFMat m = mat_mul(F, mat_mul(F, projective(x), projective(y)), inverse(F, projective(x * y)));
  SmallField::E s;
  if (!is_scalar(m, s)) throw NonScalarDefect("FactorSet::scalar: P(x)P(y)P(xy)^-1 is not scalar");
  const std::uint64_t L = ell - 1, step = L / e;
  std::uint64_t j = F.log(s);
  if (j % step != 0) throw NonScalarDefect("FactorSet::scalar: value outside E");
  return j / step;
}

bool FactorSet::cocycle_identity() const {
  const std::size_t k = cosets();
  std::vector<std::vector<std::size_t>> mul(k, std::vector<std::size_t>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) mul[a][b] = coset(transversal[a] * transversal[b]);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      for (std::size_t z = 0; z < k; ++z)
        if ((alpha[x][y] + alpha[mul[x][y]][z]) % e != (alpha[y][z] + alpha[x][mul[y][z]]) % e) return false;
  return true;
}

bool FactorSet::trivial_on_NA() const {
  for (auto a : a_cosets)
    for (auto b : a_cosets)
      if (alpha[a][b] != 0) return false;
  return true;
}

FactorSet factor_set(const ActionSpec& spec, const PermGroup& N, const ClassFunction& theta, std::uint32_t ell,
                     const TriplesOptions& opts) {
  const PermGroup& G = spec.group();
  if (!theta.group().same_object(N)) throw GroupMismatch("factor_set: θ is not a character of N");
  if (!is_normal(G, N)) throw std::invalid_argument("factor_set: N is not normal in G");
  if (!spec.coprime()) throw NotCoprime("factor_set: action is not coprime");
  if (theta.degree() > opts.max_degree) throw TriplesOutOfScope("factor_set: θ(1) exceeds the guard");
  for (const Perm& a : spec.acting_group().generators())
    if (!spec.apply(a, N).same_group(N)) throw std::invalid_argument("factor_set: N is not A-stable");
  const auto& KN = N.classes();
  for (std::size_t c = 0; c < KN.count(); ++c) {
    const Perm& n = KN.representative(c);
    for (const Perm& g : G.generators())
      if (!(theta.at(g * n * g.inverse()) == theta[c])) throw NotInvariant("factor_set: θ is not G-invariant");
    for (const Perm& a : spec.acting_group().generators())
      if (!(theta.at(spec.apply(a, n)) == theta[c])) throw NotInvariant("factor_set: θ is not A-invariant");
  }
  if (G.order() * spec.acting_order() > opts.max_extension_order)
    throw TriplesOutOfScope("factor_set: |G⋊A| exceeds the guard");

  FactorSet fs;
  fs.G = G;
  fs.N = N;
  fs.theta = theta;
  fs.ell = ell;
  fs.X = std::make_shared<const SemidirectProduct>(semidirect_product(G, spec.maps()));
  const SemidirectProduct& X = *fs.X;
  const auto& EG = G.elements();
  const auto& EX = X.group.elements();

  std::vector<Perm> ngens;
  for (const Perm& n : N.generators()) ngens.push_back(X.embed_normal(n));
  fs.N_X = subgroup(X.group, ngens);
  fs.NA_X = join(fs.N_X, X.complement_copy);
  std::vector<Cyclotomic> tv;
  for (std::size_t c = 0; c < fs.N_X.classes().count(); ++c)
    tv.push_back(theta.at(EG[fs.N_X.classes().representative(c)[0]]));
  ClassFunction theta_X(fs.N_X, std::move(tv));
  auto psi = find_extension(theta_X, fs.NA_X);
  if (!psi) throw std::logic_error("factor_set: θ has no extension to NA");
  fs.extension = modular_rep_affording(*psi, ell, opts.seed);
  const auto& F = fs.extension.field();
  const std::size_t d = fs.extension.degree();
  const std::uint64_t L = ell - 1;

  // Transversal ρ_s α_a with s running over N\G, identity first.
  std::vector<Perm> S;
  {
    std::vector<bool> seen(EG.size(), false);
    for (std::uint32_t i = 0; i < EG.size(); ++i) {
      if (seen[i]) continue;
      S.push_back(EG[i]);
      for (const Perm& n : N.elements().all()) seen[EG.index_of(n * EG[i])] = true;
    }
  }
  const auto& EA = X.complement_copy.elements();
  fs.coset_of.assign(EX.size(), static_cast<std::uint32_t>(-1));
  const auto& ENX = fs.N_X.elements();
  for (const Perm& s : S)
    for (std::size_t ai = 0; ai < EA.size(); ++ai) {
      Perm t = X.embed_normal(s) * EA[ai];
      auto c = static_cast<std::uint32_t>(fs.transversal.size());
      if (s == G.identity()) fs.a_cosets.push_back(c);
      fs.transversal.push_back(t);
      for (const Perm& n : ENX.all()) {
        auto idx = EX.index_of(n * t);
        if (fs.coset_of[idx] != static_cast<std::uint32_t>(-1)) throw std::logic_error("factor_set: cosets overlap");
        fs.coset_of[idx] = c;
      }
    }

  // R restricted to N's copy, for intertwiners of ρ_s.
  FFModule mod_N{fs.extension.module.field, {}, d};
  for (const Perm& n : fs.N_X.generators()) mod_N.gens.push_back(fs.extension(n));
  MatrixRepOverFF R_N{fs.N_X, ell, mod_N, std::make_shared<const ElementMatrices>(fs.N_X, mod_N)};

  // P(ρ_s) scaled by ω^k so det P has least multiplicative order.
  std::vector<FFMat> Ps;
  for (const Perm& s : S) {
    if (s == G.identity()) {
      Ps.push_back(FFMat::identity(d));
      continue;
    }
    FFMat P0 = intertwiner(R_N, X.embed_normal(s));
    std::uint64_t ld = F.log(determinant(F, P0));
    std::uint64_t best_k = 0, best = order_mod(ld, L);
    for (std::uint64_t k = 1; k < L && best > 1; ++k) {
      auto o = order_mod(ld + d * k, L);
      if (o < best) best = o, best_k = k;
    }
    Ps.push_back(mat_scale(F, P0, F.power_of_generator(best_k)));
  }
  for (std::size_t si = 0; si < S.size(); ++si)
    for (std::size_t ai = 0; ai < EA.size(); ++ai) fs.P.push_back(mat_mul(F, Ps[si], fs.extension(EA[ai])));

  const std::size_t k = fs.cosets();
  std::vector<std::vector<std::uint64_t>> logs(k, std::vector<std::uint64_t>(k));
  std::uint64_t e = 1;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Perm y = fs.transversal[a] * fs.transversal[b];
      FFMat m = mat_mul(F, mat_mul(F, fs.P[a], fs.P[b]), inverse(F, fs.projective(y)));
      SmallField::E s;
      if (!is_scalar(m, s)) throw NonScalarDefect("factor_set: P(x)P(y)P(xy)^-1 is not scalar");
      logs[a][b] = F.log(s);
      e = std::lcm(e, order_mod(logs[a][b], L));
    }
  fs.e = e;
  fs.alpha.assign(k, std::vector<std::uint64_t>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) fs.alpha[a][b] = logs[a][b] / (L / e);
  return fs;
}

Perm CentralExtension::element(const Perm& x, std::uint64_t eps) const {
  const FactorSet& f = *alpha;
  const std::size_t n = x.degree(), k = f.cosets();
  const std::uint64_t e = f.e;
  std::vector<Perm::point> img(n + k * e);
  for (std::size_t i = 0; i < n; ++i) img[i] = x[static_cast<Perm::point>(i)];
  const std::size_t cx = f.coset(x);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t c2 = f.coset(f.transversal[c] * x);
    for (std::uint64_t v = 0; v < e; ++v)
      img[n + c * e + v] = static_cast<Perm::point>(n + c2 * e + (v + eps + f.alpha[c][cx]) % e);
  }
  return Perm(std::move(img));
}

std::pair<Perm, std::uint64_t> CentralExtension::label(const Perm& xt) const {
  const std::size_t n = alpha->X->group.degree();
  std::vector<Perm::point> img(xt.images().begin(), xt.images().begin() + static_cast<std::ptrdiff_t>(n));
  Perm x(std::move(img));
  const std::size_t c = alpha->coset(x);
  return {x, xt[static_cast<Perm::point>(n)] - n - c * alpha->e};
}

Perm CentralExtension::g_part(const Perm& xt) const {
  return alpha->G.elements()[label(xt).first[0]];
}

CentralExtension build_central_extension(std::shared_ptr<const FactorSet> alpha, std::uint64_t max_extension_order) {
  const FactorSet& f = *alpha;
  if (f.X->group.order() * f.e > max_extension_order) throw TriplesOutOfScope("central extension exceeds the guard");
  CentralExtension ext;
  ext.alpha = alpha;
  const std::size_t deg = f.X->group.degree() + f.cosets() * f.e;
  const Perm one = f.X->group.identity();
  std::vector<Perm> egen;
  if (f.e > 1) egen.push_back(ext.element(one, 1));
  auto lift = [&](const std::vector<Perm>& xs, bool with_e) {
    std::vector<Perm> gens;
    for (const Perm& x : xs) gens.push_back(ext.element(x, 0));
    if (with_e) gens.insert(gens.end(), egen.begin(), egen.end());
    return PermGroup(deg, std::move(gens));
  };
  ext.Xt = lift(f.X->group.generators(), true);
  ext.Nt = lift(f.N_X.generators(), true);
  ext.Gt = lift(f.X->normal_copy.generators(), true);
  ext.E0 = PermGroup(deg, egen);
  ext.N0 = lift(f.N_X.generators(), false);
  ext.At = lift(f.X->complement_copy.generators(), false);

  const std::uint64_t L = f.ell - 1;
  const std::uint64_t m = ext.Gt.exponent();
  if (L % m != 0) throw SplitFailure("central extension: exp(G̃) does not divide ℓ - 1", m);

  const auto& KN = ext.Nt.classes();
  std::vector<Cyclotomic> lv, tv;
  for (std::size_t c = 0; c < KN.count(); ++c) {
    auto [x, eps] = ext.label(KN.representative(c));
    lv.push_back(Cyclotomic::root_of_unity(static_cast<std::uint32_t>(f.e), -static_cast<std::int64_t>(eps)));
    tv.push_back(f.theta.at(ext.g_part(KN.representative(c))));
  }
  ext.lambda_tilde = ClassFunction(ext.Nt, std::move(lv));
  ext.theta_tilde = ClassFunction(ext.Nt, std::move(tv));

  // τ(x, ε) = ε·P(x), with ε read in GF(ℓ) as ω^{ε(ℓ-1)/e}.
  const auto& F = f.extension.field();
  FFModule Q{f.extension.module.field, {}, f.extension.degree()};
  for (const Perm& g : ext.Gt.generators()) {
    auto [x, eps] = ext.label(g);
    Q.gens.push_back(mat_scale(F, f.projective(x), F.power_of_generator(eps * (L / f.e))));
  }
  std::vector<std::size_t> classes(ext.Gt.classes().count());
  std::iota(classes.begin(), classes.end(), 0);
  ext.tau_G = ClassFunction(ext.Gt, brauer_character(ext.Gt, Q, classes, m));
  ext.tau_N = restrict(ext.tau_G, ext.Nt);
  return ext;
}

TripleIsomorphism sigma(const ActionSpec& spec, const PermGroup& N, const ClassFunction& theta,
                        const TriplesOptions& opts) {
  TripleIsomorphism out;
  out.spec = std::make_shared<const ActionSpec>(spec);
  std::uint64_t modulus = std::lcm(spec.group().exponent(), spec.acting_group().exponent());
  std::uint32_t ell = opts.ell ? opts.ell : next_splitting_prime(modulus);
  bool built = false;
  for (std::size_t attempt = 0; attempt < opts.ell_attempts && !built; ++attempt) {
    try {
      auto fs = std::make_shared<const FactorSet>(factor_set(spec, N, theta, ell, opts));
      out.ext = build_central_extension(fs, opts.max_extension_order);
      built = true;
    } catch (const SplitFailure& err) {
      if (opts.ell) throw;
      if (err.needed) modulus = std::lcm(modulus, err.needed);
      ell = next_splitting_prime(modulus, ell);
    }
  }
  if (!built) throw SplitFailure("sigma: no splitting prime found");
  const CentralExtension& ext = out.ext;

  out.star = std::make_shared<const Quotient>(quotient(ext.Gt, ext.N0));
  const Quotient& star = *out.star;
  const PermGroup& Gs = star.group;
  std::vector<Perm> nimg;
  for (const Perm& x : ext.Nt.generators()) nimg.push_back(star.hom(x));
  out.N_star = subgroup(Gs, nimg);
  GroupHom n_to_star(ext.Nt, out.N_star, [&star](const Perm& x) { return star.hom(x); });
  out.theta_star = push_forward(ext.lambda_tilde, n_to_star, out.N_star);
  out.central = is_central(Gs, out.N_star);

  const PermGroup& G = spec.group();
  auto TG = character_table(G);
  auto TGt = character_table(ext.Gt);
  auto TGs = character_table(Gs);
  out.source = irr_over(G, N, theta);
  out.target = irr_over(Gs, out.N_star, out.theta_star);

  auto sigma_of = [&](std::size_t chi) {
    const auto& KG = ext.Gt.classes();
    std::vector<Cyclotomic> v;
    for (std::size_t c = 0; c < KG.count(); ++c) v.push_back((*TG)[chi].at(ext.g_part(KG.representative(c))));
    ClassFunction chit(ext.Gt, std::move(v));
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < TGt->size(); ++i) {
      const auto& mu = (*TGt)[i];
      bool trivial = true;
      for (const Perm& z : ext.N0.generators()) trivial = trivial && mu.at(z) == mu[0];
      if (!trivial || !(ext.tau_G * mu == chit)) continue;
      if (found) throw std::logic_error("sigma: τμ = χ̃ has several solutions");
      found = i;
    }
    if (!found) throw std::logic_error("sigma: no μ with τμ = χ̃");
    auto idx = TGs->index_of(deflate((*TGt)[*found], star));
    if (!idx) throw std::logic_error("sigma: deflated μ is not irreducible");
    return *idx;
  };
  for (auto chi : out.source) out.image.push_back(sigma_of(chi));

  auto sorted_image = out.image;
  std::sort(sorted_image.begin(), sorted_image.end());
  out.bijective = std::adjacent_find(sorted_image.begin(), sorted_image.end()) == sorted_image.end() &&
                  sorted_image == out.target;

  out.degree_ratios = true;
  for (std::size_t i = 0; i < out.source.size(); ++i)
    out.degree_ratios = out.degree_ratios && TG->degree(out.source[i]) * out.theta_star.degree() ==
                                                 TGs->degree(out.image[i]) * theta.degree();

  // σ(χ^a) = σ(χ)^a, with a acting on G* through conjugation by (α_a, 1).
  out.equivariant = true;
  std::vector<Perm> pre(Gs.classes().count());
  {
    std::vector<bool> have(pre.size(), false);
    for (const Perm& y : ext.Gt.elements().all()) {
      auto c = Gs.classes().class_of(star.hom(y));
      if (!have[c]) have[c] = true, pre[c] = y;
    }
  }
  for (const Perm& a : spec.acting_group().generators()) {
    const Perm at = ext.element(a, 0), ati = at.inverse();
    for (std::size_t i = 0; i < out.source.size(); ++i) {
      const auto& chi = (*TG)[out.source[i]];
      std::vector<Cyclotomic> cv;
      const Perm ai = a.inverse();
      for (std::size_t c = 0; c < G.classes().count(); ++c)
        cv.push_back(chi.at(spec.apply(ai, G.classes().representative(c))));
      auto chia = TG->index_of(ClassFunction(G, std::move(cv)));
      auto pos = chia ? std::find(out.source.begin(), out.source.end(), *chia) : out.source.end();
      if (pos == out.source.end()) {
        out.equivariant = false;
        continue;
      }
      const auto& psi = (*TGs)[out.image[i]];
      std::vector<Cyclotomic> pv;
      for (std::size_t c = 0; c < pre.size(); ++c) pv.push_back(psi.at(star.hom(at * pre[c] * ati)));
      const auto& want = (*TGs)[out.image[static_cast<std::size_t>(pos - out.source.begin())]];
      out.equivariant = out.equivariant && ClassFunction(Gs, std::move(pv)) == want;
    }
  }
  return out;
}

BlockFiberCheck block_fiber_check(const TripleIsomorphism& iso, std::uint32_t p) {
  const CentralExtension& ext = iso.ext;
  const FactorSet& f = *ext.alpha;
  const PermGroup& Gs = iso.star->group;
  BlockFiberCheck out;
  out.prime = p;
  auto TN = character_table(f.N);
  auto ti = TN->index_of(f.theta);
  if (!ti) throw std::invalid_argument("block_fiber_check: θ is not irreducible");
  std::size_t b = block_partition(f.N, p)->block_of(*ti);
  PermGroup H = ramification_group(f.G, f.N, b, p).subgroup;
  out.full_ramification = H.order() == f.G.order();

  std::vector<Perm> himg;
  for (const Perm& h : H.generators()) himg.push_back(iso.star->hom(ext.element(f.X->embed_normal(h), 0)));
  for (const Perm& z : ext.E0.generators()) himg.push_back(iso.star->hom(z));
  PermGroup Hs = subgroup(Gs, himg);

  auto BG = block_partition(f.G, p);
  auto BS = block_partition(Gs, p);
  auto BH = block_partition(Hs, p);
  std::vector<std::set<std::size_t>> covered;
  for (auto img : iso.image) {
    std::size_t B = BS->block_of(img);
    std::set<std::size_t> c;
    for (std::size_t bh = 0; bh < BH->size(); ++bh)
      if (covers(Gs, B, Hs, bh, p)) c.insert(bh);
    covered.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < iso.source.size(); ++i)
    for (std::size_t j = i + 1; j < iso.source.size(); ++j) {
      ++out.pairs;
      bool lhs = BG->block_of(iso.source[i]) == BG->block_of(iso.source[j]);
      bool rhs = covered[i] == covered[j];
      if (lhs != rhs) ++out.mismatches;
    }
  return out;
}

nlohmann::json to_json(const FactorSet& a) {
  return {{"ell", a.ell}, {"e", a.e}, {"cosets", a.cosets()}, {"alpha", a.alpha}};
}

nlohmann::json to_json(const TripleIsomorphism& iso) {
  nlohmann::json pairs = nlohmann::json::array();
  for (std::size_t i = 0; i < iso.source.size(); ++i) pairs.push_back({iso.source[i], iso.image[i]});
  return {{"factor_set", to_json(*iso.ext.alpha)},
          {"order_G_star", iso.star->group.order()},
          {"sigma", pairs},
          {"central", iso.central},
          {"bijective", iso.bijective},
          {"degree_ratios", iso.degree_ratios},
          {"equivariant", iso.equivariant}};
}

}  // namespace bb
