#include "bb/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bb/classes.hpp"
#include "bb/prime_field.hpp"

namespace bb {

namespace {

void require_same(const PermGroup& a, const PermGroup& b) {
  if (!a.same_object(b)) throw GroupMismatch("class functions on different group objects");
}

using gfp::u64;

// Dixon–Schneider over GF(l).  Returns the characters as rows of values mod l.
struct ModularTable {
  u64 l = 0;
  std::vector<std::vector<u64>> chi;
  std::vector<std::int64_t> degrees;
};

ModularTable modular_table(const PermGroup& G) {
  const auto& E = G.elements();
  const auto& K = G.classes();
  const std::size_t r = K.count();
  const std::uint64_t order = G.order();

  // a[(j*r + k)*r + l] = #{x in K_j : x^-1 g_l in K_k}
  std::vector<std::uint32_t> a(r * r * r, 0);
  for (std::size_t l = 0; l < r; ++l) {
    const std::uint32_t g = K.representative_index(l);
    for (std::uint32_t x = 0; x < E.size(); ++x) {
      std::uint32_t y = E.mul(E.inverse(x), g);
      ++a[(K.class_of_index(x) * r + K.class_of_index(y)) * r + l];
    }
  }

  const u64 l = gfp::prime_congruent_one(G.exponent(), static_cast<u64>(2 * std::sqrt(double(order))) + 1);

  // Common eigenspaces of the class matrices, each kept as RREF row bases.
  gfp::Matrix whole(r, std::vector<u64>(r, 0));
  for (std::size_t i = 0; i < r; ++i) whole[i][i] = 1;
  std::vector<gfp::Matrix> spaces{whole};

  auto apply = [&](std::size_t j, const std::vector<u64>& b) {
    std::vector<u64> v(r, 0);
    for (std::size_t k = 0; k < r; ++k) {
      u64 s = 0;
      const std::uint32_t* row = &a[(j * r + k) * r];
      for (std::size_t t = 0; t < r; ++t)
        if (row[t] && b[t]) s = (s + row[t] % l * b[t]) % l;
      v[k] = s;
    }
    return v;
  };

  for (std::size_t j = 1; j < r; ++j) {
    std::vector<gfp::Matrix> next;
    for (auto& S : spaces) {
      const std::size_t d = S.size();
      if (d == 1) {
        next.push_back(std::move(S));
        continue;
      }
      std::vector<std::size_t> piv(d);
      for (std::size_t t = 0; t < d; ++t)
        piv[t] = static_cast<std::size_t>(std::find_if(S[t].begin(), S[t].end(), [](u64 v) { return v != 0; }) -
                                          S[t].begin());
      gfp::Matrix A(d, std::vector<u64>(d));
      for (std::size_t s = 0; s < d; ++s) {
        auto v = apply(j, S[s]);
        for (std::size_t t = 0; t < d; ++t) A[t][s] = v[piv[t]];
      }
      auto cp = gfp::charpoly(A, l);
      std::size_t found = 0;
      for (u64 lam = 0; lam < l && found < d; ++lam) {
        u64 val = 0;
        for (std::size_t i = cp.size(); i-- > 0;) val = (val * lam + cp[i]) % l;
        if (val) continue;
        gfp::Matrix B = A;
        for (std::size_t t = 0; t < d; ++t) B[t][t] = gfp::sub(B[t][t], lam, l);
        auto coords = gfp::nullspace(B, d, l);
        gfp::Matrix sub;
        for (const auto& c : coords) {
          std::vector<u64> v(r, 0);
          for (std::size_t s = 0; s < d; ++s)
            if (c[s])
              for (std::size_t k = 0; k < r; ++k) v[k] = (v[k] + c[s] * S[s][k]) % l;
          sub.push_back(std::move(v));
        }
        gfp::rref(sub, l);
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != d) throw LiftFailure("class matrix is not diagonalizable over GF(l)");
    }
    spaces = std::move(next);
    if (spaces.size() == r) break;
  }
  if (spaces.size() != r) throw LiftFailure("class algebra did not split into one-dimensional eigenspaces");

  ModularTable out;
  out.l = l;
  const auto root = static_cast<std::int64_t>(std::sqrt(double(order)));
  for (auto& S : spaces) {
    std::vector<u64> w = S[0];
    if (w[0] == 0) throw LiftFailure("eigenvector vanishes at the identity class");
    const u64 s0 = gfp::inv(w[0], l);
    for (auto& v : w) v = gfp::mul(v, s0, l);
    u64 sum = 0;
    for (std::size_t i = 0; i < r; ++i)
      sum = gfp::add(sum, gfp::mul(gfp::mul(w[i], w[K.inverse_class(i)], l), gfp::inv(K.size(i) % l, l), l), l);
    const u64 d2 = gfp::mul(order % l, gfp::inv(sum, l), l);
    std::int64_t deg = 0;
    for (std::int64_t d = 1; d <= root + 1; ++d)
      if (order % static_cast<std::uint64_t>(d) == 0 && static_cast<u64>(d * d) % l == d2) {
        deg = d;
        break;
      }
    if (deg == 0) throw LiftFailure("no degree matches the eigenvector norm");
    std::vector<u64> row(r);
    for (std::size_t i = 0; i < r; ++i)
      row[i] = gfp::mul(gfp::mul(w[i], static_cast<u64>(deg), l), gfp::inv(K.size(i) % l, l), l);
    out.chi.push_back(std::move(row));
    out.degrees.push_back(deg);
  }
  return out;
}

std::shared_ptr<const CharacterTable> compute_table(const PermGroup& G) {
  const auto& K = G.classes();
  const std::size_t r = K.count();
  ModularTable mt = modular_table(G);
  const u64 l = mt.l, e = G.exponent();
  const u64 ze = gfp::pow(gfp::primitive_root(l), (l - 1) / e, l);

  std::vector<ClassFunction> irr;
  for (std::size_t x = 0; x < r; ++x) {
    std::vector<Cyclotomic> vals(r);
    const std::int64_t deg = mt.degrees[x];
    for (std::size_t i = 0; i < r; ++i) {
      const auto o = static_cast<std::uint32_t>(K.element_order(i));
      const u64 zo = gfp::pow(ze, e / o, l);
      std::vector<u64> powers(o);
      for (std::uint32_t j = 0; j < o; ++j) powers[j] = mt.chi[x][K.power_class(i, j)];
      const u64 inv_o = gfp::inv(o % l, l);
      std::vector<Rational> coeff(o);
      std::int64_t total = 0;
      for (std::uint32_t k = 0; k < o; ++k) {
        u64 s = 0;
        const u64 step = gfp::pow(zo, (o - k) % o, l);  // ζ^-k
        u64 zpow = 1;
        for (std::uint32_t j = 0; j < o; ++j) {
          s = gfp::add(s, gfp::mul(powers[j], zpow, l), l);
          zpow = gfp::mul(zpow, step, l);
        }
        const u64 m = gfp::mul(s, inv_o, l);
        if (m > static_cast<u64>(deg)) throw LiftFailure("eigenvalue multiplicity out of range");
        coeff[k] = static_cast<std::int64_t>(m);
        total += static_cast<std::int64_t>(m);
      }
      if (total != deg) throw LiftFailure("eigenvalue multiplicities do not sum to the degree");
      vals[i] = Cyclotomic::from_coefficients(o, std::move(coeff));
    }
    irr.emplace_back(G, std::move(vals));
  }
  return std::make_shared<const CharacterTable>(G, std::move(irr));
}

}  // namespace

ClassFunction::ClassFunction(PermGroup group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_.classes().count()) throw GroupMismatch("value count differs from class count");
}

ClassFunction ClassFunction::constant(const PermGroup& G, const Cyclotomic& v) {
  return ClassFunction(G, std::vector<Cyclotomic>(G.classes().count(), v));
}

ClassFunction ClassFunction::regular(const PermGroup& G) {
  std::vector<Cyclotomic> v(G.classes().count(), Cyclotomic(0));
  v[0] = Cyclotomic(static_cast<std::int64_t>(G.order()));
  return ClassFunction(G, std::move(v));
}

const Cyclotomic& ClassFunction::at(const Perm& g) const { return values_[group_.classes().class_of(g)]; }

std::int64_t ClassFunction::degree() const {
  Rational d = values_[0].to_rational();
  if (!d.is_integer()) throw std::domain_error("non-integral degree");
  return d.num();
}

ClassFunction ClassFunction::conj() const {
  std::vector<Cyclotomic> v;
  for (const auto& x : values_) v.push_back(x.conj());
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::galois(std::int64_t k) const {
  std::vector<Cyclotomic> v;
  for (const auto& x : values_) v.push_back(x.galois(k));
  return ClassFunction(group_, std::move(v));
}

std::vector<std::uint32_t> ClassFunction::kernel_classes() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < values_.size(); ++c)
    if (values_[c] == values_[0]) out.push_back(c);
  return out;
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  require_same(a.group_, b.group_);
  std::vector<Cyclotomic> v(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) v[c] = a[c] + b[c];
  return ClassFunction(a.group_, std::move(v));
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) { return a + b * Rational(-1); }

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  require_same(a.group_, b.group_);
  std::vector<Cyclotomic> v(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) v[c] = a[c] * b[c];
  return ClassFunction(a.group_, std::move(v));
}

ClassFunction operator*(const ClassFunction& a, const Rational& r) {
  std::vector<Cyclotomic> v(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) v[c] = a[c] * r;
  return ClassFunction(a.group_, std::move(v));
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  if (!a.group_.same_object(b.group_)) return false;
  for (std::size_t c = 0; c < a.size(); ++c)
    if (!(a[c] == b[c])) return false;
  return true;
}

CharacterTable::CharacterTable(PermGroup G, std::vector<ClassFunction> irr) : group_(std::move(G)) {
  using Key = std::vector<std::pair<std::uint32_t, std::vector<Rational>>>;
  struct Row {
    std::int64_t degree;
    bool trivial;
    Key key;
    ClassFunction chi;
  };
  std::vector<Row> rows;
  for (auto& chi : irr) {
    Key key;
    bool trivial = true;
    for (const auto& v : chi.values()) {
      key.push_back(v.normal_form());
      trivial = trivial && key.back() == std::pair<std::uint32_t, std::vector<Rational>>{1, {Rational(1)}};
    }
    rows.push_back({chi.degree(), trivial, std::move(key), std::move(chi)});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    if (x.trivial != y.trivial) return x.trivial;
    if (x.degree != y.degree) return x.degree < y.degree;
    return std::lexicographical_compare(x.key.begin(), x.key.end(), y.key.begin(), y.key.end(),
                                        [](const auto& p, const auto& q) {
                                          if (p.first != q.first) return p.first < q.first;
                                          return std::lexicographical_compare(p.second.begin(), p.second.end(),
                                                                              q.second.begin(), q.second.end());
                                        });
  });
  for (auto& row : rows) {
    degrees_.push_back(row.degree);
    irr_.push_back(std::move(row.chi));
  }
}

std::optional<std::size_t> CharacterTable::index_of(const ClassFunction& chi) const {
  if (!chi.group().same_object(group_)) throw GroupMismatch("character of another group");
  if (!chi[0].is_rational()) return std::nullopt;
  Rational d = chi[0].to_rational();
  for (std::size_t i = 0; i < irr_.size(); ++i)
    if (Rational(degrees_[i]) == d && irr_[i] == chi) return i;
  return std::nullopt;
}

std::vector<Rational> CharacterTable::decompose(const ClassFunction& phi) const {
  std::vector<Rational> m;
  for (const auto& chi : irr_) m.push_back(inner_product(phi, chi).to_rational());
  return m;
}

std::vector<std::size_t> CharacterTable::constituents(const ClassFunction& phi) const {
  std::vector<std::size_t> out;
  auto m = decompose(phi);
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!m[i].is_zero()) out.push_back(i);
  return out;
}

std::shared_ptr<const CharacterTable> character_table(const PermGroup& G) {
  return std::static_pointer_cast<const CharacterTable>(
      G.memo("character_table", [&G] { return std::static_pointer_cast<const void>(compute_table(G)); }));
}

Cyclotomic inner_product(const ClassFunction& phi, const ClassFunction& psi) {
  require_same(phi.group(), psi.group());
  const auto& K = phi.group().classes();
  Cyclotomic sum;
  for (std::size_t c = 0; c < K.count(); ++c)
    sum += phi[c] * psi[c].conj() * Rational(static_cast<std::int64_t>(K.size(c)));
  return sum / Rational(static_cast<std::int64_t>(phi.group().order()));
}

ClassFunction restrict(const ClassFunction& chi, const PermGroup& H) {
  if (!chi.group().contains(H)) throw GroupMismatch("restriction to a non-subgroup");
  auto fus = class_fusion(H, chi.group());
  std::vector<Cyclotomic> v;
  for (auto c : fus) v.push_back(chi[c]);
  return ClassFunction(H, std::move(v));
}

ClassFunction induce(const ClassFunction& theta, const PermGroup& G) {
  const PermGroup& H = theta.group();
  if (!G.contains(H)) throw GroupMismatch("induction to a non-overgroup");
  auto fus = class_fusion(H, G);
  const auto& KH = H.classes();
  const auto& KG = G.classes();
  std::vector<Cyclotomic> v(KG.count(), Cyclotomic(0));
  for (std::size_t c = 0; c < fus.size(); ++c) v[fus[c]] += theta[c] * Rational(static_cast<std::int64_t>(KH.size(c)));
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = v[i] * Rational(static_cast<std::int64_t>(KG.centralizer_order(i)), static_cast<std::int64_t>(H.order()));
  return ClassFunction(G, std::move(v));
}

ClassFunction pullback(const ClassFunction& eta, const GroupHom& hom) {
  require_same(eta.group(), hom.target());
  const auto& K = hom.source().classes();
  std::vector<Cyclotomic> v;
  for (std::size_t c = 0; c < K.count(); ++c) v.push_back(eta.at(hom(K.representative(c))));
  return ClassFunction(hom.source(), std::move(v));
}

ClassFunction conjugate(const ClassFunction& theta, const Perm& g) {
  const PermGroup& N = theta.group();
  const auto& K = N.classes();
  const Perm gi = g.inverse();
  std::vector<Cyclotomic> v;
  for (std::size_t c = 0; c < K.count(); ++c) {
    Perm x = K.representative(c).conjugate_by(gi);
    if (!N.contains(x)) throw NotInvariant("conjugating element does not normalize the subgroup");
    v.push_back(theta.at(x));
  }
  return ClassFunction(N, std::move(v));
}

std::vector<std::size_t> irr_over(const PermGroup& G, const PermGroup& N, const ClassFunction& theta) {
  require_same(N, theta.group());
  auto T = character_table(G);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < T->size(); ++i)
    if (!inner_product(restrict((*T)[i], N), theta).is_zero()) out.push_back(i);
  return out;
}

std::optional<ClassFunction> find_extension(const ClassFunction& theta, const PermGroup& G) {
  for (const Perm& g : G.generators())
    if (!(conjugate(theta, g) == theta)) throw NotInvariant("character is not G-invariant");
  const PermGroup& N = theta.group();
  auto T = character_table(G);
  const std::int64_t d = theta.degree();
  for (std::size_t i = 0; i < T->size(); ++i)
    if (T->degree(i) == d && restrict((*T)[i], N) == theta) return (*T)[i];
  return std::nullopt;
}

ClassFunction gallagher_product(const ClassFunction& theta_tilde, const ClassFunction& eta) {
  return eta * theta_tilde;
}

std::vector<std::size_t> gallagher_bijection(const ClassFunction& theta_tilde, const PermGroup& N,
                                             const Quotient& GmodN) {
  const PermGroup& G = theta_tilde.group();
  require_same(G, GmodN.hom.source());
  auto T = character_table(G);
  if (!T->index_of(theta_tilde)) throw NotAnExtension("not an irreducible character of G");
  ClassFunction theta = restrict(theta_tilde, N);
  if (!(inner_product(theta, theta) == Cyclotomic(1))) throw NotAnExtension("restriction is reducible");
  auto TQ = character_table(GmodN.group);
  std::vector<std::size_t> out;
  for (const auto& eta_bar : TQ->irr()) {
    auto idx = T->index_of(gallagher_product(theta_tilde, pullback(eta_bar, GmodN.hom)));
    if (!idx) throw std::logic_error("Gallagher product is not irreducible");
    out.push_back(*idx);
  }
  return out;
}

ClassFunction dot_with_central(const ClassFunction& chi0, const ClassFunction& nu, const PermGroup& G) {
  const PermGroup& Kg = chi0.group();
  const PermGroup& Z = nu.group();
  if (!G.contains(Kg) || !G.contains(Z)) throw GroupMismatch("factors are not subgroups of G");
  if (!is_central(G, Z)) throw IncompatibleCentral("second factor is not central");
  PermGroup KZ = intersection(Kg, Z);
  if (Kg.order() * Z.order() != G.order() * KZ.order()) throw IncompatibleCentral("G is not the product K·Z");
  if (nu.degree() != 1) throw IncompatibleCentral("central character is not linear");
  const Cyclotomic d0 = chi0[0];
  for (const Perm& z : KZ.elements().all())
    if (!(chi0.at(z) == d0 * nu.at(z))) throw IncompatibleCentral("characters disagree on K ∩ Z");
  const auto& K = G.classes();
  std::vector<Cyclotomic> v;
  for (std::size_t c = 0; c < K.count(); ++c) {
    const Perm& g = K.representative(c);
    for (const Perm& z : Z.elements().all()) {
      Perm k = g * z.inverse();
      if (Kg.contains(k)) {
        v.push_back(chi0.at(k) * nu.at(z));
        break;
      }
    }
  }
  ClassFunction chi(G, std::move(v));
  if (!character_table(G)->index_of(chi)) throw std::logic_error("central product character is reducible");
  return chi;
}

nlohmann::json to_json(const Cyclotomic& x) {
  auto [m, c] = x.normal_form();
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& v : c) {
    if (v.is_integer()) coeffs.push_back(v.num());
    else coeffs.push_back(v.to_string());
  }
  return {{"conductor", m}, {"coefficients", coeffs}};
}

nlohmann::json to_json(const CharacterTable& table) {
  const auto& K = table.group().classes();
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t c = 0; c < K.count(); ++c)
    classes.push_back({{"representative", K.representative(c).to_cycles()},
                       {"size", K.size(c)},
                       {"element_order", K.element_order(c)}});
  nlohmann::json chars = nlohmann::json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : table[i].values()) vals.push_back(to_json(v));
    chars.push_back({{"degree", table.degree(i)}, {"values", vals}});
  }
  return {{"group_order", table.group().order()}, {"classes", classes}, {"characters", chars}};
}

}  // namespace bb
