#include "bb/meataxe.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <set>
#include <sstream>
#include <tuple>

#include "bb/classes.hpp"

namespace bb {

FFModule trivial_module(std::shared_ptr<const SmallField> F, const PermGroup& G) {
  FFModule M{std::move(F), {}, 1};
  M.gens.assign(G.generators().size(), FFMat::identity(1));
  return M;
}

FFModule permutation_module(std::shared_ptr<const SmallField> F, const PermGroup& G) {
  const std::size_t n = G.degree();
  FFModule M{std::move(F), {}, n};
  for (const Perm& g : G.generators()) {
    FFMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, g[static_cast<Perm::point>(i)]) = SmallField::one();
    M.gens.push_back(std::move(m));
  }
  return M;
}

FFModule tensor(const FFModule& a, const FFModule& b) {
  if (a.gens.size() != b.gens.size()) throw std::invalid_argument("tensor: generator counts differ");
  FFModule M{a.field, {}, a.dim * b.dim};
  for (std::size_t s = 0; s < a.gens.size(); ++s) M.gens.push_back(kronecker(*a.field, a.gens[s], b.gens[s]));
  return M;
}

FFVec Echelon::reduce(FFVec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    auto c = v[pivots_[i]];
    if (c == 0) continue;
    auto f = F_->neg(c);
    const FFVec& r = rows_[i];
    for (std::size_t j = 0; j < dim_; ++j)
      if (r[j]) v[j] = F_->add(v[j], F_->mul(f, r[j]));
  }
  return v;
}

FFVec Echelon::coordinates(FFVec v) const {
  FFVec out(rows_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    auto c = v[pivots_[i]];
    out[i] = c;
    if (c == 0) continue;
    auto f = F_->neg(c);
    const FFVec& r = rows_[i];
    for (std::size_t j = 0; j < dim_; ++j)
      if (r[j]) v[j] = F_->add(v[j], F_->mul(f, r[j]));
  }
  for (auto x : v)
    if (x != 0) throw std::logic_error("Echelon::coordinates: vector not in span");
  return out;
}

bool Echelon::insert(FFVec v) {
  v = reduce(std::move(v));
  std::size_t j = 0;
  while (j < dim_ && v[j] == 0) ++j;
  if (j == dim_) return false;
  auto inv = F_->inv(v[j]);
  for (auto& x : v) x = F_->mul(x, inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(j);
  return true;
}

Echelon spin(const SmallField& F, const std::vector<FFMat>& gens, const std::vector<FFVec>& seeds) {
  if (seeds.empty()) throw std::invalid_argument("spin: no seeds");
  Echelon E(F, seeds.front().size());
  for (const auto& s : seeds) E.insert(s);
  for (std::size_t i = 0; i < E.size() && E.size() < E.dim(); ++i)
    for (const FFMat& g : gens) {
      if (E.size() == E.dim()) break;
      E.insert(vec_mat(F, E.rows()[i], g));
    }
  return E;
}

FFModule submodule(const FFModule& M, const Echelon& U) {
  const SmallField& F = *M.field;
  FFModule S{M.field, {}, U.size()};
  for (const FFMat& g : M.gens) {
    FFMat m(U.size(), U.size());
    for (std::size_t i = 0; i < U.size(); ++i) {
      FFVec c = U.coordinates(vec_mat(F, U.rows()[i], g));
      for (std::size_t j = 0; j < U.size(); ++j) m(i, j) = c[j];
    }
    S.gens.push_back(std::move(m));
  }
  return S;
}

FFModule quotient_module(const FFModule& M, const Echelon& U) {
  std::vector<bool> pivot(M.dim, false);
  for (auto c : U.pivots()) pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < M.dim; ++c)
    if (!pivot[c]) free.push_back(c);
  FFModule Q{M.field, {}, free.size()};
  for (const FFMat& g : M.gens) {
    FFMat m(free.size(), free.size());
    for (std::size_t i = 0; i < free.size(); ++i) {
      FFVec row(g.a.begin() + static_cast<std::ptrdiff_t>(free[i] * g.cols),
                g.a.begin() + static_cast<std::ptrdiff_t>((free[i] + 1) * g.cols));
      row = U.reduce(std::move(row));
      for (std::size_t j = 0; j < free.size(); ++j) m(i, j) = row[free[j]];
    }
    Q.gens.push_back(std::move(m));
  }
  return Q;
}

namespace {

SmallField::E random_element(const SmallField& F, std::mt19937_64& rng) {
  return static_cast<SmallField::E>(rng() % F.size());
}

FFMat minus_scalar(const SmallField& F, FFMat A, SmallField::E lambda) {
  for (std::size_t i = 0; i < A.rows; ++i) A(i, i) = F.sub(A(i, i), lambda);
  return A;
}

SmallField::E eval(const SmallField& F, const std::vector<SmallField::E>& poly, SmallField::E x) {
  SmallField::E acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = F.add(F.mul(acc, x), poly[i]);
  return acc;
}

}  // namespace

std::optional<Echelon> find_submodule(const FFModule& M, std::mt19937_64& rng, const MeatAxeOptions& opts) {
  const SmallField& F = *M.field;
  const std::size_t d = M.dim;
  if (d == 0) throw std::invalid_argument("find_submodule: zero module");
  if (d == 1) return std::nullopt;
  std::vector<FFMat> transposed;
  for (const FFMat& g : M.gens) transposed.push_back(transpose(g));

  // Pool of algebra elements grown by random products.
  std::vector<FFMat> pool = M.gens;
  if (pool.empty()) pool.push_back(FFMat::identity(d));
  for (std::size_t attempt = 0; attempt < opts.max_attempts; ++attempt) {
    const FFMat& x = pool[rng() % pool.size()];
    const FFMat& y = pool[rng() % pool.size()];
    FFMat xy = mat_mul(F, x, y);
    if (pool.size() < 10) pool.push_back(std::move(xy));
    else pool[rng() % pool.size()] = std::move(xy);

    FFMat A(d, d);
    for (const FFMat& t : pool) A = mat_add(F, A, mat_scale(F, t, random_element(F, rng)));

    auto poly = charpoly(F, A);
    std::optional<SmallField::E> best;
    std::size_t best_nullity = d + 1;
    for (std::uint32_t e = 0; e < F.size() && best_nullity > 1; ++e) {
      if (eval(F, poly, e) != 0) continue;
      std::size_t nullity = d - rank(F, minus_scalar(F, A, e));
      if (nullity < best_nullity) {
        best = e;
        best_nullity = nullity;
      }
    }
    if (!best) continue;
    FFMat B = minus_scalar(F, A, *best);

    FFMat left = left_nullspace(F, B);
    FFVec v(left.a.begin(), left.a.begin() + static_cast<std::ptrdiff_t>(d));
    Echelon U = spin(F, M.gens, {v});
    if (U.size() < d) return U;

    FFMat right = left_nullspace(F, transpose(B));
    FFVec w(right.a.begin(), right.a.begin() + static_cast<std::ptrdiff_t>(d));
    Echelon W = spin(F, transposed, {w});
    if (W.size() < d) {
      FFMat cols(W.size(), d);
      for (std::size_t i = 0; i < W.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) cols(i, j) = W.rows()[i][j];
      FFMat ann = left_nullspace(F, transpose(cols));
      Echelon out(F, d);
      for (std::size_t i = 0; i < ann.rows; ++i)
        out.insert(FFVec(ann.a.begin() + static_cast<std::ptrdiff_t>(i * d),
                         ann.a.begin() + static_cast<std::ptrdiff_t>((i + 1) * d)));
      return out;
    }
    if (best_nullity == 1) return std::nullopt;
  }
  throw ChopBudgetExceeded("find_submodule: no decision after " + std::to_string(opts.max_attempts) + " attempts");
}

std::vector<FFModule> composition_factors(const FFModule& M, std::mt19937_64& rng, const MeatAxeOptions& opts) {
  std::vector<FFModule> out;
  std::vector<FFModule> work{M};
  while (!work.empty()) {
    FFModule X = std::move(work.back());
    work.pop_back();
    auto U = find_submodule(X, rng, opts);
    if (!U) {
      out.push_back(std::move(X));
      continue;
    }
    work.push_back(quotient_module(X, *U));
    work.push_back(submodule(X, *U));
  }
  return out;
}

ElementMatrices::ElementMatrices(const PermGroup& G, const FFModule& M) : M_(M) {
  const auto& E = G.elements();
  const auto& gens = G.generators();
  if (gens.size() != M.gens.size()) throw std::invalid_argument("ElementMatrices: module does not match generators");
  std::vector<std::uint32_t> gen_index;
  for (const Perm& g : gens) gen_index.push_back(E.index_of(g));
  parent_.assign(E.size(), -2);
  via_.assign(E.size(), 0);
  std::uint32_t id = E.index_of(G.identity());
  parent_[id] = -1;
  std::deque<std::uint32_t> queue{id};
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (std::uint32_t s = 0; s < gen_index.size(); ++s) {
      auto y = E.mul(x, gen_index[s]);
      if (parent_[y] != -2) continue;
      parent_[y] = x;
      via_[y] = s;
      queue.push_back(y);
    }
  }
}

FFMat ElementMatrices::operator()(std::uint32_t element) const {
  std::vector<std::uint32_t> word;
  for (auto x = static_cast<std::int64_t>(element); parent_[static_cast<std::size_t>(x)] >= 0;
       x = parent_[static_cast<std::size_t>(x)])
    word.push_back(via_[static_cast<std::size_t>(x)]);
  FFMat m = FFMat::identity(M_.dim);
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = mat_mul(*M_.field, m, M_.gens[*it]);
  return m;
}

std::vector<Cyclotomic> brauer_character(const PermGroup& G, const FFModule& M,
                                         const std::vector<std::size_t>& classes, std::uint64_t m) {
  const SmallField& F = *M.field;
  const std::uint64_t q1 = F.size() - 1;
  if (q1 % m != 0) throw std::invalid_argument("brauer_character: m does not divide q - 1");
  const auto& K = G.classes();
  ElementMatrices mats(G, M);
  std::vector<Cyclotomic> out;
  for (auto c : classes) {
    const std::uint64_t o = K.element_order(c);
    if (m % o != 0) throw std::invalid_argument("brauer_character: class order does not divide m");
    FFMat g = mats(K.representative_index(c));
    Cyclotomic value;
    std::size_t total = 0;
    for (std::uint64_t k = 0; k < o; ++k) {
      auto lambda = F.power_of_generator(k * (q1 / o));
      std::size_t mult = M.dim - rank(F, minus_scalar(F, g, lambda));
      total += mult;
      if (mult) value += Cyclotomic::root_of_unity(static_cast<std::uint32_t>(m), static_cast<std::int64_t>(k * (m / o))) *
                         Rational(static_cast<std::int64_t>(mult));
    }
    if (total != M.dim) throw std::logic_error("brauer_character: matrix of a p-regular element is not diagonalizable");
    out.push_back(std::move(value));
  }
  return out;
}

SearchResult search_irreducibles(const PermGroup& G, std::shared_ptr<const SmallField> F, std::uint64_t m,
                                 const std::vector<std::size_t>& classes, std::size_t target,
                                 const std::function<bool(const std::vector<Cyclotomic>&)>& stop,
                                 std::mt19937_64& rng, const SearchOptions& opts) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  SearchResult out;
  auto& found = out.found;
  bool done = false;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> pending;  // (dim, i, j)
  auto trivial = [](const std::vector<Cyclotomic>& v) {
    return std::all_of(v.begin(), v.end(), [](const Cyclotomic& x) { return x == Cyclotomic(1); });
  };

  auto absorb = [&](const std::string& label, const FFModule& M) {
    std::ostringstream line;
    line << label << " dim " << M.dim << ":";
    std::vector<std::pair<std::vector<Cyclotomic>, std::size_t>> seen;
    for (auto& f : composition_factors(M, rng, opts.meataxe)) {
      auto values = brauer_character(G, f, classes, m);
      auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& s) { return s.first == values; });
      if (it != seen.end()) {
        ++it->second;
        continue;
      }
      seen.push_back({values, 1});
      bool known = std::any_of(found.begin(), found.end(), [&](const auto& b) { return b.values == values; });
      if (known || done) continue;
      found.push_back({std::move(values), std::move(f)});
      const std::size_t k = found.size() - 1;
      for (std::size_t j = 0; j <= k; ++j) {
        std::size_t d = found[k].module.dim * found[j].module.dim;
        if (!trivial(found[j].values) && !trivial(found[k].values) && d <= opts.max_dimension)
          pending.insert({d, j, k});
      }
      if (found.size() == target || (stop && stop(found.back().values))) done = true;
    }
    for (const auto& [values, mult] : seen) line << ' ' << values.front().to_string() << 'x' << mult;
    out.transcript.push_back(line.str());
  };
  auto out_of_time = [&] {
    return opts.budget_seconds > 0 && std::chrono::duration<double>(clock::now() - start).count() > opts.budget_seconds;
  };

  absorb("trivial", trivial_module(F, G));
  if (!done && G.degree() <= opts.max_dimension) absorb("natural", permutation_module(F, G));
  while (!done && !pending.empty() && !out_of_time()) {
    auto [d, i, j] = *pending.begin();
    pending.erase(pending.begin());
    absorb("tensor " + std::to_string(i) + "x" + std::to_string(j), tensor(found[i].module, found[j].module));
  }
  return out;
}

}  // namespace bb
