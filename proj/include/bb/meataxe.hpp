#pragma once
// Modules for permutation groups over small finite fields: spinning,
// Norton's irreducibility test with linear factors, composition factors,
// and Brauer characters read off eigenspaces.

#include <functional>
#include <memory>
#include <string>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "bb/cyclotomic.hpp"
#include "bb/ffield.hpp"
#include "bb/perm_group.hpp"

namespace bb {

struct ChopBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Row vectors acted on from the right, one matrix per generator of the
/// group the module belongs to (in the group's generator order).
struct FFModule {
  std::shared_ptr<const SmallField> field;
  std::vector<FFMat> gens;
  std::size_t dim = 0;
};

FFModule trivial_module(std::shared_ptr<const SmallField> F, const PermGroup& G);
/// The natural permutation module on the G.degree() points: e_i g = e_{i^g}.
FFModule permutation_module(std::shared_ptr<const SmallField> F, const PermGroup& G);
FFModule tensor(const FFModule& a, const FFModule& b);

/// Semi-echelon basis: each row has a pivot entry 1 at a column where all
/// later rows vanish.
class Echelon {
public:
  Echelon(const SmallField& F, std::size_t dim) : F_(&F), dim_(dim) {}

  std::size_t size() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<FFVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection along the pivots; zero iff v is in the span.
  FFVec reduce(FFVec v) const;
  /// Coordinates of v in the basis; v must be in the span.
  FFVec coordinates(FFVec v) const;
  bool insert(FFVec v);

private:
  const SmallField* F_;
  std::size_t dim_;
  std::vector<FFVec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Smallest subspace containing the seeds and closed under the matrices.
Echelon spin(const SmallField& F, const std::vector<FFMat>& gens, const std::vector<FFVec>& seeds);

/// Actions on a proper nonzero submodule and on the quotient by it.
FFModule submodule(const FFModule& M, const Echelon& U);
FFModule quotient_module(const FFModule& M, const Echelon& U);

struct MeatAxeOptions {
  std::size_t max_attempts = 400;
};

/// A proper nonzero submodule, or nullopt if M is absolutely irreducible.
/// Throws ChopBudgetExceeded when no decision is reached.
std::optional<Echelon> find_submodule(const FFModule& M, std::mt19937_64& rng, const MeatAxeOptions& opts = {});

/// Composition factors with repetition, each absolutely irreducible.
std::vector<FFModule> composition_factors(const FFModule& M, std::mt19937_64& rng, const MeatAxeOptions& opts = {});

/// Matrices of arbitrary group elements, built along a breadth-first
/// spanning tree of the Cayley graph.
class ElementMatrices {
public:
  ElementMatrices(const PermGroup& G, const FFModule& M);
  FFMat operator()(std::uint32_t element) const;

private:
  FFModule M_;
  std::vector<std::int64_t> parent_;     // -1 at the identity
  std::vector<std::uint32_t> via_;       // generator index
};

/// Brauer character of M on the given p-regular classes of G, lifted
/// through ζ_m ↦ x^{(q-1)/m} where q = |F| and m is a multiple of every
/// class element order dividing q - 1.
std::vector<Cyclotomic> brauer_character(const PermGroup& G, const FFModule& M,
                                         const std::vector<std::size_t>& classes, std::uint64_t m);

struct SearchOptions {
  std::size_t max_dimension = 256;
  double budget_seconds = 0;  // 0: unlimited
  MeatAxeOptions meataxe;
};

struct SearchResult {
  struct Found {
    std::vector<Cyclotomic> values;
    FFModule module;
  };
  std::vector<Found> found;  // distinct Brauer characters in discovery order
  std::vector<std::string> transcript;
};

/// Irreducible modules of G over F found by chopping the trivial module,
/// the natural permutation module, and tensor products of constituents
/// found so far (smallest product first).  Stops once `target` characters
/// are known, `stop` accepts a new one, or the sources run out.
SearchResult search_irreducibles(const PermGroup& G, std::shared_ptr<const SmallField> F, std::uint64_t m,
                                 const std::vector<std::size_t>& classes, std::size_t target,
                                 const std::function<bool(const std::vector<Cyclotomic>&)>& stop,
                                 std::mt19937_64& rng, const SearchOptions& opts = {});

}  // namespace bb
