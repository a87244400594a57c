#pragma once
// Brute-force reference computations used only by the test suites.  They
// work directly on element sets and never touch stabilizer chains.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "bb/perm.hpp"

namespace oracle {

inline std::set<bb::Perm> closure(const std::vector<bb::Perm>& gens, std::size_t degree) {
  std::set<bb::Perm> seen{bb::Perm::identity(degree)};
  std::vector<bb::Perm> frontier{bb::Perm::identity(degree)};
  while (!frontier.empty()) {
    std::vector<bb::Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        bb::Perm y = x * g;
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

/// Conjugacy class sizes by full conjugation, sorted.
inline std::vector<std::size_t> class_sizes(const std::set<bb::Perm>& G) {
  std::set<bb::Perm> done;
  std::vector<std::size_t> sizes;
  for (const auto& x : G) {
    if (done.count(x)) continue;
    std::set<bb::Perm> cls;
    for (const auto& g : G) cls.insert(x.conjugate_by(g));
    done.insert(cls.begin(), cls.end());
    sizes.push_back(cls.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

inline std::size_t exponent(const std::set<bb::Perm>& G) {
  std::size_t e = 1;
  for (const auto& x : G) e = std::lcm(e, static_cast<std::size_t>(x.order()));
  return e;
}

}  // namespace oracle
