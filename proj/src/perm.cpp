#include "bb/perm.hpp"

#include <numeric>
#include <sstream>

namespace bb {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), point{0});
}

Perm::Perm(std::vector<point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (point x : images_) {
    if (x >= images_.size() || seen[x])
      throw MalformedPermutation("image array is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<point> img(degree);
  std::iota(img.begin(), img.end(), point{0});
  std::vector<bool> used(degree, false);
  std::vector<point> cycle;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw MalformedPermutation("bad cycle string '" + std::string(text) + "': " + why);
  };
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    cycle.clear();
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (start == i) fail("expected a point");
      unsigned long v = std::stoul(std::string(text.substr(start, i - start)));
      if (v < 1 || v > degree) fail("point out of range");
      point x = static_cast<point>(v - 1);
      if (used[x]) fail("point repeated");
      used[x] = true;
      cycle.push_back(x);
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    for (std::size_t c = 0; c < cycle.size(); ++c) img[cycle[c]] = cycle[(c + 1) % cycle.size()];
    skip_ws();
  }
  return Perm(std::move(img));
}

std::string Perm::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (point x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    any = true;
    out << '(' << x + 1;
    seen[x] = true;
    for (point y = images_[x]; y != x; y = images_[y]) {
      out << ',' << y + 1;
      seen[y] = true;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

bool Perm::is_identity() const {
  for (point x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (point x = 0; x < images_.size(); ++x) r.images_[images_[x]] = x;
  return r;
}

Perm Perm::pow(std::int64_t e) const {
  Perm base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Perm result(degree());
  while (n) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

std::uint64_t Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t ord = 1;
  for (point x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (point y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Perm Perm::conjugate_by(const Perm& g) const {
  // (g^-1 p g): x -> g(p(g^-1(x))); equivalently g(x) -> g(p(x)).
  Perm r;
  r.images_.resize(images_.size());
  for (point x = 0; x < images_.size(); ++x) r.images_[g.images_[x]] = g.images_[images_[x]];
  return r;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in product");
  Perm r;
  r.images_.resize(a.images_.size());
  for (Perm::point x = 0; x < a.images_.size(); ++x) r.images_[x] = b.images_[a.images_[x]];
  return r;
}

std::size_t Perm::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (point x : images_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Perm commutator(const Perm& a, const Perm& b) { return a.inverse() * b.inverse() * a * b; }

}  // namespace bb
