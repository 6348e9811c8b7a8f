#include "cgt/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cgt/engine.hpp"

namespace cgt {

Permutation::Permutation(int degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw group_error("permutation", "image list is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  if (degree < 0) throw group_error("permutation", "negative degree");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (int p : cyc) {
      if (p < 0 || p >= degree)
        throw group_error("permutation", "cycle point " + std::to_string(p) + " out of range for degree " +
                                             std::to_string(degree));
      if (used[p])
        throw group_error("permutation", "point " + std::to_string(p) + " repeated in cycle list");
      used[p] = true;
    }
    for (std::size_t i = 0; i + 1 < cyc.size(); ++i) img[cyc[i]] = cyc[i + 1];
    if (cyc.size() > 1) img[cyc.back()] = cyc.front();
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 0; i < degree(); ++i) img[images_[i]] = i;
  Permutation r;
  r.images_ = std::move(img);
  return r;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw group_error("permutation", "degree mismatch in composition: " + std::to_string(p.degree()) + " vs " +
                                         std::to_string(q.degree()));
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[i] = q.images_[p.images_[i]];
  Permutation r;
  r.images_ = std::move(img);
  return r;
}

Permutation Permutation::conjugated_by(const Permutation& x) const {
  if (degree() != x.degree()) throw group_error("permutation", "degree mismatch in conjugation");
  // (x^-1 * p * x)[x[i]] = x[p[i]]
  std::vector<int> img(images_.size());
  for (int i = 0; i < degree(); ++i) img[x.images_[i]] = x.images_[images_[i]];
  Permutation r;
  r.images_ = std::move(img);
  return r;
}

Permutation Permutation::power(std::int64_t k) const {
  std::uint64_t n = order();
  std::int64_t m = k % static_cast<std::int64_t>(n);
  if (m < 0) m += static_cast<std::int64_t>(n);
  Permutation acc(degree());
  Permutation base = *this;
  std::uint64_t e = static_cast<std::uint64_t>(m);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = images_[j];
      ++len;
    }
    std::uint64_t g = std::gcd(result, len);
    if (result / g > ~std::uint64_t{0} / len)
      throw capacity_error("permutation", "element order overflows 64 bits");
    result = result / g * len;
  }
  return result;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = true;
      continue;
    }
    std::vector<int> cyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(j);
      j = images_[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cyc : cs) {
    os << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << ' ';
      os << cyc[i];
    }
    os << ')';
  }
  return os.str();
}

std::size_t Permutation::hash() const {
  // FNV-1a over the image words
  std::uint64_t h = 1469598103934665603ULL;
  for (int v : images_) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

}  // namespace cgt
