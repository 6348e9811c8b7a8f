#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cgt {

// A bijection on {0..n-1}.  Composition is left-to-right throughout the
// library: (p * q) means "apply p, then q", so (p * q)[x] == q[p[x]].
// Conjugation p^x = x^-1 * p * x follows the same convention; points
// transform as x^g = g[x].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity
  explicit Permutation(std::vector<int> images);

  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation conjugated_by(const Permutation& x) const;  // x^-1 * (*this) * x
  Permutation power(std::int64_t k) const;
  std::uint64_t order() const;  // lcm of cycle lengths

  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles, least point first
  std::string to_cycle_string() const;           // "(0 1 2)(3 4)", "()" for identity

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return images_ != o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

  std::size_t hash() const;

 private:
  std::vector<int> images_;
};

struct PermHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

// Commutator a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

}  // namespace cgt
