#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cgt {

// Raised when a computation exceeds a configured capacity bound (group order,
// degree, search nodes, enumeration size).  Carries the phase that hit the
// bound so callers can report it.
class capacity_error : public std::runtime_error {
 public:
  capacity_error(std::string phase, const std::string& what)
      : std::runtime_error(phase + ": " + what), phase_(std::move(phase)) {}
  const std::string& phase() const { return phase_; }

 private:
  std::string phase_;
};

// Domain errors: malformed input, violated preconditions.
class group_error : public std::runtime_error {
 public:
  group_error(std::string phase, const std::string& what)
      : std::runtime_error(phase + ": " + what), phase_(std::move(phase)) {}
  const std::string& phase() const { return phase_; }

 private:
  std::string phase_;
};

struct Limits {
  // Deterministic Schreier-Sims is refused beyond these bounds.
  std::uint64_t max_order = 1'000'000'000;
  int max_degree = 10'000;
  // Backtrack searches (normalizer, centralizer, conjugacy) count visited
  // nodes against this budget.
  std::uint64_t backtrack_nodes = 100'000'000;
  // Full nilpotent-subgroup enumeration; the larger bound applies when
  // fingerprint-gated conjugacy dedup is in effect.
  std::uint64_t enum_order = 10'000;
  std::uint64_t enum_order_fingerprint = 100'000;
  // Explicit element listings (quotient element maps, coset tables).
  std::uint64_t element_list = 200'000;
  int quotient_degree_cap = 10'000;
};

// splitmix64; hand-rolled so sampled runs replay identically across
// platforms and standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) {
    // rejection sampling keeps the distribution exactly uniform
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

 private:
  std::uint64_t state_;
};

struct Engine {
  Limits limits;
  std::uint64_t seed = 0;
  int threads = 1;

  static const Engine& defaults() {
    static const Engine e{};
    return e;
  }
};

}  // namespace cgt
