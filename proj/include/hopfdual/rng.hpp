#pragma once

#include <cstdint>
#include <random>

namespace hopfdual {

/// Fixed-seed generator. Draws are reduced with a plain modulus so the
/// sequence does not depend on the standard library's distributions.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next() { return engine_(); }
  /// Uniform-ish value in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  /// Value in [lo, hi].
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace hopfdual
