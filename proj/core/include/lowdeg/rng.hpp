#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace lowdeg {

uint64_t splitmix64(uint64_t& state);
uint64_t hash_tag(std::string_view tag);              // FNV-1a
uint64_t mix_seed(uint64_t seed, uint64_t salt);

/// A named, seedable random stream. Child streams derive from the parent
/// seed and a tag, not from the engine state, so splitting commutes with
/// drawing and independent streams can run in parallel.
class RngStream {
 public:
  explicit RngStream(uint64_t seed);

  uint64_t seed() const { return seed_; }
  RngStream split(std::string_view tag) const;
  RngStream split(uint64_t index) const;

  uint64_t next_u64();
  double uniform();                  // [0, 1)
  double normal();
  bool bernoulli(double p);
  int64_t binomial(int64_t trials, double p);
  /// Index drawn from the distribution whose cumulative sums are `cum`
  /// (non-decreasing, last entry ~1); inverse-CDF, deterministic.
  size_t categorical(std::span<const double> cum);
  uint64_t uniform_int(uint64_t bound);  // [0, bound)

  std::mt19937_64& engine() { return eng_; }

 private:
  uint64_t seed_;
  std::mt19937_64 eng_;
};

}  // namespace lowdeg
