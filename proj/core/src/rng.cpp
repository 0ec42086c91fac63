#include "lowdeg/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace lowdeg {

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

uint64_t hash_tag(std::string_view tag) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (char c : tag) {
    h ^= static_cast<uint8_t>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

uint64_t mix_seed(uint64_t seed, uint64_t salt) {
  uint64_t s = seed ^ (salt + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
  return splitmix64(s);
}

RngStream::RngStream(uint64_t seed) : seed_(seed), eng_(mix_seed(seed, 0x6c077deadbeef01ull)) {}

RngStream RngStream::split(std::string_view tag) const {
  return RngStream(mix_seed(seed_, hash_tag(tag)));
}

RngStream RngStream::split(uint64_t index) const {
  return RngStream(mix_seed(seed_, 0x5bd1e995u + index));
}

uint64_t RngStream::next_u64() { return eng_(); }

double RngStream::uniform() {
  // 53-bit mantissa draw, uniform on [0,1)
  return double(eng_() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
  std::normal_distribution<double> d(0.0, 1.0);
  return d(eng_);
}

bool RngStream::bernoulli(double p) { return uniform() < p; }

int64_t RngStream::binomial(int64_t trials, double p) {
  if (trials < 0) throw std::invalid_argument("binomial: negative trials");
  if (p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  std::binomial_distribution<int64_t> d(trials, p);
  return d(eng_);
}

size_t RngStream::categorical(std::span<const double> cum) {
  if (cum.empty()) throw std::invalid_argument("categorical: empty support");
  double u = uniform() * cum.back();
  auto it = std::upper_bound(cum.begin(), cum.end(), u);
  if (it == cum.end()) --it;
  return static_cast<size_t>(it - cum.begin());
}

uint64_t RngStream::uniform_int(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_int: empty range");
  // rejection sampling to avoid modulo bias
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t v;
  do {
    v = eng_();
  } while (v >= limit);
  return v % bound;
}

}  // namespace lowdeg
