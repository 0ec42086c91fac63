#include "lowdeg/tensor.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "lowdeg/transforms.hpp"

namespace lowdeg {

namespace {
size_t ipow(size_t base, int exp) {
  size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}
}  // namespace

MultilinearTensor::MultilinearTensor(int arity, int side, bool real_field)
    : arity_(arity), side_(side), real_field_(real_field) {
  if (arity < 1 || side < 1) throw std::invalid_argument("tensor shape");
  entries_.assign(ipow(static_cast<size_t>(side), arity), cplx(0.0));
}

size_t MultilinearTensor::flatten(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != arity_) {
    throw std::invalid_argument("tensor index arity");
  }
  size_t flat = 0;
  for (int t = 0; t < arity_; ++t) {
    if (idx[t] < 0 || idx[t] >= side_) throw std::invalid_argument("tensor index");
    flat = flat * static_cast<size_t>(side_) + static_cast<size_t>(idx[t]);
  }
  return flat;
}

std::vector<int> MultilinearTensor::unflatten(size_t flat) const {
  std::vector<int> idx(static_cast<size_t>(arity_));
  for (int t = arity_ - 1; t >= 0; --t) {
    idx[static_cast<size_t>(t)] = static_cast<int>(flat % side_);
    flat /= static_cast<size_t>(side_);
  }
  return idx;
}

cplx MultilinearTensor::at(std::span<const int> idx) const {
  return entries_[flatten(idx)];
}

void MultilinearTensor::set(std::span<const int> idx, cplx value) {
  set_flat(flatten(idx), value);
}

void MultilinearTensor::set_flat(size_t flat, cplx value) {
  if (real_field_ && std::abs(value.imag()) > kZeroTol) real_field_ = false;
  entries_[flat] = value;
}

cplx MultilinearTensor::evaluate(std::span<const uint32_t> blocks) const {
  if (static_cast<int>(blocks.size()) != arity_) {
    throw std::invalid_argument("evaluate: block count");
  }
  cplx acc = 0.0;
  for (size_t flat = 0; flat < entries_.size(); ++flat) {
    if (entries_[flat] == cplx(0.0)) continue;
    size_t rem = flat;
    int sign = 0;
    for (int t = arity_ - 1; t >= 0; --t) {
      int i = static_cast<int>(rem % side_);
      rem /= static_cast<size_t>(side_);
      sign ^= (blocks[static_cast<size_t>(t)] >> i) & 1u;
    }
    acc += sign ? -entries_[flat] : entries_[flat];
  }
  return acc;
}

double MultilinearTensor::pnorm(double p) const {
  if (p < 1.0) throw std::invalid_argument("pnorm: p must be >= 1");
  double acc = 0.0;
  for (const cplx& c : entries_) acc += std::pow(std::abs(c), p);
  return std::pow(acc, 1.0 / p);
}

double MultilinearTensor::l2sq() const {
  double acc = 0.0;
  for (const cplx& c : entries_) acc += std::norm(c);
  return acc;
}

double MultilinearTensor::slice_norm(int slot, int index) const {
  if (slot < 0 || slot >= arity_ || index < 0 || index >= side_) {
    throw std::invalid_argument("slice_norm");
  }
  double acc = 0.0;
  for (size_t flat = 0; flat < entries_.size(); ++flat) {
    size_t rem = flat;
    for (int t = arity_ - 1; t > slot; --t) rem /= static_cast<size_t>(side_);
    if (static_cast<int>(rem % side_) == index) acc += std::norm(entries_[flat]);
  }
  return std::sqrt(acc);
}

MultilinearTensor MultilinearTensor::scaled(cplx factor) const {
  MultilinearTensor out = *this;
  for (auto& e : out.entries_) e *= factor;
  if (std::abs(factor.imag()) > kZeroTol) out.real_field_ = false;
  return out;
}

double sup_norm_bruteforce(const MultilinearTensor& t, int64_t eval_cap) {
  const int bits = t.arity() * t.side();
  if (bits >= 63 || (int64_t{1} << bits) > eval_cap) {
    throw std::invalid_argument("sup_norm_bruteforce: enumeration above cap");
  }
  const uint64_t total = uint64_t{1} << bits;
  std::vector<uint32_t> blocks(static_cast<size_t>(t.arity()));
  double best = 0.0;
  for (uint64_t a = 0; a < total; ++a) {
    uint64_t rem = a;
    for (int s = 0; s < t.arity(); ++s) {
      blocks[static_cast<size_t>(s)] =
          static_cast<uint32_t>(rem & ((uint64_t{1} << t.side()) - 1));
      rem >>= t.side();
    }
    best = std::max(best, std::abs(t.evaluate(blocks)));
  }
  return best;
}

double sup_norm_bruteforce(const BooleanSpectrum& f, int64_t eval_cap) {
  if (f.n() >= 63 || (int64_t{1} << f.n()) > eval_cap) {
    throw std::invalid_argument("sup_norm_bruteforce: enumeration above cap");
  }
  std::vector<double> table = boolean_synth(f);
  double best = 0.0;
  for (double v : table) best = std::max(best, std::abs(v));
  return best;
}

}  // namespace lowdeg
