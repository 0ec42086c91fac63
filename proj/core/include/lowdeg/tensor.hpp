#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "lowdeg/spectrum.hpp"

namespace lowdeg {

/// Dense coefficient table of a d-linear form on ({-1,1}^n)^d (or (C^n)^d):
/// entries indexed by [n]^d in row-major order, slot 0 varying slowest.
class MultilinearTensor {
 public:
  MultilinearTensor() = default;
  MultilinearTensor(int arity, int side, bool real_field = true);

  int arity() const { return arity_; }
  int side() const { return side_; }
  bool real_field() const { return real_field_; }
  size_t entry_count() const { return entries_.size(); }

  cplx at(std::span<const int> idx) const;
  void set(std::span<const int> idx, cplx value);
  cplx at_flat(size_t flat) const { return entries_[flat]; }
  void set_flat(size_t flat, cplx value);

  size_t flatten(std::span<const int> idx) const;
  std::vector<int> unflatten(size_t flat) const;

  /// T(x_1,...,x_d) at the point whose sign pattern per block is given by
  /// `blocks` (bit i of blocks[t] set means x_t(i) = -1).
  cplx evaluate(std::span<const uint32_t> blocks) const;

  double pnorm(double p) const;
  double l2sq() const;
  /// sqrt of the squared-coefficient sum over the slice slot=index.
  double slice_norm(int slot, int index) const;

  MultilinearTensor scaled(cplx factor) const;

 private:
  int arity_ = 0;
  int side_ = 0;
  bool real_field_ = true;
  std::vector<cplx> entries_;
};

/// Exact maximum of |T(x)| over all sign assignments. Throws when the
/// enumeration 2^{n d} exceeds `eval_cap`.
double sup_norm_bruteforce(const MultilinearTensor& t, int64_t eval_cap = (1 << 22));

/// Same for a real cube function given by its sparse spectrum (2^n points).
double sup_norm_bruteforce(const BooleanSpectrum& f, int64_t eval_cap = (1 << 22));

}  // namespace lowdeg
