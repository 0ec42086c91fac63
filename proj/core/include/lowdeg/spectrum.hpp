#pragma once

#include <complex>
#include <map>
#include <optional>
#include <utility>

#include "lowdeg/pauli.hpp"

namespace lowdeg {

using cplx = std::complex<double>;

/// Coefficients with modulus below this are dropped on insertion so that
/// sparse maps stay canonical and equality tests are meaningful.
inline constexpr double kZeroTol = 1e-12;

enum class ChannelFlag { Yes, No, Unknown };

/// Sparse Pauli spectrum of an operator: word -> complex coefficient.
class OperatorSpectrum {
 public:
  using Map = std::map<PauliString, cplx>;

  OperatorSpectrum() = default;
  explicit OperatorSpectrum(int n) : n_(n) {}

  int n() const { return n_; }
  const Map& coeffs() const { return coeffs_; }
  size_t size() const { return coeffs_.size(); }

  void set(const PauliString& x, cplx c);
  cplx at(const PauliString& x) const;

  /// Largest weight carrying a non-zero coefficient (0 for the empty map).
  int degree() const;
  double pnorm(double p) const;
  double l2sq() const;

  bool operator==(const OperatorSpectrum&) const = default;

 private:
  int n_ = 0;
  Map coeffs_;
  mutable std::optional<int> degree_cache_;
};

/// Sparse Pauli spectrum of a superoperator: (word, word) -> complex.
class SuperopSpectrum {
 public:
  using Key = std::pair<PauliString, PauliString>;
  using Map = std::map<Key, cplx>;

  SuperopSpectrum() = default;
  explicit SuperopSpectrum(int n, ChannelFlag flag = ChannelFlag::Unknown)
      : n_(n), flag_(flag) {}

  int n() const { return n_; }
  ChannelFlag channel_flag() const { return flag_; }
  void set_channel_flag(ChannelFlag f) { flag_ = f; }
  const Map& coeffs() const { return coeffs_; }
  size_t size() const { return coeffs_.size(); }

  void set(const PauliString& x, const PauliString& y, cplx c);
  cplx at(const PauliString& x, const PauliString& y) const;

  /// Largest |x|+|y| carrying a non-zero coefficient.
  int degree() const;
  double pnorm(double p) const;
  double l2sq() const;

  /// Sum of diagonal coefficients; 1 for a channel.
  double diag_sum() const;

  /// Channel sanity: the coefficient matrix restricted to the stored x-keys
  /// must be positive semidefinite (eigenvalue floor >= -tol) with unit
  /// trace within tol. Returns the smallest eigenvalue found.
  bool check_channel(double tol, double* min_eig = nullptr) const;

  bool is_diagonal() const;

  bool operator==(const SuperopSpectrum&) const = default;

 private:
  int n_ = 0;
  ChannelFlag flag_ = ChannelFlag::Unknown;
  Map coeffs_;
  mutable std::optional<int> degree_cache_;
};

/// Sparse real Fourier spectrum of a function on the Boolean cube.
class BooleanSpectrum {
 public:
  using Map = std::map<BitString, double>;

  BooleanSpectrum() = default;
  explicit BooleanSpectrum(int n) : n_(n) {}

  int n() const { return n_; }
  const Map& coeffs() const { return coeffs_; }
  size_t size() const { return coeffs_.size(); }

  void set(const BitString& s, double c);
  double at(const BitString& s) const;

  int degree() const;
  double pnorm(double p) const;
  double l2sq() const;

  /// Evaluate at the assignment whose sign pattern is given by `signs`
  /// (bit j set means variable j takes the value -1).
  double evaluate(const BitString& signs) const;

  /// True when every coefficient lies within tol of the grid 2^{1-d} * Z.
  bool is_granular(int d, double tol = 1e-9) const;

  bool operator==(const BooleanSpectrum&) const = default;

 private:
  int n_ = 0;
  Map coeffs_;
};

/// Complex-coefficient spectrum on the cube; the coefficient table of a
/// complex-valued function such as the superoperator reduction f_Phi.
class CubeSpectrum {
 public:
  using Map = std::map<BitString, cplx>;

  CubeSpectrum() = default;
  explicit CubeSpectrum(int n) : n_(n) {}

  int n() const { return n_; }
  const Map& coeffs() const { return coeffs_; }
  size_t size() const { return coeffs_.size(); }

  void set(const BitString& s, cplx c);
  cplx at(const BitString& s) const;

  int degree() const;
  double pnorm(double p) const;
  double l2sq() const;
  cplx evaluate(const BitString& signs) const;

  bool operator==(const CubeSpectrum&) const = default;

 private:
  int n_ = 0;
  Map coeffs_;
};

}  // namespace lowdeg
