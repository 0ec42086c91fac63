#include "lowdeg/spectrum.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace lowdeg {

namespace {

template <typename Map>
double pnorm_of(const Map& m, double p) {
  if (p < 1.0) throw std::invalid_argument("pnorm: p must be >= 1");
  double acc = 0.0;
  for (const auto& [k, c] : m) acc += std::pow(std::abs(c), p);
  return std::pow(acc, 1.0 / p);
}

template <typename Map>
double l2sq_of(const Map& m) {
  double acc = 0.0;
  for (const auto& [k, c] : m) acc += std::norm(c);
  return acc;
}

}  // namespace

void OperatorSpectrum::set(const PauliString& x, cplx c) {
  if (x.n() != n_) throw std::invalid_argument("OperatorSpectrum: word length");
  degree_cache_.reset();
  if (std::abs(c) < kZeroTol) {
    coeffs_.erase(x);
  } else {
    coeffs_[x] = c;
  }
}

cplx OperatorSpectrum::at(const PauliString& x) const {
  auto it = coeffs_.find(x);
  return it == coeffs_.end() ? cplx(0.0) : it->second;
}

int OperatorSpectrum::degree() const {
  if (!degree_cache_) {
    int d = 0;
    for (const auto& [k, c] : coeffs_) d = std::max(d, k.weight());
    degree_cache_ = d;
  }
  return *degree_cache_;
}

double OperatorSpectrum::pnorm(double p) const { return pnorm_of(coeffs_, p); }
double OperatorSpectrum::l2sq() const { return l2sq_of(coeffs_); }

void SuperopSpectrum::set(const PauliString& x, const PauliString& y, cplx c) {
  if (x.n() != n_ || y.n() != n_) {
    throw std::invalid_argument("SuperopSpectrum: word length");
  }
  degree_cache_.reset();
  Key k{x, y};
  if (std::abs(c) < kZeroTol) {
    coeffs_.erase(k);
  } else {
    coeffs_[k] = c;
  }
}

cplx SuperopSpectrum::at(const PauliString& x, const PauliString& y) const {
  auto it = coeffs_.find(Key{x, y});
  return it == coeffs_.end() ? cplx(0.0) : it->second;
}

int SuperopSpectrum::degree() const {
  if (!degree_cache_) {
    int d = 0;
    for (const auto& [k, c] : coeffs_) {
      d = std::max(d, k.first.weight() + k.second.weight());
    }
    degree_cache_ = d;
  }
  return *degree_cache_;
}

double SuperopSpectrum::pnorm(double p) const { return pnorm_of(coeffs_, p); }
double SuperopSpectrum::l2sq() const { return l2sq_of(coeffs_); }

double SuperopSpectrum::diag_sum() const {
  double acc = 0.0;
  for (const auto& [k, c] : coeffs_) {
    if (k.first == k.second) acc += c.real();
  }
  return acc;
}

bool SuperopSpectrum::check_channel(double tol, double* min_eig) const {
  // Collect every word appearing as either key component; the coefficient
  // matrix restricted to that index set carries all non-zero entries.
  std::vector<PauliString> words;
  for (const auto& [k, c] : coeffs_) {
    words.push_back(k.first);
    words.push_back(k.second);
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  const int m = static_cast<int>(words.size());
  Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) G(i, j) = at(words[i], words[j]);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G, Eigen::EigenvaluesOnly);
  double lo = m == 0 ? 0.0 : es.eigenvalues().minCoeff();
  if (min_eig) *min_eig = lo;
  double herm_defect = (G - G.adjoint()).cwiseAbs().maxCoeff();
  return lo >= -tol && std::abs(diag_sum() - 1.0) <= tol && herm_defect <= tol;
}

bool SuperopSpectrum::is_diagonal() const {
  for (const auto& [k, c] : coeffs_) {
    if (!(k.first == k.second)) return false;
  }
  return true;
}

void BooleanSpectrum::set(const BitString& s, double c) {
  if (s.n() != n_) throw std::invalid_argument("BooleanSpectrum: word length");
  if (std::abs(c) < kZeroTol) {
    coeffs_.erase(s);
  } else {
    coeffs_[s] = c;
  }
}

double BooleanSpectrum::at(const BitString& s) const {
  auto it = coeffs_.find(s);
  return it == coeffs_.end() ? 0.0 : it->second;
}

int BooleanSpectrum::degree() const {
  int d = 0;
  for (const auto& [k, c] : coeffs_) d = std::max(d, k.weight());
  return d;
}

double BooleanSpectrum::pnorm(double p) const { return pnorm_of(coeffs_, p); }
double BooleanSpectrum::l2sq() const { return l2sq_of(coeffs_); }

double BooleanSpectrum::evaluate(const BitString& signs) const {
  double acc = 0.0;
  for (const auto& [s, c] : coeffs_) {
    int par = std::popcount(s.index() & signs.index()) & 1;
    acc += par ? -c : c;
  }
  return acc;
}

bool BooleanSpectrum::is_granular(int d, double tol) const {
  const double grid = std::ldexp(1.0, 1 - d);  // 2^{1-d}
  for (const auto& [s, c] : coeffs_) {
    double q = c / grid;
    if (std::abs(q - std::round(q)) > tol / grid) return false;
  }
  return true;
}

void CubeSpectrum::set(const BitString& s, cplx c) {
  if (s.n() != n_) throw std::invalid_argument("CubeSpectrum: word length");
  if (std::abs(c) < kZeroTol) {
    coeffs_.erase(s);
  } else {
    coeffs_[s] = c;
  }
}

cplx CubeSpectrum::at(const BitString& s) const {
  auto it = coeffs_.find(s);
  return it == coeffs_.end() ? cplx(0.0) : it->second;
}

int CubeSpectrum::degree() const {
  int d = 0;
  for (const auto& [k, c] : coeffs_) d = std::max(d, k.weight());
  return d;
}

double CubeSpectrum::pnorm(double p) const { return pnorm_of(coeffs_, p); }
double CubeSpectrum::l2sq() const { return l2sq_of(coeffs_); }

cplx CubeSpectrum::evaluate(const BitString& signs) const {
  cplx acc = 0.0;
  for (const auto& [s, c] : coeffs_) {
    int par = std::popcount(s.index() & signs.index()) & 1;
    acc += par ? -c : c;
  }
  return acc;
}

}  // namespace lowdeg
