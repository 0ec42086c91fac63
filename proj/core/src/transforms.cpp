#include "lowdeg/transforms.hpp"

#include <cmath>
#include <stdexcept>

namespace lowdeg {

namespace {

void check_dense_cap(int n, int cap, const char* what) {
  if (n > cap) {
    throw std::invalid_argument(std::string(what) + ": " + std::to_string(n) +
                                " sites exceeds the dense cap of " +
                                std::to_string(cap));
  }
}

template <typename T>
void wht_butterfly(std::span<T> data) {
  const size_t len = data.size();
  if (len == 0 || (len & (len - 1)) != 0) {
    throw std::invalid_argument("table length is not a power of 2");
  }
  for (size_t h = 1; h < len; h <<= 1) {
    for (size_t i = 0; i < len; i += h << 1) {
      for (size_t j = i; j < i + h; ++j) {
        T a = data[j];
        T b = data[j + h];
        data[j] = a + b;
        data[j + h] = a - b;
      }
    }
  }
}

}  // namespace

void wht_inplace(std::span<double> data) { wht_butterfly(data); }
void wht_inplace(std::span<cplx> data) { wht_butterfly(data); }

OperatorSpectrum spectrum_of_operator(const DenseOperator& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("operator not square");
  const int n = sites_of_dimension(M.rows());
  check_dense_cap(n, dense_caps().operator_sites, "spectrum_of_operator");
  const size_t dim = size_t{1} << n;
  OperatorSpectrum spec(n);
  std::vector<size_t> perm;
  std::vector<cplx> phase;
  const uint64_t words = uint64_t{1} << (2 * n);
  for (uint64_t w = 0; w < words; ++w) {
    PauliString x(n, w);
    pauli_action(x, perm, phase);
    // Tr[sigma_x M] = sum_j phase(j) M(j, perm(j))
    cplx tr = 0.0;
    for (size_t j = 0; j < dim; ++j) {
      tr += phase[j] * M(static_cast<Eigen::Index>(j),
                         static_cast<Eigen::Index>(perm[j]));
    }
    spec.set(x, tr / double(dim));
  }
  return spec;
}

DenseOperator synth_operator(const OperatorSpectrum& spec) {
  const int n = spec.n();
  check_dense_cap(n, dense_caps().operator_sites, "synth_operator");
  const size_t dim = size_t{1} << n;
  DenseOperator M = DenseOperator::Zero(dim, dim);
  std::vector<size_t> perm;
  std::vector<cplx> phase;
  for (const auto& [x, c] : spec.coeffs()) {
    pauli_action(x, perm, phase);
    for (size_t j = 0; j < dim; ++j) {
      M(static_cast<Eigen::Index>(perm[j]), static_cast<Eigen::Index>(j)) +=
          c * phase[j];
    }
  }
  return M;
}

DenseState choi_state_of_pauli(const PauliString& x) {
  const int n = x.n();
  const size_t dim = size_t{1} << n;
  std::vector<size_t> perm;
  std::vector<cplx> phase;
  pauli_action(x, perm, phase);
  DenseState v = DenseState::Zero(static_cast<Eigen::Index>(dim * dim));
  const double norm = 1.0 / std::sqrt(double(dim));
  for (size_t i = 0; i < dim; ++i) {
    v(static_cast<Eigen::Index>(perm[i] * dim + i)) = phase[i] * norm;
  }
  return v;
}

DenseState choi_state_of_unitary(const DenseOperator& U) {
  if (!is_unitary(U, 1e-9)) {
    throw std::invalid_argument("choi_state_of_unitary: input is not unitary");
  }
  const int n = sites_of_dimension(U.rows());
  const size_t dim = size_t{1} << n;
  DenseState v = DenseState::Zero(static_cast<Eigen::Index>(dim * dim));
  const double norm = 1.0 / std::sqrt(double(dim));
  for (size_t i = 0; i < dim; ++i) {    // column i of U lands on |.,i>
    for (size_t r = 0; r < dim; ++r) {
      v(static_cast<Eigen::Index>(r * dim + i)) =
          U(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i)) * norm;
    }
  }
  return v;
}

SuperopSpectrum spectrum_of_kraus(std::span<const DenseOperator> kraus,
                                  bool expect_channel, double tol) {
  if (kraus.empty()) throw std::invalid_argument("empty Kraus list");
  const int n = sites_of_dimension(kraus[0].rows());
  check_dense_cap(n, dense_caps().superop_sites, "spectrum_of_kraus");
  const Eigen::Index dim = kraus[0].rows();
  DenseOperator comp = DenseOperator::Zero(dim, dim);
  for (const auto& A : kraus) {
    if (A.rows() != dim || A.cols() != dim) {
      throw std::invalid_argument("Kraus operators of mixed dimension");
    }
    comp += A.adjoint() * A;
  }
  const bool tp = (comp - DenseOperator::Identity(dim, dim)).cwiseAbs().maxCoeff() <= tol;
  if (expect_channel && !tp) {
    throw std::invalid_argument("Kraus list is not trace preserving");
  }

  std::vector<OperatorSpectrum> specs;
  specs.reserve(kraus.size());
  for (const auto& A : kraus) specs.push_back(spectrum_of_operator(A));

  SuperopSpectrum out(n, expect_channel ? ChannelFlag::Yes : ChannelFlag::Unknown);
  for (const auto& ka : specs) {
    for (const auto& [x, cx] : ka.coeffs()) {
      for (const auto& [y, cy] : ka.coeffs()) {
        cplx cur = out.at(x, y);
        out.set(x, y, cur + cx * std::conj(cy));
      }
    }
  }
  return out;
}

SuperopSpectrum spectrum_of_choi(const DenseOperator& J, bool expect_channel,
                                 double tol) {
  const int two_n = sites_of_dimension(J.rows());
  if (two_n % 2 != 0) throw std::invalid_argument("Choi matrix dimension");
  const int n = two_n / 2;
  check_dense_cap(n, dense_caps().superop_sites, "spectrum_of_choi");
  const size_t dim = size_t{1} << n;

  if (expect_channel) {
    if (!is_hermitian(J, tol) || min_eigenvalue(J) < -tol * J.rows()) {
      throw std::invalid_argument("Choi matrix is not PSD");
    }
    // trace preservation: Tr_1 J = I on the second factor
    DenseOperator pt = DenseOperator::Zero(dim, dim);
    for (size_t i = 0; i < dim; ++i) {
      for (size_t a = 0; a < dim; ++a) {
        for (size_t b = 0; b < dim; ++b) {
          pt(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) +=
              J(static_cast<Eigen::Index>(i * dim + a),
                static_cast<Eigen::Index>(i * dim + b));
        }
      }
    }
    if ((pt - DenseOperator::Identity(dim, dim)).cwiseAbs().maxCoeff() > tol * double(dim)) {
      throw std::invalid_argument("Choi matrix is not trace preserving");
    }
  }

  SuperopSpectrum out(n, expect_channel ? ChannelFlag::Yes : ChannelFlag::Unknown);
  const uint64_t words = uint64_t{1} << (2 * n);
  std::vector<DenseState> bell;
  bell.reserve(words);
  for (uint64_t w = 0; w < words; ++w) {
    bell.push_back(choi_state_of_pauli(PauliString(n, w)));
  }
  const double scale = 1.0 / double(dim);  // v(Phi) = J / 2^n
  for (uint64_t wx = 0; wx < words; ++wx) {
    DenseState jx = J * bell[wx];
    for (uint64_t wy = 0; wy < words; ++wy) {
      cplx c = bell[wy].dot(jx) * scale;  // <v(sy)| J |v(sx)> -> (y,x) entry
      out.set(PauliString(n, wy), PauliString(n, wx), c);
    }
  }
  return out;
}

DenseOperator choi_of_superop(const SuperopSpectrum& spec) {
  const int n = spec.n();
  check_dense_cap(n, dense_caps().superop_sites, "choi_of_superop");
  const size_t dim = size_t{1} << n;
  DenseOperator J = DenseOperator::Zero(static_cast<Eigen::Index>(dim * dim),
                                        static_cast<Eigen::Index>(dim * dim));
  for (const auto& [k, c] : spec.coeffs()) {
    DenseState vx = choi_state_of_pauli(k.first);
    DenseState vy = choi_state_of_pauli(k.second);
    J += c * double(dim) * (vx * vy.adjoint());
  }
  return J;
}

DenseOperator apply_superop(const SuperopSpectrum& spec, const DenseOperator& M) {
  const int n = spec.n();
  if (M.rows() != (Eigen::Index{1} << n) || M.rows() != M.cols()) {
    throw std::invalid_argument("apply_superop: operand dimension");
  }
  DenseOperator out = DenseOperator::Zero(M.rows(), M.cols());
  for (const auto& [k, c] : spec.coeffs()) {
    out += c * (sigma_dense(k.first) * M * sigma_dense(k.second));
  }
  return out;
}

SuperopSpectrum pauli_channel_spectrum(int n,
                                       const std::map<PauliString, double>& rates) {
  SuperopSpectrum out(n, ChannelFlag::Yes);
  double total = 0.0;
  for (const auto& [x, p] : rates) {
    if (p < -kZeroTol) throw std::invalid_argument("negative error rate");
    out.set(x, x, p);
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("error rates do not sum to 1");
  }
  return out;
}

BooleanSpectrum boolean_spectrum(std::span<const double> table) {
  std::vector<double> buf(table.begin(), table.end());
  wht_inplace(buf);
  const int n = sites_of_dimension(static_cast<Eigen::Index>(table.size()));
  BooleanSpectrum spec(n);
  const double scale = 1.0 / double(table.size());
  for (size_t s = 0; s < buf.size(); ++s) {
    spec.set(BitString(n, s), buf[s] * scale);
  }
  return spec;
}

std::vector<double> boolean_synth(const BooleanSpectrum& spec) {
  const size_t len = size_t{1} << spec.n();
  std::vector<double> buf(len, 0.0);
  for (const auto& [s, c] : spec.coeffs()) buf[s.index()] = c;
  wht_inplace(buf);
  return buf;
}

CubeSpectrum cube_spectrum(std::span<const cplx> table) {
  std::vector<cplx> buf(table.begin(), table.end());
  wht_inplace(buf);
  const int n = sites_of_dimension(static_cast<Eigen::Index>(table.size()));
  CubeSpectrum spec(n);
  const double scale = 1.0 / double(table.size());
  for (size_t s = 0; s < buf.size(); ++s) {
    spec.set(BitString(n, s), buf[s] * scale);
  }
  return spec;
}

std::vector<cplx> cube_synth(const CubeSpectrum& spec) {
  const size_t len = size_t{1} << spec.n();
  std::vector<cplx> buf(len, cplx(0.0));
  for (const auto& [s, c] : spec.coeffs()) buf[s.index()] = c;
  wht_inplace(buf);
  return buf;
}

}  // namespace lowdeg
