#include "lowdeg/dense.hpp"

#include <stdexcept>

namespace lowdeg {

const DenseOperator& pauli_matrix(int symbol) {
  static const std::array<DenseOperator, 4> mats = [] {
    std::array<DenseOperator, 4> m;
    for (auto& x : m) x = DenseOperator::Zero(2, 2);
    m[0] << 1, 0, 0, 1;
    m[1] << 0, 1, 1, 0;
    m[2] << 0, cplx(0, -1), cplx(0, 1), 0;
    m[3] << 1, 0, 0, -1;
    return m;
  }();
  if (symbol < 0 || symbol > 3) throw std::invalid_argument("pauli_matrix");
  return mats[static_cast<size_t>(symbol)];
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  DenseOperator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DenseOperator sigma_dense(const PauliString& x) {
  DenseOperator out = DenseOperator::Identity(1, 1);
  for (int j = 0; j < x.n(); ++j) out = kron(out, pauli_matrix(x.site(j)));
  return out;
}

void pauli_action(const PauliString& x, std::vector<size_t>& perm,
                  std::vector<cplx>& phase) {
  const int n = x.n();
  const size_t dim = size_t{1} << n;
  perm.assign(dim, 0);
  phase.assign(dim, cplx(1.0));
  for (size_t j = 0; j < dim; ++j) {
    size_t out = j;
    cplx ph(1.0);
    for (int q = 0; q < n; ++q) {
      const size_t mask = size_t{1} << (n - 1 - q);
      const int b = (j & mask) ? 1 : 0;
      switch (x.site(q)) {
        case 0:
          break;
        case 1:
          out ^= mask;
          break;
        case 2:
          out ^= mask;
          ph *= b ? cplx(0, -1) : cplx(0, 1);
          break;
        case 3:
          if (b) ph = -ph;
          break;
      }
    }
    perm[j] = out;
    phase[j] = ph;
  }
}

int sites_of_dimension(Eigen::Index dim) {
  if (dim < 2) throw std::invalid_argument("dimension must be >= 2");
  int n = 0;
  Eigen::Index d = dim;
  while (d > 1) {
    if (d & 1) throw std::invalid_argument("dimension is not a power of 2");
    d >>= 1;
    ++n;
  }
  return n;
}

bool is_unitary(const DenseOperator& U, double tol) {
  if (U.rows() != U.cols()) return false;
  DenseOperator d = U.adjoint() * U - DenseOperator::Identity(U.rows(), U.cols());
  return d.cwiseAbs().maxCoeff() <= tol;
}

bool is_hermitian(const DenseOperator& M, double tol) {
  return M.rows() == M.cols() &&
         (M - M.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double min_eigenvalue(const DenseOperator& M) {
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(M, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double operator_norm(const DenseOperator& M) {
  if (M.rows() == 0 || M.cols() == 0) return 0.0;
  Eigen::JacobiSVD<DenseOperator> svd(M);
  return svd.singularValues()(0);
}

DenseOperator identity_op(int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  return DenseOperator::Identity(dim, dim);
}

DenseState basis_state(int n, uint64_t index) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  DenseState v = DenseState::Zero(dim);
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return v;
}

}  // namespace lowdeg
