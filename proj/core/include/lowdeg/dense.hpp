#pragma once

#include <Eigen/Dense>
#include <vector>

#include "lowdeg/pauli.hpp"
#include "lowdeg/spectrum.hpp"

namespace lowdeg {

using DenseOperator = Eigen::MatrixXcd;
using DenseState = Eigen::VectorXcd;

/// Size limits for dense 2^n paths. Larger objects must be given natively
/// as sparse spectra or Kraus/rate data.
struct DenseCaps {
  int operator_sites = 6;
  int superop_sites = 5;
};

inline DenseCaps& dense_caps() {
  static DenseCaps caps;
  return caps;
}

const DenseOperator& pauli_matrix(int symbol);  // 2x2 sigma_0..sigma_3
DenseOperator sigma_dense(const PauliString& x);
DenseOperator kron(const DenseOperator& a, const DenseOperator& b);

/// sigma_x |j> = phase(j) |perm(j)>; fills both arrays with 2^n entries.
void pauli_action(const PauliString& x, std::vector<size_t>& perm,
                  std::vector<cplx>& phase);

int sites_of_dimension(Eigen::Index dim);  // log2, throws if not a power of 2

bool is_unitary(const DenseOperator& U, double tol = 1e-9);
bool is_hermitian(const DenseOperator& M, double tol = 1e-9);
/// Smallest eigenvalue of a hermitian matrix.
double min_eigenvalue(const DenseOperator& M);
double operator_norm(const DenseOperator& M);  // largest singular value

DenseOperator identity_op(int n);
DenseState basis_state(int n, uint64_t index);

}  // namespace lowdeg
