#pragma once

#include <span>
#include <vector>

#include "lowdeg/dense.hpp"
#include "lowdeg/spectrum.hpp"

namespace lowdeg {

// ---- operators -------------------------------------------------------------

/// Exact Pauli coefficients M_hat(x) = Tr[sigma_x M] / 2^n for every word x.
OperatorSpectrum spectrum_of_operator(const DenseOperator& M);
DenseOperator synth_operator(const OperatorSpectrum& spec);

/// Two-register state (U (x) I)|Omega> whose overlap with the Pauli basis
/// states equals the Pauli coefficients of U. Throws on non-unitary input.
DenseState choi_state_of_unitary(const DenseOperator& U);
/// The basis state (sigma_x (x) I)|Omega> itself.
DenseState choi_state_of_pauli(const PauliString& x);

// ---- superoperators --------------------------------------------------------

/// Coefficients from a Kraus presentation: Phi_hat(x,y) = sum_k A_k^(x) A_k^(y)*.
/// With expect_channel the Kraus operators must satisfy sum A_k^* A_k = I.
SuperopSpectrum spectrum_of_kraus(std::span<const DenseOperator> kraus,
                                  bool expect_channel = true,
                                  double tol = 1e-9);

/// Coefficients from the (unnormalized) Choi matrix J. With expect_channel,
/// J must be PSD with identity partial trace over the first factor.
SuperopSpectrum spectrum_of_choi(const DenseOperator& J,
                                 bool expect_channel = true,
                                 double tol = 1e-9);

DenseOperator choi_of_superop(const SuperopSpectrum& spec);  // J, trace 2^n for channels
DenseOperator apply_superop(const SuperopSpectrum& spec, const DenseOperator& M);

SuperopSpectrum pauli_channel_spectrum(int n,
                                       const std::map<PauliString, double>& rates);

// ---- Boolean cube ----------------------------------------------------------

/// Walsh-Hadamard transform of a full truth table (index bit n-1-j holds
/// variable j; bit value 1 means the variable is -1). Table length 2^n.
BooleanSpectrum boolean_spectrum(std::span<const double> table);
std::vector<double> boolean_synth(const BooleanSpectrum& spec);

CubeSpectrum cube_spectrum(std::span<const cplx> table);
std::vector<cplx> cube_synth(const CubeSpectrum& spec);

/// In-place unnormalized Walsh-Hadamard butterfly.
void wht_inplace(std::span<double> data);
void wht_inplace(std::span<cplx> data);

}  // namespace lowdeg
