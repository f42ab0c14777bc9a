#pragma once

#include "bent/types.hpp"

namespace bent {

/// Kronecker product of pure states, party order preserved.
PureState tensor_product(const std::vector<PureState>& factors);

/// <a|b>, conjugate-linear in a.
cxd overlap(const PureState& a, const PureState& b);

DensityMatrix projector(const PureState& psi);

/// Trace out every party not listed in `keep`. The kept parties retain
/// their relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::set<int>& keep);

/// Transpose the indices of `subset` only. Result is Hermitian but not
/// necessarily PSD; applying twice with the same subset is the identity.
Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& m, int n_parties,
                                   const std::set<int>& subset);

struct HermitianSpectrum {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXcd eigenvectors; // column-orthonormal
};

/// Eigendecomposition after symmetrizing (M + M^dagger)/2. Rejects inputs
/// whose anti-Hermitian part exceeds 1e-10.
HermitianSpectrum eig_hermitian(const Eigen::MatrixXcd& m);

struct MatrixLog2 {
  Eigen::MatrixXcd log2_matrix;        // V log2(L) V^dagger on the support
  Eigen::MatrixXcd support_projector;  // projector onto eigenvalues > eps
  int support_rank = 0;
};

MatrixLog2 matrix_log2_on_support(const DensityMatrix& rho, double eps = 1e-10);

}  // namespace bent
