#include "bent/spectral.hpp"

#include <cmath>
#include <limits>

#include "bent/tensor_core.hpp"

namespace bent {

double negativity(const DensityMatrix& rho, const PartySplit& split) {
  validate_split(split, rho.n_parties);
  const Eigen::MatrixXcd pt =
      partial_transpose(rho.mat, rho.n_parties, split.side_b);
  const HermitianSpectrum sp = eig_hermitian(pt);
  double neg = 0.0;
  for (long i = 0; i < sp.eigenvalues.size(); ++i)
    if (sp.eigenvalues(i) < 0.0) neg += -sp.eigenvalues(i);
  return 2.0 * neg;
}

double min_pt_eigenvalue(const DensityMatrix& rho, const PartySplit& split) {
  validate_split(split, rho.n_parties);
  const Eigen::MatrixXcd pt =
      partial_transpose(rho.mat, rho.n_parties, split.side_b);
  return eig_hermitian(pt).eigenvalues.minCoeff();
}

double dur_negativity_closed(int n_parties, double x, DurPartition partition) {
  if (n_parties < 4)
    throw std::invalid_argument("dur_negativity_closed: need N >= 4");
  if (x < 0.0 || x > 1.0)
    throw std::invalid_argument("dur_negativity_closed: x must be in [0,1]");
  if (partition == DurPartition::one_vs_rest)
    return std::max(0.0, ((n_parties + 1) * x - 1.0) / n_parties);
  return x;
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                        double eps) {
  if (rho.n_parties != sigma.n_parties || rho.mat.rows() != sigma.mat.rows())
    throw std::invalid_argument("relative_entropy: dimension mismatch");

  const HermitianSpectrum rho_sp = eig_hermitian(rho.mat);
  const MatrixLog2 sigma_log = matrix_log2_on_support(sigma, eps);

  double entropy_term = 0.0;  // Tr[rho log2 rho]
  for (long i = 0; i < rho_sp.eigenvalues.size(); ++i) {
    const double ev = rho_sp.eigenvalues(i);
    if (ev <= eps) continue;
    entropy_term += ev * std::log2(ev);
    // support test: rho eigenvectors must live inside sigma's support
    const Eigen::VectorXcd v = rho_sp.eigenvectors.col(i);
    const double in_support =
        (v.adjoint() * sigma.mat * v)(0).real();
    if (in_support <= 1e-12)
      return std::numeric_limits<double>::infinity();
  }
  const double cross_term = (rho.mat * sigma_log.log2_matrix).trace().real();
  return entropy_term - cross_term;
}

}  // namespace bent
