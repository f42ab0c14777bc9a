#pragma once

#include "bent/types.hpp"

namespace bent {

/// Twice the absolute sum of negative partial-transpose eigenvalues across
/// the split (transpose taken over side_b).
double negativity(const DensityMatrix& rho, const PartySplit& split);

/// Smallest partial-transpose eigenvalue across the split; >= 0 means PPT.
double min_pt_eigenvalue(const DensityMatrix& rho, const PartySplit& split);

enum class DurPartition { one_vs_rest, two_vs_rest };

/// Closed-form Dur-family negativities: max{0, ((N+1)x - 1)/N} for the
/// 1:rest cut and x for the 12:rest cut.
double dur_negativity_closed(int n_parties, double x, DurPartition partition);

/// S(rho||sigma) = Tr[rho log2 rho] - Tr[rho log2 sigma] in bits;
/// +infinity when the support of rho is not contained in sigma's.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                        double eps = 1e-10);

}  // namespace bent
