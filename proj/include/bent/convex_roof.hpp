#pragma once

#include <optional>

#include "bent/geom_measure.hpp"
#include "bent/types.hpp"

namespace bent {

enum class RoofKind { sin2, log2 };

struct Decomposition {
  Eigen::VectorXd weights;        // p_k > 0, sum 1
  std::vector<PureState> states;  // normalized members
  // M x n matrix with orthonormal columns mapping the eigenbasis of the
  // reconstructed state onto the members, when produced by the optimizer
  // or a certificate.
  std::optional<Eigen::MatrixXcd> isometry;
};

void validate_decomposition(const Decomposition& dec);

DensityMatrix reconstruct(const Decomposition& dec);

double average_entanglement(const Decomposition& dec, RoofKind kind,
                            const GmeOptions& opts = {});

/// Weight-1/4 mixture of the four X states; reconstructs smolin().
Decomposition certificate_smolin();

/// The 4N-member psi_{+/-,u/v,k}(x) decomposition; reconstructs dur(N, x).
Decomposition certificate_dur(int n_parties, double x);

struct RoofOptions {
  int ensemble_size = 0;   // 0 -> min(2 * rank, 16), floored at rank
  int outer_restarts = 8;
  int max_evals = 20000;   // objective-evaluation budget per restart
  std::uint64_t seed = 0;
  GmeOptions inner{};      // options for the final per-member evaluation
};

struct RoofResult {
  double value = 0.0;
  Decomposition best;
  int evals_used = 0;
};

/// Upper-bound minimization of the decomposition-averaged pure-state
/// entanglement. The ensemble is parameterized by the first rank columns of
/// exp(A) for anti-Hermitian A (M^2 real parameters), searched by seeded
/// adaptive coordinate descent. Restart 0 starts at A = 0, i.e. the
/// eigendecomposition itself, so the result never exceeds that baseline.
RoofResult optimize_roof(const DensityMatrix& rho, RoofKind kind,
                         const RoofOptions& opts = {});

}  // namespace bent
