#pragma once

#include <cstdint>
#include <optional>

#include "bent/types.hpp"

namespace bent {

struct ProductState {
  std::vector<Eigen::Vector2cd> factors;  // one normalized qubit per party
};

PureState product_to_pure(const ProductState& phi);

struct GmeOptions {
  int restarts = 32;
  int max_iters = 10000;
  double tol = 1e-12;  // convergence in |delta Lambda| per sweep
  std::uint64_t seed = 0;
};

struct LambdaResult {
  double lambda_max = 0.0;
  ProductState closest_product;
  double residual = 0.0;
  int restarts_used = 0;
  bool converged = false;
};

/// Entanglement eigenvalue via the alternating rank-one fixed point with
/// seeded multistart. Restart 0 starts from each party's dominant
/// single-qubit reduced eigenvector; the rest are Haar random. Ties break
/// toward the lowest restart index, so the result is deterministic for a
/// fixed seed regardless of how restarts are scheduled.
LambdaResult lambda_max(const PureState& psi, const GmeOptions& opts = {});

/// Single fixed-point run from a given product-state initialization.
LambdaResult lambda_max_from(const PureState& psi, const ProductState& init,
                             int max_iters, double tol);

/// Stationarity check: lambda = |<phi|psi>| and the max over parties of the
/// norm of the environment vector's component orthogonal to the factor.
std::pair<double, double> stationarity_residual(const PureState& psi,
                                                const ProductState& phi);

double e_sin2_pure(const PureState& psi, const GmeOptions& opts = {});
double e_log2_pure(const PureState& psi, const GmeOptions& opts = {});

struct SupportSample {
  int index = 0;
  std::optional<double> y;  // |<ref|psi>|^2 when a reference is supplied
  double lambda = 0.0;
  double e_sin2 = 0.0;
};

/// Draw pseudorandom normalized states from the eigen-support of rho and
/// record their entanglement eigenvalues. `ref` (typically the GHZ state)
/// enables the y column.
std::vector<SupportSample> support_lambda_profile(
    const DensityMatrix& rho, int samples, const GmeOptions& opts = {},
    const PureState* ref = nullptr);

}  // namespace bent
