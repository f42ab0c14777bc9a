#pragma once

#include <optional>

#include "bent/types.hpp"

namespace bent {

/// GHZ-diagonal basis: index 2j + (0 for +, 1 for -), j in
/// 0..2^{N-1}-1. |Psi±_j> = (|b_j> ± |complement(b_j)>)/sqrt2 where b_j has
/// the party-0 bit 0 and the remaining N-1 bits equal to j.
std::vector<PureState> ghz_basis(int n_parties);

struct DepolarizedCoeffs {
  int n_parties = 0;
  double lambda0_plus = 0.0;
  double lambda0_minus = 0.0;
  Eigen::VectorXd lambdas;  // lambdas(j-1) for j = 1..2^{N-1}-1

  /// lambda0+ + lambda0- + 2 sum_j lambda_j, which must equal 1.
  double normalization() const {
    return lambda0_plus + lambda0_minus + 2.0 * lambdas.sum();
  }
};

/// Coefficients of the locally-depolarized GHZ-diagonal normal form. The
/// preserved expectations are lambda0± = <Psi0±|rho|Psi0±> and the pair
/// sums <Psij+|rho|Psij+> + <Psij-|rho|Psij->; each pair sum is halved onto
/// the two projectors of the normal form.
DepolarizedCoeffs depolarize(const DensityMatrix& rho);

/// Rebuild the GHZ-diagonal state; depolarize(to_density(c)) == c exactly.
DensityMatrix to_density(const DepolarizedCoeffs& c);

/// lambda0+ - lambda0- (signed; predicates orient it non-negative).
double delta(const DepolarizedCoeffs& c);

struct NondistillableResult {
  bool holds = false;
  std::optional<int> violating_j;  // least violating j when !holds
};

/// Checks 2 lambda_j >= Delta for every bipartition index j.
NondistillableResult nondistillable_all_partitions(const DepolarizedCoeffs& c);

/// Largest Delta compatible with nondistillability across all bipartite
/// splits: 2^{-(N-1)}.
double max_delta_nondistillable(int n_parties);

enum class BellInequalityKind { two_setting, three_setting, functional };

/// Delta value above which the given Bell inequality is violated.
double bell_violation_threshold(int n_parties, BellInequalityKind kind);

struct ConsistencyRow {
  int n_parties = 0;
  BellInequalityKind kind{};
  double threshold = 0.0;
  double bound = 0.0;  // max_delta_nondistillable
  bool threshold_exceeds_bound = false;
};

std::vector<ConsistencyRow> consistency_report(int n_lo, int n_hi);

/// The bipartite split indexed by j: parties whose j-bit is 1 sit opposite
/// party 0; coincides with the flipped parties of |Psi±_j>.
PartySplit split_for_j(int n_parties, int j);

const char* bell_kind_name(BellInequalityKind kind);

}  // namespace bent
