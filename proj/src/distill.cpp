#include "bent/distill.hpp"

#include <cmath>

namespace bent {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

std::vector<PureState> ghz_basis(int n_parties) {
  if (n_parties < 2 || n_parties > 12)
    throw std::invalid_argument("ghz_basis: N must be in 2..12");
  const long d = dim_of(n_parties);
  std::vector<PureState> basis;
  basis.reserve(d);
  for (long j = 0; j < d / 2; ++j) {
    const long b = j;            // party-0 bit already 0
    const long bbar = (d - 1) ^ b;
    for (int sign = 0; sign < 2; ++sign) {
      PureState s{n_parties, Eigen::VectorXcd::Zero(d)};
      s.amps(b) = kInvSqrt2;
      s.amps(bbar) = sign == 0 ? kInvSqrt2 : -kInvSqrt2;
      basis.push_back(std::move(s));
    }
  }
  return basis;
}

DepolarizedCoeffs depolarize(const DensityMatrix& rho) {
  const int n = rho.n_parties;
  const long d = dim_of(n);
  if (rho.mat.rows() != d)
    throw std::invalid_argument("depolarize: shape mismatch");
  DepolarizedCoeffs c;
  c.n_parties = n;
  c.lambdas = Eigen::VectorXd::Zero(d / 2 - 1);
  for (long j = 0; j < d / 2; ++j) {
    const long b = j;
    const long bbar = (d - 1) ^ b;
    // <Psi±_j|rho|Psi±_j> = (rho_bb + rho_b̄b̄ ± 2 Re rho_bb̄)/2
    const double diag = rho.mat(b, b).real() + rho.mat(bbar, bbar).real();
    const double coh = 2.0 * rho.mat(b, bbar).real();
    if (j == 0) {
      c.lambda0_plus = 0.5 * (diag + coh);
      c.lambda0_minus = 0.5 * (diag - coh);
    } else {
      c.lambdas(j - 1) = 0.5 * diag;  // pair sum halved onto each projector
    }
  }
  return c;
}

DensityMatrix to_density(const DepolarizedCoeffs& c) {
  const int n = c.n_parties;
  const long d = dim_of(n);
  if (c.lambdas.size() != d / 2 - 1)
    throw std::invalid_argument("to_density: coefficient count mismatch");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  m(0, 0) = m(d - 1, d - 1) = 0.5 * (c.lambda0_plus + c.lambda0_minus);
  m(0, d - 1) = m(d - 1, 0) = 0.5 * (c.lambda0_plus - c.lambda0_minus);
  for (long j = 1; j < d / 2; ++j) {
    m(j, j) = c.lambdas(j - 1);
    m((d - 1) ^ j, (d - 1) ^ j) = c.lambdas(j - 1);
  }
  return {n, std::move(m)};
}

double delta(const DepolarizedCoeffs& c) {
  return c.lambda0_plus - c.lambda0_minus;
}

NondistillableResult nondistillable_all_partitions(const DepolarizedCoeffs& c) {
  const double dlt = std::abs(delta(c));  // orientation per the +/- swap rule
  for (long j = 1; j <= c.lambdas.size(); ++j)
    if (2.0 * c.lambdas(j - 1) < dlt - 1e-12)
      return {false, static_cast<int>(j)};
  return {true, std::nullopt};
}

double max_delta_nondistillable(int n_parties) {
  if (n_parties < 2) throw std::invalid_argument("max_delta_nondistillable: N >= 2");
  return std::ldexp(1.0, -(n_parties - 1));
}

double bell_violation_threshold(int n_parties, BellInequalityKind kind) {
  if (n_parties < 2) throw std::invalid_argument("bell_violation_threshold: N >= 2");
  const double n = n_parties;
  switch (kind) {
    case BellInequalityKind::two_setting:
      return std::pow(2.0, -(n - 1.0) / 2.0);
    case BellInequalityKind::three_setting:
      return std::sqrt(3.0) * std::pow(2.0 / 3.0, n);
    case BellInequalityKind::functional:
      return 2.0 * std::pow(2.0 / M_PI, n);
  }
  throw std::invalid_argument("bell_violation_threshold: unknown kind");
}

std::vector<ConsistencyRow> consistency_report(int n_lo, int n_hi) {
  if (n_lo < 4 || n_hi < n_lo)
    throw std::invalid_argument("consistency_report: range must start at N >= 4");
  std::vector<ConsistencyRow> rows;
  for (int n = n_lo; n <= n_hi; ++n)
    for (BellInequalityKind kind :
         {BellInequalityKind::two_setting, BellInequalityKind::three_setting,
          BellInequalityKind::functional}) {
      ConsistencyRow row;
      row.n_parties = n;
      row.kind = kind;
      row.threshold = bell_violation_threshold(n, kind);
      row.bound = max_delta_nondistillable(n);
      row.threshold_exceeds_bound = row.threshold > row.bound;
      rows.push_back(row);
    }
  return rows;
}

PartySplit split_for_j(int n_parties, int j) {
  if (j < 1 || j >= (1 << (n_parties - 1)))
    throw std::invalid_argument("split_for_j: j out of range");
  PartySplit split;
  split.side_a.insert(0);
  for (int p = 1; p < n_parties; ++p) {
    const bool opposite = (j >> (n_parties - 1 - p)) & 1;
    (opposite ? split.side_b : split.side_a).insert(p);
  }
  return split;
}

const char* bell_kind_name(BellInequalityKind kind) {
  switch (kind) {
    case BellInequalityKind::two_setting: return "two_setting";
    case BellInequalityKind::three_setting: return "three_setting";
    case BellInequalityKind::functional: return "functional";
  }
  return "unknown";
}

}  // namespace bent
