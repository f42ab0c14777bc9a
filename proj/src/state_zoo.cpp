#include "bent/state_zoo.hpp"

#include <cmath>

#include "bent/tensor_core.hpp"

namespace bent {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;

PureState two_term(int n, long a, cxd wa, long b, cxd wb) {
  PureState out{n, Eigen::VectorXcd::Zero(dim_of(n))};
  out.amps(a) = wa;
  out.amps(b) = wb;
  return out;
}
}  // namespace

PureState bell(int i) {
  switch (i) {
    case 0: return two_term(2, 0, kInvSqrt2, 3, kInvSqrt2);
    case 1: return two_term(2, 0, kInvSqrt2, 3, -kInvSqrt2);
    case 2: return two_term(2, 1, kInvSqrt2, 2, kInvSqrt2);
    case 3: return two_term(2, 1, kInvSqrt2, 2, -kInvSqrt2);
    default: throw std::invalid_argument("bell: index must be 0..3");
  }
}

PureState ghz(int n_parties, double alpha) {
  if (n_parties < 2) throw std::invalid_argument("ghz: need at least 2 parties");
  const cxd phase = std::polar(1.0, alpha);
  return two_term(n_parties, 0, kInvSqrt2, dim_of(n_parties) - 1,
                  phase * kInvSqrt2);
}

PureState x_state(int i) {
  static const long lead[4] = {0b0000, 0b0011, 0b0101, 0b0110};
  if (i < 0 || i > 3) throw std::invalid_argument("x_state: index must be 0..3");
  const long a = lead[i];
  return two_term(4, a, kInvSqrt2, 15 - a, kInvSqrt2);
}

PureState xbar_view(int i) {
  // (|0,a> + |1,7-a>)/sqrt2 on the 1:3 grouping; index = head*8 + tail.
  static const long tail[4] = {0, 3, 5, 6};
  if (i < 0 || i > 3) throw std::invalid_argument("xbar_view: index must be 0..3");
  const long a = tail[i];
  return two_term(4, 0 * 8 + a, kInvSqrt2, 1 * 8 + (7 - a), kInvSqrt2);
}

DensityMatrix smolin(SmolinForm form) {
  const long d = 16;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  if (form == SmolinForm::pairs) {
    for (int i = 0; i < 4; ++i) {
      const PureState pair = tensor_product({bell(i), bell(i)});
      m += 0.25 * (pair.amps * pair.amps.adjoint());
    }
  } else {
    for (int i = 0; i < 4; ++i) {
      const PureState xi = x_state(i);
      m += 0.25 * (xi.amps * xi.amps.adjoint());
    }
  }
  return {4, std::move(m)};
}

PureState u_state(int n_parties, int k) {
  if (n_parties < 2 || k < 1 || k > n_parties)
    throw std::invalid_argument("u_state: k must be in 1..N");
  PureState out{n_parties, Eigen::VectorXcd::Zero(dim_of(n_parties))};
  out.amps(1L << (n_parties - k)) = 1.0;
  return out;
}

PureState v_state(int n_parties, int k) {
  if (n_parties < 2 || k < 1 || k > n_parties)
    throw std::invalid_argument("v_state: k must be in 1..N");
  PureState out{n_parties, Eigen::VectorXcd::Zero(dim_of(n_parties))};
  out.amps((dim_of(n_parties) - 1) ^ (1L << (n_parties - k))) = 1.0;
  return out;
}

DensityMatrix dur(int n_parties, double x) {
  if (n_parties < 4)
    throw std::invalid_argument("dur: family is defined for N >= 4");
  if (x < 0.0 || x > 1.0) throw std::invalid_argument("dur: x must be in [0,1]");
  const int n = n_parties;
  const long d = dim_of(n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  const PureState g = ghz(n, 0.0);
  m += x * (g.amps * g.amps.adjoint());
  const double w = (1.0 - x) / (2.0 * n);
  for (int k = 1; k <= n; ++k) {
    const long u = 1L << (n - k);
    m(u, u) += w;
    m((d - 1) ^ u, (d - 1) ^ u) += w;
  }
  return {n, std::move(m)};
}

PureState psi_y(int n_parties, double y, PsiSign sign, PsiType type, int k) {
  if (n_parties < 4) throw std::invalid_argument("psi_y: need N >= 4");
  if (y < 0.0 || y > 1.0) throw std::invalid_argument("psi_y: y must be in [0,1]");
  if (k < 1 || k > n_parties) throw std::invalid_argument("psi_y: k must be in 1..N");
  const PureState g = ghz(n_parties, 0.0);
  const PureState tail =
      type == PsiType::u ? u_state(n_parties, k) : v_state(n_parties, k);
  const double s = sign == PsiSign::plus ? 1.0 : -1.0;
  PureState out{n_parties,
                std::sqrt(y) * g.amps + s * std::sqrt(1.0 - y) * tail.amps};
  return out;
}

Eigen::VectorXcd bell_like(int m, int k, PsiSign sign) {
  if (m < 1 || k < 0 || k >= m)
    throw std::invalid_argument("bell_like: need m >= 1 and k in 0..m-1");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(4L * m);
  amps(k) = kInvSqrt2;
  amps(2L * m + (2L * m - k - 1)) =
      (sign == PsiSign::plus ? 1.0 : -1.0) * kInvSqrt2;
  return amps;
}

DensityMatrix sigma_smolin() {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(16, 16);
  for (long s : {0b0000, 0b1111, 0b0011, 0b1100, 0b0101, 0b1010, 0b0110, 0b1001})
    m(s, s) = 0.125;
  return {4, std::move(m)};
}

DensityMatrix sigma_dur(int n_parties, double x) {
  DensityMatrix out = dur(n_parties, x);
  const long d = dim_of(n_parties);
  // Dephase the GHZ block: keep x/2 on |0..0> and |1..1>, drop coherences.
  out.mat(0, d - 1) = 0.0;
  out.mat(d - 1, 0) = 0.0;
  return out;
}

}  // namespace bent
