#pragma once

#include <complex>
#include <set>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace bent {

using cxd = std::complex<double>;

inline long dim_of(int n_parties) { return 1L << n_parties; }

// Multi-qubit pure state. Party 0 is the most significant bit of the
// computational-basis index; every module and file format shares this
// convention.
struct PureState {
  int n_parties = 0;
  Eigen::VectorXcd amps;
};

struct DensityMatrix {
  int n_parties = 0;
  Eigen::MatrixXcd mat;  // row-major basis ordering as PureState
};

struct PartySplit {
  std::set<int> side_a;
  std::set<int> side_b;
};

inline bool is_normalized(const PureState& psi, double tol = 1e-12) {
  return std::abs(psi.amps.norm() - 1.0) <= tol;
}

inline void require_normalized(const PureState& psi, double tol = 1e-10) {
  if (!is_normalized(psi, tol))
    throw std::invalid_argument("pure state is not normalized");
}

inline void require_state_shape(const PureState& psi) {
  if (psi.n_parties < 1 || psi.amps.size() != dim_of(psi.n_parties))
    throw std::invalid_argument("pure state has inconsistent shape");
}

void validate_density(const DensityMatrix& rho, double herm_tol = 1e-12,
                      double trace_tol = 1e-12, double psd_tol = 1e-10);

void validate_split(const PartySplit& split, int n_parties);

}  // namespace bent
