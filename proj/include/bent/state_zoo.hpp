#pragma once

#include "bent/types.hpp"

namespace bent {

/// The four Bell states: i=0,1 -> (|00> +/- |11>)/sqrt2,
/// i=2,3 -> (|01> +/- |10>)/sqrt2.
PureState bell(int i);

/// N-party GHZ state (|0..0> + e^{i alpha}|1..1>)/sqrt2.
PureState ghz(int n_parties, double alpha = 0.0);

/// The four GHZ-like 4-qubit states X_0..X_3.
PureState x_state(int i);

/// Same amplitudes as x_state(i), built from the 1:3-grouped Bell-like
/// table (|0,a> + |1,7-a>)/sqrt2 with a in {0,3,5,6}. Independent
/// construction used for cross-checks of the grouping convention.
PureState xbar_view(int i);

enum class SmolinForm { pairs, xform };

/// Smolin 4-qubit state, either as the Bell-pair mixture or the even
/// mixture of the four X states. Both forms agree elementwise.
DensityMatrix smolin(SmolinForm form = SmolinForm::pairs);

/// |u_k> = |0...1_k...0>, |v_k> = |1...0_k...1>; k is 1-based.
PureState u_state(int n_parties, int k);
PureState v_state(int n_parties, int k);

/// Dur family rho_N(x) = x|GHZ><GHZ| + (1-x)/(2N) sum_k (P_k + Pbar_k).
/// Rejects N < 4.
DensityMatrix dur(int n_parties, double x);

enum class PsiSign { plus, minus };
enum class PsiType { u, v };

/// sqrt(y)|GHZ> +/- sqrt(1-y)|u_k or v_k>.
PureState psi_y(int n_parties, double y, PsiSign sign, PsiType type, int k);

/// Bell-like C^2 (x) C^{2m} state (|0,k> +/- |1,2m-k-1>)/sqrt2 as a raw
/// amplitude vector of length 4m (index a*2m + d).
Eigen::VectorXcd bell_like(int m, int k, PsiSign sign);

/// Conjectured closest separable state to smolin(): even mixture of the
/// eight basis strings appearing in the X states.
DensityMatrix sigma_smolin();

/// Conjectured closest separable state to dur(N, x): GHZ projector
/// replaced by its dephased diagonal.
DensityMatrix sigma_dur(int n_parties, double x);

}  // namespace bent
