#pragma once

#include <array>

#include "bent/geom_measure.hpp"

namespace bent {

/// Sum of the four squared complementary-pair overlaps of the 4-angle
/// product ansatz; bounded by 1.
double smolin_overlap_norm_sq(const std::array<double, 4>& thetas);

/// Legacy four-term remainder variant kept for comparison: its second
/// squared term uses s4 where the symmetric pattern expects c4, so it does
/// not complete 1 - smolin_overlap_norm_sq; see
/// smolin_remainder_symmetric.
double smolin_remainder_printed(const std::array<double, 4>& thetas);

/// Symmetric-pattern variant of the remainder; satisfies
/// smolin_overlap_norm_sq + smolin_remainder_symmetric == 1.
double smolin_remainder_symmetric(const std::array<double, 4>& thetas);

/// f_N = (c1..cN + s1..sN)^2 + sum_k {(c1..s_k..cN)^2 + (s1..c_k..sN)^2};
/// bounded by 1 for N >= 4 and monotone nonincreasing in N.
double f_n(const std::vector<double>& thetas);

/// Closed-form entanglement eigenvalue sqrt((2-y)/2) of the
/// sqrt(y)|GHZ> ± sqrt(1-y)|u_k> family.
double psi_y_lambda_closed(double y);

/// The optimizing product state for the canonical k=1 form: head qubit
/// sqrt(p)|0> + sqrt(1-p)|1> with p = y/(2-y), all-|0> tail.
ProductState psi_y_closest_product(double y, int n_parties);

}  // namespace bent
