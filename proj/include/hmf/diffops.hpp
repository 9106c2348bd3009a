#pragma once

// Differential operators on HilbertSeries: Rankin and Rankin-Cohen
// brackets, Lambda, Pi_i, Pi, the triple/multilinear bracket, T and Phi.
// Operators with two natural expressions exist here twice: a direct
// Fourier-convolution form (the production path, no suffix) and an
// operator-composition form (suffix _composed) used to cross-check the
// first.  Derivatives are normalized: D_i multiplies the
// coefficient at nu by sigma_i(nu), so no transcendental constants appear.

#include "hmf/hilbert.hpp"

#include <vector>

namespace hmf {

// [F,G]_{1_i} = g_i G D_iF - f_i F D_iG, weight f + g + 2e_i
HilbertSeries rankin_bracket(const HilbertSeries& F, const HilbertSeries& G, int i);
HilbertSeries rankin_bracket_composed(const HilbertSeries& F, const HilbertSeries& G, int i);

// Rankin-Cohen bracket [F,G]_s, weight f + g + 2s
HilbertSeries rc_bracket(const HilbertSeries& F, const HilbertSeries& G, int s1, int s2);

// Lambda F = F D1D2F - (D1F)(D2F), weight 2f + (2,2)
HilbertSeries lambda_op(const HilbertSeries& F);
HilbertSeries lambda_op_composed(const HilbertSeries& F);

// Pi_i F = f_i F D_i^2 F - (f_i + 1)(D_iF)^2, weight 2f + 4e_i
HilbertSeries pi_op(const HilbertSeries& F, int i);
HilbertSeries pi_op_composed(const HilbertSeries& F, int i);

// Pi F = (Pi_1 F)(Pi_2 F), weight 4f + (4,4)
HilbertSeries big_pi_op(const HilbertSeries& F);

// (g+h) * det[(fF, gG, hH), (D1F, D1G, D1H), (D2F, D2G, D2H)];
// parallel weights f, g, h required; output weight f + g + h + 2 parallel
HilbertSeries triple_bracket(const HilbertSeries& F, const HilbertSeries& G,
                             const HilbertSeries& H);

// the bare (m+1)x(m+1) determinant form, m = forms.size()-1 in {1, 2};
// m = 1 coincides with rankin_bracket(F1, F2, 1), m = 2 with
// triple_bracket/(g+h)
HilbertSeries multi_bracket(const std::vector<HilbertSeries>& forms);

// TF = [F,LF]_{1_1}[F,PF]_{1_2} - [F,LF]_{1_2}[F,PF]_{1_1}
// with LF = lambda_op(F), PF = big_pi_op(F)
HilbertSeries t_op(const HilbertSeries& F);

// Phi F = (Pi F - (r1+1)(r2+1)(Lambda F)^2) / F, weight 3r + (4,4)
HilbertSeries phi_op(const HilbertSeries& F);

}  // namespace hmf
