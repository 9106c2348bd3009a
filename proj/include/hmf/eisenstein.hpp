#pragma once

// Normalized parallel-weight Eisenstein series for Q(sqrt5) via exact
// divisor sums over principal ideals.  Only r = 2 and r = 6 are exposed;
// kappa_2 = 120 is pinned, kappa_6 is re-derived at test time from the
// weight-6 cusp form (derive_kappa6) and cross-checked against 2520/67.

#include "hmf/hilbert.hpp"
#include "hmf/quadfield.hpp"

#include <vector>

namespace hmf {

// one representative per associate class of divisors of xi in O_K;
// representatives normalized by sigma1 > 0 and 1 <= sigma1^2/|N| < eps^4
std::vector<OKElem> enumerate_divisors(const OKElem& xi);

// sum of |N(mu)|^{r-1} over associate classes of divisors of nu*sqrt5
Rat divisor_sum(const NuIndex& nu, int r);

Rat kappa(int r);  // r in {2, 6}: 120 and 2520/67

// constant term 1, coefficient kappa_r * divisor_sum(nu, r); weight (r,r)
HilbertSeries eisenstein_series(int r, int bound);

// re-derives kappa_6 from chi6 = Lambda(phi2)/24 and the 67/21600 identity,
// verifying every coefficient against divisor sums; throws on inconsistency
Rat derive_kappa6(int bound);

}  // namespace hmf
