#pragma once

// The ten-factor theta product for Q(sqrt5) and chi5 = Theta/32.
// Each factor is a sum over nu in O_K with exponent (nu + alpha/2)^2 eps
// / (2 sqrt5), which lives on the dual lattice refined by 8; the full
// product lands back on the integral dual lattice.

#include "hmf/hilbert.hpp"
#include "hmf/quadfield.hpp"

#include <array>

namespace hmf {

struct Characteristic {
    OKElem alpha, beta;
};

// the 10 characteristics {(0,0),(1,0),(0,1),(1,1),(0,eps'),(0,eps),
// (eps',0),(eps,0),(eps',eps),(eps,eps')}
const std::array<Characteristic, 10>& theta_characteristics();

// one factor, exact to actual trace <= bound, stored with denom = 8
HilbertSeries theta_factor(const Characteristic& ch, int bound);

// product of the 10 factors, rescaled to the integral lattice; weight (5,5)
HilbertSeries theta_product(int bound);

// chi5 = theta_product / 32
HilbertSeries chi5(int bound);

}  // namespace hmf
