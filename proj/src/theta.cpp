#include "hmf/theta.hpp"

#include <stdexcept>

namespace hmf {

const std::array<Characteristic, 10>& theta_characteristics() {
    static const OKElem zero(0, 0), one(2, 0), eps(1, 1), epsc(1, -1);
    static const std::array<Characteristic, 10> chars = {{
        {zero, zero}, {one, zero}, {zero, one}, {one, one},
        {zero, epsc}, {zero, eps}, {epsc, zero}, {eps, zero},
        {epsc, eps},  {eps, epsc},
    }};
    return chars;
}

HilbertSeries theta_factor(const Characteristic& ch, int bound) {
    if (bound < 1) throw std::invalid_argument("theta_factor: bound must be >= 1");
    const Int p = ch.alpha.u, q = ch.alpha.v;
    const Int r = ch.beta.u, s = ch.beta.v;
    const Int Bmax = Int(8) * bound;

    HilbertSeries f({0, 0}, bound, 8);
    // nu = (u + v sqrt5)/2; with w = 2nu + alpha = (A + B sqrt5)/2 the
    // exponent (nu + alpha/2)^2 eps/(2 sqrt5) has dual-lattice key (at
    // denom 8): trace b = ((A+B)/2)^2 + B^2 and a = b + 2AB
    Int smax = sqrt(Bmax);
    for (Int S = -smax; S <= smax; ++S) {
        for (Int B = -smax; B <= smax; ++B) {
            Int b = S * S + B * B;
            if (b > Bmax) continue;
            Int A = 2 * S - B;
            if (((A - p) % 2) != 0 || ((B - q) % 2) != 0) continue;
            Int u = (A - p) / 2, v = (B - q) / 2;
            if (((u - v) % 2) != 0) continue;  // nu must lie in O_K
            Int a = b + 2 * A * B;
            NuIndex key(a, b);
            if (!key.totally_positive_or_zero())
                throw std::logic_error("theta_factor: exponent outside the cone");
            Int twice_sign_exp = u * s + v * r;  // t(nu beta / sqrt5) = (us + vr)/2
            if ((twice_sign_exp % 2) != 0)
                throw std::logic_error("theta_factor: non-integral sign exponent");
            int sign = ((twice_sign_exp / 2) % 2 == 0) ? +1 : -1;
            auto [it, fresh] = f.coeffs.try_emplace(key, QuadElem(Rat(sign)));
            if (!fresh) {
                it->second += QuadElem(Rat(sign));
                if (it->second.is_zero()) f.coeffs.erase(it);
            }
        }
    }
    return f;
}

HilbertSeries theta_product(int bound) {
    if (bound < 2) throw std::invalid_argument("theta_product: bound must be >= 2");
    const auto& chars = theta_characteristics();
    HilbertSeries acc = theta_factor(chars[0], bound);
    for (size_t i = 1; i < chars.size(); ++i) acc = acc * theta_factor(chars[i], bound);

    HilbertSeries theta({5, 5}, bound, 1);
    for (const auto& [nu, c] : acc.coeffs) {
        if (nu.a % 8 != 0 || nu.b % 8 != 0)
            throw std::logic_error("theta_product: exponent off the integral dual lattice");
        theta.coeffs[NuIndex(nu.a / 8, nu.b / 8)] = c;
    }
    if (!theta.constant_term().is_zero())
        throw std::logic_error("theta_product: nonzero constant term");
    return theta;
}

HilbertSeries chi5(int bound) {
    return theta_product(bound).scaled(QuadElem(Rat(1, 32)));
}

}  // namespace hmf
