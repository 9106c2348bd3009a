#include "hmf/eisenstein.hpp"

#include "hmf/diffops.hpp"

#include <stdexcept>

namespace hmf {

namespace {

bool perfect_square(const Int& x, Int& root) {
    if (x < 0) return false;
    root = sqrt(x);
    return root * root == x;
}

// exact box test: sigma1(mu) > 0 and n <= sigma1(mu)^2 < n*eps^4
bool in_unit_box(const OKElem& mu, const Int& n) {
    QuadElem m = mu.to_quad();
    if (m.sign() <= 0) return false;
    QuadElem sq = m * m;
    static const QuadElem eps4(Rat(7, 2), Rat(3, 2));  // eps^4
    if ((sq - QuadElem(Rat(n))).sign() < 0) return false;
    return (QuadElem(Rat(n)) * eps4 - sq).sign() > 0;
}

bool associate(const OKElem& a, const OKElem& b) {
    OKElem q;
    return b.divides(a, &q) && q.is_unit();
}

}  // namespace

std::vector<OKElem> enumerate_divisors(const OKElem& xi) {
    if (xi.u == 0 && xi.v == 0)
        throw std::invalid_argument("enumerate_divisors: zero argument");
    Int N = abs(xi.norm());
    std::vector<OKElem> reps;
    for (Int n = 1; n <= N; ++n) {
        if (N % n != 0) continue;
        std::vector<OKElem> found;
        Int vmax = sqrt(Int(3 * n)) + 2;  // |v| <= eps*sqrt(n) < sqrt(3n)+2
        for (Int v = -vmax; v <= vmax; ++v) {
            for (int s : {+1, -1}) {
                Int u2 = 5 * v * v + s * 4 * n, u;
                if (!perfect_square(u2, u)) continue;
                for (int us : {+1, -1}) {
                    Int uu = us * u;
                    if (us < 0 && u == 0) continue;
                    if (((uu - v) % 2) != 0) continue;
                    OKElem mu(uu, v);
                    if (!in_unit_box(mu, n)) continue;
                    if (!mu.divides(xi)) continue;
                    bool dup = false;
                    for (const auto& f : found)
                        if (associate(mu, f)) { dup = true; break; }
                    if (!dup) found.push_back(mu);
                }
            }
        }
        reps.insert(reps.end(), found.begin(), found.end());
    }
    return reps;
}

Rat divisor_sum(const NuIndex& nu, int r) {
    if (!nu.totally_positive_or_zero() || nu.is_zero())
        throw std::invalid_argument("divisor_sum: index must be totally positive");
    OKElem xi(nu.a, nu.b);  // nu * sqrt5
    Rat s = 0;
    for (const auto& mu : enumerate_divisors(xi)) {
        Int an = abs(mu.norm());
        Int p = 1;
        for (int i = 0; i + 1 < r; ++i) p *= an;
        s += Rat(p);
    }
    return s;
}

Rat kappa(int r) {
    switch (r) {
        case 2: return Rat(120);
        case 6: return Rat(2520, 67);
        default: throw std::invalid_argument("kappa: only r = 2 and r = 6 supported");
    }
}

HilbertSeries eisenstein_series(int r, int bound) {
    Rat k = kappa(r);
    HilbertSeries s({r, r}, bound);
    s.set_coeff(NuIndex(0, 0), QuadElem(1L));
    for (const auto& nu : enumerate_cone(bound)) {
        if (nu.is_zero()) continue;
        s.set_coeff(nu, QuadElem(k * divisor_sum(nu, r)));
    }
    return s;
}

Rat derive_kappa6(int bound) {
    HilbertSeries phi2 = eisenstein_series(2, bound);
    HilbertSeries chi6 = lambda_op(phi2).scaled(QuadElem(Rat(1, 24)));
    HilbertSeries e6 = phi2 * phi2 * phi2 - chi6.scaled(QuadElem(Rat(21600, 67)));
    QuadElem k = e6.coeff(NuIndex(1, 1));
    if (k.y != 0 || k.x <= 0)
        throw std::runtime_error("derive_kappa6: leading coefficient not a positive rational");
    if (e6.constant_term() != QuadElem(1L))
        throw std::runtime_error("derive_kappa6: constant term is not 1");
    for (const auto& nu : enumerate_cone(bound)) {
        if (nu.is_zero()) continue;
        if (e6.coeff(nu) != QuadElem(k.x * divisor_sum(nu, 6)))
            throw std::runtime_error("derive_kappa6: coefficient mismatch with divisor sums");
    }
    return k.x;
}

}  // namespace hmf
