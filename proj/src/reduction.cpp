#include "hmf/reduction.hpp"

#include <cmath>
#include <stdexcept>

namespace hmf {

namespace {

constexpr double kEps1 = 1.618033988749894848;   // eps = (1+sqrt5)/2
constexpr double kEps2 = -0.618033988749894848;  // eps'

std::complex<double> moebius(double a, double b, double c, double d,
                             std::complex<double> z) {
    std::complex<double> den = c * z + d;
    if (std::abs(den) < 1e-14) throw std::domain_error("act: numerically singular");
    return (a * z + b) / den;
}

}  // namespace

Mat2K Mat2K::identity() { return {QuadElem(1L), QuadElem(), QuadElem(), QuadElem(1L)}; }
Mat2K Mat2K::S() { return {QuadElem(1L), QuadElem(1L), QuadElem(), QuadElem(1L)}; }
Mat2K Mat2K::T() { return {QuadElem(), QuadElem(1L), QuadElem(-1L), QuadElem()}; }
Mat2K Mat2K::U() { return {QuadElem::eps(), QuadElem(), QuadElem(), QuadElem::eps_conj()}; }

Mat2K Mat2K::balanced_unit() {
    return {QuadElem::eps(), QuadElem(), QuadElem(), -QuadElem::eps_conj()};
}

Mat2K Mat2K::translation(const OKElem& nu) {
    return {QuadElem(1L), nu.to_quad(), QuadElem(), QuadElem(1L)};
}

Mat2K Mat2K::operator*(const Mat2K& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2K Mat2K::inverse() const {
    QuadElem dt = det();
    if (dt == QuadElem(1L)) return {d, -b, -c, a};
    if (dt == QuadElem(-1L)) return {-d, b, c, -a};
    throw std::domain_error("Mat2K::inverse: determinant is not +-1");
}

PointH2 act(const Mat2K& g, const PointH2& p) {
    PointH2 q;
    q.z1 = moebius(g.a.embed1(), g.b.embed1(), g.c.embed1(), g.d.embed1(), p.z1);
    q.z2 = moebius(g.a.embed2(), g.b.embed2(), g.c.embed2(), g.d.embed2(), p.z2);
    return q;
}

BalanceResult unit_balance(const PointH2& p) {
    // act(U^n) scales Im z1 by eps^2n, Im z2 by eps^-2n: ratio by eps^4n
    double ratio = p.z1.imag() / p.z2.imag();
    double logeps = std::log(kEps1);
    long n = std::lround(-std::log(ratio) / (4 * logeps));
    auto ok = [&](long m) {
        double r = ratio * std::pow(kEps1, 4.0 * m);
        double tol = 1e-12;
        return r >= std::pow(kEps1, -2.0) - tol && r <= std::pow(kEps1, 2.0) + tol;
    };
    while (!ok(n)) n += (ratio * std::pow(kEps1, 4.0 * n) > 1) ? -1 : 1;
    // boundary tie toward smaller |n|
    if (n != 0 && ok(n > 0 ? n - 1 : n + 1)) n += (n > 0) ? -1 : 1;
    // eps'^2 = eps^-2, so the second coordinate scales by eps^-2n
    PointH2 q{std::pow(kEps1, 2.0 * n) * p.z1, std::pow(kEps1, -2.0 * n) * p.z2};
    return {n, q};
}

TranslateResult translate_min(const PointH2& p) {
    // nu = u + v*eps; pick the scan window around the real parts
    double r1 = p.z1.real(), r2 = p.z2.real();
    long v0 = std::lround((r1 - r2) / std::sqrt(5.0));
    long u0 = std::lround(r1 - v0 * kEps1);
    double best = -1;
    long bu = 0, bv = 0;
    for (long v = v0 - 4; v <= v0 + 4; ++v) {
        for (long u = u0 - 4; u <= u0 + 4; ++u) {
            double s1 = u + v * kEps1, s2 = u + v * kEps2;
            std::complex<double> w1 = p.z1 - s1, w2 = p.z2 - s2;
            if (std::abs(w1.real()) > 3.0 || std::abs(w2.real()) > 3.0) continue;
            double val = std::abs(w1) * std::abs(w2);
            bool better = best < 0 || val < best - 1e-12;
            if (!better && best >= 0 && std::abs(val - best) <= 1e-12) {
                // deterministic tie-break: smallest (|u|, |v|), then sign
                auto key = [](long x, long y) {
                    return std::tuple<long, long, long, long>(std::abs(x), std::abs(y), -x, -y);
                };
                better = key(u, v) < key(bu, bv);
            }
            if (better) { best = val; bu = u; bv = v; }
        }
    }
    OKElem nu(2 * bu + bv, bv);  // u + v*eps = ((2u+v) + v*sqrt5)/2
    double s1 = bu + bv * kEps1, s2 = bu + bv * kEps2;
    return {nu, {p.z1 - s1, p.z2 - s2}};
}

ReduceResult reduce_to_G(const PointH2& p, int max_iter) {
    if (!p.in_upper_half()) throw std::domain_error("reduce_to_G: point not in H^2");
    if (max_iter < 1) throw std::invalid_argument("reduce_to_G: max_iter must be >= 1");
    ReduceResult res{Mat2K::identity(), p, 0, {}};
    double last_product = res.point.z1.imag() * res.point.z2.imag();
    for (int it = 0; it < max_iter; ++it) {
        res.iterations = it + 1;
        BalanceResult bal = unit_balance(res.point);
        if (bal.n != 0) {
            Mat2K un = Mat2K::identity();
            Mat2K step = bal.n > 0 ? Mat2K::balanced_unit() : Mat2K::balanced_unit().inverse();
            for (long k = 0; k < std::labs(bal.n); ++k) un = step * un;
            res.gamma = un * res.gamma;
            res.point = bal.point;
        }
        TranslateResult tr = translate_min(res.point);
        if (!(tr.nu.u == 0 && tr.nu.v == 0)) {
            OKElem neg(-tr.nu.u, -tr.nu.v);
            res.gamma = Mat2K::translation(neg) * res.gamma;
            res.point = tr.point;
        }
        if (std::abs(res.point.z1 * res.point.z2) >= 1.0 - 1e-12) return res;
        res.point = act(Mat2K::T(), res.point);
        res.gamma = Mat2K::T() * res.gamma;
        double product = res.point.z1.imag() * res.point.z2.imag();
        if (product <= last_product)
            throw std::runtime_error("reduce_to_G: Im product failed to increase");
        last_product = product;
        res.im_product_trace.push_back(product);
    }
    throw std::runtime_error("reduce_to_G: iteration cap exceeded");
}

Membership check_membership(const PointH2& p) {
    Membership m{};
    m.in_A = std::abs(p.z1 * p.z2) >= 1.0 - 1e-12;
    double ratio = p.z1.imag() / p.z2.imag();
    m.in_B = ratio >= std::pow(kEps1, -2.0) - 1e-12 && ratio <= std::pow(kEps1, 2.0) + 1e-12;
    TranslateResult tr = translate_min(p);
    double before = std::abs(p.z1 * p.z2);
    double after = std::abs(tr.point.z1 * tr.point.z2);
    m.translation_minimal = after >= before - 1e-12;
    return m;
}

}  // namespace hmf
