#pragma once

// Numeric reduction of points of H x H into the Goetzky ensemble for
// SL2(O_K), K = Q(sqrt5).  Points are doubles; the group element is
// tracked exactly over K so the certificate gamma is trustworthy.

#include "hmf/quadfield.hpp"

#include <complex>
#include <vector>

namespace hmf {

struct PointH2 {
    std::complex<double> z1, z2;
    bool in_upper_half() const { return z1.imag() > 0 && z2.imag() > 0; }
};

struct Mat2K {
    QuadElem a, b, c, d;

    static Mat2K identity();
    static Mat2K S();  // (1 1 / 0 1)
    // (0 1 / -1 0): same Moebius action as (0 -1 / 1 0), sign fixed so the
    // relations U^-1 = TUT and S^-1 = TSTST hold exactly (not just in PSL2)
    static Mat2K T();
    static Mat2K U();  // (eps 0 / 0 eps'), det -1
    // diag(eps, 1/eps), det 1: scales Im z1 by eps^2 and Im z2 by eps'^2;
    // this is the balancing step of the reduction (U itself flips H^2)
    static Mat2K balanced_unit();
    static Mat2K translation(const OKElem& nu);  // (1 nu / 0 1)

    Mat2K operator*(const Mat2K& o) const;
    Mat2K inverse() const;  // det must be a rational unit (+-1)
    QuadElem det() const { return a * d - b * c; }
    bool operator==(const Mat2K& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

// componentwise Moebius action through the two real embeddings
PointH2 act(const Mat2K& g, const PointH2& p);

// p' = act(U^n, p) with Im(z1')/Im(z2') in [eps^-2, eps^2]
struct BalanceResult {
    long n;
    PointH2 point;
};
BalanceResult unit_balance(const PointH2& p);

// p' = p - nu minimizing |z1' z2'| over the O_K translation lattice
struct TranslateResult {
    OKElem nu;
    PointH2 point;
};
TranslateResult translate_min(const PointH2& p);

struct ReduceResult {
    Mat2K gamma;
    PointH2 point;
    int iterations = 0;
    std::vector<double> im_product_trace;  // Im*Im' after each T step
};
ReduceResult reduce_to_G(const PointH2& p, int max_iter = 200);

struct Membership {
    bool in_A;                  // |z1 z2| >= 1
    bool in_B;                  // imaginary ratio within [eps^-2, eps^2]
    bool translation_minimal;
};
Membership check_membership(const PointH2& p);

}  // namespace hmf
