#pragma once

// Truncated one-variable q-expansions with rational coefficients: the
// elliptic subsystem (E2, E4, E6, Delta, Rankin-Cohen brackets and the
// Ramanujan derivation).  All derivatives are normalized, D = q d/dq, so
// every coefficient stays in Q.

#include "hmf/quadfield.hpp"

#include <vector>

namespace hmf {

class QExp {
public:
    int weight = 0;
    int bound = 0;                // coefficients are exact for q^0..q^bound
    std::vector<Rat> coeffs;      // size bound+1

    QExp() = default;
    QExp(int weight_, int bound_)
        : weight(weight_), bound(bound_), coeffs(bound_ + 1, Rat(0)) {}

    Rat coeff(int n) const { return (n >= 0 && n <= bound) ? coeffs[n] : Rat(0); }
    bool is_zero() const {
        for (const auto& c : coeffs) if (c != 0) return false;
        return true;
    }

    QExp truncated(int new_bound) const;

    QExp operator+(const QExp& o) const;   // requires equal weight
    QExp operator-(const QExp& o) const;
    QExp operator*(const QExp& o) const;   // truncated convolution, weights add
    QExp scaled(const Rat& c) const;

    bool operator==(const QExp& o) const {
        int n = std::min(bound, o.bound);
        for (int i = 0; i <= n; ++i)
            if (coeff(i) != o.coeff(i)) return false;
        return bound == o.bound && weight == o.weight;
    }
};

// D = q d/dq; weight tag raises by 2 (quasi-modular bookkeeping)
QExp d_operator(const QExp& f);

QExp eisenstein_q(int k, int bound);   // k in {4, 6}
QExp delta_q(int bound);               // (E4^3 - E6^2)/1728
QExp e2_q(int bound);                  // D(Delta)/Delta

// series division: g must have a unit leading coefficient at q^ord(g)
QExp divide_q(const QExp& f, const QExp& g);

// Rankin-Cohen bracket [f,g]_n of one-variable forms
QExp rankin_cohen_1var(const QExp& f, const QExp& g, int n);

// isobaric decomposition over monomials E4^a E6^b with 4a+6b = weight
struct EllipticMonomial {
    int e4_exp;
    int e6_exp;
    Rat coeff;
};
struct EllipticDecomposition {
    bool ok = false;                    // false: not a modular form of this weight
    std::vector<EllipticMonomial> terms;
};
EllipticDecomposition isobaric_decompose_elliptic(const QExp& f);

// same over the basis E4^a Delta^b with 4a+12b = weight (weights divisible by 4)
struct E4DeltaMonomial {
    int e4_exp;
    int delta_exp;
    Rat coeff;
};
struct E4DeltaDecomposition {
    bool ok = false;
    std::vector<E4DeltaMonomial> terms;
};
E4DeltaDecomposition decompose_e4_delta(const QExp& f);

Rat binomial_rat(long n, long k);

}  // namespace hmf
